//! Numerical semigroup rings `K[[S]]` and their monomial fractional ideals.
//!
//! A monomial ideal is determined by its value set, a finite union of
//! translates `g + S`. The coefficient field never enters.

mod enumerate;
mod ideal;
pub mod oracle;
mod semigroup;

pub use enumerate::{enumerate_ideals, ideal_classes};
pub use ideal::MonomialIdeal;
pub use semigroup::NumericalSemigroup;
