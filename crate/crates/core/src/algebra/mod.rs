//! Exact scalars, finite extensions, subspace lattices and value groups.

mod ext;
mod field;
mod group;
mod segment;
mod subspace;

pub use ext::{ExtensionField, FieldElem};
pub use field::{BaseField, Scalar};
pub use group::{GroupElement, ValueGroup};
pub use segment::{Segment, Shape};
pub use subspace::Subspace;
