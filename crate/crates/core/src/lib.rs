//! Exact arithmetic for fractional ideals and semistar operations over a
//! small set of representable integral domains:
//!
//! * monomial ideals of numerical semigroup rings `K[[S]]`,
//! * pullbacks `D = k + M` of a valuation domain `V = K + M`,
//! * valuation domains with value group `Z`, `Q` or `Z x Z` (lex).
//!
//! Everything is exact: scalars are arbitrary precision rationals or
//! residues modulo a prime. The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod classify;
pub mod dplusm;
mod error;
pub mod numsgr;
pub mod semistar;

pub use error::{Error, Result};
