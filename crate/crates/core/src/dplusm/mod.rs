//! Valuation domains `V = K + M` over a value group and their pullbacks
//! `D = k + M`.
//!
//! A nonzero `D`-submodule `E` of the quotient field is either everything or
//! is pinned down by a level `g` and a `k`-subspace `W` of `K`: `E` contains
//! every element of value `> g`, and its elements of value exactly `g` are
//! those whose leading coefficient lies in `W`. So a module has at most one
//! proper jump, sitting right below a full tail.

mod domain;
mod module;
pub mod oracle;

pub use domain::{localize_at, lift_from_prime, DomainPrime, PullbackDomain, ValuationDomain};
pub use module::{Generator, LeveledModule};
