//! Semistar operations as closed terms, evaluated exactly on the
//! representable modules of each domain family.

mod eval;
mod handle;
mod lsys;
mod op;
mod order;

pub use eval::{
    apply, finite_type_apply, quasi_star_ideal_check, quasi_star_maximals, stable_apply, tilde_apply,
};
pub use handle::{Capabilities, DomainHandle, Family, IdealHandle, Module, OverringTag};
pub use lsys::{localizing_system, ls_contains, CofinalFamily, LocalizingSystemView};
pub use op::{PrimeTag, SemistarOp};
pub use order::{module_classes, op_leq, ops_equal_on, Universe};

#[cfg(test)]
mod tests;
