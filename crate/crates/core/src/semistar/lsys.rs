use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::eval::apply;
use super::handle::{DomainHandle, IdealHandle};
use super::op::SemistarOp;
use crate::Result;

/// Ideals meeting every member of the localizing system `{I : I^op = D^op}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CofinalFamily {
    /// Every member contains one of these.
    Finite(Vec<IdealHandle>),
    /// `D^op` is the quotient field, so every nonzero ideal belongs.
    AllIdeals,
    /// No finite family exists on the representable universe.
    Unrepresentable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizingSystemView {
    pub domain: Arc<DomainHandle>,
    pub op: SemistarOp,
    pub dstar: IdealHandle,
    pub cofinal: CofinalFamily,
    /// The system is `{D}`.
    pub trivial: bool,
}

/// The localizing system of `op`. The domains here are local, so the system
/// is decided by whether the maximal ideal belongs to it: if not, it is `{D}`;
/// in a dense rank one group every proper ideal other than `M` has a positive
/// cut and so lies outside, leaving `{D, M}`.
pub fn localizing_system(d: &Arc<DomainHandle>, op: &SemistarOp) -> Result<LocalizingSystemView> {
    let ring = IdealHandle::ring(d);
    let dstar = apply(op, &ring)?;
    let view = |cofinal, trivial| LocalizingSystemView { domain: d.clone(), op: op.clone(), dstar: dstar.clone(), cofinal, trivial };
    if dstar.is_quotient_field() {
        return Ok(view(CofinalFamily::AllIdeals, false));
    }
    let m = IdealHandle::maximal(d);
    if apply(op, &m)? != dstar {
        return Ok(view(CofinalFamily::Finite(vec![ring]), true));
    }
    if d.is_dense() {
        return Ok(view(CofinalFamily::Finite(vec![m]), false));
    }
    Ok(view(CofinalFamily::Unrepresentable, false))
}

/// `i^op = D^op`
pub fn ls_contains(ls: &LocalizingSystemView, i: &IdealHandle) -> Result<bool> {
    Ok(apply(&ls.op, i)? == ls.dstar)
}
