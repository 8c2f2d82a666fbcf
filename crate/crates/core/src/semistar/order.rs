use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::eval::apply;
use super::handle::{DomainHandle, Family, IdealHandle, Module};
use super::op::SemistarOp;
use crate::algebra::{FieldElem, Segment, Subspace};
use crate::classify::{Reason, SampleReport, Verdict, Witness};
use crate::dplusm::LeveledModule;
use crate::numsgr::ideal_classes;
use crate::Result;

/// A finite set of modules. `exhaustive` is set only when every representable
/// nonzero module is a monomial multiple of a member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    pub members: Vec<IdealHandle>,
    pub exhaustive: bool,
}

impl Universe {
    pub fn sampled(members: Vec<IdealHandle>) -> Universe {
        Universe { members, exhaustive: false }
    }

    pub fn finitely_generated(&self) -> Universe {
        Universe {
            members: self.members.iter().filter(|m| m.is_finitely_generated()).cloned().collect(),
            exhaustive: self.exhaustive,
        }
    }
}

/// Floors at level zero, one per orbit under scaling by `K^*`, together with
/// whether the list is complete.
pub(crate) fn floor_classes(d: &Arc<DomainHandle>) -> (Vec<Subspace>, bool) {
    let k = d.field();
    if let Some(all) = Subspace::all(&k) {
        let elems: Vec<FieldElem> = k.elements().expect("finite").into_iter().filter(|e| !e.is_zero()).collect();
        let mut reps: Vec<Subspace> = Vec::new();
        for w in all.into_iter().filter(|w| !w.is_zero()) {
            let seen = reps.iter().any(|r| r.dim() == w.dim() && elems.iter().any(|c| r.scale(c).ok().as_ref() == Some(&w)));
            if !seen {
                reps.push(w);
            }
        }
        return (reps, true);
    }
    let one = Subspace::span(k.clone(), &[k.one()]);
    let full = Subspace::full(k.clone());
    match k.degree() {
        1 => (alloc::vec![full], true),
        2 => (alloc::vec![one, full], true),
        _ => {
            // lines are all equivalent; planes and beyond are only sampled
            let a = k.generator();
            let a2 = k.mul(&a, &a);
            let mut reps = alloc::vec![one, full];
            for gens in [alloc::vec![k.one(), a.clone()], alloc::vec![k.one(), a2.clone()], alloc::vec![a, k.add(&k.one(), &a2)]] {
                let w = Subspace::span(k.clone(), &gens);
                if !reps.contains(&w) {
                    reps.push(w);
                }
            }
            (reps, false)
        }
    }
}

/// Representatives of the nonzero modules up to multiplication by monomials.
pub fn module_classes(d: &Arc<DomainHandle>) -> Universe {
    let mut members = Vec::new();
    let mut exhaustive = true;
    match d.family() {
        Family::SemigroupRing(s) => {
            members.extend(ideal_classes(s).into_iter().map(Module::Monomial));
        }
        Family::Pullback(p) => {
            let (floors, complete) = floor_classes(d);
            exhaustive = complete;
            let zero = d.group().zero();
            for w in floors {
                members.push(Module::Leveled(LeveledModule::new(p.clone(), zero.clone(), w).expect("level zero")));
            }
            if d.is_dense() {
                members.push(d.maximal_module());
            }
        }
        Family::Valuation(v) => {
            members.push(Module::Segment(v.ring()));
            if d.is_dense() {
                members.push(Module::Segment(v.maximal()));
            }
            if d.is_lex() {
                members.push(Module::Segment(Segment::coarse(0)));
            }
        }
    }
    members.push(Module::QuotientField);
    let mut out: Vec<IdealHandle> = Vec::new();
    for m in members {
        let h = IdealHandle::new(d.clone(), m).expect("class representative");
        if !out.contains(&h) {
            out.push(h);
        }
    }
    Universe { members: out, exhaustive }
}

fn theorem_leq(op1: &SemistarOp, op2: &SemistarOp) -> Option<&'static str> {
    match op1 {
        SemistarOp::Identity => Some("d <= every semistar operation"),
        SemistarOp::FiniteType(inner) if **inner == *op2 => Some("op_f <= op"),
        SemistarOp::Stable(inner) if **inner == *op2 => Some("bar(op) <= op"),
        SemistarOp::Tilde(inner) if **inner == *op2 => Some("tilde(op) <= op"),
        _ if op1 == op2 => Some("reflexivity"),
        _ => None,
    }
}

fn compare(op1: &SemistarOp, op2: &SemistarOp, universe: &Universe, both: bool) -> Result<Option<IdealHandle>> {
    for e in &universe.members {
        let a = apply(op1, e)?;
        let b = apply(op2, e)?;
        let ok = if both { a == b } else { a.is_subset(&b)? };
        if !ok {
            return Ok(Some(e.clone()));
        }
    }
    Ok(None)
}

fn unknown(universe: &Universe) -> Verdict {
    Verdict::Unknown(SampleReport::universe(universe.members.len()))
}

/// `op1 <= op2`
pub fn op_leq(op1: &SemistarOp, op2: &SemistarOp, universe: &Universe) -> Result<Verdict> {
    if let Some(w) = compare(op1, op2, universe, false)? {
        return Ok(Verdict::Refuted(Witness::Ideal(w)));
    }
    if let Some(t) = theorem_leq(op1, op2) {
        return Ok(Verdict::Holds(Reason::new(t, "op-order")));
    }
    if universe.exhaustive {
        return Ok(Verdict::Holds(Reason::exhaustive(format!("{} module classes", universe.members.len()))));
    }
    Ok(unknown(universe))
}

/// `op1 = op2`
pub fn ops_equal_on(op1: &SemistarOp, op2: &SemistarOp, universe: &Universe) -> Result<Verdict> {
    if let Some(w) = compare(op1, op2, universe, true)? {
        return Ok(Verdict::Refuted(Witness::Ideal(w)));
    }
    if op1 == op2 {
        return Ok(Verdict::Holds(Reason::new("identical terms", "op-order")));
    }
    if universe.exhaustive {
        return Ok(Verdict::Holds(Reason::exhaustive(format!("{} module classes", universe.members.len()))));
    }
    Ok(unknown(universe))
}
