use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::predicates::relative_scalings;
use super::sample::SampleSpec;
use super::search::{fg_universe, find_generated, FgUniverse, Search};
use super::verdict::{Reason, Verdict, Witness};
use crate::algebra::GroupElement;
use crate::dplusm::Generator;
use crate::semistar::{apply, DomainHandle, Family, IdealHandle, Module, SemistarOp};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoherenceKind {
    /// `J ⊆ E ∩ F` with `J^* = E^* ∩ F^*`
    Extracoherent,
    /// `J^* = E^* ∩ F^*`
    Coherent,
    /// `J^* = (E ∩ F)^*`
    TrulyCoherent,
    /// `G^* = (D:F)^*`
    QuasiCoherent,
}

impl CoherenceKind {
    pub const ALL: [CoherenceKind; 4] = [
        CoherenceKind::Extracoherent,
        CoherenceKind::Coherent,
        CoherenceKind::TrulyCoherent,
        CoherenceKind::QuasiCoherent,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CoherenceKind::Extracoherent => "extracoherent",
            CoherenceKind::Coherent => "coherent",
            CoherenceKind::TrulyCoherent => "truly-coherent",
            CoherenceKind::QuasiCoherent => "quasi-coherent",
        }
    }

    pub fn parse(s: &str) -> Option<CoherenceKind> {
        CoherenceKind::ALL.into_iter().find(|k| k.name() == s)
    }

    fn anchor(&self) -> &'static str {
        match self {
            CoherenceKind::Extracoherent => "J <= E & F, J^* = E^* & F^*",
            CoherenceKind::Coherent => "J^* = E^* & F^*",
            CoherenceKind::TrulyCoherent => "J^* = (E & F)^*",
            CoherenceKind::QuasiCoherent => "(D:F)^* = G^*",
        }
    }
}

impl fmt::Display for CoherenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Searches the finitely generated ideal required by `kind` for one pair.
pub fn pair_search(
    kind: CoherenceKind,
    op: &SemistarOp,
    e: &IdealHandle,
    f: &IdealHandle,
    u: &FgUniverse,
) -> Result<Search> {
    let st = |m: &IdealHandle| apply(op, m);
    match kind {
        CoherenceKind::Extracoherent => {
            let target = st(e)?.intersect(&st(f)?)?;
            find_generated(op, &target, Some(&e.intersect(f)?), u)
        }
        CoherenceKind::Coherent => find_generated(op, &st(e)?.intersect(&st(f)?)?, None, u),
        CoherenceKind::TrulyCoherent => find_generated(op, &st(&e.intersect(f)?)?, None, u),
        CoherenceKind::QuasiCoherent => find_generated(op, &st(&f.inverse()?)?, None, u),
    }
}

/// Integral pairs of finitely generated ideals, up to common scaling.
pub fn pair_universe(d: &Arc<DomainHandle>) -> Vec<(IdealHandle, IdealHandle)> {
    let u = fg_universe(d);
    let one = d.field().one();
    let mut out = Vec::new();
    match d.family() {
        Family::SemigroupRing(s) => {
            let w = s.conductor();
            for h in 0..=w {
                let x = Generator::new(one.clone(), GroupElement::Int(h));
                for e in &u.members {
                    for f in &u.members {
                        let g = f.scale(&x).expect("monomial");
                        if g.is_integral() {
                            out.push((e.clone(), g));
                        }
                    }
                }
            }
        }
        Family::Pullback(_) => {
            // everything at level at least one, where all coefficients are integral
            let lift = |m: &IdealHandle| -> IdealHandle {
                let Module::Leveled(l) = m.module() else { unreachable!("pullback module") };
                let h = &d.group().from_int(1) - l.level().expect("finitely generated");
                m.scale(&Generator::new(one.clone(), h)).expect("monomial")
            };
            let lifted: Vec<IdealHandle> = u.members.iter().map(lift).collect();
            for e in &lifted {
                for f in &lifted {
                    for x in relative_scalings(d) {
                        if x.level.is_zero() || x.level.is_positive() {
                            out.push((e.clone(), f.scale(&x).expect("monomial")));
                        }
                    }
                }
            }
        }
        Family::Valuation(_) => {
            let r = IdealHandle::ring(d);
            for x in relative_scalings(d) {
                if x.level.is_zero() || x.level.is_positive() {
                    out.push((r.clone(), r.scale(&x).expect("monomial")));
                }
            }
        }
    }
    let mut seen = Vec::with_capacity(out.len());
    for p in out {
        if !seen.contains(&p) {
            seen.push(p);
        }
    }
    seen
}

fn coherence_theorem(d: &Arc<DomainHandle>, kind: CoherenceKind, op: &SemistarOp) -> Result<Option<Reason>> {
    let r = |t: &str| Ok(Some(Reason::new(t, kind.anchor())));
    if d.capabilities().valuation {
        return r("valuation domain: E & F and (D:F) are principal");
    }
    let ring = IdealHandle::ring(d);
    let dstar = apply(op, &ring)?;
    if dstar.is_quotient_field() {
        return r("D^* = K: every nonzero ideal closes to K");
    }
    if d.capabilities().noetherian {
        match kind {
            CoherenceKind::TrulyCoherent | CoherenceKind::QuasiCoherent => {
                return r("noetherian ring: E & F and (D:F) are finitely generated");
            }
            // E^* & F^* lies in a multiple of D^*, a fractional ideal
            CoherenceKind::Coherent if ring.colon(&dstar).is_ok() => {
                return r("noetherian ring with D^* fractional: E^* & F^* is finitely generated");
            }
            _ => {}
        }
    }
    let chained = matches!(op, SemistarOp::StarOverring(_) | SemistarOp::Descent(..));
    if chained && kind == CoherenceKind::Coherent {
        return r("closures are modules of a valuation overring, so E^* & F^* is E^* or F^*");
    }
    Ok(None)
}

/// Runs `kind` on the given pairs: the first certified failure refutes.
pub fn coherence_on_pairs(
    kind: CoherenceKind,
    op: &SemistarOp,
    pairs: &[(IdealHandle, IdealHandle)],
    spec: &SampleSpec,
) -> Result<Verdict> {
    let Some((e0, _)) = pairs.first() else {
        return Ok(Verdict::Unknown(spec.report(0, "no pairs")));
    };
    let u = fg_universe(e0.domain());
    let mut open = 0usize;
    for (e, f) in pairs {
        match pair_search(kind, op, e, f, &u)? {
            Search::Found(_) => {}
            Search::Absent { exact: true } => return Ok(Verdict::Refuted(Witness::Pair(e.clone(), f.clone()))),
            Search::Absent { exact: false } => open += 1,
        }
    }
    let note: String = if open == 0 { "all pairs witnessed".into() } else { format!("{open} pairs undecided") };
    Ok(Verdict::Unknown(spec.report(pairs.len(), &note)))
}

/// `kind`-coherence of `d` for `op`: structured pair search plus family theorems.
pub fn coherence_check(
    d: &Arc<DomainHandle>,
    kind: CoherenceKind,
    op: &SemistarOp,
    spec: &SampleSpec,
) -> Result<Verdict> {
    let searched = coherence_on_pairs(kind, op, &pair_universe(d), spec)?;
    match (searched, coherence_theorem(d, kind, op)?) {
        (Verdict::Refuted(w), Some(r)) => {
            Err(Error::ConsistencyFailure(format!("{kind}: {} contradicted by {w}", r.theorem)))
        }
        (Verdict::Refuted(w), None) => Ok(Verdict::Refuted(w)),
        (_, Some(r)) => Ok(Verdict::Holds(r)),
        (v, None) => Ok(v),
    }
}
