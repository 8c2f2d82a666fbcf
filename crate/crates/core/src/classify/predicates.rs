use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::sample::{SampleSpec, Sampler};
use super::search::{fg_universe, find_generated, FgUniverse, Search};
use super::verdict::{Outcome, Reason, SampleReport, Verdict, Witness};
use crate::algebra::{FieldElem, GroupElement, Segment, Subspace, ValueGroup};
use crate::dplusm::{Generator, LeveledModule};
use crate::semistar::{
    apply, module_classes, quasi_star_ideal_check, quasi_star_maximals, DomainHandle, Family, IdealHandle, Module,
    SemistarOp,
};
use crate::{Error, Result};

/// Cap on the number of triples examined by the cancellation searches.
const TRIPLE_BUDGET: usize = 60_000;

/// `(i (D:i))^op = D^op`
pub fn is_star_invertible(op: &SemistarOp, i: &IdealHandle) -> Result<bool> {
    if i.is_quotient_field() {
        return Ok(false);
    }
    let d = i.domain();
    let inv = match i.inverse() {
        Ok(inv) => inv,
        Err(Error::EmptyColon) => return Ok(false),
        Err(e) => return Err(e),
    };
    Ok(apply(op, &i.mul(&inv)?)? == apply(op, &IdealHandle::ring(d))?)
}

fn search_verdict(s: Search, i: &IdealHandle, u: &FgUniverse, anchor: &str) -> Verdict {
    match s {
        Search::Found(j) => Verdict::Holds(Reason { theorem: format!("J = {j}"), anchor: anchor.into() }),
        Search::Absent { exact: true } => Verdict::Refuted(Witness::Ideal(i.clone())),
        Search::Absent { exact: false } => Verdict::Unknown(SampleReport::universe(u.members.len())),
    }
}

/// Some finitely generated `J` has `J^op = i^op`.
pub fn is_star_finite(op: &SemistarOp, i: &IdealHandle) -> Result<Verdict> {
    if i.is_finitely_generated() {
        return Ok(Verdict::Holds(Reason::new("finitely generated", "J = I")));
    }
    let u = fg_universe(i.domain());
    let target = apply(op, i)?;
    Ok(search_verdict(find_generated(op, &target, None, &u)?, i, &u, "J^* = I^*"))
}

/// Some finitely generated `J ⊆ i` has `J^op = i^op`.
pub fn is_star_f_finite(op: &SemistarOp, i: &IdealHandle) -> Result<Verdict> {
    if i.is_finitely_generated() {
        return Ok(Verdict::Holds(Reason::new("finitely generated", "J = I")));
    }
    let u = fg_universe(i.domain());
    let target = apply(op, i)?;
    Ok(search_verdict(find_generated(op, &target, Some(i), &u)?, i, &u, "J <= I, J^* = I^*"))
}

/// Checks `holds` on every class and then on sampled integral ideals.
pub(crate) fn every_fg(
    d: &Arc<DomainHandle>,
    spec: &SampleSpec,
    theorem: Option<Reason>,
    mut holds: impl FnMut(&IdealHandle) -> Result<bool>,
) -> Result<Verdict> {
    let u = fg_universe(d);
    for j in &u.members {
        if !holds(j)? {
            return Ok(Verdict::Refuted(Witness::Ideal(j.clone())));
        }
    }
    if let Some(r) = theorem {
        return Ok(Verdict::Holds(r));
    }
    if u.proves {
        return Ok(Verdict::Holds(Reason::exhaustive(format!("{} finitely generated classes", u.members.len()))));
    }
    let mut s = Sampler::new(d, spec);
    for _ in 0..spec.count {
        let j = s.fg(true);
        if !holds(&j)? {
            return Ok(Verdict::Refuted(Witness::Ideal(j)));
        }
    }
    Ok(Verdict::Unknown(spec.report(spec.count + u.members.len(), "finitely generated ideals")))
}

fn principal_theorem(d: &DomainHandle) -> Option<Reason> {
    d.capabilities()
        .valuation
        .then(|| Reason::new("valuation domain: finitely generated ideals are principal", "(II^-1)^* = D^*"))
}

/// `D^op` is the quotient field.
pub(crate) fn closes_to_field(d: &Arc<DomainHandle>, op: &SemistarOp) -> Result<bool> {
    Ok(apply(op, &IdealHandle::ring(d))?.is_quotient_field())
}

fn invertibility_theorem(d: &Arc<DomainHandle>, op: &SemistarOp) -> Result<Option<Reason>> {
    if closes_to_field(d, op)? {
        return Ok(Some(Reason::new("D^* = K: every nonzero ideal closes to K", "(II^-1)^* = D^*")));
    }
    Ok(principal_theorem(d))
}

/// Every nonzero finitely generated ideal is `op`-invertible.
pub fn is_star_domain(d: &Arc<DomainHandle>, op: &SemistarOp, spec: &SampleSpec) -> Result<Verdict> {
    every_fg(d, spec, invertibility_theorem(d, op)?, |j| is_star_invertible(op, j))
}

/// The ideals `D_Q` with `Q` quasi-`op_f`-maximal, as spectral operations.
fn localizations(d: &Arc<DomainHandle>, op: &SemistarOp) -> Result<Vec<SemistarOp>> {
    let maximals = quasi_star_maximals(&SemistarOp::ft(op.clone()), d)?;
    Ok(maximals.into_iter().map(|q| SemistarOp::spectral(&[q])).collect())
}

/// `(J J^-1) D_Q = D_Q` for every quasi-`op_f`-maximal `Q`.
pub fn locally_invertible(d: &Arc<DomainHandle>, locs: &[SemistarOp], j: &IdealHandle) -> Result<bool> {
    let jj = j.mul(&j.inverse()?)?;
    let ring = IdealHandle::ring(d);
    for l in locs {
        if apply(l, &jj)? != apply(l, &ring)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Three ways of deciding the Prüfer property; they must agree.
pub fn pstarmd_routes(d: &Arc<DomainHandle>, op: &SemistarOp, spec: &SampleSpec) -> Result<[Verdict; 3]> {
    let r1 = is_star_domain(d, &SemistarOp::ft(op.clone()), spec)?;
    let r2 = is_star_domain(d, &SemistarOp::tilde(op.clone()), spec)?;
    let locs = localizations(d, op)?;
    let r3 = every_fg(d, spec, invertibility_theorem(d, &SemistarOp::ft(op.clone()))?, |j| {
        locally_invertible(d, &locs, j)
    })?;
    Ok([r1, r2, r3])
}

/// Fails when decided verdicts disagree.
pub fn agree(what: &str, verdicts: &[&Verdict]) -> Result<()> {
    let holds = verdicts.iter().any(|v| v.is_holds());
    let refuted = verdicts.iter().find(|v| v.is_refuted());
    if let (true, Some(r)) = (holds, refuted) {
        return Err(Error::ConsistencyFailure(format!("{what}: routes disagree, one refuted by {r}")));
    }
    Ok(())
}

pub(crate) fn first_decided(verdicts: &[Verdict]) -> Verdict {
    verdicts
        .iter()
        .find(|v| v.is_refuted())
        .or_else(|| verdicts.iter().find(|v| v.is_holds()))
        .unwrap_or(&verdicts[0])
        .clone()
}

/// Every nonzero finitely generated ideal is `op_f`-invertible.
pub fn is_pstarmd(d: &Arc<DomainHandle>, op: &SemistarOp, spec: &SampleSpec) -> Result<Verdict> {
    let routes = pstarmd_routes(d, op, spec)?;
    agree("P*MD", &[&routes[0], &routes[1], &routes[2]])?;
    Ok(first_decided(&routes))
}

/// The relative scalings `u` tried when comparing `F` with `u G`.
pub(crate) fn relative_scalings(d: &Arc<DomainHandle>) -> Vec<Generator> {
    let k = d.field();
    let mut coeffs: Vec<FieldElem> = vec![k.one()];
    if let Some(all) = k.elements() {
        coeffs = all.into_iter().filter(|c| !c.is_zero()).collect();
    } else if k.degree() > 1 {
        let a = k.generator();
        coeffs.push(a.clone());
        if k.degree() > 2 {
            coeffs.push(k.mul(&a, &a));
            coeffs.push(k.add(&k.one(), &a));
        }
    }
    let levels: Vec<GroupElement> = match d.family() {
        Family::SemigroupRing(s) => {
            let w = s.conductor() + s.multiplicity();
            return (-w..=w).map(|h| Generator::new(k.one(), GroupElement::Int(h))).collect();
        }
        _ => match d.group() {
            ValueGroup::Integers => (-1..=1).map(GroupElement::Int).collect(),
            ValueGroup::Rationals => [(-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1)]
                .iter()
                .map(|&(n, m)| GroupElement::Rat(BigRational::new(BigInt::from(n), BigInt::from(m))))
                .collect(),
            ValueGroup::LexProduct => {
                [(-1, 0), (0, -1), (0, 0), (0, 1), (1, 0)].iter().map(|&(a, b)| GroupElement::Lex(a, b)).collect()
            }
        },
    };
    let mut out = Vec::new();
    for l in &levels {
        for c in &coeffs {
            out.push(Generator::new(c.clone(), l.clone()));
        }
    }
    out
}

fn cancellation_theorem(d: &Arc<DomainHandle>, op: &SemistarOp, spec: &SampleSpec) -> Result<Option<Reason>> {
    if d.capabilities().valuation {
        return Ok(Some(Reason::new(
            "valuation domain: finitely generated ideals are principal and cancel",
            "(EF)^* <= (EG)^* => F^* <= G^*",
        )));
    }
    let induced = matches!(op, SemistarOp::StarOverring(_) | SemistarOp::Descent(..));
    if induced {
        return Ok(Some(Reason::new(
            "induced by valuation overrings or the quotient field",
            "(EF)^* <= (EG)^* => F^* <= G^*",
        )));
    }
    if is_star_domain(d, op, spec)?.is_holds() {
        return Ok(Some(Reason::new("star-domain implies a.b.", "(II^-1)^* = D^* => a.b.")));
    }
    Ok(None)
}

/// Looks for `(E, F, G)` with `(EF)^op ⊆ (EG)^op` but `F^op ⊄ G^op`.
fn cancellation_search(
    d: &Arc<DomainHandle>,
    op: &SemistarOp,
    pool: &[IdealHandle],
    spec: &SampleSpec,
) -> Result<(Option<Witness>, usize)> {
    let es: Vec<IdealHandle> =
        fg_universe(d).members.into_iter().filter(|e| *e != IdealHandle::ring(d)).collect();
    let closed: Vec<IdealHandle> = pool.iter().map(|x| apply(op, x)).collect::<Result<_>>()?;
    let scalings = relative_scalings(d);
    let mut checked = 0usize;
    for e in &es {
        let prods: Vec<IdealHandle> = pool.iter().map(|x| apply(op, &e.mul(x)?)).collect::<Result<_>>()?;
        for (fi, f) in pool.iter().enumerate() {
            for (gi, g0) in pool.iter().enumerate() {
                for u in &scalings {
                    if checked >= TRIPLE_BUDGET {
                        return Ok((None, checked));
                    }
                    checked += 1;
                    if prods[fi].is_subset(&prods[gi].scale(u)?)? && !closed[fi].is_subset(&closed[gi].scale(u)?)? {
                        return Ok((Some(Witness::Triple(e.clone(), f.clone(), g0.scale(u)?)), checked));
                    }
                }
            }
        }
    }
    // random triples on top of the window
    let mut s = Sampler::new(d, spec);
    for _ in 0..spec.count {
        let e = s.fg(true);
        let (f, g) = (s.fg(false), s.fg(false));
        checked += 1;
        if apply(op, &e.mul(&f)?)?.is_subset(&apply(op, &e.mul(&g)?)?)? && !apply(op, &f)?.is_subset(&apply(op, &g)?)? {
            return Ok((Some(Witness::Triple(e, f, g)), checked));
        }
    }
    Ok((None, checked))
}

fn cancellation(d: &Arc<DomainHandle>, op: &SemistarOp, spec: &SampleSpec, extended: bool) -> Result<Verdict> {
    let pool: Vec<IdealHandle> = if extended {
        fg_universe(d).members
    } else {
        module_classes(d).members.into_iter().filter(|m| !m.is_quotient_field()).collect()
    };
    let mut theorem = cancellation_theorem(d, op, spec)?;
    if theorem.is_none() && extended && is_pstarmd(d, op, spec)?.is_holds() {
        theorem = Some(Reason::new("P*MD implies e.a.b.", "(EF)^* <= (EG)^* => F^* <= G^*"));
    }
    let (found, checked) = cancellation_search(d, op, &pool, spec)?;
    match (found, theorem) {
        (Some(w), Some(r)) => Err(Error::ConsistencyFailure(format!("{} contradicted by {w}", r.theorem))),
        (Some(w), None) => Ok(Verdict::Refuted(w)),
        (None, Some(r)) => Ok(Verdict::Holds(r)),
        (None, None) => Ok(Verdict::Unknown(spec.report(checked, "windowed triples"))),
    }
}

/// `op` is a.b.: cancellation of finitely generated `E` against any `F, G`.
pub fn is_ab(d: &Arc<DomainHandle>, op: &SemistarOp, spec: &SampleSpec) -> Result<Verdict> {
    cancellation(d, op, spec, false)
}

/// `op` is e.a.b.: cancellation with `E, F, G` all finitely generated.
pub fn is_eab(d: &Arc<DomainHandle>, op: &SemistarOp, spec: &SampleSpec) -> Result<Verdict> {
    cancellation(d, op, spec, true)
}

fn rational(n: i64, m: i64) -> GroupElement {
    GroupElement::Rat(BigRational::new(BigInt::from(n), BigInt::from(m)))
}

/// Strictly ascending chains of integral ideals that could consist of
/// quasi-`op`-ideals.
fn candidate_chains(d: &Arc<DomainHandle>, length: usize) -> Result<Vec<Vec<IdealHandle>>> {
    let n = length.max(2) as i64;
    let k = d.field();
    let mut out = Vec::new();
    match (d.family(), d.group()) {
        (Family::Pullback(p), ValueGroup::Rationals) => {
            let principal = (1..=n)
                .map(|i| IdealHandle::from_generators(d, &[Generator::new(k.one(), rational(1, i))]))
                .collect::<Result<_>>()?;
            out.push(principal);
            let full = (1..=n)
                .map(|i| {
                    let l = LeveledModule::new(p.clone(), rational(1, i), Subspace::full(k.clone()))?;
                    IdealHandle::new(d.clone(), Module::Leveled(l))
                })
                .collect::<Result<_>>()?;
            out.push(full);
        }
        (Family::Valuation(_), ValueGroup::Rationals) => {
            out.push(
                (1..=n)
                    .map(|i| IdealHandle::new(d.clone(), Module::Segment(Segment::closed(rational(1, i)))))
                    .collect::<Result<_>>()?,
            );
        }
        (Family::Valuation(_), ValueGroup::LexProduct) => {
            for a in 1..=2 {
                out.push(
                    (1..=n)
                        .map(|i| IdealHandle::new(d.clone(), Module::Segment(Segment::closed(GroupElement::Lex(a, -i)))))
                        .collect::<Result<_>>()?,
                );
            }
        }
        _ => {}
    }
    Ok(out)
}

/// Ascending chain condition on quasi-`op`-ideals.
pub fn is_star_noetherian(d: &Arc<DomainHandle>, op: &SemistarOp, chain_length: usize) -> Result<Verdict> {
    if d.capabilities().noetherian {
        return Ok(Verdict::Holds(Reason::new("noetherian ring", "ACC on ideals")));
    }
    if apply(op, &IdealHandle::ring(d))?.is_quotient_field() {
        return Ok(Verdict::Holds(Reason::new("D^* = K: no proper quasi-ideals", "I^* & D = I")));
    }
    let chains = candidate_chains(d, chain_length)?;
    for chain in &chains {
        let mut all = true;
        for i in chain {
            if !quasi_star_ideal_check(op, i)? {
                all = false;
                break;
            }
        }
        if all {
            return Ok(Verdict::Refuted(Witness::Chain(chain.clone())));
        }
    }
    Ok(Verdict::Unknown(SampleReport::universe(chains.len()).with_note("candidate chains")))
}

/// `op`-Dedekind, decided as a P*MD and as an `op`-domain, both with ACC.
pub fn is_star_dedekind(d: &Arc<DomainHandle>, op: &SemistarOp, spec: &SampleSpec) -> Result<Verdict> {
    let noeth = is_star_noetherian(d, op, 8)?;
    let pmd = is_pstarmd(d, op, spec)?;
    let dom = is_star_domain(d, op, spec)?;
    let a = pmd.outcome().and(noeth.outcome());
    let b = dom.outcome().and(noeth.outcome());
    if matches!((a, b), (Outcome::Holds, Outcome::Refuted) | (Outcome::Refuted, Outcome::Holds)) {
        return Err(Error::ConsistencyFailure(format!("Dedekind routes disagree: {pmd} {dom} {noeth}")));
    }
    Ok(match a.or(b) {
        Outcome::Holds => Verdict::Holds(Reason::new("star-Noetherian P*MD", "star-Noetherian star-domain")),
        _ if noeth.is_refuted() => noeth,
        _ if pmd.is_refuted() => pmd,
        _ if dom.is_refuted() => dom,
        _ => Verdict::Unknown(spec.report(spec.count, "Dedekind routes undecided")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::catalog::{pullback, quadratic_rationals, rationals, semigroup, valuation};
    use crate::semistar::OverringTag;

    fn st_v() -> SemistarOp {
        SemistarOp::StarOverring(OverringTag::ValuationHull)
    }

    #[test]
    fn pvd() {
        let d = pullback(quadratic_rationals(), ValueGroup::Integers);
        let spec = SampleSpec::default();
        let m = IdealHandle::maximal(&d);
        assert!(!is_star_invertible(&st_v(), &m).unwrap());
        assert_eq!(is_star_domain(&d, &st_v(), &spec).unwrap(), Verdict::Refuted(Witness::Ideal(m.clone())));
        assert!(is_pstarmd(&d, &st_v(), &spec).unwrap().is_refuted());
        assert!(is_ab(&d, &st_v(), &spec).unwrap().is_holds());
        assert!(is_eab(&d, &st_v(), &spec).unwrap().is_holds());
    }

    #[test]
    fn dense_pullback() {
        let d = pullback(quadratic_rationals(), ValueGroup::Rationals);
        let spec = SampleSpec::default().with_count(40);
        assert!(is_star_domain(&d, &st_v(), &spec).unwrap().is_refuted());
        assert!(is_pstarmd(&d, &st_v(), &spec).unwrap().is_refuted());
        let one = d.group().from_int(1);
        let mm = IdealHandle::maximal(&d).scale(&Generator::new(d.field().one(), one)).unwrap();
        assert_eq!(is_star_finite(&st_v(), &mm).unwrap(), Verdict::Refuted(Witness::Ideal(mm.clone())));
        assert!(is_star_noetherian(&d, &st_v(), 4).unwrap().is_refuted());
    }

    #[test]
    fn valuation_over_rationals() {
        let d = valuation(rationals(), ValueGroup::Rationals);
        let spec = SampleSpec::default().with_count(40);
        let m = IdealHandle::maximal(&d);
        assert!(is_star_domain(&d, &SemistarOp::V, &spec).unwrap().is_holds());
        assert!(is_pstarmd(&d, &SemistarOp::V, &spec).unwrap().is_holds());
        assert!(is_star_finite(&SemistarOp::t(), &m).unwrap().is_refuted());
        assert!(is_star_f_finite(&SemistarOp::V, &m).unwrap().is_refuted());
        let Verdict::Refuted(Witness::Chain(c)) = is_star_noetherian(&d, &SemistarOp::V, 5).unwrap() else { panic!() };
        assert_eq!(c.len(), 5);
        assert!(is_star_dedekind(&d, &SemistarOp::V, &spec).unwrap().is_refuted());
        let z = valuation(rationals(), ValueGroup::Integers);
        assert!(is_star_dedekind(&z, &SemistarOp::Identity, &spec).unwrap().is_holds());
    }

    #[test]
    fn semigroup_345() {
        let d = semigroup(&[3, 4, 5]);
        let spec = SampleSpec::default().with_count(40);
        assert!(is_star_domain(&d, &SemistarOp::V, &spec).unwrap().is_refuted());
        assert!(is_star_noetherian(&d, &SemistarOp::V, 4).unwrap().is_holds());
        let ic = SemistarOp::StarOverring(OverringTag::IntegralClosure);
        assert!(is_star_domain(&d, &ic, &spec).unwrap().is_refuted());
        assert!(is_ab(&d, &ic, &spec).unwrap().is_holds());
        let ab = is_ab(&d, &SemistarOp::Identity, &spec).unwrap();
        assert!(!ab.is_holds(), "{ab}");
    }
}
