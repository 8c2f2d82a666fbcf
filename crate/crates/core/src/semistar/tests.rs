use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::*;
use crate::algebra::{GroupElement, Segment, ValueGroup};
use crate::classify::catalog::{pullback, quadratic_rationals, rationals, semigroup, valuation};
use crate::dplusm::Generator;

fn mono(d: &Arc<DomainHandle>, exps: &[i64]) -> IdealHandle {
    let gens: Vec<Generator> =
        exps.iter().map(|&n| Generator::new(d.field().one(), GroupElement::Int(n))).collect();
    IdealHandle::from_generators(d, &gens).unwrap()
}

fn rat(n: i64, m: i64) -> GroupElement {
    GroupElement::Rat(BigRational::new(BigInt::from(n), BigInt::from(m)))
}

fn seg(d: &Arc<DomainHandle>, s: Segment) -> IdealHandle {
    IdealHandle::new(d.clone(), Module::Segment(s)).unwrap()
}

#[test]
fn divisorial_closures_in_345() {
    let d = semigroup(&[3, 4, 5]);
    let e = mono(&d, &[3, 4]);
    let f = mono(&d, &[3, 5]);
    let m = IdealHandle::maximal(&d);
    assert_eq!(apply(&SemistarOp::V, &e).unwrap(), m);
    assert_eq!(apply(&SemistarOp::V, &f).unwrap(), m);
    let ef = e.intersect(&f).unwrap();
    assert_eq!(ef, mono(&d, &[3]));
    assert_eq!(apply(&SemistarOp::V, &ef).unwrap(), ef);
}

#[test]
fn valuation_over_rationals() {
    let d = valuation(rationals(), ValueGroup::Rationals);
    let m = IdealHandle::maximal(&d);
    let r = IdealHandle::ring(&d);
    assert_eq!(apply(&SemistarOp::V, &m).unwrap(), r);
    assert_eq!(apply(&SemistarOp::t(), &m).unwrap(), m);
    assert_eq!(apply(&SemistarOp::w(), &m).unwrap(), m);
    assert_eq!(apply(&SemistarOp::bar(SemistarOp::V), &m).unwrap(), r);
    let half = seg(&d, Segment::open(rat(1, 2)));
    assert_eq!(apply(&SemistarOp::V, &half).unwrap(), seg(&d, Segment::closed(rat(1, 2))));
    assert_eq!(apply(&SemistarOp::t(), &half).unwrap(), half);

    assert!(quasi_star_maximals(&SemistarOp::V, &d).unwrap().is_empty());
    let expect: BTreeSet<PrimeTag> = [PrimeTag::Maximal].into_iter().collect();
    assert_eq!(quasi_star_maximals(&SemistarOp::t(), &d).unwrap(), expect);

    let ls = localizing_system(&d, &SemistarOp::V).unwrap();
    assert_eq!(ls.cofinal, CofinalFamily::Finite(alloc::vec![m.clone()]));
    assert!(ls_contains(&ls, &m).unwrap());
    assert!(!ls_contains(&ls, &half).unwrap());
}

#[test]
fn pvd_star_v() {
    let d = pullback(quadratic_rationals(), ValueGroup::Integers);
    let op = SemistarOp::StarOverring(OverringTag::ValuationHull);
    let m = IdealHandle::maximal(&d);
    assert!(m.is_finitely_generated());
    let mm = m.mul(&m.inverse().unwrap()).unwrap();
    assert_eq!(apply(&op, &mm).unwrap(), m);
    let hull = IdealHandle::new(d.clone(), d.hull_module()).unwrap();
    assert_eq!(apply(&op, &IdealHandle::ring(&d)).unwrap(), hull);
    assert_eq!(m.inverse().unwrap(), hull);
    let expect: BTreeSet<PrimeTag> = [PrimeTag::Maximal].into_iter().collect();
    assert_eq!(quasi_star_maximals(&SemistarOp::ft(op), &d).unwrap(), expect);
}

#[test]
fn pullback_over_rationals() {
    let d = pullback(quadratic_rationals(), ValueGroup::Rationals);
    let k = d.field();
    let one = GroupElement::Rat(BigRational::from_integer(BigInt::from(1)));
    let md = IdealHandle::from_generators(&d, &[Generator::new(k.one(), one.clone())]).unwrap();
    let mxd = IdealHandle::from_generators(&d, &[Generator::new(k.generator(), one.clone())]).unwrap();
    let inter = md.intersect(&mxd).unwrap();
    let mm = IdealHandle::maximal(&d).scale(&Generator::new(k.one(), one.clone())).unwrap();
    assert_eq!(inter, mm);
    let op = SemistarOp::StarOverring(OverringTag::ValuationHull);
    let mv = apply(&op, &md).unwrap();
    assert_eq!(apply(&op, &mxd).unwrap(), mv);
    assert_eq!(apply(&op, &inter).unwrap(), mm);
    assert_ne!(mm, mv);
}

#[test]
fn lex_spectral() {
    let d = valuation(rationals(), ValueGroup::LexProduct);
    let p1 = SemistarOp::spectral(&[PrimeTag::Height1]);
    let r = IdealHandle::ring(&d);
    assert_eq!(apply(&p1, &r).unwrap(), seg(&d, Segment::coarse(0)));
    let x = seg(&d, Segment::closed(GroupElement::Lex(1, 5)));
    assert_eq!(apply(&p1, &x).unwrap(), seg(&d, Segment::coarse(1)));
    let expect: BTreeSet<PrimeTag> = [PrimeTag::Height1].into_iter().collect();
    assert_eq!(quasi_star_maximals(&p1, &d).unwrap(), expect);
    // the limit of principal ideals inside P
    assert_eq!(apply(&SemistarOp::ft(SemistarOp::Identity), &seg(&d, Segment::coarse(1))).unwrap(), seg(&d, Segment::coarse(1)));
}

#[test]
fn descent_and_ascent() {
    let d = pullback(quadratic_rationals(), ValueGroup::Integers);
    let tag = OverringTag::ValuationHull;
    let t = d.overring(tag).unwrap();
    let op = SemistarOp::ascent(SemistarOp::descent(SemistarOp::Identity, tag), tag);
    for e in module_classes(&t).members {
        assert_eq!(apply(&op, &e).unwrap(), e);
    }
    let k = SemistarOp::StarOverring(OverringTag::FullQuotientField);
    assert!(apply(&k, &IdealHandle::ring(&d)).unwrap().is_quotient_field());
}

#[test]
fn order_on_classes() {
    let d = valuation(rationals(), ValueGroup::Rationals);
    let u = module_classes(&d);
    assert!(u.exhaustive);
    assert!(op_leq(&SemistarOp::t(), &SemistarOp::V, &u).unwrap().is_holds());
    assert!(op_leq(&SemistarOp::V, &SemistarOp::t(), &u).unwrap().is_refuted());
    assert!(ops_equal_on(&SemistarOp::w(), &SemistarOp::Identity, &u).unwrap().is_holds());
    assert!(ops_equal_on(&SemistarOp::bar(SemistarOp::V), &SemistarOp::V, &u).unwrap().is_holds());
}
