//! Finite universes of finitely generated ideals and the search for
//! finitely generated ideals with a prescribed closure.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{GroupElement, Shape, Subspace};
use crate::dplusm::{Generator, LeveledModule};
use crate::semistar::{apply, module_classes, DomainHandle, Family, IdealHandle, Module, SemistarOp};
use crate::{Error, Result};

/// Integral finitely generated ideals, one per class up to monomial scaling.
/// `refutes`: no other class exists among the representable ideals, so a
/// failed search is a proof of absence. `proves`: the representable ideals
/// are all the finitely generated ideals of the ring, so a property checked
/// on every class holds.
#[derive(Clone, Debug)]
pub struct FgUniverse {
    pub members: Vec<IdealHandle>,
    pub refutes: bool,
    pub proves: bool,
}

pub fn fg_universe(d: &Arc<DomainHandle>) -> FgUniverse {
    let classes = module_classes(d).finitely_generated();
    let mut members: Vec<IdealHandle> = Vec::new();
    for c in classes.members {
        let m = match (d.family(), c.module()) {
            (Family::SemigroupRing(s), Module::Monomial(i)) if !i.is_integral() => Module::Monomial(i.shift(s.conductor())),
            (Family::Pullback(p), Module::Leveled(l)) => {
                let w = l.floor().expect("finitely generated").clone();
                if w.dim() == 1 {
                    Module::Leveled(LeveledModule::ring(p.clone()))
                } else {
                    let pos = d.group().from_int(1);
                    Module::Leveled(LeveledModule::new(p.clone(), pos, w).expect("level"))
                }
            }
            (_, m) => m.clone(),
        };
        let h = IdealHandle::new(d.clone(), m).expect("representable");
        if !members.contains(&h) {
            members.push(h);
        }
    }
    // the ring first: it is the trivial case of most searches
    members.sort_by_key(|m| *m != IdealHandle::ring(d));
    let complete = classes.exhaustive;
    match d.family() {
        Family::SemigroupRing(_) => FgUniverse { members, refutes: true, proves: false },
        Family::Pullback(_) => FgUniverse { members, refutes: complete, proves: complete },
        Family::Valuation(_) => FgUniverse { members, refutes: true, proves: true },
    }
}

/// The monomials `u` with `u * x0 = x`.
#[derive(Clone, Debug)]
enum Scalings {
    None,
    Any,
    Exact(Generator),
    /// `c t^h` for any nonzero `c` in the subspace.
    Coeffs(GroupElement, Subspace),
    /// `t^(s, b)` for any `b`.
    LexFirst(i64),
}

fn scalings(d: &DomainHandle, x0: &Module, x: &Module) -> Result<Scalings> {
    let one = d.field().one();
    Ok(match (x0, x) {
        (Module::QuotientField, Module::QuotientField) => Scalings::Any,
        (Module::QuotientField, _) | (_, Module::QuotientField) => Scalings::None,
        (Module::Monomial(a), Module::Monomial(b)) => {
            let h = b.min() - a.min();
            if a.shift(h) == *b {
                Scalings::Exact(Generator::new(one, GroupElement::Int(h)))
            } else {
                Scalings::None
            }
        }
        (Module::Segment(a), Module::Segment(b)) => match (a.shape(), b.shape()) {
            (Shape::Closed(p), Shape::Closed(q)) | (Shape::Open(p), Shape::Open(q)) => {
                Scalings::Exact(Generator::new(one, q - p))
            }
            (Shape::Coarse(p), Shape::Coarse(q)) => Scalings::LexFirst(q - p),
            _ => Scalings::None,
        },
        (Module::Leveled(a), Module::Leveled(b)) => {
            let (g0, w0) = (a.level().expect("not whole"), a.floor().expect("not whole"));
            let (g, w) = (b.level().expect("not whole"), b.floor().expect("not whole"));
            if w0.dim() != w.dim() {
                return Ok(Scalings::None);
            }
            let h = g - g0;
            if w0.is_zero() {
                return Ok(Scalings::Coeffs(h, Subspace::full(d.field())));
            }
            let c = w.colon(w0)?;
            if c.is_zero() {
                Scalings::None
            } else {
                Scalings::Coeffs(h, c)
            }
        }
        _ => return Err(Error::DomainMismatch("module families")),
    })
}

/// A multiple `u * j0`, with `u` from `s`, contained in `within` if given.
fn place(j0: &IdealHandle, s: &Scalings, within: Option<&IdealHandle>) -> Result<Option<IdealHandle>> {
    let d = j0.domain();
    let fits = |j: &IdealHandle| -> Result<bool> {
        match within {
            Some(i) => j.is_subset(i),
            None => Ok(true),
        }
    };
    let candidate = match s {
        Scalings::None => return Ok(None),
        Scalings::Exact(u) => j0.scale(u)?,
        Scalings::Any => {
            let mut n = 0;
            loop {
                let j = j0.scale(&Generator::new(d.field().one(), d.group().from_int(n)))?;
                if fits(&j)? {
                    return Ok(Some(j));
                }
                if n > 64 {
                    return Ok(None);
                }
                n += 1;
            }
        }
        Scalings::LexFirst(s) => {
            let Module::Segment(seg) = j0.module() else { return Ok(None) };
            let Shape::Closed(GroupElement::Lex(p1, p2)) = seg.shape() else { return Ok(None) };
            let first = p1 + s;
            let b = match within.map(|i| i.module()) {
                Some(Module::Segment(t)) => match t.shape() {
                    Shape::Closed(GroupElement::Lex(q1, q2)) if *q1 == first => *q2,
                    _ => *p2,
                },
                _ => *p2,
            };
            j0.scale(&Generator::new(d.field().one(), GroupElement::Lex(first, b - p2)))?
        }
        Scalings::Coeffs(h, allowed) => {
            let Module::Leveled(l) = j0.module() else { return Ok(None) };
            let wj = l.floor().expect("finitely generated");
            let level = l.level().expect("finitely generated") + h;
            let mut space = allowed.clone();
            if let Some(Module::Leveled(target)) = within.map(|i| i.module()) {
                let (gi, wi) = (target.level().expect("not whole"), target.floor().expect("not whole"));
                if level < *gi {
                    return Ok(None);
                }
                if level == *gi {
                    space = space.intersect(&wi.colon(wj)?)?;
                }
            }
            match space.basis().first() {
                Some(c) => j0.scale(&Generator::new(c.clone(), h.clone()))?,
                None => return Ok(None),
            }
        }
    };
    Ok(if fits(&candidate)? { Some(candidate) } else { None })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search {
    Found(IdealHandle),
    /// `exact`: the universe covers every finitely generated ideal up to scaling.
    Absent { exact: bool },
}

/// A finitely generated `J` with `J^op = target`, inside `within` if given.
pub fn find_generated(
    op: &SemistarOp,
    target: &IdealHandle,
    within: Option<&IdealHandle>,
    u: &FgUniverse,
) -> Result<Search> {
    if let Some(i) = within.filter(|i| i.is_finitely_generated()) {
        if apply(op, i)? == *target {
            return Ok(Search::Found(i.clone()));
        }
    }
    let d = target.domain();
    for j0 in &u.members {
        let x0 = apply(op, j0)?;
        let s = scalings(d, x0.module(), target.module())?;
        if let Some(j) = place(j0, &s, within)? {
            if apply(op, &j)? != *target {
                return Err(Error::ConsistencyFailure(format!(
                    "scaled {j0} to {j} but its closure is not {target}"
                )));
            }
            return Ok(Search::Found(j));
        }
    }
    Ok(Search::Absent { exact: u.refutes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ValueGroup;
    use crate::classify::catalog::{pullback, quadratic_rationals, rationals, semigroup, valuation};
    use crate::semistar::OverringTag;

    #[test]
    fn universes() {
        let d = semigroup(&[3, 4, 5]);
        let u = fg_universe(&d);
        let names: Vec<_> = u.members.iter().map(|m| m.to_expr()).collect();
        assert_eq!(names, ["<x^0>", "<x^3, x^5>", "<x^3, x^4>", "<x^3, x^4, x^5>"]);
        let p = pullback(quadratic_rationals(), ValueGroup::Integers);
        let u = fg_universe(&p);
        assert!(u.proves);
        assert_eq!(u.members, [IdealHandle::ring(&p), IdealHandle::maximal(&p)]);
    }

    #[test]
    fn cut_parity() {
        let d = pullback(quadratic_rationals(), ValueGroup::Rationals);
        let u = fg_universe(&d);
        let op = SemistarOp::StarOverring(OverringTag::ValuationHull);
        let m = IdealHandle::maximal(&d);
        assert_eq!(find_generated(&op, &m, None, &u).unwrap(), Search::Absent { exact: true });
        let hull = apply(&op, &m).unwrap();
        assert!(matches!(find_generated(&op, &hull, Some(&m), &u).unwrap(), Search::Absent { .. }));
        let md = IdealHandle::from_generators(&d, &[Generator::new(d.field().one(), d.group().from_int(1))]).unwrap();
        let mv = apply(&op, &md).unwrap();
        let Search::Found(j) = find_generated(&op, &mv, Some(&m), &u).unwrap() else { panic!() };
        assert!(j.is_subset(&m).unwrap());
    }

    #[test]
    fn lex_coarse_targets() {
        let d = valuation(rationals(), ValueGroup::LexProduct);
        let u = fg_universe(&d);
        let p1 = SemistarOp::spectral(&[crate::semistar::PrimeTag::Height1]);
        let p = IdealHandle::new(d.clone(), d.height_one_prime().unwrap()).unwrap();
        let target = apply(&p1, &p).unwrap();
        let Search::Found(j) = find_generated(&p1, &target, Some(&p), &u).unwrap() else { panic!() };
        assert!(j.is_subset(&p).unwrap());
        assert_eq!(find_generated(&SemistarOp::Identity, &p, None, &u).unwrap(), Search::Absent { exact: true });
    }
}
