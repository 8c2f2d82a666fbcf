use alloc::collections::BTreeSet;
use alloc::sync::Arc;

use super::handle::{DomainHandle, Family, IdealHandle, Module, OverringTag};
use super::lsys::{localizing_system, CofinalFamily};
use super::op::{PrimeTag, SemistarOp};
use crate::algebra::{GroupElement, Segment, Shape};
use crate::dplusm::{lift_from_prime, localize_at, DomainPrime, LeveledModule};
use crate::{Error, Result};

/// `e^op`.
pub fn apply(op: &SemistarOp, e: &IdealHandle) -> Result<IdealHandle> {
    if e.is_quotient_field() {
        return Ok(e.clone());
    }
    let d = e.domain();
    match op {
        SemistarOp::Identity => Ok(e.clone()),
        SemistarOp::V => match e.inverse() {
            Ok(inv) => IdealHandle::ring(d).colon(&inv),
            Err(Error::EmptyColon) => Ok(IdealHandle::quotient_field(d)),
            Err(other) => Err(other),
        },
        SemistarOp::StarOverring(tag) => e.with(star_overring(d, e.module(), *tag)?),
        SemistarOp::Spectral(primes) => spectral(e, primes),
        SemistarOp::FiniteType(inner) => finite_type_apply(inner, e),
        SemistarOp::Stable(inner) => stable_apply(inner, e),
        SemistarOp::Tilde(inner) => tilde_apply(inner, e),
        SemistarOp::Ascent(inner, tag) => ascent_apply(inner, *tag, e),
        SemistarOp::Descent(inner, tag) => descent_apply(inner, *tag, e),
    }
}

fn star_overring(d: &DomainHandle, m: &Module, tag: OverringTag) -> Result<Module> {
    if tag == OverringTag::FullQuotientField {
        return Ok(Module::QuotientField);
    }
    d.from_overring(&d.to_overring(m, tag)?, tag)
}

/// `E V_P` for the height one prime of a rank two valuation domain.
fn localize_height_one(d: &DomainHandle, m: &Module) -> Result<Module> {
    match (d.family(), m) {
        (_, Module::QuotientField) => Ok(Module::QuotientField),
        (Family::Valuation(v), Module::Segment(s)) if d.is_lex() => {
            let p = DomainPrime::height_one(v.clone())?;
            Ok(d.normalize(Module::Segment(lift_from_prime(&localize_at(s, &p)?)?)))
        }
        _ => Err(Error::UnsupportedOperation(alloc::format!(
            "no height one prime in {}",
            d.describe()
        ))),
    }
}

fn spectral(e: &IdealHandle, primes: &BTreeSet<PrimeTag>) -> Result<IdealHandle> {
    let d = e.domain();
    let mut acc = Module::QuotientField;
    for p in primes {
        let local = match p {
            // the domain is local
            PrimeTag::Maximal => e.module().clone(),
            PrimeTag::Height1 => localize_height_one(d, e.module())?,
        };
        acc = d.intersect(&acc, &local)?;
    }
    e.with(acc)
}

/// `e^(op_f)`: the union of `F^op` over finitely generated `F ⊆ e`.
pub fn finite_type_apply(op: &SemistarOp, e: &IdealHandle) -> Result<IdealHandle> {
    if e.is_quotient_field() {
        return Ok(e.clone());
    }
    if e.is_finitely_generated() {
        return apply(op, e);
    }
    // e = union of t^h F0 over a family of levels; the limit only depends on D^op
    let d = e.domain();
    let dstar = apply(op, &IdealHandle::ring(d))?;
    if dstar.is_quotient_field() {
        return Ok(dstar);
    }
    let out = match (e.module(), dstar.module()) {
        (Module::Leveled(x), Module::Leveled(y)) => {
            let (g, c) = (x.level().expect("not whole"), y.level().expect("not whole"));
            let floor = crate::algebra::Subspace::zero(d.field());
            Module::Leveled(LeveledModule::new(x.domain().clone(), g + c, floor)?)
        }
        (Module::Segment(s), Module::Segment(y)) => match (s.shape(), y.shape()) {
            (Shape::Open(g), Shape::Closed(c) | Shape::Open(c)) => Module::Segment(Segment::open(g + c)),
            (Shape::Coarse(a), Shape::Closed(GroupElement::Lex(c, _)) | Shape::Coarse(c)) => {
                Module::Segment(Segment::coarse(a + c))
            }
            _ => return Err(Error::UnsupportedOperation("finite type limit of this segment".into())),
        },
        _ => return Err(Error::UnsupportedOperation("finite type limit of this module".into())),
    };
    e.with(out)
}

/// `e^(bar op)`, through a cofinal family of the localizing system of `op`.
pub fn stable_apply(op: &SemistarOp, e: &IdealHandle) -> Result<IdealHandle> {
    if e.is_quotient_field() {
        return Ok(e.clone());
    }
    let d = e.domain();
    let ls = localizing_system(d, op)?;
    match &ls.cofinal {
        CofinalFamily::AllIdeals => Ok(IdealHandle::quotient_field(d)),
        CofinalFamily::Finite(members) => {
            let mut acc = e.clone();
            for j in members {
                acc = acc.sum(&e.colon(j)?)?;
            }
            Ok(acc)
        }
        CofinalFamily::Unrepresentable => {
            if d.capabilities().all_ops_stable {
                apply(op, e)
            } else {
                Err(Error::UnsupportedOperation(alloc::format!(
                    "no finite cofinal family for the localizing system of {op} on {}",
                    d.describe()
                )))
            }
        }
    }
}

/// `e^(tilde op)`: intersection of `e D_Q` over the quasi-`op_f`-maximal `Q`.
pub fn tilde_apply(op: &SemistarOp, e: &IdealHandle) -> Result<IdealHandle> {
    if e.is_quotient_field() {
        return Ok(e.clone());
    }
    let maximals = quasi_star_maximals(&SemistarOp::ft(op.clone()), e.domain())?;
    spectral(e, &maximals)
}

/// `i^op ∩ D = i` for a proper integral ideal `i`.
pub fn quasi_star_ideal_check(op: &SemistarOp, i: &IdealHandle) -> Result<bool> {
    if !i.is_integral() {
        return Err(Error::InvalidInput(alloc::format!("{} is not integral", i.to_expr())));
    }
    let ring = IdealHandle::ring(i.domain());
    if *i == ring {
        return Ok(false);
    }
    Ok(apply(op, i)?.intersect(&ring)? == *i)
}

/// The maximal quasi-`op` ideals, all of which are prime.
pub fn quasi_star_maximals(op: &SemistarOp, d: &Arc<DomainHandle>) -> Result<BTreeSet<PrimeTag>> {
    let mut out = BTreeSet::new();
    let dstar = apply(op, &IdealHandle::ring(d))?;
    if dstar.is_quotient_field() {
        return Ok(out);
    }
    if quasi_star_ideal_check(op, &IdealHandle::maximal(d))? {
        out.insert(PrimeTag::Maximal);
        return Ok(out);
    }
    if let Some(p) = d.height_one_prime() {
        // the ideals strictly between P and M are t^(0,b) V, b >= 2
        let between = IdealHandle::new(d.clone(), d.monomial(GroupElement::Lex(0, 2))?)?;
        if quasi_star_ideal_check(op, &between)? {
            return Err(Error::UnsupportedOperation("a non-prime maximal quasi ideal".into()));
        }
        if quasi_star_ideal_check(op, &IdealHandle::new(d.clone(), p)?)? {
            out.insert(PrimeTag::Height1);
            return Ok(out);
        }
    }
    if op.is_finite_type() {
        // finite type operations with D^op proper always have quasi-maximal ideals
        return Err(Error::UnsupportedOperation(alloc::format!(
            "quasi-maximal spectrum of {op} on {}",
            d.describe()
        )));
    }
    Ok(out)
}

fn same_overring(t: &DomainHandle, d: &Arc<DomainHandle>, tag: OverringTag) -> bool {
    d.overring(tag).map(|o| o.family() == t.family()).unwrap_or(false)
}

fn ascent_apply(op: &SemistarOp, tag: OverringTag, e: &IdealHandle) -> Result<IdealHandle> {
    if tag == OverringTag::FullQuotientField {
        return Err(Error::InvalidInput("only the quotient field is a module over the quotient field".into()));
    }
    let t = e.domain();
    if let Some((parent, _)) = t.parent().filter(|(p, _)| same_overring(t, p, tag)) {
        let x = IdealHandle::new(parent.clone(), parent.from_overring(e.module(), tag)?)?;
        let y = apply(op, &x)?;
        let z = parent.to_overring(y.module(), tag)?;
        if parent.from_overring(&z, tag)? != *y.module() {
            return Err(Error::UnsupportedOperation(alloc::format!(
                "{op} does not map modules of the overring to modules of the overring"
            )));
        }
        return e.with(z);
    }
    // a module of D that happens to be a module of T
    let ext = star_overring(t, e.module(), tag)?;
    if ext != *e.module() {
        return Err(Error::InvalidInput(alloc::format!("{} is not a module over the overring", e.to_expr())));
    }
    let y = apply(op, e)?;
    if star_overring(t, y.module(), tag)? != *y.module() {
        return Err(Error::UnsupportedOperation(alloc::format!(
            "{op} does not map modules of the overring to modules of the overring"
        )));
    }
    Ok(y)
}

fn descent_apply(op: &SemistarOp, tag: OverringTag, e: &IdealHandle) -> Result<IdealHandle> {
    let d = e.domain();
    if tag == OverringTag::FullQuotientField {
        return Ok(IdealHandle::quotient_field(d));
    }
    let t = d.overring(tag)?;
    let et = IdealHandle::new(t, d.to_overring(e.module(), tag)?)?;
    let r = apply(op, &et)?;
    e.with(d.from_overring(r.module(), tag)?)
}
