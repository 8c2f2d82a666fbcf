use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{BaseField, ExtensionField, GroupElement, Segment, Shape, ValueGroup};
use crate::dplusm::{Generator, LeveledModule, PullbackDomain, ValuationDomain};
use crate::numsgr::{MonomialIdeal, NumericalSemigroup};
use crate::{Error, Result};

/// The concrete domain behind a handle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    SemigroupRing(Arc<NumericalSemigroup>),
    Pullback(Arc<PullbackDomain>),
    Valuation(Arc<ValuationDomain>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Capabilities {
    pub noetherian: bool,
    pub local: bool,
    pub valuation: bool,
    pub all_ops_stable: bool,
    pub integrally_closed: bool,
}

/// The overrings that can be represented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OverringTag {
    IntegralClosure,
    ValuationHull,
    FullQuotientField,
}

impl OverringTag {
    pub fn name(&self) -> &'static str {
        match self {
            OverringTag::IntegralClosure => "ic",
            OverringTag::ValuationHull => "V",
            OverringTag::FullQuotientField => "K",
        }
    }
}

/// A domain together with what is known about it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DomainHandle {
    family: Family,
    capabilities: Capabilities,
    // set on overring handles: the ring this one was built over
    parent: Option<(Arc<DomainHandle>, OverringTag)>,
}

/// A nonzero `D`-submodule of the quotient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Module {
    Monomial(MonomialIdeal),
    Leveled(LeveledModule),
    Segment(Segment),
    QuotientField,
}

impl DomainHandle {
    fn wrap(family: Family, parent: Option<(Arc<DomainHandle>, OverringTag)>) -> Arc<DomainHandle> {
        let capabilities = match &family {
            Family::SemigroupRing(s) => Capabilities {
                noetherian: true,
                local: true,
                valuation: s.frobenius() < 0,
                all_ops_stable: s.frobenius() < 0,
                integrally_closed: s.frobenius() < 0,
            },
            Family::Pullback(p) => {
                let val = !p.is_proper();
                Capabilities {
                    noetherian: p.group() == ValueGroup::Integers,
                    local: true,
                    valuation: val,
                    all_ops_stable: val,
                    integrally_closed: val,
                }
            }
            Family::Valuation(v) => Capabilities {
                noetherian: v.group() == ValueGroup::Integers,
                local: true,
                valuation: true,
                all_ops_stable: true,
                integrally_closed: true,
            },
        };
        Arc::new(DomainHandle { family, capabilities, parent })
    }

    pub fn semigroup(s: NumericalSemigroup) -> Arc<DomainHandle> {
        DomainHandle::wrap(Family::SemigroupRing(Arc::new(s)), None)
    }

    pub fn pullback(p: PullbackDomain) -> Arc<DomainHandle> {
        DomainHandle::wrap(Family::Pullback(Arc::new(p)), None)
    }

    pub fn valuation(v: ValuationDomain) -> Arc<DomainHandle> {
        DomainHandle::wrap(Family::Valuation(Arc::new(v)), None)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn capabilities(&self) -> Capabilities {
        self.capabilities
    }

    pub fn parent(&self) -> Option<&(Arc<DomainHandle>, OverringTag)> {
        self.parent.as_ref()
    }

    /// The coefficient field `K` used in generators.
    pub fn field(&self) -> Arc<ExtensionField> {
        match &self.family {
            Family::SemigroupRing(_) => Arc::new(ExtensionField::trivial(BaseField::Rationals)),
            Family::Pullback(p) => p.field().clone(),
            Family::Valuation(v) => v.residue_ext().clone(),
        }
    }

    pub fn group(&self) -> ValueGroup {
        match &self.family {
            Family::SemigroupRing(_) => ValueGroup::Integers,
            Family::Pullback(p) => p.group(),
            Family::Valuation(v) => v.group(),
        }
    }

    /// Dense value group: the maximal ideal is idempotent and not finitely generated.
    pub fn is_dense(&self) -> bool {
        self.group() == ValueGroup::Rationals
    }

    pub fn is_lex(&self) -> bool {
        self.group() == ValueGroup::LexProduct
    }

    pub fn describe(&self) -> String {
        match &self.family {
            Family::SemigroupRing(s) => format!("numsgr{}", s.name()),
            Family::Pullback(p) => p.describe(),
            Family::Valuation(v) => format!(
                "valuation(K={}, G={})",
                if v.residue_ext().degree() == 1 {
                    v.residue_ext().base().name()
                } else {
                    format!("{}[a]/({})", v.residue_ext().base().name(), v.residue_ext().modulus_string())
                },
                v.group().name()
            ),
        }
    }

    pub fn ring_module(&self) -> Module {
        match &self.family {
            Family::SemigroupRing(s) => Module::Monomial(MonomialIdeal::unit(s.clone())),
            Family::Pullback(p) => Module::Leveled(LeveledModule::ring(p.clone())),
            Family::Valuation(v) => Module::Segment(v.ring()),
        }
    }

    pub fn maximal_module(&self) -> Module {
        match &self.family {
            Family::SemigroupRing(s) => Module::Monomial(MonomialIdeal::maximal(s.clone())),
            Family::Pullback(p) => Module::Leveled(LeveledModule::maximal(p.clone())),
            Family::Valuation(v) => Module::Segment(v.maximal()),
        }
    }

    /// `V` as a `D`-module (the integral closure for semigroup rings).
    pub fn hull_module(&self) -> Module {
        match &self.family {
            Family::SemigroupRing(s) => Module::Monomial(MonomialIdeal::hull(s.clone(), 0)),
            Family::Pullback(p) => Module::Leveled(LeveledModule::valuation_ring(p.clone())),
            Family::Valuation(v) => Module::Segment(v.ring()),
        }
    }

    /// The height one prime of a rank two valuation domain.
    pub fn height_one_prime(&self) -> Option<Module> {
        match &self.family {
            Family::Valuation(v) => v.height_one_prime().map(Module::Segment),
            _ => None,
        }
    }

    /// The principal module `t^g D`.
    pub fn monomial(&self, level: GroupElement) -> Result<Module> {
        let g = Generator::new(self.field().one(), level);
        self.module_from_generators(&[g])
    }

    pub fn module_from_generators(&self, gens: &[Generator]) -> Result<Module> {
        if gens.is_empty() {
            return Err(Error::InvalidInput("a module needs at least one generator".into()));
        }
        for g in gens {
            self.group().check(&g.level)?;
            if g.coeff.is_zero() {
                return Err(Error::InvalidInput("generator with zero coefficient".into()));
            }
        }
        match &self.family {
            Family::SemigroupRing(s) => {
                let raw: Vec<i64> = gens
                    .iter()
                    .map(|g| match g.level {
                        GroupElement::Int(n) => n,
                        _ => unreachable!("checked above"),
                    })
                    .collect();
                Ok(Module::Monomial(MonomialIdeal::normalize(s.clone(), &raw)?))
            }
            Family::Pullback(p) => Ok(Module::Leveled(LeveledModule::from_generators(p.clone(), gens)?)),
            Family::Valuation(_) => {
                let low = gens.iter().map(|g| &g.level).min().expect("nonempty").clone();
                Ok(Module::Segment(Segment::closed(low)))
            }
        }
    }

    /// Rejects payloads from another family or another domain.
    pub fn check(&self, m: &Module) -> Result<()> {
        let ok = match (&self.family, m) {
            (_, Module::QuotientField) => true,
            (Family::SemigroupRing(s), Module::Monomial(i)) => i.ring().as_ref() == s.as_ref(),
            (Family::Pullback(p), Module::Leveled(l)) => l.domain().as_ref() == p.as_ref(),
            (Family::Valuation(v), Module::Segment(seg)) => seg.group() == v.group() && !seg.is_empty(),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::DomainMismatch("domains"))
        }
    }

    /// Canonical payload: the whole quotient field is always `QuotientField`.
    pub fn normalize(&self, m: Module) -> Module {
        match m {
            Module::Leveled(l) if l.is_whole() => Module::QuotientField,
            Module::Segment(s) if s.is_whole() => Module::QuotientField,
            other => other,
        }
    }

    pub fn sum(&self, a: &Module, b: &Module) -> Result<Module> {
        use Module::*;
        Ok(self.normalize(match (a, b) {
            (QuotientField, _) | (_, QuotientField) => QuotientField,
            (Monomial(x), Monomial(y)) => Monomial(x.sum(y)?),
            (Leveled(x), Leveled(y)) => Leveled(x.sum(y)?),
            (Segment(x), Segment(y)) => Segment(x.union(y)?),
            _ => return Err(Error::DomainMismatch("module families")),
        }))
    }

    pub fn mul(&self, a: &Module, b: &Module) -> Result<Module> {
        use Module::*;
        Ok(self.normalize(match (a, b) {
            (QuotientField, _) | (_, QuotientField) => QuotientField,
            (Monomial(x), Monomial(y)) => Monomial(x.mul(y)?),
            (Leveled(x), Leveled(y)) => Leveled(x.mul(y)?),
            (Segment(x), Segment(y)) => Segment(x.add(y)?),
            _ => return Err(Error::DomainMismatch("module families")),
        }))
    }

    pub fn intersect(&self, a: &Module, b: &Module) -> Result<Module> {
        use Module::*;
        Ok(self.normalize(match (a, b) {
            (QuotientField, x) | (x, QuotientField) => x.clone(),
            (Monomial(x), Monomial(y)) => Monomial(x.intersect(y)?),
            (Leveled(x), Leveled(y)) => Leveled(x.intersect(y)?),
            (Segment(x), Segment(y)) => Segment(x.intersect(y)?),
            _ => return Err(Error::DomainMismatch("module families")),
        }))
    }

    /// `(a : b)`, or `None` when it is the zero module.
    pub fn colon(&self, a: &Module, b: &Module) -> Result<Option<Module>> {
        use Module::*;
        Ok(Some(self.normalize(match (a, b) {
            (QuotientField, _) => QuotientField,
            (_, QuotientField) => return Ok(None),
            (Monomial(x), Monomial(y)) => Monomial(x.colon(y)?),
            (Leveled(x), Leveled(y)) => Leveled(x.colon(y)?),
            (Segment(x), Segment(y)) => Segment(x.colon(y)?),
            _ => return Err(Error::DomainMismatch("module families")),
        })))
    }

    /// `a ⊆ b`
    pub fn is_subset(&self, a: &Module, b: &Module) -> Result<bool> {
        use Module::*;
        match (a, b) {
            (_, QuotientField) => Ok(true),
            (QuotientField, _) => Ok(false),
            (Monomial(x), Monomial(y)) => x.is_subset(y),
            (Leveled(x), Leveled(y)) => x.is_subset(y),
            (Segment(x), Segment(y)) => x.is_subset(y),
            _ => Err(Error::DomainMismatch("module families")),
        }
    }

    /// Multiplication by the nonzero monomial `g`.
    pub fn scale(&self, a: &Module, g: &Generator) -> Result<Module> {
        self.group().check(&g.level)?;
        use Module::*;
        Ok(match a {
            QuotientField => QuotientField,
            Monomial(x) => match g.level {
                GroupElement::Int(n) => Monomial(x.shift(n)),
                _ => unreachable!("checked above"),
            },
            Leveled(x) => Leveled(x.scale(g)?),
            Segment(x) => Segment(x.shift(&g.level)?),
        })
    }

    /// A generating set, when the module is finitely generated.
    pub fn fg_generators(&self, a: &Module) -> Option<Vec<Generator>> {
        let k = self.field();
        match a {
            Module::QuotientField => None,
            Module::Monomial(x) => {
                Some(x.generators().iter().map(|&n| Generator::new(k.one(), GroupElement::Int(n))).collect())
            }
            Module::Leveled(x) => x.fg_generators(),
            Module::Segment(s) => match s.shape() {
                Shape::Closed(g) => Some(vec![Generator::new(k.one(), g.clone())]),
                _ => None,
            },
        }
    }

    /// Expression syntax for a module, reparseable by the front end.
    pub fn format(&self, a: &Module) -> String {
        let k = self.field();
        match a {
            Module::QuotientField => "K".into(),
            Module::Monomial(x) => x.to_expr(),
            Module::Leveled(x) => x.to_expr(),
            Module::Segment(s) => match s.shape() {
                Shape::Closed(g) => format!("<{}>", Generator::new(k.one(), g.clone()).format(&k)),
                Shape::Open(g) => format!("M*<{}>", Generator::new(k.one(), g.clone()).format(&k)),
                Shape::Coarse(n) => {
                    format!("apply[spec{{P1}}](<{}>)", Generator::new(k.one(), GroupElement::Lex(*n, 0)).format(&k))
                }
                Shape::Whole => "K".into(),
                Shape::Empty => "0".into(),
            },
        }
    }

    /// The overring `T` named by `tag`, as a domain in its own right.
    pub fn overring(self: &Arc<Self>, tag: OverringTag) -> Result<Arc<DomainHandle>> {
        if tag == OverringTag::FullQuotientField {
            return Err(Error::Unrepresentable("the quotient field as a domain".into()));
        }
        match &self.family {
            Family::SemigroupRing(_) => {
                let dvr = ValuationDomain::new(self.field(), ValueGroup::Integers);
                Ok(DomainHandle::wrap(Family::Valuation(Arc::new(dvr)), Some((self.clone(), tag))))
            }
            Family::Pullback(p) => Ok(DomainHandle::wrap(
                Family::Valuation(Arc::new(p.valuation().clone())),
                Some((self.clone(), tag)),
            )),
            Family::Valuation(_) => Ok(self.clone()),
        }
    }

    /// `E T` written in the representation of `T = overring(tag)`.
    pub fn to_overring(&self, a: &Module, tag: OverringTag) -> Result<Module> {
        if tag == OverringTag::FullQuotientField {
            return Ok(Module::QuotientField);
        }
        Ok(match (&self.family, a) {
            (_, Module::QuotientField) => Module::QuotientField,
            (Family::SemigroupRing(_), Module::Monomial(x)) => Module::Segment(Segment::closed(GroupElement::Int(x.min()))),
            (Family::Pullback(_), Module::Leveled(x)) => {
                let ext = x.extend_to_v();
                Module::Segment(ext.tail())
            }
            (Family::Valuation(_), m @ Module::Segment(_)) => m.clone(),
            _ => return Err(Error::DomainMismatch("module families")),
        })
    }

    /// A module of `T = overring(tag)` seen as a `D`-module.
    pub fn from_overring(&self, a: &Module, tag: OverringTag) -> Result<Module> {
        if tag == OverringTag::FullQuotientField {
            return Ok(Module::QuotientField);
        }
        let out = match (&self.family, a) {
            (_, Module::QuotientField) => Module::QuotientField,
            (Family::SemigroupRing(s), Module::Segment(seg)) => match seg.shape() {
                Shape::Closed(GroupElement::Int(n)) => Module::Monomial(MonomialIdeal::hull(s.clone(), *n)),
                _ => return Err(Error::DomainMismatch("module families")),
            },
            (Family::Pullback(p), Module::Segment(seg)) => Module::Leveled(LeveledModule::from_segment(p.clone(), seg)?),
            (Family::Valuation(_), m @ Module::Segment(_)) => m.clone(),
            _ => return Err(Error::DomainMismatch("module families")),
        };
        Ok(self.normalize(out))
    }
}

/// A nonzero module over a handle, with a verified generating set when it is
/// finitely generated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealHandle {
    domain: Arc<DomainHandle>,
    module: Module,
    generators: Option<Vec<Generator>>,
}

impl IdealHandle {
    pub fn new(domain: Arc<DomainHandle>, module: Module) -> Result<IdealHandle> {
        domain.check(&module)?;
        let module = domain.normalize(module);
        let generators = domain.fg_generators(&module);
        if let Some(g) = &generators {
            // the witness must regenerate the payload
            if domain.module_from_generators(g)? != module {
                return Err(Error::ConsistencyFailure(format!(
                    "generators do not regenerate {}",
                    domain.format(&module)
                )));
            }
        }
        Ok(IdealHandle { domain, module, generators })
    }

    pub fn ring(domain: &Arc<DomainHandle>) -> IdealHandle {
        IdealHandle::new(domain.clone(), domain.ring_module()).expect("ring is representable")
    }

    pub fn maximal(domain: &Arc<DomainHandle>) -> IdealHandle {
        IdealHandle::new(domain.clone(), domain.maximal_module()).expect("maximal ideal is representable")
    }

    pub fn quotient_field(domain: &Arc<DomainHandle>) -> IdealHandle {
        IdealHandle::new(domain.clone(), Module::QuotientField).expect("quotient field")
    }

    pub fn from_generators(domain: &Arc<DomainHandle>, gens: &[Generator]) -> Result<IdealHandle> {
        let m = domain.module_from_generators(gens)?;
        IdealHandle::new(domain.clone(), m)
    }

    pub fn domain(&self) -> &Arc<DomainHandle> {
        &self.domain
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn is_finitely_generated(&self) -> bool {
        self.generators.is_some()
    }

    pub fn generators(&self) -> Option<&[Generator]> {
        self.generators.as_deref()
    }

    pub fn is_quotient_field(&self) -> bool {
        self.module == Module::QuotientField
    }

    fn same(&self, other: &IdealHandle) -> Result<()> {
        if Arc::ptr_eq(&self.domain, &other.domain) || self.domain == other.domain {
            Ok(())
        } else {
            Err(Error::DomainMismatch("domains"))
        }
    }

    pub fn with(&self, module: Module) -> Result<IdealHandle> {
        IdealHandle::new(self.domain.clone(), module)
    }

    pub fn sum(&self, o: &IdealHandle) -> Result<IdealHandle> {
        self.same(o)?;
        self.with(self.domain.sum(&self.module, &o.module)?)
    }

    pub fn mul(&self, o: &IdealHandle) -> Result<IdealHandle> {
        self.same(o)?;
        self.with(self.domain.mul(&self.module, &o.module)?)
    }

    pub fn intersect(&self, o: &IdealHandle) -> Result<IdealHandle> {
        self.same(o)?;
        self.with(self.domain.intersect(&self.module, &o.module)?)
    }

    /// `(self : o)`; an error when the result is zero.
    pub fn colon(&self, o: &IdealHandle) -> Result<IdealHandle> {
        self.same(o)?;
        match self.domain.colon(&self.module, &o.module)? {
            Some(m) => self.with(m),
            None => Err(Error::EmptyColon),
        }
    }

    /// `(D : self)`
    pub fn inverse(&self) -> Result<IdealHandle> {
        IdealHandle::ring(&self.domain).colon(self)
    }

    pub fn is_subset(&self, o: &IdealHandle) -> Result<bool> {
        self.same(o)?;
        self.domain.is_subset(&self.module, &o.module)
    }

    pub fn is_integral(&self) -> bool {
        self.domain.is_subset(&self.module, &self.domain.ring_module()).unwrap_or(false)
    }

    pub fn scale(&self, g: &Generator) -> Result<IdealHandle> {
        self.with(self.domain.scale(&self.module, g)?)
    }

    pub fn to_expr(&self) -> String {
        self.domain.format(&self.module)
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}
