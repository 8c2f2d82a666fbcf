use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::domain::PullbackDomain;
use super::oracle::Expansion;
use crate::algebra::{ExtensionField, FieldElem, GroupElement, Segment, Subspace};
use crate::{Error, Result};

/// A monomial `coeff * t^level`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub coeff: FieldElem,
    pub level: GroupElement,
}

impl Generator {
    pub fn new(coeff: FieldElem, level: GroupElement) -> Self {
        Generator { coeff, level }
    }

    /// `1*t(2)`, `a*t(1/2)`, `(1+a)*t(0)`
    pub fn format(&self, field: &ExtensionField) -> String {
        let c = field.format(&self.coeff);
        let c = if field.is_monomial(&self.coeff) { c } else { format!("({c})") };
        format!("{c}*t({})", self.level.level_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Body {
    Whole,
    // everything of value > level, plus value = level with leading coefficient in floor
    Cut { level: GroupElement, floor: Subspace },
}

/// A nonzero `D`-submodule of the quotient field of a pullback, in canonical
/// form: in a discrete group the floor is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeveledModule {
    domain: Arc<PullbackDomain>,
    body: Body,
}

impl LeveledModule {
    fn make(domain: Arc<PullbackDomain>, level: GroupElement, floor: Subspace) -> Self {
        let body = match (floor.is_zero(), domain.group().successor(&level)) {
            (true, Some(next)) => Body::Cut { level: next, floor: Subspace::full(domain.field().clone()) },
            _ => Body::Cut { level, floor },
        };
        LeveledModule { domain, body }
    }

    pub fn new(domain: Arc<PullbackDomain>, level: GroupElement, floor: Subspace) -> Result<Self> {
        domain.group().check(&level)?;
        if floor.field().as_ref() != domain.field().as_ref() {
            return Err(Error::DomainMismatch("extension fields"));
        }
        Ok(LeveledModule::make(domain, level, floor))
    }

    pub fn whole(domain: Arc<PullbackDomain>) -> Self {
        LeveledModule { domain, body: Body::Whole }
    }

    /// `D = k + M`
    pub fn ring(domain: Arc<PullbackDomain>) -> Self {
        let k = domain.field().clone();
        let floor = Subspace::span(k.clone(), &[k.one()]);
        let zero = domain.group().zero();
        LeveledModule::make(domain, zero, floor)
    }

    pub fn maximal(domain: Arc<PullbackDomain>) -> Self {
        let floor = Subspace::zero(domain.field().clone());
        let zero = domain.group().zero();
        LeveledModule::make(domain, zero, floor)
    }

    pub fn valuation_ring(domain: Arc<PullbackDomain>) -> Self {
        let floor = Subspace::full(domain.field().clone());
        let zero = domain.group().zero();
        LeveledModule::make(domain, zero, floor)
    }

    /// `sum_i c_i t^(g_i) D`
    pub fn from_generators(domain: Arc<PullbackDomain>, gens: &[Generator]) -> Result<Self> {
        let low = gens.iter().map(|g| &g.level).min().ok_or_else(|| {
            Error::InvalidInput("a module needs at least one generator".into())
        })?;
        for g in gens {
            domain.group().check(&g.level)?;
            if g.coeff.is_zero() {
                return Err(Error::InvalidInput("generator with zero coefficient".into()));
            }
        }
        let coeffs: Vec<FieldElem> = gens.iter().filter(|g| &g.level == low).map(|g| g.coeff.clone()).collect();
        let floor = Subspace::span(domain.field().clone(), &coeffs);
        let low = low.clone();
        LeveledModule::new(domain, low, floor)
    }

    /// A `V`-module given by its value segment.
    pub fn from_segment(domain: Arc<PullbackDomain>, seg: &Segment) -> Result<Self> {
        use crate::algebra::Shape;
        let k = domain.field().clone();
        match seg.shape() {
            Shape::Whole => Ok(LeveledModule::whole(domain)),
            Shape::Closed(g) => LeveledModule::new(domain, g.clone(), Subspace::full(k)),
            Shape::Open(g) => LeveledModule::new(domain, g.clone(), Subspace::zero(k)),
            Shape::Empty => Err(Error::InvalidInput("the zero module".into())),
            Shape::Coarse(_) => Err(Error::Unrepresentable("coarse segment in a pullback".into())),
        }
    }

    pub fn domain(&self) -> &Arc<PullbackDomain> {
        &self.domain
    }

    pub fn is_whole(&self) -> bool {
        self.body == Body::Whole
    }

    pub fn level(&self) -> Option<&GroupElement> {
        match &self.body {
            Body::Whole => None,
            Body::Cut { level, .. } => Some(level),
        }
    }

    pub fn floor(&self) -> Option<&Subspace> {
        match &self.body {
            Body::Whole => None,
            Body::Cut { floor, .. } => Some(floor),
        }
    }

    /// Values carrying every coefficient of `K`.
    pub fn tail(&self) -> Segment {
        match &self.body {
            Body::Whole => Segment::whole(self.domain.group()),
            Body::Cut { level, floor } if floor.is_full() => Segment::closed(level.clone()),
            Body::Cut { level, .. } => Segment::open(level.clone()),
        }
    }

    /// Levels where the available coefficients form a proper nonzero subspace.
    pub fn jumps(&self) -> Vec<(GroupElement, Subspace)> {
        match &self.body {
            Body::Cut { level, floor } if !floor.is_zero() && !floor.is_full() => {
                vec![(level.clone(), floor.clone())]
            }
            _ => Vec::new(),
        }
    }

    /// Closed under multiplication by `V`.
    pub fn is_v_module(&self) -> bool {
        self.jumps().is_empty()
    }

    /// Leading coefficients available at value `g`.
    pub fn space_at(&self, g: &GroupElement) -> Subspace {
        let k = self.domain.field().clone();
        match &self.body {
            Body::Whole => Subspace::full(k),
            Body::Cut { level, .. } if g > level => Subspace::full(k),
            Body::Cut { level, floor } if g == level => floor.clone(),
            Body::Cut { .. } => Subspace::zero(k),
        }
    }

    pub fn contains(&self, x: &Expansion) -> bool {
        match x.leading() {
            None => true,
            Some((g, c)) => self.space_at(g).contains(c),
        }
    }

    fn check(&self, other: &LeveledModule) -> Result<()> {
        if Arc::ptr_eq(&self.domain, &other.domain) || self.domain == other.domain {
            Ok(())
        } else {
            Err(Error::DomainMismatch("pullback domains"))
        }
    }

    fn with(&self, body: Body) -> LeveledModule {
        match body {
            Body::Whole => LeveledModule::whole(self.domain.clone()),
            Body::Cut { level, floor } => LeveledModule::make(self.domain.clone(), level, floor),
        }
    }

    /// `self ⊆ other`
    pub fn is_subset(&self, other: &LeveledModule) -> Result<bool> {
        self.check(other)?;
        Ok(match (&self.body, &other.body) {
            (_, Body::Whole) => true,
            (Body::Whole, _) => false,
            (Body::Cut { level: a, floor: w }, Body::Cut { level: b, floor: u }) => {
                a > b || (a == b && w.is_subspace_of(u)?)
            }
        })
    }

    pub fn sum(&self, other: &LeveledModule) -> Result<LeveledModule> {
        self.check(other)?;
        Ok(match (&self.body, &other.body) {
            (Body::Whole, _) | (_, Body::Whole) => self.with(Body::Whole),
            (Body::Cut { level: a, floor: w }, Body::Cut { level: b, floor: u }) => {
                if a < b {
                    self.clone()
                } else if b < a {
                    other.clone()
                } else {
                    self.with(Body::Cut { level: a.clone(), floor: w.sum(u)? })
                }
            }
        })
    }

    pub fn intersect(&self, other: &LeveledModule) -> Result<LeveledModule> {
        self.check(other)?;
        Ok(match (&self.body, &other.body) {
            (Body::Whole, _) => other.clone(),
            (_, Body::Whole) => self.clone(),
            (Body::Cut { level: a, floor: w }, Body::Cut { level: b, floor: u }) => {
                if a > b {
                    self.clone()
                } else if b > a {
                    other.clone()
                } else {
                    self.with(Body::Cut { level: a.clone(), floor: w.intersect(u)? })
                }
            }
        })
    }

    pub fn mul(&self, other: &LeveledModule) -> Result<LeveledModule> {
        self.check(other)?;
        Ok(match (&self.body, &other.body) {
            (Body::Whole, _) | (_, Body::Whole) => self.with(Body::Whole),
            (Body::Cut { level: a, floor: w }, Body::Cut { level: b, floor: u }) => {
                self.with(Body::Cut { level: a + b, floor: w.product_span(u)? })
            }
        })
    }

    /// `(self : other) = {z : z * other ⊆ self}`; fails when that is zero.
    pub fn colon(&self, other: &LeveledModule) -> Result<LeveledModule> {
        self.check(other)?;
        let k = self.domain.field().clone();
        Ok(match (&self.body, &other.body) {
            (Body::Whole, _) => self.clone(),
            (_, Body::Whole) => return Err(Error::EmptyColon),
            (Body::Cut { level: a, floor: w }, Body::Cut { level: b, floor: u }) => {
                let floor = if u.is_zero() { Subspace::full(k) } else { w.colon(u)? };
                self.with(Body::Cut { level: a - b, floor })
            }
        })
    }

    /// Multiplication by the monomial `g`.
    pub fn scale(&self, g: &Generator) -> Result<LeveledModule> {
        self.domain.group().check(&g.level)?;
        Ok(match &self.body {
            Body::Whole => self.clone(),
            Body::Cut { level, floor } => self.with(Body::Cut { level: level + &g.level, floor: floor.scale(&g.coeff)? }),
        })
    }

    /// `self * V`
    pub fn extend_to_v(&self) -> LeveledModule {
        match &self.body {
            Body::Whole => self.clone(),
            Body::Cut { level, floor } if floor.is_zero() => self.clone(),
            Body::Cut { level, .. } => {
                self.with(Body::Cut { level: level.clone(), floor: Subspace::full(self.domain.field().clone()) })
            }
        }
    }

    /// `(D : (D : self))`
    pub fn v_closure(&self) -> LeveledModule {
        let d = LeveledModule::ring(self.domain.clone());
        match d.colon(self) {
            Ok(inv) => d.colon(&inv).expect("(D : E) is a nonzero proper module"),
            Err(_) => LeveledModule::whole(self.domain.clone()),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.is_subset(&LeveledModule::ring(self.domain.clone())).expect("same domain")
    }

    /// A finite generating set, when the module is finitely generated.
    pub fn fg_generators(&self) -> Option<Vec<Generator>> {
        match &self.body {
            Body::Cut { level, floor } if !floor.is_zero() => {
                Some(floor.basis().iter().map(|c| Generator::new(c.clone(), level.clone())).collect())
            }
            _ => None,
        }
    }

    /// `<1*t(1), a*t(1)>`, `M*<1*t(0)>`, `K`
    pub fn to_expr(&self) -> String {
        let k = self.domain.field();
        match &self.body {
            Body::Whole => "K".into(),
            Body::Cut { level, floor } if floor.is_zero() => {
                format!("M*<{}>", Generator::new(k.one(), level.clone()).format(k))
            }
            Body::Cut { level, floor } => {
                let parts: Vec<String> =
                    floor.basis().iter().map(|c| Generator::new(c.clone(), level.clone()).format(k)).collect();
                format!("<{}>", parts.join(", "))
            }
        }
    }
}

impl fmt::Display for LeveledModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BaseField, ValueGroup};
    use crate::dplusm::ValuationDomain;
    use num_rational::BigRational;

    fn dom(group: ValueGroup) -> Arc<PullbackDomain> {
        let q = |n: i64| BigRational::from_integer(n.into());
        let k = Arc::new(ExtensionField::new(BaseField::Rationals, vec![q(-2), q(0), q(1)]).unwrap());
        Arc::new(PullbackDomain::new(ValuationDomain::new(k, group)).unwrap())
    }

    fn lvl(group: ValueGroup, n: i64) -> GroupElement {
        group.from_int(n)
    }

    #[test]
    fn example_intersection() {
        let g = ValueGroup::Rationals;
        let d = dom(g);
        let k = d.field().clone();
        let m = Generator::new(k.one(), lvl(g, 1));
        let mx = Generator::new(k.generator(), lvl(g, 1));
        let md = LeveledModule::from_generators(d.clone(), core::slice::from_ref(&m)).unwrap();
        let mxd = LeveledModule::from_generators(d.clone(), &[mx]).unwrap();
        let mm = LeveledModule::maximal(d.clone()).scale(&m).unwrap();
        assert_eq!(md.intersect(&mxd).unwrap(), mm);
        assert_eq!(md.extend_to_v(), LeveledModule::valuation_ring(d.clone()).scale(&m).unwrap());
        assert_eq!(mm.extend_to_v(), mm);
        let mmod = LeveledModule::maximal(d.clone());
        assert_eq!(mmod.mul(&mmod).unwrap(), mmod);
    }

    #[test]
    fn pvd_colons() {
        let g = ValueGroup::Integers;
        let d = dom(g);
        let k = d.field().clone();
        let ring = LeveledModule::ring(d.clone());
        let m = LeveledModule::maximal(d.clone());
        let m2 = LeveledModule::from_generators(
            d.clone(),
            &[Generator::new(k.one(), lvl(g, 1)), Generator::new(k.generator(), lvl(g, 1))],
        )
        .unwrap();
        assert_eq!(m, m2);
        let v = LeveledModule::valuation_ring(d.clone());
        assert_eq!(ring.colon(&m).unwrap(), v);
        assert_eq!(m.colon(&m).unwrap(), v);
        assert_eq!(ring.colon(&v).unwrap(), m);
        assert_eq!(m.v_closure(), m);
        assert_eq!(m.mul(&ring.colon(&m).unwrap()).unwrap(), m);
        assert_eq!(ring.v_closure(), ring);
        assert_eq!(ring.colon(&LeveledModule::whole(d.clone())), Err(Error::EmptyColon));
    }

    #[test]
    fn v_of_maximal_in_valuation_ring() {
        // k = K: the pullback is V itself
        let g = ValueGroup::Rationals;
        let k = Arc::new(ExtensionField::trivial(BaseField::Rationals));
        let d = Arc::new(PullbackDomain::new(ValuationDomain::new(k, g)).unwrap());
        let m = LeveledModule::maximal(d.clone());
        assert_eq!(m.v_closure(), LeveledModule::ring(d));
    }

    #[test]
    fn printing() {
        let g = ValueGroup::Rationals;
        let d = dom(g);
        let k = d.field().clone();
        let e = LeveledModule::from_generators(
            d.clone(),
            &[Generator::new(k.add(&k.one(), &k.generator()), lvl(g, 1))],
        )
        .unwrap();
        assert_eq!(e.to_expr(), "<(1+a)*t(1)>");
        assert_eq!(LeveledModule::maximal(d.clone()).to_expr(), "M*<1*t(0)>");
        assert_eq!(LeveledModule::valuation_ring(d).to_expr(), "<1*t(0), a*t(0)>");
    }
}
