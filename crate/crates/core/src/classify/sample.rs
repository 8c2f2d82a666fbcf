use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::verdict::SampleReport;
use crate::algebra::{BaseField, FieldElem, GroupElement, Segment, Subspace, ValueGroup};
use crate::dplusm::{Generator, LeveledModule};
use crate::semistar::{DomainHandle, Family, IdealHandle, Module};

/// Parameters of a reproducible random sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleSpec {
    pub seed: u64,
    pub count: usize,
    /// Maximal number of generators of a sampled ideal.
    pub generator_bound: usize,
    /// Maximal denominator of a rational level.
    pub denominator_bound: u64,
    /// Exponents of semigroup ideals range up to `conductor + window`.
    pub window: i64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec { seed: 0, count: 200, generator_bound: 4, denominator_bound: 12, window: 6 }
    }
}

impl SampleSpec {
    pub fn with_seed(self, seed: u64) -> SampleSpec {
        SampleSpec { seed, ..self }
    }

    pub fn with_count(self, count: usize) -> SampleSpec {
        SampleSpec { count, ..self }
    }

    pub fn report(&self, count: usize, note: &str) -> SampleReport {
        SampleReport {
            count,
            seed: self.seed,
            generator_bound: self.generator_bound,
            denominator_bound: self.denominator_bound,
            window: self.window,
            note: note.into(),
        }
    }
}

/// Deterministic generator of modules over one domain.
pub struct Sampler {
    rng: ChaCha8Rng,
    spec: SampleSpec,
    domain: Arc<DomainHandle>,
}

impl Sampler {
    pub fn new(domain: &Arc<DomainHandle>, spec: &SampleSpec) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(spec.seed), spec: *spec, domain: domain.clone() }
    }

    pub fn spec(&self) -> &SampleSpec {
        &self.spec
    }

    fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    /// A level in `[lo, hi]`; for lex groups `lo, hi` bound the first coordinate.
    pub fn level(&mut self, lo: i64, hi: i64) -> GroupElement {
        match self.domain.group() {
            ValueGroup::Integers => GroupElement::Int(self.int(lo, hi)),
            ValueGroup::Rationals => {
                let den = self.int(1, self.spec.denominator_bound.max(1) as i64);
                let num = self.int(lo * den, hi * den);
                GroupElement::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            ValueGroup::LexProduct => {
                let w = self.spec.window.max(1);
                GroupElement::Lex(self.int(lo, hi), self.int(-w, w))
            }
        }
    }

    fn scalar(&mut self, base: &BaseField) -> num_rational::BigRational {
        match base {
            BaseField::Rationals => base.from_i64(self.int(-3, 3)),
            BaseField::PrimeField(p) => base.from_i64(self.int(0, *p as i64 - 1)),
        }
    }

    /// A nonzero coefficient.
    pub fn coeff(&mut self) -> FieldElem {
        let k = self.domain.field();
        loop {
            let coords: Vec<_> = (0..k.degree()).map(|_| self.scalar(k.base())).collect();
            let x = k.from_coords(coords).expect("degree matches");
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// A nonzero coefficient from the base field.
    fn base_coeff(&mut self) -> FieldElem {
        let k = self.domain.field();
        loop {
            let c = self.scalar(k.base());
            if c != k.base().zero() {
                return k.from_base(c);
            }
        }
    }

    pub fn monomial(&mut self) -> Generator {
        let level = self.level(-2, 3);
        Generator::new(self.coeff(), level)
    }

    fn exponent_window(&self) -> i64 {
        match self.domain.family() {
            Family::SemigroupRing(s) => s.conductor() + self.spec.window,
            _ => 3,
        }
    }

    /// A finitely generated module; integral when asked.
    pub fn fg(&mut self, integral: bool) -> IdealHandle {
        let n = self.int(1, self.spec.generator_bound.max(1) as i64) as usize;
        let hi = self.exponent_window();
        let lo = if integral { 0 } else { -2 };
        let mut gens = Vec::with_capacity(n);
        while gens.len() < n {
            let level = self.level(lo, hi);
            let g = match self.domain.family() {
                Family::SemigroupRing(s) => {
                    let GroupElement::Int(e) = level else { unreachable!("integer group") };
                    if integral && !s.contains(e) {
                        continue;
                    }
                    Generator::new(self.domain.field().one(), level)
                }
                Family::Pullback(_) if integral && level.is_zero() => Generator::new(self.base_coeff(), level),
                Family::Pullback(_) => Generator::new(self.coeff(), level),
                Family::Valuation(_) => {
                    if integral && !(level.is_zero() || level.is_positive()) {
                        continue;
                    }
                    Generator::new(self.coeff(), level)
                }
            };
            gens.push(g);
        }
        IdealHandle::from_generators(&self.domain, &gens).expect("sampled generators are valid")
    }

    /// Any representable module, including the non finitely generated ones.
    pub fn module(&mut self) -> IdealHandle {
        let d = self.domain.clone();
        let roll = self.int(0, 19);
        if roll == 0 {
            return IdealHandle::quotient_field(&d);
        }
        if roll <= 3 {
            let m = match d.family() {
                Family::Pullback(p) if d.is_dense() => {
                    let g = self.level(-2, 3);
                    Some(Module::Leveled(LeveledModule::new(p.clone(), g, Subspace::zero(d.field())).expect("level")))
                }
                Family::Valuation(_) if d.is_dense() => Some(Module::Segment(Segment::open(self.level(-2, 3)))),
                Family::Valuation(_) if d.is_lex() => Some(Module::Segment(Segment::coarse(self.int(-2, 3)))),
                _ => None,
            };
            if let Some(m) = m {
                return IdealHandle::new(d, m).expect("representable");
            }
        }
        self.fg(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::catalog::instances;

    #[test]
    fn deterministic() {
        for inst in instances() {
            let spec = SampleSpec::default().with_seed(7);
            let mut a = Sampler::new(&inst.domain, &spec);
            let mut b = Sampler::new(&inst.domain, &spec);
            for _ in 0..20 {
                assert_eq!(a.module(), b.module());
                let i = a.fg(true);
                assert!(i.is_integral(), "{} {}", inst.name, i);
                assert_eq!(i, b.fg(true));
            }
        }
    }
}
