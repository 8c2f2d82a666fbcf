//! Brute force value-set arithmetic on explicit windows. Used to cross-check
//! the generator based operations.

use alloc::vec::Vec;

use super::semigroup::NumericalSemigroup;

/// Membership bits on `[lo, lo + bits.len())`; everything below is absent and
/// everything above is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueSet {
    lo: i64,
    bits: Vec<bool>,
}

impl ValueSet {
    pub fn from_generators(s: &NumericalSemigroup, gens: &[i64], lo: i64, hi: i64) -> ValueSet {
        let bits = (lo..hi).map(|z| gens.iter().any(|&g| z >= g && s.contains(z - g))).collect();
        ValueSet { lo, bits }
    }

    fn hi(&self) -> i64 {
        self.lo + self.bits.len() as i64
    }

    pub fn get(&self, z: i64) -> bool {
        if z < self.lo {
            false
        } else if z >= self.hi() {
            true
        } else {
            self.bits[(z - self.lo) as usize]
        }
    }

    fn map(lo: i64, hi: i64, f: impl Fn(i64) -> bool) -> ValueSet {
        ValueSet { lo, bits: (lo..hi).map(f).collect() }
    }

    pub fn union(&self, o: &ValueSet) -> ValueSet {
        ValueSet::map(self.lo.min(o.lo), self.hi().max(o.hi()), |z| self.get(z) || o.get(z))
    }

    pub fn intersection(&self, o: &ValueSet) -> ValueSet {
        ValueSet::map(self.lo.min(o.lo), self.hi().max(o.hi()), |z| self.get(z) && o.get(z))
    }

    /// `{a + b}`; both windows must reach into the full tails.
    pub fn minkowski(&self, o: &ValueSet) -> ValueSet {
        let lo = self.lo + o.lo;
        let hi = self.hi() + o.hi();
        ValueSet::map(lo, hi, |z| (self.lo..self.hi()).any(|a| self.get(a) && o.get(z - a)))
    }

    /// `{z : z + o ⊆ self}`, testing the elements of `o` below its window end.
    pub fn quotient(&self, o: &ValueSet) -> ValueSet {
        let lo = self.lo - o.hi();
        let hi = self.hi() - o.lo;
        ValueSet::map(lo, hi, |z| (o.lo..o.hi() + 1).all(|b| !o.get(b) || self.get(z + b)))
    }

    /// Minimal elements: members `z` with no member `z - s`, `s in S`, `s > 0`.
    pub fn minimal_generators(&self, s: &NumericalSemigroup) -> Vec<i64> {
        (self.lo..=self.hi())
            .filter(|&z| self.get(z) && !(self.lo..z).any(|y| self.get(y) && s.contains(z - y)))
            .collect()
    }
}

/// A window comfortably containing every interesting value of the operands.
pub fn window(s: &NumericalSemigroup, gens: &[&[i64]]) -> (i64, i64) {
    let c = s.conductor() + s.multiplicity();
    let lo = gens.iter().flat_map(|g| g.iter()).copied().min().unwrap_or(0);
    let hi = gens.iter().flat_map(|g| g.iter()).copied().max().unwrap_or(0);
    let span = hi - lo + c + 2;
    (lo - span, hi + span)
}

pub fn sum(s: &NumericalSemigroup, a: &[i64], b: &[i64]) -> Vec<i64> {
    let (lo, hi) = window(s, &[a, b]);
    ValueSet::from_generators(s, a, lo, hi).union(&ValueSet::from_generators(s, b, lo, hi)).minimal_generators(s)
}

pub fn mul(s: &NumericalSemigroup, a: &[i64], b: &[i64]) -> Vec<i64> {
    let (lo, hi) = window(s, &[a, b]);
    let x = ValueSet::from_generators(s, a, lo, hi);
    let y = ValueSet::from_generators(s, b, lo, hi);
    x.minkowski(&y).minimal_generators(s)
}

pub fn intersect(s: &NumericalSemigroup, a: &[i64], b: &[i64]) -> Vec<i64> {
    let (lo, hi) = window(s, &[a, b]);
    ValueSet::from_generators(s, a, lo, hi)
        .intersection(&ValueSet::from_generators(s, b, lo, hi))
        .minimal_generators(s)
}

pub fn colon(s: &NumericalSemigroup, a: &[i64], b: &[i64]) -> Vec<i64> {
    let (lo, hi) = window(s, &[a, b]);
    ValueSet::from_generators(s, a, lo, hi).quotient(&ValueSet::from_generators(s, b, lo, hi)).minimal_generators(s)
}
