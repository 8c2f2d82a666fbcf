use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::semigroup::NumericalSemigroup;
use crate::{Error, Result};

/// A nonzero monomial fractional ideal of `K[[S]]`: the value set
/// `⋃ (g + S)` over its minimal generators `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Arc<NumericalSemigroup>,
    generators: Vec<i64>,
}

impl MonomialIdeal {
    /// Minimal generating set of the ideal generated by `raw`.
    pub fn normalize(ring: Arc<NumericalSemigroup>, raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::InvalidInput("an ideal needs at least one generator".into()));
        }
        let mut v = raw.to_vec();
        v.sort_unstable();
        v.dedup();
        let mut gens: Vec<i64> = Vec::with_capacity(v.len());
        for g in v {
            if !gens.iter().any(|&h| ring.contains(g - h)) {
                gens.push(g);
            }
        }
        Ok(MonomialIdeal { ring, generators: gens })
    }

    /// The ring itself.
    pub fn unit(ring: Arc<NumericalSemigroup>) -> Self {
        MonomialIdeal { ring, generators: alloc::vec![0] }
    }

    /// The maximal ideal: the positive values of `S`.
    pub fn maximal(ring: Arc<NumericalSemigroup>) -> Self {
        let c = ring.conductor();
        let m = ring.multiplicity();
        let raw: Vec<i64> = (1..c.max(1) + m).filter(|&n| ring.contains(n)).collect();
        MonomialIdeal::normalize(ring, &raw).expect("S has positive elements")
    }

    /// Principal ideal `x^g D`.
    pub fn principal(ring: Arc<NumericalSemigroup>, g: i64) -> Self {
        MonomialIdeal { ring, generators: alloc::vec![g] }
    }

    /// Value set `N`, the integral closure `K[[X]]` as a `D`-module, shifted by `g`.
    pub fn hull(ring: Arc<NumericalSemigroup>, g: i64) -> Self {
        let m = ring.multiplicity();
        let raw: Vec<i64> = (g..g + m).collect();
        MonomialIdeal::normalize(ring, &raw).expect("nonempty")
    }

    pub fn ring(&self) -> &Arc<NumericalSemigroup> {
        &self.ring
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn min(&self) -> i64 {
        self.generators[0]
    }

    fn check(&self, other: &MonomialIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::DomainMismatch("semigroup rings"))
        }
    }

    pub fn contains(&self, z: i64) -> bool {
        self.generators.iter().any(|&g| g <= z && self.ring.contains(z - g))
    }

    /// `self ⊆ other`
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check(other)?;
        Ok(self.generators.iter().all(|&g| other.contains(g)))
    }

    /// Contained in the ring itself.
    pub fn is_integral(&self) -> bool {
        self.generators.iter().all(|&g| self.ring.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut raw = self.generators.clone();
        raw.extend_from_slice(&other.generators);
        MonomialIdeal::normalize(self.ring.clone(), &raw)
    }

    pub fn mul(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let raw: Vec<i64> =
            self.generators.iter().flat_map(|a| other.generators.iter().map(move |b| a + b)).collect();
        MonomialIdeal::normalize(self.ring.clone(), &raw)
    }

    pub fn shift(&self, h: i64) -> MonomialIdeal {
        MonomialIdeal { ring: self.ring.clone(), generators: self.generators.iter().map(|g| g + h).collect() }
    }

    // every z >= lo + conductor is in any ideal with minimum >= ... lo
    fn tail_window(&self, lo: i64, hi: i64, pred: impl Fn(i64) -> bool) -> Result<MonomialIdeal> {
        let m = self.ring.multiplicity();
        let raw: Vec<i64> = (lo..hi + m).filter(|&z| pred(z)).collect();
        MonomialIdeal::normalize(self.ring.clone(), &raw)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let lo = self.min().max(other.min());
        // beyond hi both value sets are full
        let hi = lo + self.ring.conductor();
        self.tail_window(lo, hi, |z| self.contains(z) && other.contains(z))
    }

    /// `(self : other) = {z : z + other ⊆ self}`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let lo = self.min() - other.min();
        let hi = lo + self.ring.conductor();
        self.tail_window(lo, hi, |z| other.generators.iter().all(|&b| self.contains(z + b)))
    }

    /// `(D : (D : self))`
    pub fn v_closure(&self) -> MonomialIdeal {
        let d = MonomialIdeal::unit(self.ring.clone());
        d.colon(&d.colon(self).expect("same ring")).expect("same ring")
    }

    /// `<x^3, x^4>`
    pub fn to_expr(&self) -> String {
        let parts: Vec<String> = self.generators.iter().map(|g| format!("x^{g}")).collect();
        format!("<{}>", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ring() -> Arc<NumericalSemigroup> {
        Arc::new(NumericalSemigroup::new(&[3, 4, 5]).unwrap())
    }

    fn ideal(g: &[i64]) -> MonomialIdeal {
        MonomialIdeal::normalize(ring(), g).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(ideal(&[3, 4, 6, 7]).generators(), &[3, 4]);
        assert_eq!(ideal(&[0]).generators(), &[0]);
        assert_eq!(ideal(&[3, 6, 9]).generators(), &[3]);
        assert!(MonomialIdeal::normalize(ring(), &[]).is_err());
        assert_eq!(MonomialIdeal::maximal(ring()).generators(), &[3, 4, 5]);
    }

    #[test]
    fn sums_products_intersections() {
        let e = ideal(&[3, 4]);
        let f = ideal(&[3, 5]);
        assert_eq!(e.sum(&f).unwrap().generators(), &[3, 4, 5]);
        assert_eq!(e.mul(&MonomialIdeal::unit(ring())).unwrap(), e);
        assert_eq!(e.mul(&f).unwrap().generators(), &[6, 7, 8]);
        assert_eq!(e.intersect(&f).unwrap().generators(), &[3]);
        assert_eq!(ideal(&[3]).intersect(&ideal(&[4])).unwrap().generators(), &[7, 8, 9]);
    }

    #[test]
    fn colons_and_v() {
        let d = MonomialIdeal::unit(ring());
        let e = ideal(&[3, 4]);
        assert_eq!(d.colon(&e).unwrap().generators(), &[0, 1, 2]);
        assert_eq!(e.colon(&d).unwrap(), e);
        assert_eq!(e.v_closure().generators(), &[3, 4, 5]);
        assert_eq!(ideal(&[3, 5]).v_closure().generators(), &[3, 4, 5]);
        assert_eq!(ideal(&[3]).v_closure().generators(), &[3]);
        assert!(!e.contains(5));
        assert_eq!(MonomialIdeal::hull(ring(), 0).generators(), &vec![0, 1, 2][..]);
    }
}
