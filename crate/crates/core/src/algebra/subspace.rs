use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::ext::{ExtensionField, FieldElem};
use super::field::{nullspace, rref, Scalar};
use crate::{Error, Result};

/// A `k`-subspace of `K`, kept in reduced row echelon form so that equal
/// subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Arc<ExtensionField>,
    basis: Vec<FieldElem>,
}

impl Subspace {
    pub fn span(field: Arc<ExtensionField>, gens: &[FieldElem]) -> Self {
        let rows: Vec<Vec<Scalar>> = gens.iter().map(|g| g.coords().to_vec()).collect();
        let basis = if rows.is_empty() {
            Vec::new()
        } else {
            let (red, _) = rref(field.base(), rows);
            red.into_iter().map(|r| field.from_coords(r).expect("coordinates already reduced")).collect()
        };
        Subspace { field, basis }
    }

    pub fn zero(field: Arc<ExtensionField>) -> Self {
        Subspace { field, basis: Vec::new() }
    }

    pub fn full(field: Arc<ExtensionField>) -> Self {
        let d = field.degree();
        let basis = (0..d)
            .map(|i| {
                let mut v = vec![Scalar::zero(); d];
                v[i] = field.base().one();
                field.from_coords(v).expect("unit vector")
            })
            .collect();
        Subspace { field, basis }
    }

    pub fn field(&self) -> &Arc<ExtensionField> {
        &self.field
    }

    pub fn basis(&self) -> &[FieldElem] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.field.degree()
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::DomainMismatch("extension fields"))
        }
    }

    pub fn contains(&self, x: &FieldElem) -> bool {
        let mut gens = self.basis.clone();
        gens.push(x.clone());
        Subspace::span(self.field.clone(), &gens).dim() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok(self.basis.iter().all(|b| other.contains(b)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Ok(Subspace::span(self.field.clone(), &gens))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field.clone()));
        }
        // Zassenhaus: rows [a | a] and [b | 0]
        let d = self.field.degree();
        let base = self.field.base();
        let mut rows = Vec::new();
        for a in &self.basis {
            let mut r = a.coords().to_vec();
            r.extend_from_slice(a.coords());
            rows.push(r);
        }
        for b in &other.basis {
            let mut r = b.coords().to_vec();
            r.extend(core::iter::repeat_n(Scalar::zero(), d));
            rows.push(r);
        }
        let (red, _) = rref(base, rows);
        let gens: Vec<FieldElem> = red
            .into_iter()
            .filter(|r| r[..d].iter().all(Zero::is_zero))
            .map(|r| self.field.from_coords(r[d..].to_vec()).expect("coordinates"))
            .collect();
        Ok(Subspace::span(self.field.clone(), &gens))
    }

    /// `c * self`; `c` must be nonzero.
    pub fn scale(&self, c: &FieldElem) -> Result<Subspace> {
        if c.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let gens: Vec<FieldElem> = self.basis.iter().map(|b| self.field.mul(c, b)).collect();
        Ok(Subspace::span(self.field.clone(), &gens))
    }

    /// `k`-span of all products `x*y`.
    pub fn product_span(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut gens = Vec::new();
        for a in &self.basis {
            for b in &other.basis {
                gens.push(self.field.mul(a, b));
            }
        }
        Ok(Subspace::span(self.field.clone(), &gens))
    }

    /// `{c in K : c * other ⊆ self}`.
    pub fn colon(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if other.is_zero() {
            return Ok(Subspace::full(self.field.clone()));
        }
        let d = self.field.degree();
        let base = self.field.base();
        let rows: Vec<Vec<Scalar>> = self.basis.iter().map(|b| b.coords().to_vec()).collect();
        // functionals vanishing on self
        let annihilator = if rows.is_empty() {
            Subspace::full(self.field.clone()).basis.iter().map(|b| b.coords().to_vec()).collect()
        } else {
            nullspace(base, &rows, d)
        };
        if annihilator.is_empty() {
            return Ok(Subspace::full(self.field.clone()));
        }
        let mut cond = Vec::new();
        for b in &other.basis {
            // c -> b*c has matrix m; need y^T m c = 0 for every functional y
            let m = self.field.mult_matrix(b);
            for y in &annihilator {
                let row: Vec<Scalar> = (0..d)
                    .map(|j| {
                        (0..d).fold(Scalar::zero(), |acc, i| base.add(&acc, &base.mul(&y[i], &m[i][j])))
                    })
                    .collect();
                cond.push(row);
            }
        }
        let ker = nullspace(base, &cond, d);
        let gens: Vec<FieldElem> = ker.into_iter().map(|v| self.field.from_coords(v).expect("coords")).collect();
        Ok(Subspace::span(self.field.clone(), &gens))
    }

    /// Every subspace of `K`, when `K` is finite.
    pub fn all(field: &Arc<ExtensionField>) -> Option<Vec<Subspace>> {
        let elems = field.elements()?;
        let mut out: Vec<Subspace> = vec![Subspace::zero(field.clone())];
        let mut frontier = out.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for s in &frontier {
                for e in &elems {
                    if s.contains(e) {
                        continue;
                    }
                    let mut gens = s.basis.clone();
                    gens.push(e.clone());
                    let t = Subspace::span(field.clone(), &gens);
                    if !out.contains(&t) {
                        out.push(t.clone());
                        next.push(t);
                    }
                }
            }
            frontier = next;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BaseField;
    use num_rational::BigRational;

    fn q(n: i64) -> Scalar {
        BigRational::from_integer(n.into())
    }

    fn sqrt2() -> Arc<ExtensionField> {
        Arc::new(ExtensionField::new(BaseField::Rationals, vec![q(-2), q(0), q(1)]).unwrap())
    }

    #[test]
    fn sums() {
        let k = sqrt2();
        let one = Subspace::span(k.clone(), &[k.one()]);
        let a = Subspace::span(k.clone(), &[k.generator()]);
        assert!(one.sum(&a).unwrap().is_full());
        assert_eq!(one.sum(&Subspace::zero(k.clone())).unwrap(), one);
        let p = Subspace::span(k.clone(), &[k.add(&k.one(), &k.generator())]);
        let m = Subspace::span(k.clone(), &[k.sub(&k.one(), &k.generator())]);
        assert!(p.sum(&m).unwrap().is_full());
    }

    #[test]
    fn intersections() {
        let k = sqrt2();
        let one = Subspace::span(k.clone(), &[k.one()]);
        let a = Subspace::span(k.clone(), &[k.generator()]);
        assert!(one.intersect(&a).unwrap().is_zero());
        assert_eq!(one.intersect(&one).unwrap(), one);
        let p = Subspace::span(k.clone(), &[k.add(&k.one(), &k.generator())]);
        assert_eq!(Subspace::full(k.clone()).intersect(&p).unwrap(), p);
    }

    #[test]
    fn scaling() {
        let k = sqrt2();
        let one = Subspace::span(k.clone(), &[k.one()]);
        let a = Subspace::span(k.clone(), &[k.generator()]);
        assert_eq!(one.scale(&k.generator()).unwrap(), a);
        let full = Subspace::full(k.clone());
        let x = k.add(&k.one(), &k.generator());
        assert_eq!(full.scale(&x).unwrap(), full);
        assert!(one.scale(&k.zero()).is_err());
    }

    #[test]
    fn colon_spaces() {
        let k = sqrt2();
        let one = Subspace::span(k.clone(), &[k.one()]);
        let full = Subspace::full(k.clone());
        assert!(one.colon(&full).unwrap().is_zero());
        assert_eq!(one.colon(&one).unwrap(), one);
        assert!(full.colon(&one).unwrap().is_full());
        let a = Subspace::span(k.clone(), &[k.generator()]);
        assert_eq!(a.colon(&one).unwrap(), a);
    }

    #[test]
    fn finite_lattice() {
        let f4 = Arc::new(ExtensionField::new(BaseField::PrimeField(2), vec![q(1), q(1), q(1)]).unwrap());
        // 0, three lines, the whole plane
        assert_eq!(Subspace::all(&f4).unwrap().len(), 5);
    }
}
