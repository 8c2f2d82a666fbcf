use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Scalars of a base field. Over `F_p` the value is always an integer in `[0, p)`.
pub type Scalar = BigRational;

/// The prime field `Q` or `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rationals,
    PrimeField(u64),
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl BaseField {
    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(BaseField::PrimeField(p))
        } else {
            Err(Error::InvalidInput(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            BaseField::Rationals => 0,
            BaseField::PrimeField(p) => *p,
        }
    }

    /// `Q` or `Fp:p`, as written in domain files.
    pub fn name(&self) -> alloc::string::String {
        match self {
            BaseField::Rationals => "Q".into(),
            BaseField::PrimeField(p) => format!("Fp:{p}"),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, BaseField::PrimeField(_))
    }

    fn reduce_int(p: u64, n: &BigInt) -> BigInt {
        n.mod_floor(&BigInt::from(p))
    }

    fn norm(&self, x: Scalar) -> Scalar {
        match self {
            BaseField::Rationals => x,
            BaseField::PrimeField(p) => {
                debug_assert!(x.is_integer());
                BigRational::from_integer(Self::reduce_int(*p, x.numer()))
            }
        }
    }

    /// Image of a rational number; fails when the denominator vanishes mod p.
    pub fn embed(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            BaseField::Rationals => Ok(q.clone()),
            BaseField::PrimeField(p) => {
                let n = Self::reduce_int(*p, q.numer());
                let d = Self::reduce_int(*p, q.denom());
                if d.is_zero() {
                    return Err(Error::ZeroDivisor);
                }
                let di = self.inv(&BigRational::from_integer(d))?;
                Ok(self.mul(&BigRational::from_integer(n), &di))
            }
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.norm(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a - b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.norm(-a)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a * b)
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        match self {
            BaseField::Rationals => Ok(a.recip()),
            BaseField::PrimeField(p) => {
                let p = *p;
                let x = a.numer().to_u64().ok_or(Error::ZeroDivisor)? % p;
                if x == 0 {
                    return Err(Error::ZeroDivisor);
                }
                let (mut base, mut exp, mut acc) = (x as u128, p - 2, 1u128);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p as u128;
                    }
                    base = base * base % p as u128;
                    exp >>= 1;
                }
                Ok(BigRational::from_integer(BigInt::from(acc as u64)))
            }
        }
    }

    /// Every element, when the field is finite.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            BaseField::Rationals => None,
            BaseField::PrimeField(p) => Some((0..*p).map(|i| BigRational::from_integer(BigInt::from(i))).collect()),
        }
    }

    pub fn is_negative(&self, a: &Scalar) -> bool {
        a.is_negative()
    }
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub(crate) fn rref(f: &BaseField, mut rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f.inv(&rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    let t = f.mul(&factor, p);
                    *x = f.sub(x, &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x : rows * x = 0}`.
pub(crate) fn nullspace(f: &BaseField, rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let (red, pivots) = rref(f, rows.to_vec());
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (row, &pc) in red.iter().zip(pivots.iter()) {
            v[pc] = f.neg(&row[free]);
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn prime_field_inverse() {
        let f = BaseField::prime_field(7).unwrap();
        for i in 1..7 {
            let x = f.from_i64(i);
            assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
        }
        assert!(BaseField::prime_field(9).is_err());
    }

    #[test]
    fn embed_rationals_mod_p() {
        let f = BaseField::PrimeField(5);
        assert_eq!(f.embed(&q(1, 2)).unwrap(), f.from_i64(3));
        assert_eq!(f.embed(&q(1, 5)), Err(Error::ZeroDivisor));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let f = BaseField::Rationals;
        let ns = nullspace(&f, &[alloc::vec![q(1, 1), q(2, 1)]], 2);
        assert_eq!(ns, alloc::vec![alloc::vec![q(-2, 1), q(1, 1)]]);
    }
}
