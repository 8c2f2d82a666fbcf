use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{nullspace, BaseField, Scalar};
use crate::{Error, Result};

/// An element of `K = k[a]/(f)`, stored as its coordinates in `1, a, .., a^(d-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(Vec<Scalar>);

impl FieldElem {
    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// A finite extension `K = k[a]/(f)` with `f` monic and irreducible.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionField {
    base: BaseField,
    // low degree first, monic, length degree + 1
    modulus: Vec<Scalar>,
}

/// Largest search space tolerated by the brute force factor test.
const TRIAL_LIMIT: u64 = 1 << 20;

fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_rem(f: &BaseField, num: &[Scalar], den: &[Scalar]) -> Vec<Scalar> {
    let mut r = trim(num.to_vec());
    let den = trim(den.to_vec());
    let lead_inv = f.inv(den.last().expect("nonzero divisor")).expect("nonzero lead");
    while r.len() >= den.len() {
        let shift = r.len() - den.len();
        let c = f.mul(r.last().expect("nonempty"), &lead_inv);
        for (i, d) in den.iter().enumerate() {
            let t = f.mul(&c, d);
            r[shift + i] = f.sub(&r[shift + i], &t);
        }
        r = trim(r);
    }
    r
}

fn poly_string(coeffs: &[Scalar], var: char) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let unit = mag.is_one();
        if i == 0 || !unit {
            out.push_str(&format!("{mag}"));
        }
        if i > 0 {
            if !unit {
                out.push('*');
            }
            out.push(var);
            if i > 1 {
                out.push_str(&format!("^{i}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    out
}

impl ExtensionField {
    /// `K = k`, presented as `k[a]/(a)`.
    pub fn trivial(base: BaseField) -> Self {
        ExtensionField { base, modulus: vec![Scalar::zero(), Scalar::one()] }
    }

    /// Builds `k[a]/(f)` for `f` given low degree first. `f` is made monic and
    /// must be irreducible.
    pub fn new(base: BaseField, modulus: Vec<Scalar>) -> Result<Self> {
        let mut m = Vec::with_capacity(modulus.len());
        for c in &modulus {
            m.push(base.embed(c)?);
        }
        let m = trim(m);
        if m.len() < 2 {
            return Err(Error::InvalidInput("modulus must have degree at least 1".into()));
        }
        let lead = base.inv(m.last().expect("nonempty"))?;
        let m: Vec<Scalar> = m.iter().map(|c| base.mul(c, &lead)).collect();
        let field = ExtensionField { base, modulus: m };
        field.check_irreducible()?;
        Ok(field)
    }

    fn check_irreducible(&self) -> Result<()> {
        let d = self.degree();
        let name = self.modulus_string();
        if d == 1 {
            return Ok(());
        }
        match &self.base {
            BaseField::PrimeField(p) => {
                for k in 1..=d / 2 {
                    let count = p.checked_pow(k as u32).filter(|&c| c <= TRIAL_LIMIT);
                    let Some(count) = count else {
                        return Err(Error::UnsupportedModulus(name));
                    };
                    for idx in 0..count {
                        let mut g = Vec::with_capacity(k + 1);
                        let mut rest = idx;
                        for _ in 0..k {
                            g.push(self.base.from_i64((rest % p) as i64));
                            rest /= p;
                        }
                        g.push(Scalar::one());
                        if poly_rem(&self.base, &self.modulus, &g).is_empty() {
                            return Err(Error::ReducibleModulus(name));
                        }
                    }
                }
                Ok(())
            }
            BaseField::Rationals => {
                if d > 3 {
                    return Err(Error::UnsupportedModulus(name));
                }
                // a cubic or quadratic is reducible iff it has a rational root
                let lcm = self.modulus.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
                let ints: Vec<BigInt> =
                    self.modulus.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
                if ints[0].is_zero() {
                    return Err(Error::ReducibleModulus(name));
                }
                let a0 = ints[0].abs().to_u64().ok_or_else(|| Error::UnsupportedModulus(name.clone()))?;
                let ad = ints[d].abs().to_u64().ok_or_else(|| Error::UnsupportedModulus(name.clone()))?;
                if a0 > TRIAL_LIMIT * TRIAL_LIMIT || ad > TRIAL_LIMIT * TRIAL_LIMIT {
                    return Err(Error::UnsupportedModulus(name));
                }
                for num in divisors(a0) {
                    for den in divisors(ad) {
                        for sign in [1i64, -1] {
                            let r = BigRational::new(BigInt::from(num) * sign, BigInt::from(den));
                            let val = self.modulus.iter().rev().fold(Scalar::zero(), |acc, c| acc * &r + c);
                            if val.is_zero() {
                                return Err(Error::ReducibleModulus(name));
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Modulus coefficients, low degree first.
    pub fn modulus(&self) -> &[Scalar] {
        &self.modulus
    }

    pub fn modulus_string(&self) -> String {
        poly_string(&self.modulus, 'a')
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(vec![Scalar::zero(); self.degree()])
    }

    pub fn one(&self) -> FieldElem {
        self.from_base(Scalar::one())
    }

    pub fn from_base(&self, c: Scalar) -> FieldElem {
        let mut v = vec![Scalar::zero(); self.degree()];
        v[0] = c;
        FieldElem(v)
    }

    pub fn from_i64(&self, n: i64) -> FieldElem {
        self.from_base(self.base.from_i64(n))
    }

    /// The class of `a`.
    pub fn generator(&self) -> FieldElem {
        if self.degree() == 1 {
            return self.from_base(self.base.neg(&self.modulus[0]));
        }
        let mut v = vec![Scalar::zero(); self.degree()];
        v[1] = Scalar::one();
        FieldElem(v)
    }

    pub fn from_coords(&self, coords: Vec<Scalar>) -> Result<FieldElem> {
        if coords.len() != self.degree() {
            return Err(Error::DomainMismatch("extension fields"));
        }
        let mut v = Vec::with_capacity(coords.len());
        for c in &coords {
            v.push(self.base.embed(c)?);
        }
        Ok(FieldElem(v))
    }

    pub fn add(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        FieldElem(x.0.iter().zip(&y.0).map(|(a, b)| self.base.add(a, b)).collect())
    }

    pub fn sub(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        FieldElem(x.0.iter().zip(&y.0).map(|(a, b)| self.base.sub(a, b)).collect())
    }

    pub fn neg(&self, x: &FieldElem) -> FieldElem {
        FieldElem(x.0.iter().map(|a| self.base.neg(a)).collect())
    }

    pub fn scale(&self, c: &Scalar, x: &FieldElem) -> FieldElem {
        FieldElem(x.0.iter().map(|a| self.base.mul(c, a)).collect())
    }

    pub fn mul(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        let d = self.degree();
        let f = &self.base;
        let mut prod = vec![Scalar::zero(); 2 * d - 1];
        for (i, a) in x.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.0.iter().enumerate() {
                let t = f.mul(a, b);
                prod[i + j] = f.add(&prod[i + j], &t);
            }
        }
        for i in (d..prod.len()).rev() {
            let c = core::mem::take(&mut prod[i]);
            if c.is_zero() {
                continue;
            }
            for k in 0..d {
                let t = f.mul(&c, &self.modulus[k]);
                prod[i - d + k] = f.sub(&prod[i - d + k], &t);
            }
        }
        prod.truncate(d);
        FieldElem(prod)
    }

    pub fn pow(&self, x: &FieldElem, n: u32) -> FieldElem {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Matrix of `y -> x*y` in the power basis; row `i` is coordinate `i`.
    pub(crate) fn mult_matrix(&self, x: &FieldElem) -> Vec<Vec<Scalar>> {
        let d = self.degree();
        let cols: Vec<FieldElem> = (0..d)
            .map(|j| {
                let mut e = vec![Scalar::zero(); d];
                e[j] = Scalar::one();
                self.mul(x, &FieldElem(e))
            })
            .collect();
        (0..d).map(|i| cols.iter().map(|c| c.0[i].clone()).collect()).collect()
    }

    pub fn inv(&self, x: &FieldElem) -> Result<FieldElem> {
        if x.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        // solve x*y = 1 via the kernel of [A | -e0]
        let d = self.degree();
        let mut rows = self.mult_matrix(x);
        for (i, row) in rows.iter_mut().enumerate() {
            row.push(if i == 0 { self.base.neg(&Scalar::one()) } else { Scalar::zero() });
        }
        let ns = nullspace(&self.base, &rows, d + 1);
        let v = ns.into_iter().find(|v| !v[d].is_zero()).ok_or(Error::ZeroDivisor)?;
        let s = self.base.inv(&v[d])?;
        Ok(FieldElem(v[..d].iter().map(|c| self.base.mul(c, &s)).collect()))
    }

    pub fn div(&self, x: &FieldElem, y: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    pub fn is_in_base(&self, x: &FieldElem) -> bool {
        x.0[1..].iter().all(Zero::is_zero)
    }

    /// Every element, when `K` is finite and small.
    pub fn elements(&self) -> Option<Vec<FieldElem>> {
        let base = self.base.elements()?;
        let mut out = vec![Vec::new()];
        for _ in 0..self.degree() {
            let mut next = Vec::with_capacity(out.len() * base.len());
            for prefix in &out {
                for c in &base {
                    let mut p: Vec<Scalar> = prefix.clone();
                    p.push(c.clone());
                    next.push(p);
                }
            }
            out = next;
        }
        Some(out.into_iter().map(FieldElem).collect())
    }

    /// `1+a`, `-2*a^2`, `1/2` ...
    pub fn format(&self, x: &FieldElem) -> String {
        let mut coeffs = x.0.clone();
        if let BaseField::PrimeField(p) = self.base {
            // print residues in the symmetric range so `-1` reads naturally
            for c in coeffs.iter_mut() {
                let v = c.numer().to_u64().unwrap_or(0);
                if v > p / 2 {
                    *c = BigRational::from_integer(BigInt::from(v as i64 - p as i64));
                }
            }
        }
        let mut s = String::new();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            match (i, mag.is_one()) {
                (0, _) => s.push_str(&format!("{mag}")),
                (_, true) => {}
                (_, false) => s.push_str(&format!("{mag}*")),
            }
            if i > 0 {
                s.push('a');
                if i > 1 {
                    s.push_str(&format!("^{i}"));
                }
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// True when the printed form is a single term (no top level `+`/`-` between terms).
    pub fn is_monomial(&self, x: &FieldElem) -> bool {
        x.0.iter().filter(|c| !c.is_zero()).count() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        BigRational::from_integer(n.into())
    }

    fn sqrt2() -> ExtensionField {
        ExtensionField::new(BaseField::Rationals, vec![q(-2), q(0), q(1)]).unwrap()
    }

    #[test]
    fn generator_squares_to_two() {
        let k = sqrt2();
        let a = k.generator();
        assert_eq!(k.mul(&a, &a), k.from_i64(2));
    }

    #[test]
    fn inverse_of_one_plus_a() {
        let k = sqrt2();
        let x = k.add(&k.one(), &k.generator());
        let y = k.inv(&x).unwrap();
        assert_eq!(k.mul(&x, &y), k.one());
        // (1+a)^-1 = a-1
        assert_eq!(y, k.sub(&k.generator(), &k.one()));
    }

    #[test]
    fn reducible_moduli_rejected() {
        assert!(matches!(
            ExtensionField::new(BaseField::Rationals, vec![q(-4), q(0), q(1)]),
            Err(Error::ReducibleModulus(_))
        ));
        assert!(matches!(
            ExtensionField::new(BaseField::PrimeField(2), vec![q(1), q(0), q(1)]),
            Err(Error::ReducibleModulus(_))
        ));
        assert!(ExtensionField::new(BaseField::PrimeField(2), vec![q(1), q(1), q(1)]).is_ok());
        assert!(ExtensionField::new(BaseField::Rationals, vec![q(-2), q(0), q(0), q(1)]).is_ok());
        assert!(matches!(
            ExtensionField::new(BaseField::Rationals, vec![q(-2), q(0), q(0), q(0), q(1)]),
            Err(Error::UnsupportedModulus(_))
        ));
    }

    #[test]
    fn cubic_with_rational_root_rejected() {
        // (a-1/2)(a^2+1) = a^3 - a^2/2 + a - 1/2
        let m = vec![BigRational::new((-1).into(), 2.into()), q(1), BigRational::new((-1).into(), 2.into()), q(1)];
        assert!(matches!(ExtensionField::new(BaseField::Rationals, m), Err(Error::ReducibleModulus(_))));
    }

    #[test]
    fn formatting() {
        let k = sqrt2();
        let x = k.add(&k.one(), &k.generator());
        assert_eq!(k.format(&x), "1+a");
        assert_eq!(k.format(&k.neg(&k.generator())), "-a");
        assert_eq!(k.format(&k.zero()), "0");
        assert_eq!(k.modulus_string(), "a^2-2");
        let f4 = ExtensionField::new(BaseField::PrimeField(2), vec![q(1), q(1), q(1)]).unwrap();
        assert_eq!(f4.elements().unwrap().len(), 4);
    }
}
