use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{BaseField, ExtensionField, ValueGroup};
use crate::dplusm::{PullbackDomain, ValuationDomain};
use crate::numsgr::NumericalSemigroup;
use crate::semistar::{DomainHandle, OverringTag, PrimeTag, SemistarOp};

/// A named domain used by the test suites and the scenarios.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: &'static str,
    pub domain: Arc<DomainHandle>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `Q(a)` with `a^2 = 2`.
pub fn quadratic_rationals() -> Arc<ExtensionField> {
    Arc::new(ExtensionField::new(BaseField::Rationals, vec![q(-2), q(0), q(1)]).expect("a^2-2 is irreducible"))
}

/// `F_4 = F_2(a)` with `a^2 = a + 1`.
pub fn f4() -> Arc<ExtensionField> {
    Arc::new(ExtensionField::new(BaseField::prime_field(2).expect("2 is prime"), vec![q(1), q(1), q(1)]).expect("irreducible"))
}

pub fn rationals() -> Arc<ExtensionField> {
    Arc::new(ExtensionField::trivial(BaseField::Rationals))
}

pub fn semigroup(gens: &[u64]) -> Arc<DomainHandle> {
    DomainHandle::semigroup(NumericalSemigroup::new(gens).expect("valid generators"))
}

pub fn pullback(k: Arc<ExtensionField>, g: ValueGroup) -> Arc<DomainHandle> {
    DomainHandle::pullback(PullbackDomain::new(ValuationDomain::new(k, g)).expect("rank one group"))
}

pub fn valuation(k: Arc<ExtensionField>, g: ValueGroup) -> Arc<DomainHandle> {
    DomainHandle::valuation(ValuationDomain::new(k, g))
}

pub fn instances() -> Vec<Instance> {
    vec![
        Instance { name: "numsgr-3-4-5", domain: semigroup(&[3, 4, 5]) },
        Instance { name: "numsgr-2-3", domain: semigroup(&[2, 3]) },
        Instance { name: "numsgr-4-6-9", domain: semigroup(&[4, 6, 9]) },
        Instance { name: "pullback-Q-sqrt2-Q", domain: pullback(quadratic_rationals(), ValueGroup::Rationals) },
        Instance { name: "pullback-Q-sqrt2-Z", domain: pullback(quadratic_rationals(), ValueGroup::Integers) },
        Instance { name: "pullback-F2-F4-Z", domain: pullback(f4(), ValueGroup::Integers) },
        Instance { name: "pullback-F2-F4-Q", domain: pullback(f4(), ValueGroup::Rationals) },
        Instance { name: "valuation-Q-Z", domain: valuation(rationals(), ValueGroup::Integers) },
        Instance { name: "valuation-Q-Q", domain: valuation(rationals(), ValueGroup::Rationals) },
        Instance { name: "valuation-Q-ZxZ", domain: valuation(rationals(), ValueGroup::LexProduct) },
    ]
}

/// The operations that make sense on `d`.
pub fn operations(d: &DomainHandle) -> Vec<SemistarOp> {
    let v = OverringTag::ValuationHull;
    let mut ops = vec![
        SemistarOp::Identity,
        SemistarOp::V,
        SemistarOp::t(),
        SemistarOp::w(),
        SemistarOp::StarOverring(v),
        SemistarOp::StarOverring(OverringTag::IntegralClosure),
        SemistarOp::StarOverring(OverringTag::FullQuotientField),
        SemistarOp::bar(SemistarOp::V),
        SemistarOp::ft(SemistarOp::bar(SemistarOp::V)),
        SemistarOp::tilde(SemistarOp::StarOverring(v)),
        SemistarOp::spectral(&[PrimeTag::Maximal]),
        SemistarOp::descent(SemistarOp::V, v),
    ];
    if d.is_lex() {
        ops.push(SemistarOp::spectral(&[PrimeTag::Height1]));
        ops.push(SemistarOp::spectral(&[PrimeTag::Height1, PrimeTag::Maximal]));
        ops.push(SemistarOp::bar(SemistarOp::spectral(&[PrimeTag::Height1])));
    }
    ops
}
