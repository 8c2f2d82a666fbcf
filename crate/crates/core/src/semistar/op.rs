use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::handle::OverringTag;

/// Primes a spectral operation can localize at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeTag {
    /// The height one prime of a rank two valuation domain.
    Height1,
    Maximal,
}

impl PrimeTag {
    pub fn name(&self) -> &'static str {
        match self {
            PrimeTag::Height1 => "P1",
            PrimeTag::Maximal => "M",
        }
    }
}

/// A semistar operation, as a term over the constructors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SemistarOp {
    Identity,
    V,
    StarOverring(OverringTag),
    Spectral(BTreeSet<PrimeTag>),
    FiniteType(Box<SemistarOp>),
    Stable(Box<SemistarOp>),
    Tilde(Box<SemistarOp>),
    /// An operation of `D` restricted to modules of the overring.
    Ascent(Box<SemistarOp>, OverringTag),
    /// `E -> (E T)^*` for an operation `*` of the overring.
    Descent(Box<SemistarOp>, OverringTag),
}

impl SemistarOp {
    pub fn t() -> SemistarOp {
        SemistarOp::ft(SemistarOp::V)
    }

    pub fn w() -> SemistarOp {
        SemistarOp::tilde(SemistarOp::V)
    }

    pub fn ft(op: SemistarOp) -> SemistarOp {
        SemistarOp::FiniteType(Box::new(op))
    }

    pub fn bar(op: SemistarOp) -> SemistarOp {
        SemistarOp::Stable(Box::new(op))
    }

    pub fn tilde(op: SemistarOp) -> SemistarOp {
        SemistarOp::Tilde(Box::new(op))
    }

    pub fn ascent(op: SemistarOp, tag: OverringTag) -> SemistarOp {
        SemistarOp::Ascent(Box::new(op), tag)
    }

    pub fn descent(op: SemistarOp, tag: OverringTag) -> SemistarOp {
        SemistarOp::Descent(Box::new(op), tag)
    }

    pub fn spectral(primes: &[PrimeTag]) -> SemistarOp {
        SemistarOp::Spectral(primes.iter().copied().collect())
    }

    /// Of finite type by construction.
    pub fn is_finite_type(&self) -> bool {
        match self {
            SemistarOp::Identity
            | SemistarOp::StarOverring(_)
            | SemistarOp::Spectral(_)
            | SemistarOp::FiniteType(_)
            | SemistarOp::Tilde(_) => true,
            SemistarOp::Descent(inner, _) => inner.is_finite_type(),
            _ => false,
        }
    }

    /// Stable by construction.
    pub fn is_stable(&self) -> bool {
        matches!(
            self,
            SemistarOp::Identity | SemistarOp::Spectral(_) | SemistarOp::Stable(_) | SemistarOp::Tilde(_)
        )
    }

    /// Induced by valuation overrings: `E -> E V` and spectral operations.
    pub fn is_valuative(&self) -> bool {
        matches!(self, SemistarOp::StarOverring(OverringTag::ValuationHull) | SemistarOp::Spectral(_))
    }
}

impl fmt::Display for SemistarOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemistarOp::Identity => f.write_str("d"),
            SemistarOp::V => f.write_str("v"),
            SemistarOp::StarOverring(tag) => write!(f, "st[{}]", tag.name()),
            SemistarOp::Spectral(primes) => {
                let names: Vec<&str> = primes.iter().map(PrimeTag::name).collect();
                write!(f, "spec{{{}}}", names.join(","))
            }
            SemistarOp::FiniteType(inner) if **inner == SemistarOp::V => f.write_str("t"),
            SemistarOp::Tilde(inner) if **inner == SemistarOp::V => f.write_str("w"),
            SemistarOp::FiniteType(inner) => write!(f, "ft({inner})"),
            SemistarOp::Stable(inner) => write!(f, "bar({inner})"),
            SemistarOp::Tilde(inner) => write!(f, "tilde({inner})"),
            SemistarOp::Ascent(inner, tag) => write!(f, "asc[{}]({inner})", tag.name()),
            SemistarOp::Descent(inner, tag) => write!(f, "desc[{}]({inner})", tag.name()),
        }
    }
}

impl SemistarOp {
    pub fn to_term(&self) -> String {
        alloc::format!("{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printing() {
        assert_eq!(SemistarOp::t().to_term(), "t");
        assert_eq!(SemistarOp::w().to_term(), "w");
        assert_eq!(SemistarOp::bar(SemistarOp::V).to_term(), "bar(v)");
        assert_eq!(SemistarOp::spectral(&[PrimeTag::Maximal, PrimeTag::Height1]).to_term(), "spec{P1,M}");
        assert_eq!(
            SemistarOp::descent(SemistarOp::Identity, OverringTag::ValuationHull).to_term(),
            "desc[V](d)"
        );
        assert_eq!(SemistarOp::ft(SemistarOp::ft(SemistarOp::Identity)).to_term(), "ft(ft(d))");
    }
}
