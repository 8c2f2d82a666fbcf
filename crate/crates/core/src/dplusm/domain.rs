use alloc::string::String;
use alloc::sync::Arc;

use crate::algebra::{ExtensionField, GroupElement, Segment, Shape, ValueGroup};
use crate::{Error, Result};

/// `V = K + M` with value group `group`; `residue_ext` records `k ⊆ K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValuationDomain {
    residue_ext: Arc<ExtensionField>,
    group: ValueGroup,
}

impl ValuationDomain {
    pub fn new(residue_ext: Arc<ExtensionField>, group: ValueGroup) -> Self {
        ValuationDomain { residue_ext, group }
    }

    pub fn residue_ext(&self) -> &Arc<ExtensionField> {
        &self.residue_ext
    }

    pub fn group(&self) -> ValueGroup {
        self.group
    }

    pub fn ring(&self) -> Segment {
        Segment::closed(self.group.zero())
    }

    pub fn maximal(&self) -> Segment {
        Segment::open(self.group.zero())
    }

    /// The height one prime of the rank two lex valuation.
    pub fn height_one_prime(&self) -> Option<Segment> {
        (self.group == ValueGroup::LexProduct).then(|| Segment::coarse(1))
    }
}

/// `D = k + M`, the pullback of `k ⊆ K` along `V -> K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PullbackDomain {
    valuation: ValuationDomain,
}

impl PullbackDomain {
    pub fn new(valuation: ValuationDomain) -> Result<Self> {
        if valuation.group == ValueGroup::LexProduct {
            return Err(Error::UnsupportedOperation("pullbacks over the rank two lex group".into()));
        }
        Ok(PullbackDomain { valuation })
    }

    pub fn valuation(&self) -> &ValuationDomain {
        &self.valuation
    }

    pub fn field(&self) -> &Arc<ExtensionField> {
        &self.valuation.residue_ext
    }

    pub fn group(&self) -> ValueGroup {
        self.valuation.group
    }

    /// `k ⊊ K`
    pub fn is_proper(&self) -> bool {
        self.field().degree() > 1
    }

    pub fn describe(&self) -> String {
        alloc::format!(
            "pullback(k={}, K={}, G={})",
            self.field().base().name(),
            self.field().modulus_string(),
            self.group().name()
        )
    }
}

/// The height one prime `P` of a rank two lex valuation domain; localizing
/// at it keeps the first coordinate of the value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DomainPrime {
    domain: Arc<ValuationDomain>,
}

impl DomainPrime {
    pub fn height_one(domain: Arc<ValuationDomain>) -> Result<Self> {
        if domain.group != ValueGroup::LexProduct {
            return Err(Error::DomainMismatch("value groups"));
        }
        Ok(DomainPrime { domain })
    }

    pub fn domain(&self) -> &Arc<ValuationDomain> {
        &self.domain
    }
}

/// Image of a lex segment in the value group `Z` of `V_P`.
pub fn localize_at(seg: &Segment, _prime: &DomainPrime) -> Result<Segment> {
    if seg.group() != ValueGroup::LexProduct {
        return Err(Error::DomainMismatch("value groups"));
    }
    Ok(match seg.shape() {
        Shape::Whole => Segment::whole(ValueGroup::Integers),
        Shape::Empty => Segment::empty(ValueGroup::Integers),
        Shape::Closed(GroupElement::Lex(a, _)) | Shape::Coarse(a) => Segment::closed(GroupElement::Int(*a)),
        _ => unreachable!("lex segments are closed or coarse"),
    })
}

/// `E V_P` written back in the lex group.
pub fn lift_from_prime(seg: &Segment) -> Result<Segment> {
    if seg.group() != ValueGroup::Integers {
        return Err(Error::DomainMismatch("value groups"));
    }
    Ok(match seg.shape() {
        Shape::Whole => Segment::whole(ValueGroup::LexProduct),
        Shape::Empty => Segment::empty(ValueGroup::LexProduct),
        Shape::Closed(GroupElement::Int(a)) => Segment::coarse(*a),
        _ => unreachable!("integer segments are closed"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BaseField;

    #[test]
    fn projection() {
        let v = Arc::new(ValuationDomain::new(
            Arc::new(ExtensionField::trivial(BaseField::Rationals)),
            ValueGroup::LexProduct,
        ));
        let p = DomainPrime::height_one(v).unwrap();
        let z = |n| Segment::closed(GroupElement::Int(n));
        assert_eq!(localize_at(&Segment::closed(GroupElement::Lex(1, 5)), &p).unwrap(), z(1));
        assert_eq!(localize_at(&Segment::closed(GroupElement::Lex(1, -3)), &p).unwrap(), z(1));
        // the maximal ideal (0,1)V goes to V_P
        assert_eq!(localize_at(&Segment::open(GroupElement::Lex(0, 0)), &p).unwrap(), z(0));
        assert_eq!(localize_at(&Segment::coarse(1), &p).unwrap(), z(1));
        assert_eq!(lift_from_prime(&z(2)).unwrap(), Segment::coarse(2));
    }
}
