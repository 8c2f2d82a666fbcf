use alloc::format;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use crate::{Error, Result};

/// Totally ordered abelian value groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValueGroup {
    Integers,
    Rationals,
    /// `Z x Z` ordered lexicographically.
    LexProduct,
}

/// An element of a [`ValueGroup`]. The derived order is the group order
/// within each variant (lexicographic for pairs).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    Int(i64),
    Rat(BigRational),
    Lex(i64, i64),
}

impl ValueGroup {
    pub fn zero(&self) -> GroupElement {
        match self {
            ValueGroup::Integers => GroupElement::Int(0),
            ValueGroup::Rationals => GroupElement::Rat(BigRational::zero()),
            ValueGroup::LexProduct => GroupElement::Lex(0, 0),
        }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        matches!(
            (self, g),
            (ValueGroup::Integers, GroupElement::Int(_))
                | (ValueGroup::Rationals, GroupElement::Rat(_))
                | (ValueGroup::LexProduct, GroupElement::Lex(..))
        )
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::DomainMismatch("value groups"))
        }
    }

    pub fn is_discrete(&self) -> bool {
        !matches!(self, ValueGroup::Rationals)
    }

    /// Immediate successor, when the order is discrete.
    pub fn successor(&self, g: &GroupElement) -> Option<GroupElement> {
        match g {
            GroupElement::Int(n) => Some(GroupElement::Int(n + 1)),
            GroupElement::Lex(a, b) => Some(GroupElement::Lex(*a, b + 1)),
            GroupElement::Rat(_) => None,
        }
    }

    /// Smallest positive element, when there is one.
    pub fn least_positive(&self) -> Option<GroupElement> {
        self.successor(&self.zero())
    }

    /// Embeds an integer as `n` (or `(n, 0)` in the lex group).
    pub fn from_int(&self, n: i64) -> GroupElement {
        match self {
            ValueGroup::Integers => GroupElement::Int(n),
            ValueGroup::Rationals => GroupElement::Rat(BigRational::from_integer(n.into())),
            ValueGroup::LexProduct => GroupElement::Lex(n, 0),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ValueGroup::Integers => "Z",
            ValueGroup::Rationals => "Q",
            ValueGroup::LexProduct => "ZxZ_lex",
        }
    }
}

impl GroupElement {
    pub fn group(&self) -> ValueGroup {
        match self {
            GroupElement::Int(_) => ValueGroup::Integers,
            GroupElement::Rat(_) => ValueGroup::Rationals,
            GroupElement::Lex(..) => ValueGroup::LexProduct,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            GroupElement::Int(n) => *n == 0,
            GroupElement::Rat(q) => q.is_zero(),
            GroupElement::Lex(a, b) => *a == 0 && *b == 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        *self > self.group().zero()
    }

    /// The level as it appears inside `t(..)`.
    pub fn level_string(&self) -> String {
        match self {
            GroupElement::Int(n) => format!("{n}"),
            GroupElement::Rat(q) => format!("{q}"),
            GroupElement::Lex(a, b) => format!("{a},{b}"),
        }
    }

    fn mixed() -> ! {
        panic!("arithmetic on elements of different value groups")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Lex(a, b) => write!(f, "({a},{b})"),
            other => f.write_str(&other.level_string()),
        }
    }
}

impl Add for &GroupElement {
    type Output = GroupElement;
    fn add(self, rhs: &GroupElement) -> GroupElement {
        match (self, rhs) {
            (GroupElement::Int(a), GroupElement::Int(b)) => GroupElement::Int(a + b),
            (GroupElement::Rat(a), GroupElement::Rat(b)) => GroupElement::Rat(a + b),
            (GroupElement::Lex(a, b), GroupElement::Lex(c, d)) => GroupElement::Lex(a + c, b + d),
            _ => GroupElement::mixed(),
        }
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;
    fn neg(self) -> GroupElement {
        match self {
            GroupElement::Int(a) => GroupElement::Int(-a),
            GroupElement::Rat(a) => GroupElement::Rat(-a),
            GroupElement::Lex(a, b) => GroupElement::Lex(-a, -b),
        }
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;
    fn sub(self, rhs: &GroupElement) -> GroupElement {
        self + &(-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order() {
        assert!(GroupElement::Lex(0, 100) < GroupElement::Lex(1, -100));
        assert!(GroupElement::Lex(1, -1) < GroupElement::Lex(1, 0));
        assert!(GroupElement::Lex(0, 1).is_positive());
        assert_eq!(&GroupElement::Lex(1, 2) - &GroupElement::Lex(0, 5), GroupElement::Lex(1, -3));
    }

    #[test]
    fn successors() {
        assert_eq!(ValueGroup::Integers.successor(&GroupElement::Int(3)), Some(GroupElement::Int(4)));
        assert_eq!(ValueGroup::Rationals.least_positive(), None);
        assert_eq!(ValueGroup::LexProduct.least_positive(), Some(GroupElement::Lex(0, 1)));
    }
}
