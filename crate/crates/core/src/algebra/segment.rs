use core::fmt;

use super::group::{GroupElement, ValueGroup};
use crate::{Error, Result};

/// Upper sets of a value group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Whole,
    Empty,
    /// `{g : g >= cut}`
    Closed(GroupElement),
    /// `{g : g > cut}`; only kept in dense groups.
    Open(GroupElement),
    /// Lex group only: `{(x, y) : x >= n}`, the segments with no least element
    /// that are not `Whole`.
    Coarse(i64),
}

/// A canonical upper set of a [`ValueGroup`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    group: ValueGroup,
    shape: Shape,
}

impl Segment {
    pub fn new(group: ValueGroup, shape: Shape) -> Result<Segment> {
        let shape = match shape {
            Shape::Closed(g) => {
                group.check(&g)?;
                Shape::Closed(g)
            }
            Shape::Open(g) => {
                group.check(&g)?;
                match group.successor(&g) {
                    Some(s) => Shape::Closed(s),
                    None => Shape::Open(g),
                }
            }
            Shape::Coarse(n) => {
                if group != ValueGroup::LexProduct {
                    return Err(Error::DomainMismatch("value groups"));
                }
                Shape::Coarse(n)
            }
            other => other,
        };
        Ok(Segment { group, shape })
    }

    fn raw(group: ValueGroup, shape: Shape) -> Segment {
        Segment::new(group, shape).expect("shape built from same group")
    }

    pub fn closed(g: GroupElement) -> Segment {
        Segment::raw(g.group(), Shape::Closed(g))
    }

    pub fn open(g: GroupElement) -> Segment {
        Segment::raw(g.group(), Shape::Open(g))
    }

    pub fn whole(group: ValueGroup) -> Segment {
        Segment { group, shape: Shape::Whole }
    }

    pub fn empty(group: ValueGroup) -> Segment {
        Segment { group, shape: Shape::Empty }
    }

    pub fn coarse(n: i64) -> Segment {
        Segment { group: ValueGroup::LexProduct, shape: Shape::Coarse(n) }
    }

    pub fn group(&self) -> ValueGroup {
        self.group
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn is_whole(&self) -> bool {
        self.shape == Shape::Whole
    }

    pub fn is_empty(&self) -> bool {
        self.shape == Shape::Empty
    }

    /// A least element exists (the principal segments).
    pub fn is_principal(&self) -> bool {
        matches!(self.shape, Shape::Closed(_))
    }

    fn same(&self, other: &Segment) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::DomainMismatch("value groups"))
        }
    }

    pub fn contains(&self, g: &GroupElement) -> Result<bool> {
        self.group.check(g)?;
        Ok(match (&self.shape, g) {
            (Shape::Whole, _) => true,
            (Shape::Empty, _) => false,
            (Shape::Closed(c), g) => g >= c,
            (Shape::Open(c), g) => g > c,
            (Shape::Coarse(n), GroupElement::Lex(a, _)) => a >= n,
            (Shape::Coarse(_), _) => false,
        })
    }

    /// `self ⊆ other`
    pub fn is_subset(&self, other: &Segment) -> Result<bool> {
        self.same(other)?;
        use Shape::*;
        Ok(match (&self.shape, &other.shape) {
            (Empty, _) | (_, Whole) => true,
            (Whole, _) | (_, Empty) => false,
            (Closed(g), Closed(h)) | (Open(g), Closed(h)) | (Open(g), Open(h)) => g >= h,
            (Closed(g), Open(h)) => g > h,
            (Closed(GroupElement::Lex(a, _)), Coarse(c)) => a >= c,
            (Coarse(c), Closed(GroupElement::Lex(a, _))) => c > a,
            (Coarse(c), Coarse(d)) => c >= d,
            _ => unreachable!("open cuts and coarse segments never share a group"),
        })
    }

    pub fn intersect(&self, other: &Segment) -> Result<Segment> {
        Ok(if self.is_subset(other)? { self.clone() } else { other.clone() })
    }

    pub fn union(&self, other: &Segment) -> Result<Segment> {
        Ok(if self.is_subset(other)? { other.clone() } else { self.clone() })
    }

    /// Minkowski sum; the product of the corresponding ideals.
    pub fn add(&self, other: &Segment) -> Result<Segment> {
        self.same(other)?;
        use Shape::*;
        let shape = match (&self.shape, &other.shape) {
            (Empty, _) | (_, Empty) => Empty,
            (Whole, _) | (_, Whole) => Whole,
            (Closed(a), Closed(b)) => Closed(a + b),
            (Closed(a), Open(b)) | (Open(a), Closed(b)) | (Open(a), Open(b)) => Open(a + b),
            (Coarse(c), Closed(GroupElement::Lex(a, _))) | (Closed(GroupElement::Lex(a, _)), Coarse(c)) => {
                Coarse(c + a)
            }
            (Coarse(c), Coarse(d)) => Coarse(c + d),
            _ => unreachable!("open cuts and coarse segments never share a group"),
        };
        Segment::new(self.group, shape)
    }

    /// `{g : g + other ⊆ self}`.
    pub fn colon(&self, other: &Segment) -> Result<Segment> {
        self.same(other)?;
        use Shape::*;
        let shape = match (&self.shape, &other.shape) {
            (_, Empty) => return Err(Error::EmptyColon),
            (Whole, _) => Whole,
            (_, Whole) | (Empty, _) => Empty,
            (Closed(a), Closed(b)) | (Closed(a), Open(b)) | (Open(a), Open(b)) => Closed(a - b),
            (Open(a), Closed(b)) => Open(a - b),
            (Closed(GroupElement::Lex(a, _)), Coarse(c)) => Coarse(a - c + 1),
            (Coarse(a), Closed(GroupElement::Lex(c, _))) => Coarse(a - c),
            (Coarse(a), Coarse(c)) => Coarse(a - c),
            _ => unreachable!("open cuts and coarse segments never share a group"),
        };
        Segment::new(self.group, shape)
    }

    /// `g + self`
    pub fn shift(&self, g: &GroupElement) -> Result<Segment> {
        self.group.check(g)?;
        self.add(&Segment::closed(g.clone()))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.shape {
            Shape::Whole => f.write_str("Whole"),
            Shape::Empty => f.write_str("Empty"),
            Shape::Closed(g) => write!(f, "Closed({g})"),
            Shape::Open(g) => write!(f, "Open({g})"),
            Shape::Coarse(n) => write!(f, "Coarse({n})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(n: i64, d: i64) -> GroupElement {
        GroupElement::Rat(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn adds() {
        let z = |n| Segment::closed(GroupElement::Int(n));
        assert_eq!(z(3).add(&z(4)).unwrap(), z(7));
        let m = Segment::open(r(0, 1));
        assert_eq!(m.add(&m).unwrap(), m);
        assert_eq!(Segment::open(r(1, 2)).add(&Segment::closed(r(1, 3))).unwrap(), Segment::open(r(5, 6)));
    }

    #[test]
    fn colons() {
        let v = Segment::closed(r(0, 1));
        let m = Segment::open(r(0, 1));
        assert_eq!(v.colon(&m).unwrap(), v);
        assert_eq!(Segment::closed(r(3, 2)).colon(&v).unwrap(), Segment::closed(r(3, 2)));
        assert_eq!(Segment::open(r(1, 1)).colon(&m).unwrap(), Segment::closed(r(1, 1)));
        assert_eq!(v.colon(&Segment::empty(ValueGroup::Rationals)), Err(Error::EmptyColon));
    }

    #[test]
    fn intersections_and_membership() {
        let z = |n| Segment::closed(GroupElement::Int(n));
        assert_eq!(z(2).intersect(&z(5)).unwrap(), z(5));
        let c1 = Segment::closed(r(1, 1));
        let o1 = Segment::open(r(1, 1));
        assert_eq!(c1.intersect(&o1).unwrap(), o1);
        assert!(!Segment::open(r(0, 1)).contains(&r(0, 1)).unwrap());
        assert!(Segment::closed(r(0, 1)).contains(&r(0, 1)).unwrap());
    }

    #[test]
    fn discrete_open_is_closed_successor() {
        assert_eq!(Segment::open(GroupElement::Int(0)), Segment::closed(GroupElement::Int(1)));
        assert_eq!(Segment::open(GroupElement::Lex(1, 2)), Segment::closed(GroupElement::Lex(1, 3)));
    }

    #[test]
    fn coarse_segments() {
        let p = Segment::coarse(1);
        let x = Segment::closed(GroupElement::Lex(1, -7));
        assert!(x.is_subset(&p).unwrap());
        assert!(!p.is_subset(&x).unwrap());
        assert!(p.is_subset(&Segment::closed(GroupElement::Lex(0, 5))).unwrap());
        assert_eq!(p.add(&x).unwrap(), Segment::coarse(2));
        // (V : P) = (P : P) = V_P
        let v = Segment::closed(GroupElement::Lex(0, 0));
        assert_eq!(v.colon(&p).unwrap(), Segment::coarse(0));
        assert_eq!(p.colon(&p).unwrap(), Segment::coarse(0));
        assert_eq!(p.colon(&x).unwrap(), Segment::coarse(0));
    }
}
