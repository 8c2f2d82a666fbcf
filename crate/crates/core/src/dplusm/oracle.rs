//! Finite leading-term expansions `sum c_i t^(g_i)` and a membership test by
//! greedy elimination against monomial generators.

use alloc::vec::Vec;

use super::module::Generator;
use crate::algebra::{ExtensionField, FieldElem, GroupElement, Subspace};
use alloc::sync::Arc;

/// A finite sum of monomials with strictly increasing levels and nonzero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    terms: Vec<(GroupElement, FieldElem)>,
}

impl Expansion {
    pub fn new(field: &ExtensionField, mut raw: Vec<(GroupElement, FieldElem)>) -> Expansion {
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        let mut terms: Vec<(GroupElement, FieldElem)> = Vec::new();
        for (g, c) in raw {
            match terms.last_mut() {
                Some((h, d)) if *h == g => *d = field.add(d, &c),
                _ => terms.push((g, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Expansion { terms }
    }

    pub fn zero() -> Expansion {
        Expansion { terms: Vec::new() }
    }

    pub fn monomial(field: &ExtensionField, g: &Generator) -> Expansion {
        Expansion::new(field, alloc::vec![(g.level.clone(), g.coeff.clone())])
    }

    pub fn terms(&self) -> &[(GroupElement, FieldElem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&GroupElement, &FieldElem)> {
        self.terms.first().map(|(g, c)| (g, c))
    }

    pub fn add(&self, field: &ExtensionField, other: &Expansion) -> Expansion {
        let mut raw = self.terms.clone();
        raw.extend(other.terms.iter().cloned());
        Expansion::new(field, raw)
    }

    pub fn mul(&self, field: &ExtensionField, other: &Expansion) -> Expansion {
        let raw = self
            .terms
            .iter()
            .flat_map(|(g, c)| other.terms.iter().map(move |(h, d)| (g + h, field.mul(c, d))))
            .collect();
        Expansion::new(field, raw)
    }
}

/// Whether `x` lies in the `D`-module generated by `gens`, decided by
/// stripping leading terms one at a time.
pub fn reduces_to_zero(field: &Arc<ExtensionField>, gens: &[Generator], x: &Expansion) -> bool {
    let mut terms: Vec<(GroupElement, FieldElem)> = x.terms.clone();
    while let Some((h, e)) = terms.first().cloned() {
        // a generator strictly below h absorbs the whole term: e t^h = (e/c) t^(h-g) * c t^g
        let below = gens.iter().any(|g| g.level < h);
        let at: Vec<FieldElem> = gens.iter().filter(|g| g.level == h).map(|g| g.coeff.clone()).collect();
        if below || Subspace::span(field.clone(), &at).contains(&e) {
            terms.remove(0);
        } else {
            return false;
        }
    }
    true
}
