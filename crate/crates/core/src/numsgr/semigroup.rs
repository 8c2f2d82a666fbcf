use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::{Error, Result};

/// A cofinite submonoid of `N`, given by generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    gaps: Vec<u64>,
    // membership for 0..=conductor
    member: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn new(generators: &[u64]) -> Result<Self> {
        let mut gens: Vec<u64> = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() || gens[0] == 0 {
            return Err(Error::InvalidInput("semigroup generators must be positive".into()));
        }
        if gens.iter().fold(0u64, |g, &x| g.gcd(&x)) != 1 {
            return Err(Error::InvalidInput(format!("generators {gens:?} have gcd > 1")));
        }
        let m = gens[0] as usize;
        let mut member = vec![true];
        let mut run = 1;
        // stop once m consecutive members are seen
        while run < m {
            let n = member.len();
            let is = gens.iter().any(|&g| (g as usize) <= n && member[n - g as usize]);
            member.push(is);
            run = if is { run + 1 } else { 0 };
        }
        while member.len() > 1 && member[member.len() - 2] {
            member.pop();
        }
        let gaps = (0..member.len() as u64).filter(|&n| !member[n as usize]).collect();
        // minimal generators
        let mut minimal = Vec::new();
        for &g in &gens {
            let reducible = (1..g).any(|a| {
                let b = g - a;
                a <= b && Self::lookup(&member, a) && Self::lookup(&member, b)
            });
            if !reducible {
                minimal.push(g);
            }
        }
        Ok(NumericalSemigroup { generators: minimal, gaps, member })
    }

    fn lookup(member: &[bool], n: u64) -> bool {
        member.get(n as usize).copied().unwrap_or(true)
    }

    /// Minimal generators.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Largest integer outside `S`, or `-1` when `S = N`.
    pub fn frobenius(&self) -> i64 {
        self.gaps.last().map_or(-1, |&g| g as i64)
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius() + 1
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0] as i64
    }

    pub fn contains(&self, n: i64) -> bool {
        n >= 0 && Self::lookup(&self.member, n as u64)
    }

    /// `<3,4,5>`
    pub fn name(&self) -> String {
        let parts: Vec<String> = self.generators.iter().map(|g| format!("{g}")).collect();
        format!("<{}>", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_four_five() {
        let s = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        assert_eq!(s.gaps(), &[1, 2]);
        assert_eq!(s.frobenius(), 2);
        assert_eq!(s.conductor(), 3);
        assert_eq!(s.multiplicity(), 3);
        assert!(s.contains(0) && !s.contains(2) && s.contains(100));
    }

    #[test]
    fn four_six_nine() {
        let s = NumericalSemigroup::new(&[4, 6, 9]).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 3, 5, 7, 11]);
        assert_eq!(s.frobenius(), 11);
    }

    #[test]
    fn redundant_generators_dropped() {
        let s = NumericalSemigroup::new(&[2, 3, 4, 5]).unwrap();
        assert_eq!(s.generators(), &[2, 3]);
        assert_eq!(s.frobenius(), 1);
        let n = NumericalSemigroup::new(&[1]).unwrap();
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.conductor(), 0);
    }

    #[test]
    fn gcd_rejected() {
        assert!(NumericalSemigroup::new(&[4, 6]).is_err());
        assert!(NumericalSemigroup::new(&[]).is_err());
    }
}
