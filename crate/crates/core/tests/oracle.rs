//! Generator arithmetic against brute force oracles.

use std::sync::Arc;

use semistar_core::algebra::ValueGroup;
use semistar_core::classify::catalog::{f4, pullback, quadratic_rationals};
use semistar_core::classify::{SampleSpec, Sampler};
use semistar_core::dplusm::oracle::{reduces_to_zero, Expansion};
use semistar_core::dplusm::{Generator, LeveledModule};
use semistar_core::numsgr::{enumerate_ideals, oracle, NumericalSemigroup};
use semistar_core::semistar::Family;

fn exhaustive(gens: &[u64]) -> usize {
    let s = Arc::new(NumericalSemigroup::new(gens).unwrap());
    let ideals = enumerate_ideals(&s, 0, s.frobenius() + 6);
    for e in &ideals {
        for f in &ideals {
            let (a, b) = (e.generators(), f.generators());
            assert_eq!(e.sum(f).unwrap().generators(), oracle::sum(&s, a, b), "{e} + {f}");
            assert_eq!(e.mul(f).unwrap().generators(), oracle::mul(&s, a, b), "{e} * {f}");
            assert_eq!(e.intersect(f).unwrap().generators(), oracle::intersect(&s, a, b), "{e} & {f}");
            assert_eq!(e.colon(f).unwrap().generators(), oracle::colon(&s, a, b), "{e} : {f}");
        }
    }
    ideals.len()
}

#[test]
fn semigroup_345() {
    assert!(exhaustive(&[3, 4, 5]) > 0);
}

#[test]
fn semigroup_23() {
    assert!(exhaustive(&[2, 3]) > 0);
}

#[test]
fn semigroup_469() {
    assert!(exhaustive(&[4, 6, 9]) > 0);
}

#[test]
fn leveled_membership() {
    let domains = [
        pullback(quadratic_rationals(), ValueGroup::Integers),
        pullback(quadratic_rationals(), ValueGroup::Rationals),
        pullback(f4(), ValueGroup::Integers),
        pullback(f4(), ValueGroup::Rationals),
    ];
    let mut cases = 0usize;
    let mut inside = 0;
    for (i, d) in domains.iter().enumerate() {
        let Family::Pullback(p) = d.family() else { unreachable!() };
        let field = d.field();
        let mut s = Sampler::new(d, &SampleSpec::default().with_seed(i as u64));
        for _ in 0..125 {
            let n = 1 + cases % 3;
            let gens: Vec<Generator> = (0..n).map(|_| s.monomial()).collect();
            let m = LeveledModule::from_generators(p.clone(), &gens).unwrap();
            // a combination of generators perturbed by one random term
            let mut x = Expansion::zero();
            for g in &gens {
                // elements of D: base scalars at level zero, anything above
                let mut c = s.monomial();
                if !c.level.is_positive() {
                    c = Generator::new(field.from_i64(1 + cases as i64 % 2), p.group().zero());
                }
                x = x.add(&field, &Expansion::monomial(&field, g).mul(&field, &Expansion::monomial(&field, &c)));
            }
            if cases.is_multiple_of(2) {
                x = x.add(&field, &Expansion::monomial(&field, &s.monomial()));
            }
            let expected = reduces_to_zero(&field, &gens, &x);
            assert_eq!(m.contains(&x), expected, "{m} vs {x:?}");
            inside += expected as usize;
            cases += 1;
        }
    }
    assert_eq!(cases, 500);
    assert!(inside > 0 && inside < cases, "{inside} of {cases} inside");
}
