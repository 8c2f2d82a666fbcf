//! Seeded property tests over the catalog.

use proptest::prelude::*;

use semistar_core::classify::axioms::check_laws;
use semistar_core::classify::catalog::{instances, operations, Instance};
use semistar_core::classify::coherence::CoherenceKind;
use semistar_core::classify::replay::{run, Check};
use semistar_core::classify::{Outcome, SampleSpec, Sampler};
use semistar_core::semistar::{apply, IdealHandle, SemistarOp};
use semistar_core::Error;

fn pick(i: usize, j: usize) -> (Instance, SemistarOp) {
    let mut all = instances();
    let inst = all.swap_remove(i % all.len());
    let ops = operations(&inst.domain);
    let op = ops[j % ops.len()].clone();
    (inst, op)
}

/// `a ⊆ b`, or true when either side is not computable.
fn within(a: Result<IdealHandle, Error>, b: Result<IdealHandle, Error>) -> bool {
    match (a, b) {
        (Ok(a), Ok(b)) => a.is_subset(&b).unwrap(),
        (Err(Error::ConsistencyFailure(m)), _) | (_, Err(Error::ConsistencyFailure(m))) => panic!("{m}"),
        _ => true,
    }
}

fn outcome(c: Check, inst: &Instance, op: &SemistarOp) -> Outcome {
    let spec = SampleSpec::default().with_count(30);
    match run(c, &inst.domain, op, &spec) {
        Ok(v) => v.outcome(),
        Err(Error::ConsistencyFailure(m)) => panic!("{m}"),
        Err(_) => Outcome::Unknown,
    }
}

fn not_violated(premise: Outcome, conclusion: Outcome) -> bool {
    !(premise == Outcome::Holds && conclusion == Outcome::Refuted)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn semistar_laws(i in 0usize..64, j in 0usize..64, seed in any::<u64>()) {
        let (inst, op) = pick(i, j);
        let mut s = Sampler::new(&inst.domain, &SampleSpec::default().with_seed(seed));
        let (e, f, x) = (s.module(), s.module(), s.monomial());
        prop_assert_eq!(check_laws(&op, &e, &f, &x), Ok(None), "{} {} E={} F={}", inst.name, op, e, f);
    }

    #[test]
    fn derived_operations(i in 0usize..64, j in 0usize..64, seed in any::<u64>()) {
        let (inst, op) = pick(i, j);
        let mut s = Sampler::new(&inst.domain, &SampleSpec::default().with_seed(seed));
        let e = s.module();
        let ft = SemistarOp::ft(op.clone());
        let bar = SemistarOp::bar(op.clone());
        let tilde = SemistarOp::tilde(op.clone());
        let once = apply(&ft, &e).unwrap();
        prop_assert_eq!(apply(&SemistarOp::ft(ft.clone()), &e).unwrap(), once.clone());
        prop_assert!(once.is_subset(&apply(&op, &e).unwrap()).unwrap());
        prop_assert!(within(apply(&bar, &e), apply(&op, &e)));
        prop_assert!(within(apply(&tilde, &e), Ok(once)));
        if let (Ok(a), Ok(b)) = (apply(&tilde, &e), apply(&SemistarOp::bar(ft.clone()), &e)) {
            prop_assert_eq!(a, b);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn domain_level_implications(i in 0usize..64, j in 0usize..64) {
        let (inst, op) = pick(i, j);
        let ft = SemistarOp::ft(op.clone());
        let coh = |k| Check::Coherence(k);
        // op_f <= op transfers the domain property upward
        prop_assert!(not_violated(outcome(Check::StarDomain, &inst, &ft), outcome(Check::StarDomain, &inst, &op)));
        let pmd = outcome(Check::Pstarmd, &inst, &op);
        let ab = outcome(Check::Ab, &inst, &op);
        prop_assert!(not_violated(pmd, ab));
        prop_assert!(not_violated(ab, outcome(Check::Eab, &inst, &op)));
        let extra = outcome(coh(CoherenceKind::Extracoherent), &inst, &op);
        let truly = outcome(coh(CoherenceKind::TrulyCoherent), &inst, &op);
        prop_assert!(not_violated(extra, outcome(coh(CoherenceKind::Coherent), &inst, &op)));
        prop_assert!(not_violated(extra, truly));
        prop_assert!(not_violated(truly, outcome(coh(CoherenceKind::QuasiCoherent), &inst, &op)));
        prop_assert!(not_violated(outcome(Check::HDomain, &inst, &op), outcome(Check::IDomain, &inst, &op)));
    }
}
