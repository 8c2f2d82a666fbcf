use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::predicates::{every_fg, first_decided, is_star_f_finite, is_star_invertible};
use super::sample::SampleSpec;
use super::search::{fg_universe, find_generated, Search};
use super::verdict::{Reason, SampleReport, Verdict, Witness};
use crate::semistar::{
    apply, localizing_system, module_classes, op_leq, ops_equal_on, quasi_star_ideal_check, quasi_star_maximals,
    CofinalFamily, DomainHandle, IdealHandle, PrimeTag, SemistarOp,
};
use crate::{Error, Result};

/// One clause of the characterization of `H(op)`-domains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HClause {
    pub label: &'static str,
    pub statement: &'static str,
    pub verdict: Verdict,
}

const STATEMENTS: [(&str, &str); 11] = [
    ("i", "F^* = F^(*_f)"),
    ("ii", "quasi-*_f-maximal ideals are quasi-*-ideals"),
    ("iii", "*-invertible iff *_f-invertible"),
    ("iii'", "*-invertible I has I, I^-1 *_f-finite"),
    ("iv", "M(*_f) = M(*)"),
    ("v", "M(tilde *) = M(*)"),
    ("vi", "(bar *)_f = bar *"),
    ("vii", "tilde * = bar *"),
    ("viii", "bar * <= *_f"),
    ("ix", "primes in F^* are *_f-finite"),
    ("x", "D is an H(bar *)-domain"),
];

pub fn prime_ideal(d: &Arc<DomainHandle>, tag: PrimeTag) -> Result<IdealHandle> {
    match tag {
        PrimeTag::Maximal => Ok(IdealHandle::maximal(d)),
        PrimeTag::Height1 => {
            let p = d.height_one_prime().ok_or_else(|| Error::InvalidInput(format!("no height one prime in {}", d.describe())))?;
            IdealHandle::new(d.clone(), p)
        }
    }
}

fn primes(d: &Arc<DomainHandle>) -> Vec<PrimeTag> {
    let mut out = alloc::vec![PrimeTag::Maximal];
    if d.height_one_prime().is_some() {
        out.push(PrimeTag::Height1);
    }
    out
}

/// The integral ideals that are not finitely generated, up to the multiples
/// that can only enter `F^*` when `D^*` is the quotient field.
fn non_finitely_generated(d: &Arc<DomainHandle>) -> Result<Vec<IdealHandle>> {
    if d.is_dense() {
        return Ok(alloc::vec![IdealHandle::maximal(d)]);
    }
    if d.is_lex() {
        return Ok(alloc::vec![prime_ideal(d, PrimeTag::Height1)?]);
    }
    Ok(Vec::new())
}

fn undecided(e: &Error) -> Verdict {
    Verdict::Unknown(SampleReport::universe(0).with_note(&format!("{e}")))
}

fn clause_i(d: &Arc<DomainHandle>, op: &SemistarOp) -> Result<Verdict> {
    let ls = localizing_system(d, op)?;
    if ls.trivial || ls.cofinal == CofinalFamily::AllIdeals {
        return Ok(Verdict::Holds(Reason::new("F^* is {D} or every ideal", "F^* = F^(*_f)")));
    }
    let ft = SemistarOp::ft(op.clone());
    for i in non_finitely_generated(d)? {
        if apply(op, &i)? == ls.dstar && apply(&ft, &i)? != ls.dstar {
            return Ok(Verdict::Refuted(Witness::Ideal(i)));
        }
    }
    Ok(Verdict::Holds(Reason::new(
        "the other members of F^* are finitely generated",
        "F^* = F^(*_f)",
    )))
}

fn clause_ii(d: &Arc<DomainHandle>, op: &SemistarOp) -> Result<Verdict> {
    for q in quasi_star_maximals(&SemistarOp::ft(op.clone()), d)? {
        if !quasi_star_ideal_check(op, &prime_ideal(d, q)?)? {
            return Ok(Verdict::Refuted(Witness::Prime(q)));
        }
    }
    Ok(Verdict::Holds(Reason::new("checked on every quasi-*_f-maximal ideal", "Q^* & D = Q")))
}

fn complete_classes(d: &Arc<DomainHandle>) -> (Vec<IdealHandle>, bool) {
    let u = module_classes(d);
    let all_fg = d.capabilities().noetherian;
    (u.members.into_iter().filter(|m| !m.is_quotient_field()).collect(), u.exhaustive || all_fg)
}

fn clause_iii(d: &Arc<DomainHandle>, op: &SemistarOp) -> Result<Verdict> {
    let ft = SemistarOp::ft(op.clone());
    let (classes, complete) = complete_classes(d);
    for i in &classes {
        if is_star_invertible(op, i)? != is_star_invertible(&ft, i)? {
            return Ok(Verdict::Refuted(Witness::Ideal(i.clone())));
        }
    }
    Ok(if complete {
        Verdict::Holds(Reason::exhaustive(format!("{} module classes", classes.len())))
    } else {
        Verdict::Unknown(SampleReport::universe(classes.len()))
    })
}

fn clause_iii_prime(d: &Arc<DomainHandle>, op: &SemistarOp) -> Result<Verdict> {
    let (classes, mut complete) = complete_classes(d);
    for i in &classes {
        if !is_star_invertible(op, i)? {
            continue;
        }
        for x in [i.clone(), i.inverse()?] {
            match is_star_f_finite(op, &x)? {
                Verdict::Refuted(_) => return Ok(Verdict::Refuted(Witness::Ideal(i.clone()))),
                Verdict::Unknown(_) => complete = false,
                Verdict::Holds(_) => {}
            }
        }
    }
    Ok(if complete {
        Verdict::Holds(Reason::exhaustive(format!("{} module classes", classes.len())))
    } else {
        Verdict::Unknown(SampleReport::universe(classes.len()))
    })
}

fn same_maximals(d: &Arc<DomainHandle>, a: &SemistarOp, op: &SemistarOp) -> Result<Verdict> {
    let x = quasi_star_maximals(a, d)?;
    let y = quasi_star_maximals(op, d)?;
    if let Some(q) = x.symmetric_difference(&y).next() {
        return Ok(Verdict::Refuted(Witness::Prime(*q)));
    }
    Ok(Verdict::Holds(Reason::new("the quasi-maximal spectra coincide", "M(*_1) = M(*_2)")))
}

fn clause_ix(d: &Arc<DomainHandle>, op: &SemistarOp) -> Result<Verdict> {
    let u = fg_universe(d);
    let dstar = apply(op, &IdealHandle::ring(d))?;
    let mut decided = true;
    for tag in primes(d) {
        let p = prime_ideal(d, tag)?;
        if apply(op, &p)? != dstar {
            continue;
        }
        match find_generated(op, &dstar, Some(&p), &u)? {
            Search::Found(_) => {}
            Search::Absent { exact: true } => return Ok(Verdict::Refuted(Witness::Prime(tag))),
            Search::Absent { exact: false } => decided = false,
        }
    }
    Ok(if decided {
        Verdict::Holds(Reason::new("every prime of F^* contains a finitely generated member", "J <= P, J^* = D^*"))
    } else {
        Verdict::Unknown(SampleReport::universe(u.members.len()))
    })
}

/// Every clause evaluated independently; errors leave a clause undecided.
pub fn h_clauses(d: &Arc<DomainHandle>, op: &SemistarOp) -> Result<Vec<HClause>> {
    let ft = SemistarOp::ft(op.clone());
    let bar = SemistarOp::bar(op.clone());
    let tilde = SemistarOp::tilde(op.clone());
    let u = module_classes(d);
    let mut out = Vec::with_capacity(STATEMENTS.len());
    for (label, statement) in STATEMENTS {
        let r = match label {
            "i" => clause_i(d, op),
            "ii" => clause_ii(d, op),
            "iii" => clause_iii(d, op),
            "iii'" => clause_iii_prime(d, op),
            "iv" => same_maximals(d, &ft, op),
            "v" => same_maximals(d, &tilde, op),
            "vi" => ops_equal_on(&SemistarOp::ft(bar.clone()), &bar, &u),
            "vii" => ops_equal_on(&tilde, &bar, &u),
            "viii" => op_leq(&bar, &ft, &u),
            "ix" => clause_ix(d, op),
            _ => clause_i(d, &bar),
        };
        let verdict = match r {
            Ok(v) => v,
            Err(e @ Error::ConsistencyFailure(_)) => return Err(e),
            Err(e) => undecided(&e),
        };
        out.push(HClause { label, statement, verdict });
    }
    Ok(out)
}

/// Fails when two decided clauses disagree.
pub fn clauses_agree(clauses: &[HClause]) -> Result<()> {
    let holds = clauses.iter().find(|c| c.verdict.is_holds());
    let refuted = clauses.iter().find(|c| c.verdict.is_refuted());
    if let (Some(h), Some(r)) = (holds, refuted) {
        return Err(Error::ConsistencyFailure(format!(
            "H clauses disagree: ({}) holds, ({}) refuted by {}",
            h.label, r.label, r.verdict
        )));
    }
    Ok(())
}

/// `F^* = F^(*_f)`, decided through whichever clauses are computable.
pub fn is_h_domain(d: &Arc<DomainHandle>, op: &SemistarOp) -> Result<Verdict> {
    if op.is_finite_type() {
        return Ok(Verdict::Holds(Reason::new("operation of finite type", "F^* = F^(*_f)")));
    }
    let clauses = h_clauses(d, op)?;
    clauses_agree(&clauses)?;
    let verdicts: Vec<Verdict> = clauses.into_iter().map(|c| c.verdict).collect();
    Ok(first_decided(&verdicts))
}

/// Finitely generated ideals are `op`-invertible exactly when `op_f`-invertible.
pub fn is_i_domain(d: &Arc<DomainHandle>, op: &SemistarOp, spec: &SampleSpec) -> Result<Verdict> {
    let anchor = "Inv(D, *) & f(D) = Inv(D, *_f) & f(D)";
    if op.is_finite_type() {
        return Ok(Verdict::Holds(Reason::new("operation of finite type", anchor)));
    }
    let theorem = if d.capabilities().valuation {
        Some(Reason::new("valuation domain: finitely generated ideals are principal", anchor))
    } else if d.capabilities().noetherian {
        Some(Reason::new("noetherian ring: J J^-1 is finitely generated", anchor))
    } else {
        None
    };
    let ft = SemistarOp::ft(op.clone());
    every_fg(d, spec, theorem, |j| Ok(!is_star_invertible(op, j)? || is_star_invertible(&ft, j)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ValueGroup;
    use crate::classify::catalog::{instances, operations, rationals, valuation};

    #[test]
    fn valuation_v() {
        let d = valuation(rationals(), ValueGroup::Rationals);
        let clauses = h_clauses(&d, &SemistarOp::V).unwrap();
        let m = IdealHandle::maximal(&d);
        let get = |l: &str| clauses.iter().find(|c| c.label == l).unwrap().verdict.clone();
        assert_eq!(get("i"), Verdict::Refuted(Witness::Ideal(m.clone())));
        assert_eq!(get("vii"), Verdict::Refuted(Witness::Ideal(m)));
        assert_eq!(get("ix"), Verdict::Refuted(Witness::Prime(PrimeTag::Maximal)));
        assert!(clauses.iter().all(|c| !c.verdict.is_holds()), "{clauses:?}");
        assert!(is_h_domain(&d, &SemistarOp::V).unwrap().is_refuted());
        assert!(is_i_domain(&d, &SemistarOp::V, &SampleSpec::default()).unwrap().is_holds());
    }

    #[test]
    fn clauses_agree_on_catalog() {
        for inst in instances() {
            for op in operations(&inst.domain) {
                let clauses = h_clauses(&inst.domain, &op).unwrap();
                clauses_agree(&clauses).unwrap_or_else(|e| panic!("{} {op}: {e}", inst.name));
            }
        }
    }
}
