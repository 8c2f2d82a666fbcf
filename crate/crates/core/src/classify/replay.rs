//! Named domain-level checks, and independent re-verification of the
//! witnesses they return.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use core::fmt;

use super::coherence::{coherence_check, pair_search, CoherenceKind};
use super::hdomain::{h_clauses, is_h_domain, is_i_domain, prime_ideal};
use super::predicates::{
    is_ab, is_eab, is_pstarmd, is_star_dedekind, is_star_domain, is_star_f_finite, is_star_invertible,
    is_star_noetherian,
};
use super::sample::SampleSpec;
use super::search::{fg_universe, find_generated, Search};
use super::verdict::{Verdict, Witness};
use crate::semistar::{apply, quasi_star_ideal_check, quasi_star_maximals, DomainHandle, IdealHandle, SemistarOp};
use crate::{Error, Result};

/// Chain length used by [`Check::StarNoetherian`].
pub const CHAIN_LENGTH: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    StarDomain,
    Pstarmd,
    Ab,
    Eab,
    StarNoetherian,
    StarDedekind,
    Coherence(CoherenceKind),
    HDomain,
    IDomain,
}

impl Check {
    pub const ALL: [Check; 12] = [
        Check::StarDomain,
        Check::Pstarmd,
        Check::Ab,
        Check::Eab,
        Check::StarNoetherian,
        Check::StarDedekind,
        Check::Coherence(CoherenceKind::Extracoherent),
        Check::Coherence(CoherenceKind::Coherent),
        Check::Coherence(CoherenceKind::TrulyCoherent),
        Check::Coherence(CoherenceKind::QuasiCoherent),
        Check::HDomain,
        Check::IDomain,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::StarDomain => "star-domain",
            Check::Pstarmd => "pstarmd",
            Check::Ab => "ab",
            Check::Eab => "eab",
            Check::StarNoetherian => "star-noetherian",
            Check::StarDedekind => "star-dedekind",
            Check::Coherence(k) => k.name(),
            Check::HDomain => "h-domain",
            Check::IDomain => "i-domain",
        }
    }

    pub fn parse(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn run(check: Check, d: &Arc<DomainHandle>, op: &SemistarOp, spec: &SampleSpec) -> Result<Verdict> {
    match check {
        Check::StarDomain => is_star_domain(d, op, spec),
        Check::Pstarmd => is_pstarmd(d, op, spec),
        Check::Ab => is_ab(d, op, spec),
        Check::Eab => is_eab(d, op, spec),
        Check::StarNoetherian => is_star_noetherian(d, op, CHAIN_LENGTH),
        Check::StarDedekind => is_star_dedekind(d, op, spec),
        Check::Coherence(kind) => coherence_check(d, kind, op, spec),
        Check::HDomain => is_h_domain(d, op),
        Check::IDomain => is_i_domain(d, op, spec),
    }
}

fn mismatch(check: Check, w: &Witness) -> Error {
    Error::InvalidInput(format!("a {} witness cannot refute {check}", witness_kind(w)))
}

fn witness_kind(w: &Witness) -> &'static str {
    match w {
        Witness::Ideal(_) => "ideal",
        Witness::Pair(..) => "pair",
        Witness::Triple(..) => "triple",
        Witness::Chain(_) => "chain",
        Witness::Prime(_) => "prime",
    }
}

fn quasi_chain(op: &SemistarOp, chain: &[IdealHandle]) -> Result<bool> {
    for (k, i) in chain.iter().enumerate() {
        if !quasi_star_ideal_check(op, i)? {
            return Ok(false);
        }
        if let Some(next) = chain.get(k + 1) {
            if !i.is_subset(next)? || i == next {
                return Ok(false);
            }
        }
    }
    Ok(chain.len() >= 2)
}

/// `i` lies in the localizing system of `op` but not in that of `op_f`.
fn outside_finite_system(op: &SemistarOp, i: &IdealHandle) -> Result<bool> {
    let dstar = apply(op, &IdealHandle::ring(i.domain()))?;
    Ok(apply(op, i)? == dstar && apply(&SemistarOp::ft(op.clone()), i)? != dstar)
}

fn absent(s: Search) -> bool {
    s == Search::Absent { exact: true }
}

/// Re-verifies one clause witness of the `H(op)` characterization.
pub fn replay_h_clause(label: &str, op: &SemistarOp, d: &Arc<DomainHandle>, w: &Witness) -> Result<bool> {
    let ft = SemistarOp::ft(op.clone());
    let bar = SemistarOp::bar(op.clone());
    let tilde = SemistarOp::tilde(op.clone());
    Ok(match (label, w) {
        ("i", Witness::Ideal(i)) => outside_finite_system(op, i)?,
        ("x", Witness::Ideal(i)) => outside_finite_system(&bar, i)?,
        ("ii", Witness::Prime(q)) => {
            quasi_star_maximals(&ft, d)?.contains(q) && !quasi_star_ideal_check(op, &prime_ideal(d, *q)?)?
        }
        ("iii", Witness::Ideal(i)) => is_star_invertible(op, i)? != is_star_invertible(&ft, i)?,
        ("iii'", Witness::Ideal(i)) => {
            is_star_invertible(op, i)?
                && (is_star_f_finite(op, i)?.is_refuted() || is_star_f_finite(op, &i.inverse()?)?.is_refuted())
        }
        ("iv", Witness::Prime(q)) => quasi_star_maximals(&ft, d)?.contains(q) != quasi_star_maximals(op, d)?.contains(q),
        ("v", Witness::Prime(q)) => {
            quasi_star_maximals(&tilde, d)?.contains(q) != quasi_star_maximals(op, d)?.contains(q)
        }
        ("vi", Witness::Ideal(i)) => apply(&SemistarOp::ft(bar.clone()), i)? != apply(&bar, i)?,
        ("vii", Witness::Ideal(i)) => apply(&tilde, i)? != apply(&bar, i)?,
        ("viii", Witness::Ideal(i)) => !apply(&bar, i)?.is_subset(&apply(&ft, i)?)?,
        ("ix", Witness::Prime(q)) => {
            let p = prime_ideal(d, *q)?;
            let dstar = apply(op, &IdealHandle::ring(d))?;
            apply(op, &p)? == dstar && absent(find_generated(op, &dstar, Some(&p), &fg_universe(d))?)
        }
        _ => false,
    })
}

/// Re-verifies that `w` violates `check` for `op`, using only the witness.
pub fn replay(check: Check, d: &Arc<DomainHandle>, op: &SemistarOp, w: &Witness) -> Result<bool> {
    let ft = SemistarOp::ft(op.clone());
    let st = |m: &IdealHandle| apply(op, m);
    Ok(match (check, w) {
        (Check::StarDomain, Witness::Ideal(j)) => j.is_finitely_generated() && !is_star_invertible(op, j)?,
        (Check::Pstarmd, Witness::Ideal(j)) => j.is_finitely_generated() && !is_star_invertible(&ft, j)?,
        (Check::Ab | Check::Eab, Witness::Triple(e, f, g)) => {
            let sorts = e.is_finitely_generated()
                && (check == Check::Ab || (f.is_finitely_generated() && g.is_finitely_generated()));
            sorts && st(&e.mul(f)?)?.is_subset(&st(&e.mul(g)?)?)? && !st(f)?.is_subset(&st(g)?)?
        }
        (Check::StarNoetherian, Witness::Chain(c)) => quasi_chain(op, c)?,
        (Check::StarDedekind, Witness::Chain(_)) => replay(Check::StarNoetherian, d, op, w)?,
        (Check::StarDedekind, Witness::Ideal(_)) => {
            replay(Check::Pstarmd, d, op, w)? || replay(Check::StarDomain, d, op, w)?
        }
        (Check::Coherence(kind), Witness::Pair(e, f)) => {
            e.is_finitely_generated()
                && f.is_finitely_generated()
                && absent(pair_search(kind, op, e, f, &fg_universe(d))?)
        }
        (Check::HDomain, _) => {
            let mut any = false;
            for c in h_clauses(d, op)? {
                if replay_h_clause(c.label, op, d, w)? {
                    any = true;
                    break;
                }
            }
            any
        }
        (Check::IDomain, Witness::Ideal(j)) => {
            j.is_finitely_generated() && is_star_invertible(op, j)? && !is_star_invertible(&ft, j)?
        }
        _ => return Err(mismatch(check, w)),
    })
}

/// Runs `check` and, when refuted, replays the witness.
pub fn run_and_replay(check: Check, d: &Arc<DomainHandle>, op: &SemistarOp, spec: &SampleSpec) -> Result<Verdict> {
    let v = run(check, d, op, spec)?;
    if let Verdict::Refuted(w) = &v {
        if !replay(check, d, op, w)? {
            let msg: String = format!("{check} witness {w} does not reproduce for {op}");
            return Err(Error::ConsistencyFailure(msg));
        }
    }
    Ok(v)
}
