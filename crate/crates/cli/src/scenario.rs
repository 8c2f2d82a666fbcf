//! The shipped scenarios: worked examples, each assertion tagged with the
//! formula it checks.

use std::collections::BTreeSet;
use std::sync::Arc;

use semistar_core::classify::coherence::{coherence_on_pairs, CoherenceKind};
use semistar_core::classify::hdomain::h_clauses;
use semistar_core::classify::replay::{run, Check};
use semistar_core::classify::{Outcome, SampleSpec, Sampler, Verdict, Witness};
use semistar_core::semistar::{
    module_classes, ops_equal_on, quasi_star_maximals, DomainHandle, IdealHandle, OverringTag, PrimeTag, Universe,
};

use crate::domain::parse_domain;
use crate::expr::eval_text;
use crate::report::ReportLine;
use crate::syntax::parse_op;

#[derive(Clone, Debug)]
pub enum Claim {
    /// The canonical printed form of the value.
    Prints(&'static str, &'static str),
    Equal(&'static str, &'static str),
    Differ(&'static str, &'static str),
    StrictSubset(&'static str, &'static str),
    FinitelyGenerated(&'static str),
    /// Verdict of a check; a refutation may name its witness.
    Decides { check: Check, op: &'static str, expected: Outcome, witness: &'static [&'static str] },
    /// Verdict of a check on an overring, seen as a domain.
    OnOverring { tag: OverringTag, check: Check, op: &'static str, expected: Outcome },
    /// The pair search finds no counterexample among sampled integral pairs.
    SampledCoherence { kind: CoherenceKind, op: &'static str, pairs: usize },
    /// Decided on the module classes.
    OpsEqual { a: &'static str, b: &'static str, expected: Outcome },
    /// No counterexample among sampled modules.
    AgreeOnSamples { a: &'static str, b: &'static str, count: usize },
    Maximals { op: &'static str, expected: &'static [PrimeTag] },
    /// One clause of the H(op) equivalence, evaluated on its own.
    HClause { op: &'static str, label: &'static str, expected: Outcome },
}

#[derive(Clone, Debug)]
pub struct Assertion {
    pub anchor: &'static str,
    pub claim: Claim,
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: &'static str,
    pub summary: &'static str,
    pub domain: &'static str,
    pub assertions: Vec<Assertion>,
}

fn a(anchor: &'static str, claim: Claim) -> Assertion {
    Assertion { anchor, claim }
}

use Claim::*;

pub fn catalog() -> Vec<Scenario> {
    let h = Outcome::Holds;
    let r = Outcome::Refuted;
    vec![
        Scenario {
            name: "numsgr-345",
            summary: "K[[x^3, x^4, x^5]] with v: intersections do not commute with v",
            domain: "family=numsgr generators=[3,4,5]",
            assertions: vec![
                a("E^v = F^v = M", Prints("v(<x^3, x^4>)", "<x^3, x^4, x^5>")),
                a("E^v = F^v = M", Prints("v(<x^3, x^5>)", "<x^3, x^4, x^5>")),
                a("E & F = (x^3)", Prints("<x^3, x^4> & <x^3, x^5>", "<x^3>")),
                a("(x^3)^v = (x^3)", Prints("v(<x^3>)", "<x^3>")),
                a(
                    "(x^3) = (E & F)^v < E^v & F^v",
                    StrictSubset("v(<x^3, x^4> & <x^3, x^5>)", "v(<x^3, x^4>) & v(<x^3, x^5>)"),
                ),
                a(
                    "no f.g. J <= E & F with J^v = E^v & F^v",
                    Decides {
                        check: Check::Coherence(CoherenceKind::Extracoherent),
                        op: "v",
                        expected: r,
                        witness: &["<x^3, x^4>", "<x^3, x^5>"],
                    },
                ),
                a(
                    "noetherian: (E & F)^v is v-finite",
                    Decides { check: Check::Coherence(CoherenceKind::TrulyCoherent), op: "v", expected: h, witness: &[] },
                ),
            ],
        },
        Scenario {
            name: "coherent-3.18",
            summary: "k + M over Q(a), a^2 = 2, value group Q, with E -> EV: coherent, not truly coherent",
            domain: "family=pullback base_field=Q extension=a^2-2 group=Q",
            assertions: vec![
                a("mD & mxD = mM", Equal("<t(1)> & <a*t(1)>", "M*<t(1)>")),
                a("(mD)^* & (mxD)^* = mV", Equal("st[V](<t(1)>) & st[V](<a*t(1)>)", "V*<t(1)>")),
                a("(mD & mxD)^* = mM != mV", Equal("st[V](<t(1)> & <a*t(1)>)", "M*<t(1)>")),
                a("(mD & mxD)^* = mM != mV", Differ("st[V](<t(1)> & <a*t(1)>)", "V*<t(1)>")),
                a(
                    "E^* & F^* is *-finite",
                    SampledCoherence { kind: CoherenceKind::Coherent, op: "st[V]", pairs: 200 },
                ),
                a(
                    "E^* & F^* is *-finite",
                    Decides { check: Check::Coherence(CoherenceKind::Coherent), op: "st[V]", expected: h, witness: &[] },
                ),
                a(
                    "(mD & mxD)^* = mM is not *-finite",
                    Decides {
                        check: Check::Coherence(CoherenceKind::TrulyCoherent),
                        op: "st[V]",
                        expected: r,
                        witness: &["<t(1)>", "<a*t(1)>"],
                    },
                ),
            ],
        },
        Scenario {
            name: "pvd-2.6",
            summary: "pseudo-valuation domain k + M, k < K = Q(a), value group Z, with E -> EV",
            domain: "family=pullback base_field=Q extension=a^2-2 group=Z",
            assertions: vec![
                a("(D:M) = (M:M) = V", Equal("D : M", "M : M")),
                a("(D:M) = (M:M) = V", Equal("M : M", "V")),
                a("(M(D:M))^* = M != V = D^*", Equal("st[V](M*(D : M))", "M")),
                a("(M(D:M))^* = M != V = D^*", Equal("st[V](D)", "V")),
                a("(M(D:M))^* = M != V = D^*", Differ("M", "V")),
                a("M is finitely generated", FinitelyGenerated("M")),
                a("M(*_f) = {M}", Maximals { op: "ft(st[V])", expected: &[PrimeTag::Maximal] }),
                a(
                    "M is not *-invertible",
                    Decides { check: Check::StarDomain, op: "st[V]", expected: r, witness: &["M"] },
                ),
                a(
                    "M is not *_f-invertible",
                    Decides { check: Check::Pstarmd, op: "st[V]", expected: r, witness: &["M"] },
                ),
            ],
        },
        Scenario {
            name: "flatness-2.14",
            summary: "the same pullback with the operation induced by the non-flat overring V",
            domain: "family=pullback base_field=Q extension=a^2-2 group=Z",
            assertions: vec![
                a(
                    "V is a P(d_V)MD",
                    OnOverring { tag: OverringTag::ValuationHull, check: Check::Pstarmd, op: "d", expected: h },
                ),
                a(
                    "V is a P(d_V)MD",
                    OnOverring { tag: OverringTag::ValuationHull, check: Check::StarDomain, op: "d", expected: h },
                ),
                a("(D:M) = (M:M) = V", Equal("D : M", "V")),
                a("(D:M) = (M:M) = V", Equal("M : M", "V")),
                a("(M M^-1)^* = M != D", Equal("apply[desc[V](d)](M*inv(M))", "M")),
                a("(M M^-1)^* = M != D", Differ("apply[desc[V](d)](M*inv(M))", "D")),
                a("M is finitely generated", FinitelyGenerated("M")),
                a(
                    "D is not a *-domain",
                    Decides { check: Check::StarDomain, op: "desc[V](d)", expected: r, witness: &["M"] },
                ),
                a("* is a.b.", Decides { check: Check::Ab, op: "desc[V](d)", expected: h, witness: &[] }),
                a("d = tilde * = (bar *)_f < *_f", OpsEqual { a: "tilde(desc[V](d))", b: "d", expected: h }),
                a("d = tilde * = (bar *)_f < *_f", OpsEqual { a: "ft(bar(desc[V](d)))", b: "d", expected: h }),
                a("d = tilde * = (bar *)_f < *_f", OpsEqual { a: "d", b: "ft(desc[V](d))", expected: r }),
                a("* is not stable", OpsEqual { a: "bar(desc[V](d))", b: "desc[V](d)", expected: r }),
            ],
        },
        Scenario {
            name: "valuation-H-4.4",
            summary: "valuation domain over Q with value group Q and v: a P*MD that is not H(v)",
            domain: "family=valuation base_field=Q group=Q",
            assertions: vec![
                a("M < M^v = V", StrictSubset("M", "v(M)")),
                a("M < M^v = V", Equal("v(M)", "D")),
                a("M^t = M", Equal("t(M)", "M")),
                a("t = w = d", AgreeOnSamples { a: "t", b: "d", count: 50 }),
                a("t = w = d", AgreeOnSamples { a: "w", b: "d", count: 50 }),
                a("bar v = v", OpsEqual { a: "bar(v)", b: "v", expected: h }),
                a("F^v = F^t fails", Decides { check: Check::HDomain, op: "v", expected: r, witness: &["M"] }),
                a("(i) F^* = F^(*_f)", HClause { op: "v", label: "i", expected: r }),
                a("(vii) tilde * = bar *", HClause { op: "v", label: "vii", expected: r }),
                a("(vii) tilde * = bar *", OpsEqual { a: "w", b: "bar(v)", expected: r }),
                a("(ix) primes in F^* are *_f-finite", HClause { op: "v", label: "ix", expected: r }),
                a("(ix) primes in F^* are *_f-finite", Maximals { op: "t", expected: &[PrimeTag::Maximal] }),
                a("P(v)MD", Decides { check: Check::Pstarmd, op: "v", expected: h, witness: &[] }),
                a("I(v)", Decides { check: Check::IDomain, op: "v", expected: h, witness: &[] }),
            ],
        },
        Scenario {
            name: "essential-rank2",
            summary: "rank two valuation domain, value group Z x Z lex, with the operation E -> E V_P",
            domain: "family=valuation base_field=Q group=ZxZ_lex",
            assertions: vec![
                a("D^* = V_P", Equal("apply[spec{P1}](D)", "apply[spec{P1}](M)")),
                a("D^* = V_P", Differ("apply[spec{P1}](D)", "D")),
                a("M(*_f) = {P}", Maximals { op: "spec{P1}", expected: &[PrimeTag::Height1] }),
                a("spectral operations are stable", OpsEqual { a: "bar(spec{P1})", b: "spec{P1}", expected: h }),
                a(
                    "essential valuation overrings: *-domain",
                    Decides { check: Check::StarDomain, op: "spec{P1}", expected: h, witness: &[] },
                ),
                a(
                    "essential valuation overrings: *-domain",
                    Decides { check: Check::Ab, op: "spec{P1}", expected: h, witness: &[] },
                ),
                a(
                    "essential valuation overrings: *-domain",
                    Decides { check: Check::Pstarmd, op: "spec{P1}", expected: h, witness: &[] },
                ),
            ],
        },
    ]
}

pub fn find(name: &str) -> Option<Scenario> {
    catalog().into_iter().find(|s| s.name == name)
}

struct Outcomeish {
    subject: String,
    expected: String,
    actual: String,
    pass: bool,
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Holds(r) => format!("Holds: {}", r.theorem),
        Verdict::Refuted(w) => format!("Refuted by {w}"),
        Verdict::Unknown(s) => format!("Unknown after {} cases", s.count),
    }
}

fn witness_matches(w: &Witness, want: &[IdealHandle]) -> bool {
    match (w, want) {
        (_, []) => true,
        (Witness::Ideal(i), [x]) => i == x,
        (Witness::Pair(p, q), [x, y]) => (p == x && q == y) || (p == y && q == x),
        _ => false,
    }
}

fn ev(text: &str, d: &Arc<DomainHandle>) -> Result<IdealHandle, String> {
    eval_text(text, d)
}

fn op(text: &str) -> Result<semistar_core::semistar::SemistarOp, String> {
    parse_op(text).map_err(|e| e.to_string())
}

fn prime_names(p: &BTreeSet<PrimeTag>) -> String {
    let names: Vec<&str> = p.iter().map(PrimeTag::name).collect();
    format!("{{{}}}", names.join(", "))
}

fn evaluate(c: &Claim, d: &Arc<DomainHandle>, spec: &SampleSpec) -> Result<Outcomeish, String> {
    let err = |e: semistar_core::Error| e.to_string();
    Ok(match c {
        Prints(x, want) => {
            let got = ev(x, d)?.to_expr();
            Outcomeish { subject: x.to_string(), pass: got == *want, expected: want.to_string(), actual: got }
        }
        Equal(x, y) | Differ(x, y) => {
            let (p, q) = (ev(x, d)?, ev(y, d)?);
            let same = p == q;
            let want_same = matches!(c, Equal(..));
            Outcomeish {
                subject: format!("{x} {} {y}", if want_same { "=" } else { "!=" }),
                expected: if want_same { "equal" } else { "different" }.into(),
                actual: format!("{p} {} {q}", if same { "=" } else { "!=" }),
                pass: same == want_same,
            }
        }
        StrictSubset(x, y) => {
            let (p, q) = (ev(x, d)?, ev(y, d)?);
            let sub = p.is_subset(&q).map_err(err)?;
            Outcomeish {
                subject: format!("{x} < {y}"),
                expected: "strictly contained".into(),
                actual: format!("{p} {} {q}", if sub && p != q { "<" } else if p == q { "=" } else { "not <=" }),
                pass: sub && p != q,
            }
        }
        FinitelyGenerated(x) => {
            let p = ev(x, d)?;
            let fg = p.is_finitely_generated();
            Outcomeish {
                subject: format!("{x} finitely generated"),
                expected: "finitely generated".into(),
                actual: if fg { format!("generated by {p}") } else { format!("{p} is not finitely generated") },
                pass: fg,
            }
        }
        Decides { check, op: o, expected, witness } => {
            let v = run(*check, d, &op(o)?, spec).map_err(err)?;
            let want: Vec<IdealHandle> = witness.iter().map(|w| ev(w, d)).collect::<Result<_, _>>()?;
            let mut exp = expected.name().to_string();
            if !want.is_empty() {
                let parts: Vec<String> = want.iter().map(IdealHandle::to_expr).collect();
                exp = format!("{exp} by {}", if parts.len() == 1 { parts[0].clone() } else { format!("({})", parts.join(", ")) });
            }
            let pass = v.outcome() == *expected && v.witness().is_none_or(|w| witness_matches(w, &want));
            Outcomeish { subject: format!("{check}({o})"), expected: exp, actual: verdict_text(&v), pass }
        }
        OnOverring { tag, check, op: o, expected } => {
            let t = d.overring(*tag).map_err(err)?;
            let v = run(*check, &t, &op(o)?, spec).map_err(err)?;
            Outcomeish {
                subject: format!("{check}({o}) on {}", tag.name()),
                expected: expected.name().into(),
                actual: verdict_text(&v),
                pass: v.outcome() == *expected,
            }
        }
        SampledCoherence { kind, op: o, pairs } => {
            let mut s = Sampler::new(d, spec);
            let list: Vec<(IdealHandle, IdealHandle)> = (0..*pairs).map(|_| (s.fg(true), s.fg(true))).collect();
            let v = coherence_on_pairs(*kind, &op(o)?, &list, spec).map_err(err)?;
            Outcomeish {
                subject: format!("{kind}({o}) on {pairs} sampled pairs"),
                expected: "not Refuted".into(),
                actual: verdict_text(&v),
                pass: !v.is_refuted(),
            }
        }
        OpsEqual { a: x, b: y, expected } => {
            let v = ops_equal_on(&op(x)?, &op(y)?, &module_classes(d)).map_err(err)?;
            Outcomeish {
                subject: format!("{x} = {y}"),
                expected: expected.name().into(),
                actual: verdict_text(&v),
                pass: v.outcome() == *expected,
            }
        }
        AgreeOnSamples { a: x, b: y, count } => {
            let mut s = Sampler::new(d, spec);
            let u = Universe::sampled((0..*count).map(|_| s.module()).collect());
            let v = ops_equal_on(&op(x)?, &op(y)?, &u).map_err(err)?;
            Outcomeish {
                subject: format!("{x} = {y} on {count} sampled modules"),
                expected: "not Refuted".into(),
                actual: verdict_text(&v),
                pass: !v.is_refuted(),
            }
        }
        HClause { op: o, label, expected } => {
            let all = h_clauses(d, &op(o)?).map_err(err)?;
            let c = all.iter().find(|c| c.label == *label).ok_or_else(|| format!("no H clause ({label})"))?;
            Outcomeish {
                subject: format!("H({o}) clause ({label}): {}", c.statement),
                expected: expected.name().into(),
                actual: verdict_text(&c.verdict),
                pass: c.verdict.outcome() == *expected,
            }
        }
        Maximals { op: o, expected } => {
            let got = quasi_star_maximals(&op(o)?, d).map_err(err)?;
            let want: BTreeSet<PrimeTag> = expected.iter().copied().collect();
            Outcomeish {
                subject: format!("quasi-{o}-maximal ideals"),
                expected: prime_names(&want),
                actual: prime_names(&got),
                pass: got == want,
            }
        }
    })
}

/// Runs every assertion of `s`; lines are sorted by anchor.
pub fn run_scenario(s: &Scenario, spec: &SampleSpec) -> Vec<ReportLine> {
    let domain = parse_domain(s.domain);
    let mut lines: Vec<ReportLine> = s
        .assertions
        .iter()
        .map(|asrt| {
            let r = domain.as_ref().map_err(|e| e.to_string()).and_then(|d| evaluate(&asrt.claim, d, spec));
            let o = r.unwrap_or_else(|e| Outcomeish {
                subject: format!("{:?}", asrt.claim),
                expected: "evaluation".into(),
                actual: format!("error: {e}"),
                pass: false,
            });
            ReportLine {
                scenario: s.name.into(),
                anchor: asrt.anchor.into(),
                expr_or_predicate: o.subject,
                expected: o.expected,
                actual: o.actual,
                outcome: if o.pass { "PASS" } else { "FAIL" }.into(),
            }
        })
        .collect();
    lines.sort_by(|x, y| x.anchor.cmp(&y.anchor));
    lines
}

/// All scenarios named, or the whole catalog for `all`.
pub fn run_scenarios(names: &[&str], spec: &SampleSpec) -> Result<Vec<ReportLine>, String> {
    let chosen: Vec<Scenario> = if names == ["all"] {
        catalog()
    } else {
        names.iter().map(|n| find(n).ok_or_else(|| format!("unknown scenario '{n}'"))).collect::<Result<_, _>>()?
    };
    let mut lines: Vec<ReportLine> = chosen.iter().flat_map(|s| run_scenario(s, spec)).collect();
    lines.sort_by(|x, y| (&x.scenario, &x.anchor).cmp(&(&y.scenario, &y.anchor)));
    Ok(lines)
}
