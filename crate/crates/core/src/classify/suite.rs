//! Implications between the checks, evaluated on one (domain, operation).
//! A line fails only when its premise holds and its conclusion is refuted.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::coherence::CoherenceKind;
use super::hdomain::{clauses_agree, h_clauses};
use super::predicates::{is_star_f_finite, is_star_invertible, pstarmd_routes};
use super::replay::{run, Check};
use super::sample::{SampleSpec, Sampler};
use super::verdict::Outcome;
use crate::semistar::{apply, module_classes, op_leq, ops_equal_on, DomainHandle, IdealHandle, OverringTag, SemistarOp};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineStatus {
    /// Premise and conclusion both decided and in agreement.
    Confirmed,
    /// Nothing contradicts the statement.
    Consistent,
    Fail,
}

impl LineStatus {
    pub fn name(&self) -> &'static str {
        match self {
            LineStatus::Confirmed => "confirmed",
            LineStatus::Consistent => "consistent",
            LineStatus::Fail => "FAIL",
        }
    }
}

impl fmt::Display for LineStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteLine {
    pub anchor: &'static str,
    pub statement: String,
    pub premise: Outcome,
    pub conclusion: Outcome,
    pub status: LineStatus,
    pub note: String,
}

impl fmt::Display for SuiteLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {} / {} -> {}", self.anchor, self.statement, self.premise, self.conclusion, self.status)?;
        if !self.note.is_empty() {
            write!(f, " ({})", self.note)?;
        }
        Ok(())
    }
}

struct Ctx<'a> {
    d: &'a Arc<DomainHandle>,
    spec: SampleSpec,
    cache: BTreeMap<String, Outcome>,
    lines: Vec<SuiteLine>,
}

type Eval = Result<Outcome>;
type Group = fn(&mut Ctx, &SemistarOp) -> Result<()>;

fn soften(r: Result<Outcome>) -> Result<Outcome> {
    match r {
        Err(e @ Error::ConsistencyFailure(_)) => Err(e),
        Err(_) => Ok(Outcome::Unknown),
        ok => ok,
    }
}

impl<'a> Ctx<'a> {
    fn cached(&mut self, key: String, f: impl FnOnce(&mut Self) -> Result<Outcome>) -> Eval {
        if let Some(o) = self.cache.get(&key) {
            return Ok(*o);
        }
        let o = soften(f(self))?;
        self.cache.insert(key, o);
        Ok(o)
    }

    fn check(&mut self, c: Check, op: &SemistarOp) -> Eval {
        let (d, spec) = (self.d.clone(), self.spec);
        self.cached(format!("{c} {op}"), |_| Ok(run(c, &d, op, &spec)?.outcome()))
    }

    fn coh(&mut self, k: CoherenceKind, op: &SemistarOp) -> Eval {
        self.check(Check::Coherence(k), op)
    }

    fn eq(&mut self, a: &SemistarOp, b: &SemistarOp) -> Eval {
        let d = self.d.clone();
        self.cached(format!("{a} = {b}"), |_| Ok(ops_equal_on(a, b, &module_classes(&d))?.outcome()))
    }

    fn leq(&mut self, a: &SemistarOp, b: &SemistarOp) -> Eval {
        let d = self.d.clone();
        self.cached(format!("{a} <= {b}"), |_| Ok(op_leq(a, b, &module_classes(&d))?.outcome()))
    }

    /// An identity on sampled pairs `(E, F)`: refuted by one failure, never
    /// proved. `E` ranges over all modules when `any_e`, else over finitely
    /// generated ones; `F` is finitely generated.
    fn sampled(
        &mut self,
        key: &str,
        any_e: bool,
        f: impl Fn(&IdealHandle, &IdealHandle) -> Result<bool>,
    ) -> Eval {
        let (d, spec) = (self.d.clone(), self.spec);
        self.cached(format!("sampled {key}"), |_| {
            let mut s = Sampler::new(&d, &spec);
            for _ in 0..spec.count.min(100) {
                let e = if any_e { s.module() } else { s.fg(false) };
                let g = s.fg(false);
                match f(&e, &g) {
                    Ok(true) => {}
                    Ok(false) => return Ok(Outcome::Refuted),
                    // empty colons and the like fall outside the statement
                    Err(Error::ConsistencyFailure(m)) => return Err(Error::ConsistencyFailure(m)),
                    Err(_) => {}
                }
            }
            Ok(Outcome::Unknown)
        })
    }

    fn push(&mut self, anchor: &'static str, statement: &str, premise: Outcome, conclusion: Outcome, iff: bool) {
        use Outcome::*;
        let fail = (premise == Holds && conclusion == Refuted) || (iff && premise == Refuted && conclusion == Holds);
        let confirmed = (premise == Holds && conclusion == Holds) || (iff && premise == Refuted && conclusion == Refuted);
        let status = if fail {
            LineStatus::Fail
        } else if confirmed {
            LineStatus::Confirmed
        } else {
            LineStatus::Consistent
        };
        self.lines.push(SuiteLine {
            anchor,
            statement: statement.into(),
            premise,
            conclusion,
            status,
            note: String::new(),
        });
    }

    fn implies(&mut self, anchor: &'static str, statement: &str, a: Outcome, b: Outcome) {
        self.push(anchor, statement, a, b, false);
    }

    fn iff(&mut self, anchor: &'static str, statement: &str, a: Outcome, b: Outcome) {
        self.push(anchor, statement, a, b, true);
    }

    fn error(&mut self, anchor: &'static str, statement: &str, e: Error) {
        self.lines.push(SuiteLine {
            anchor,
            statement: statement.into(),
            premise: Outcome::Unknown,
            conclusion: Outcome::Unknown,
            status: LineStatus::Fail,
            note: e.to_string(),
        });
    }
}

fn holds_if(b: bool) -> Outcome {
    if b {
        Outcome::Holds
    } else {
        Outcome::Unknown
    }
}

/// `D^op` is the quotient field or a valuation overring of `D`.
fn dstar_valuation(d: &Arc<DomainHandle>, op: &SemistarOp) -> Result<Outcome> {
    let ring = IdealHandle::ring(d);
    let ds = apply(op, &ring)?;
    if ds.is_quotient_field() || d.capabilities().valuation {
        return Ok(Outcome::Holds);
    }
    for tag in [OverringTag::ValuationHull, OverringTag::IntegralClosure] {
        if apply(&SemistarOp::StarOverring(tag), &ring)? == ds {
            return Ok(Outcome::Holds);
        }
    }
    Ok(Outcome::Unknown)
}

fn basic(c: &mut Ctx, op: &SemistarOp) -> Result<()> {
    use Check::*;
    let ft = SemistarOp::ft(op.clone());
    let tilde = SemistarOp::tilde(op.clone());
    let bar = SemistarOp::bar(op.clone());
    let dom = c.check(StarDomain, op)?;
    for (name, lower) in [("op_f", &ft), ("tilde op", &tilde), ("bar op", &bar), ("d", &SemistarOp::Identity)] {
        let leq = c.leq(lower, op)?;
        let lower_dom = c.check(StarDomain, lower)?;
        c.implies(
            "*1 <= *2, *1-domain => *2-domain",
            &format!("{name} <= op and {name}-domain => op-domain"),
            leq.and(lower_dom),
            dom,
        );
    }
    let routes = pstarmd_routes(c.d, op, &c.spec)?;
    let (r1, r2) = (routes[0].outcome(), routes[1].outcome());
    c.iff("*_f-domain <=> tilde-domain <=> P*MD", "op_f-domain iff tilde-domain", r1, r2);
    c.iff("*_f-domain <=> tilde-domain <=> P*MD", "op_f-domain iff local invertibility", r1, routes[2].outcome());
    let pmd = c.check(Pstarmd, op)?;
    c.implies("P*MD => *-domain", "P*MD => op-domain", pmd, dom);
    let bar_dom = c.check(StarDomain, &bar)?;
    c.iff("*-domain <=> bar-domain", "op-domain iff bar(op)-domain", dom, bar_dom);
    Ok(())
}

fn cancellation(c: &mut Ctx, op: &SemistarOp) -> Result<()> {
    use Check::*;
    let dom = c.check(StarDomain, op)?;
    let ab = c.check(Ab, op)?;
    let eab = c.check(Eab, op)?;
    c.implies("*-domain => a.b.", "op-domain => op a.b.", dom, ab);
    c.implies("a.b. => e.a.b.", "op a.b. => op e.a.b.", ab, eab);

    let o = op.clone();
    let qic = c.sampled("quasi integrally closed", false, |_, f| {
        let fs = apply(&o, f)?;
        Ok(fs.colon(&fs)? == apply(&o, &IdealHandle::ring(f.domain()))?)
    })?;
    c.implies("*-domain => D^* = U (F^*:F^*)", "op-domain => (F^*:F^*) = D^*", dom, qic);

    let o = op.clone();
    let einv = c.sampled("F(E:F)", true, |e, f| Ok(apply(&o, &f.mul(&e.colon(f)?)?)? == apply(&o, e)?))?;
    c.implies("*-domain <=> (F(E:F))^* = E^*", "op-domain => (F(E:F))^* = E^*", dom, einv);

    let o = op.clone();
    let cor = c.sampled("EF^-1", true, |e, f| Ok(apply(&o, &e.mul(&f.inverse()?)?)? == apply(&o, e)?.colon(f)?))?;
    c.implies("*-domain <=> a.b. and (EF^-1)^* = (E^*:F)", "op-domain => (EF^-1)^* = (E^*:F)", dom, cor);
    c.iff("*-domain <=> a.b. and (EF^-1)^* = (E^*:F)", "op-domain iff (a.b. and colon identity)", dom, ab.and(cor));

    let ft = SemistarOp::ft(op.clone());
    let pmd = c.check(Pstarmd, op)?;
    let cor_f = c.sampled("EF^-1 f", true, |e, f| Ok(apply(&ft, &e.mul(&f.inverse()?)?)? == apply(&ft, e)?.colon(f)?))?;
    c.implies("*-domain <=> a.b. and (EF^-1)^* = (E^*:F)", "P*MD => (EF^-1)^(*_f) = (E^(*_f):F)", pmd, cor_f);

    let closed = holds_if(c.d.capabilities().integrally_closed);
    let o = op.clone();
    let stable = c.sampled("colon in D", false, |e, f| {
        let ring = IdealHandle::ring(e.domain());
        let ds = apply(&o, &ring)?;
        let left = apply(&o, &e.colon(f)?.intersect(&ring)?)?;
        let right = apply(&o, e)?.colon(f)?.intersect(&ds)?;
        Ok(left == right && apply(&o, &e.intersect(f)?)? == apply(&o, e)?.intersect(&apply(&o, f)?)?)
    })?;
    c.implies(
        "*-domain, D integrally closed => (E:_D F)^* = (E^* :_D^* F)",
        "op-domain and D integrally closed => colon and intersection identities",
        dom.and(closed),
        stable,
    );
    Ok(())
}

fn coherence(c: &mut Ctx, op: &SemistarOp) -> Result<()> {
    use CoherenceKind::*;
    let ft = SemistarOp::ft(op.clone());
    let tilde = SemistarOp::tilde(op.clone());
    let bar = SemistarOp::bar(op.clone());
    let extra = c.coh(Extracoherent, op)?;
    let coh = c.coh(Coherent, op)?;
    let truly = c.coh(TrulyCoherent, op)?;
    let quasi = c.coh(QuasiCoherent, op)?;

    c.implies("extracoherent => coherent, truly coherent", "extracoherent => coherent", extra, coh);
    c.implies("extracoherent => coherent, truly coherent", "extracoherent => truly coherent", extra, truly);
    c.implies("truly coherent => quasi-coherent", "truly coherent => quasi-coherent", truly, quasi);

    for (name, lower) in [("op_f", &ft), ("tilde op", &tilde), ("d", &SemistarOp::Identity)] {
        let leq = c.leq(lower, op)?;
        let lt = c.coh(TrulyCoherent, lower)?;
        let lq = c.coh(QuasiCoherent, lower)?;
        c.implies("*1 <= *2: truly coherence and quasi-coherence ascend", &format!("{name}: truly coherent ascends"), leq.and(lt), truly);
        c.implies("*1 <= *2: truly coherence and quasi-coherence ascend", &format!("{name}: quasi-coherent ascends"), leq.and(lq), quasi);
    }
    for (name, lower, upper) in [("d <= tilde", SemistarOp::Identity, tilde.clone()), ("tilde <= bar", tilde.clone(), bar.clone())] {
        let leq = c.leq(&lower, &upper)?;
        let le = c.coh(Extracoherent, &lower)?;
        let ue = c.coh(Extracoherent, &upper)?;
        let lc = c.coh(Coherent, &lower)?;
        let uc = c.coh(Coherent, &upper)?;
        c.implies("*1 <= *2 stable: extracoherence and coherence ascend", &format!("{name}: extracoherent ascends"), leq.and(le), ue);
        c.implies("*1 <= *2 stable: extracoherence and coherence ascend", &format!("{name}: coherent ascends"), leq.and(lc), uc);
    }

    let dv = soften(dstar_valuation(c.d, op))?;
    c.implies("D coherent <=> D^* coherent", "D^* a valuation domain or K => coherent", dv, coh);

    let extra_f = c.coh(Extracoherent, &ft)?;
    let coh_f = c.coh(Coherent, &ft)?;
    let truly_f = c.coh(TrulyCoherent, &ft)?;
    let quasi_f = c.coh(QuasiCoherent, &ft)?;
    c.iff("* and *_f coherence", "extracoherent iff op_f-extracoherent", extra, extra_f);
    c.iff("* and *_f coherence", "coherent iff op_f-coherent", coh, coh_f);
    c.implies("* and *_f coherence", "truly op_f-coherent => truly coherent", truly_f, truly);
    c.implies("* and *_f coherence", "op_f-quasi-coherent => quasi-coherent", quasi_f, quasi);
    let semistar = holds_if(apply(op, &IdealHandle::ring(c.d))? == IdealHandle::ring(c.d));
    c.implies("(semi)star: *_f-quasi-coherent <=> *-quasi-coherent", "D^* = D => quasi-coherence agrees", semistar, quasi.iff(quasi_f));

    let fbar_f = c.eq(&SemistarOp::ft(bar.clone()), &ft)?;
    let noeth = c.check(Check::StarNoetherian, op)?;
    c.implies("((bar *)_f, *_f)-domain consequences", "star-Noetherian => extracoherent", fbar_f.and(noeth), extra);
    c.implies("((bar *)_f, *_f)-domain consequences", "truly coherent iff coherent", fbar_f, truly.iff(coh));
    c.implies("((bar *)_f, *_f)-domain consequences", "coherent => quasi-coherent", fbar_f.and(coh), quasi);

    let te = c.coh(Extracoherent, &tilde)?;
    let tt = c.coh(TrulyCoherent, &tilde)?;
    let tc = c.coh(Coherent, &tilde)?;
    c.iff("tilde: extracoherent <=> truly coherent <=> coherent", "tilde extracoherent iff truly coherent", te, tt);
    c.iff("tilde: extracoherent <=> truly coherent <=> coherent", "tilde truly coherent iff coherent", tt, tc);

    let tilde_f = c.eq(&tilde, &ft)?;
    c.implies("extracoherent => (tilde *, *_f)-domain", "extracoherent => tilde = op_f", extra, tilde_f);
    c.iff("extracoherent <=> truly coherent and tilde = *_f", "extracoherent iff truly coherent and tilde = op_f", extra, truly.and(tilde_f));
    c.iff("extracoherent <=> truly coherent and tilde = *_f", "extracoherent iff coherent and tilde = op_f", extra, coh.and(tilde_f));
    Ok(())
}

fn pstarmd_coherence(c: &mut Ctx, op: &SemistarOp) -> Result<()> {
    use CoherenceKind::*;
    let ft = SemistarOp::ft(op.clone());
    let tilde = SemistarOp::tilde(op.clone());
    let pmd = c.check(Check::Pstarmd, op)?;
    let dom = c.check(Check::StarDomain, op)?;
    let te = c.coh(Extracoherent, &tilde)?;
    c.implies("P*MD => tilde-extracoherent", "P*MD => tilde extracoherent", pmd, te);
    let t = tilde.clone();
    let ident = c.sampled("(E+F)(E&F)", false, |e, f| {
        Ok(apply(&t, &e.sum(f)?.mul(&e.intersect(f)?)?)? == apply(&t, &e.mul(f)?)?)
    })?;
    c.implies("((E+F)(E & F))^tilde = (EF)^tilde", "P*MD => ((E+F)(E & F))^tilde = (EF)^tilde", pmd, ident);

    let extra = c.coh(Extracoherent, op)?;
    let truly_f = c.coh(TrulyCoherent, &ft)?;
    let truly_t = c.coh(TrulyCoherent, &tilde)?;
    let quasi = c.coh(QuasiCoherent, op)?;
    let quasi_f = c.coh(QuasiCoherent, &ft)?;
    let quasi_t = c.coh(QuasiCoherent, &tilde)?;
    let main = "P*MD <=> coherence-like *-domain";
    c.iff(main, "P*MD iff extracoherent op-domain", pmd, extra.and(dom));
    c.iff(main, "P*MD iff truly op_f-coherent op-domain", pmd, truly_f.and(dom));
    c.iff(main, "P*MD iff truly tilde-coherent op-domain", pmd, truly_t.and(dom));
    c.iff(main, "P*MD iff op_f-quasi-coherent op-domain", pmd, quasi_f.and(dom));
    c.iff(main, "P*MD iff tilde-quasi-coherent op-domain", pmd, quasi_t.and(dom));
    c.implies(main, "quasi-coherent op-domain => P*MD", quasi.and(dom), pmd);

    let ded = c.check(Check::StarDedekind, op)?;
    let noeth = c.check(Check::StarNoetherian, op)?;
    c.iff("*-Dedekind <=> *-Noetherian *-domain", "Dedekind iff Noetherian op-domain", ded, noeth.and(dom));
    Ok(())
}

fn h_and_i(c: &mut Ctx, op: &SemistarOp) -> Result<()> {
    let ft = SemistarOp::ft(op.clone());
    let tilde = SemistarOp::tilde(op.clone());
    let bar = SemistarOp::bar(op.clone());
    match h_clauses(c.d, op).and_then(|cl| clauses_agree(&cl)) {
        Ok(()) => c.implies("H(*) equivalences", "decided clauses agree", Outcome::Holds, Outcome::Holds),
        Err(e @ Error::ConsistencyFailure(_)) => c.error("H(*) equivalences", "decided clauses agree", e),
        Err(_) => c.implies("H(*) equivalences", "decided clauses agree", Outcome::Unknown, Outcome::Unknown),
    }
    let h = c.check(Check::HDomain, op)?;
    let i = c.check(Check::IDomain, op)?;
    let dom = c.check(Check::StarDomain, op)?;
    let pmd = c.check(Check::Pstarmd, op)?;
    c.implies("H(*) => (*-domain <=> P*MD)", "H => (op-domain iff P*MD)", h, dom.iff(pmd));
    let finite = holds_if(op.is_finite_type());
    c.implies("every domain is H(*_f)", "op of finite type => H", finite, h);
    c.implies("finite type => I(*)", "op of finite type => I", finite, i);
    c.implies("H(*) => I(*)", "H => I", h, i);

    let i_bar = c.check(Check::IDomain, &bar)?;
    c.iff("I(*) <=> I(bar *)", "I(op) iff I(bar op)", i, i_bar);
    let o = op.clone();
    let weak = c.sampled("inverse f-finite", false, |_, f| {
        if !is_star_invertible(&o, f)? {
            return Ok(true);
        }
        Ok(!is_star_f_finite(&o, &f.inverse()?)?.is_refuted())
    })?;
    c.implies("I(*) <=> star-invertible F has F^-1 *_f-finite", "I => F^-1 op_f-finite", i, weak);
    let quasi_f = c.coh(CoherenceKind::QuasiCoherent, &ft)?;
    c.implies("*_f-quasi-coherent => I(*)", "op_f-quasi-coherent => I", quasi_f, i);

    let pbar = c.check(Check::Pstarmd, &bar)?;
    c.iff("*-domain and I(*) <=> P*MD <=> P(bar *)MD", "op-domain and I iff P*MD", dom.and(i), pmd);
    c.iff("*-domain and I(*) <=> P*MD <=> P(bar *)MD", "P*MD iff P(bar op)MD", pmd, pbar);

    let tilde_fbar = c.eq(&tilde, &SemistarOp::ft(bar.clone()))?;
    let truly_f = c.coh(CoherenceKind::TrulyCoherent, &ft)?;
    c.implies("H(*) or truly *_f-coherent => tilde = (bar *)_f", "H => tilde = (bar op)_f", h, tilde_fbar);
    c.implies("H(*) or truly *_f-coherent => tilde = (bar *)_f", "truly op_f-coherent => tilde = (bar op)_f", truly_f, tilde_fbar);
    c.implies("tilde = (bar *)_f => I(*)", "tilde = (bar op)_f => I", tilde_fbar, i);

    let cor = "*-domain: truly *_f-coherent <=> *_f-quasi-coherent <=> tilde = (bar *)_f <=> I(*)";
    c.implies(cor, "op-domain => (truly op_f-coherent iff op_f-quasi-coherent)", dom, truly_f.iff(quasi_f));
    c.implies(cor, "op-domain => (op_f-quasi-coherent iff tilde = (bar op)_f)", dom, quasi_f.iff(tilde_fbar));
    c.implies(cor, "op-domain => (tilde = (bar op)_f iff I)", dom, tilde_fbar.iff(i));

    let thm = "P*MD <=> cancellation and tilde = *_f";
    let tilde_f = c.eq(&tilde, &ft)?;
    let ab = c.check(Check::Ab, op)?;
    let eab = c.check(Check::Eab, op)?;
    let bar_dom = c.check(Check::StarDomain, &bar)?;
    let bar_ab = c.check(Check::Ab, &bar)?;
    let bar_eab = c.check(Check::Eab, &bar)?;
    c.iff(thm, "P*MD iff op-domain and tilde = op_f", pmd, dom.and(tilde_f));
    c.iff(thm, "P*MD iff a.b. and tilde = op_f", pmd, ab.and(tilde_f));
    c.iff(thm, "P*MD iff e.a.b. and tilde = op_f", pmd, eab.and(tilde_f));
    c.iff(thm, "P*MD iff bar-domain and tilde = (bar op)_f", pmd, bar_dom.and(tilde_fbar));
    c.iff(thm, "P*MD iff bar a.b. and tilde = (bar op)_f", pmd, bar_ab.and(tilde_fbar));
    c.iff(thm, "P*MD iff bar e.a.b. and tilde = (bar op)_f", pmd, bar_eab.and(tilde_fbar));
    Ok(())
}

/// Every recorded implication, sorted by anchor.
pub fn theorem_suite(d: &Arc<DomainHandle>, op: &SemistarOp, spec: &SampleSpec) -> Vec<SuiteLine> {
    let mut c = Ctx { d, spec: *spec, cache: BTreeMap::new(), lines: Vec::new() };
    let groups: [(&'static str, Group); 5] = [
        ("basic", basic),
        ("cancellation", cancellation),
        ("coherence", coherence),
        ("P*MD and coherence", pstarmd_coherence),
        ("H and I", h_and_i),
    ];
    for (name, g) in groups {
        if let Err(e) = g(&mut c, op) {
            c.error(name, "evaluation", e);
        }
    }
    let mut lines = c.lines;
    lines.sort_by(|a, b| a.anchor.cmp(b.anchor));
    lines
}

pub fn suite_passes(lines: &[SuiteLine]) -> bool {
    lines.iter().all(|l| l.status != LineStatus::Fail)
}
