//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::thread;
use std::time::{Duration, Instant};

use semistar::scenario::run_scenarios;
use semistar_core::algebra::ValueGroup;
use semistar_core::classify::axioms::check_laws;
use semistar_core::classify::catalog::{f4, instances, operations, pullback, quadratic_rationals, Instance};
use semistar_core::classify::hdomain::{clauses_agree, h_clauses};
use semistar_core::classify::replay::{run, Check};
use semistar_core::classify::suite::{theorem_suite, LineStatus};
use semistar_core::classify::{SampleSpec, Sampler};
use semistar_core::dplusm::oracle::{reduces_to_zero, Expansion};
use semistar_core::dplusm::{Generator, LeveledModule};
use semistar_core::numsgr::{enumerate_ideals, oracle, NumericalSemigroup};
use semistar_core::semistar::{apply, DomainHandle, Family, SemistarOp};

type Outcome = Result<String, String>;

fn scenario(name: &str) -> Outcome {
    let lines = run_scenarios(&[name], &SampleSpec::default())?;
    let failed: Vec<String> =
        lines.iter().filter(|l| !l.passed()).map(|l| format!("[{}] {}: {}", l.anchor, l.expr_or_predicate, l.actual)).collect();
    if failed.is_empty() {
        Ok(format!("{} assertions", lines.len()))
    } else {
        Err(failed.join("; "))
    }
}

/// Runs `f` on every catalog instance in parallel, collecting the first error of each.
fn per_instance<F>(f: F) -> Vec<Outcome>
where
    F: Fn(&Instance) -> Outcome + Sync,
{
    let all = instances();
    thread::scope(|s| {
        let handles: Vec<_> = all.iter().map(|inst| s.spawn(|| f(inst))).collect();
        handles.into_iter().map(|h| h.join().unwrap_or_else(|_| Err("panicked".into()))).collect()
    })
}

fn summarize(results: Vec<Outcome>, unit: &str) -> Outcome {
    let mut total = 0usize;
    let mut errors = Vec::new();
    for r in results {
        match r {
            Ok(n) => total += n.parse::<usize>().unwrap_or(0),
            Err(e) => errors.push(e),
        }
    }
    if errors.is_empty() {
        Ok(format!("{total} {unit}"))
    } else {
        Err(errors.join("; "))
    }
}

fn axioms() -> Outcome {
    let results = per_instance(|inst| {
        let mut n = 0usize;
        for (k, op) in operations(&inst.domain).into_iter().enumerate() {
            let mut s = Sampler::new(&inst.domain, &SampleSpec::default().with_seed(k as u64));
            for _ in 0..200 {
                let (e, f, x) = (s.module(), s.module(), s.monomial());
                match check_laws(&op, &e, &f, &x) {
                    Ok(None) => n += 1,
                    Ok(Some(law)) => return Err(format!("{} {op}: {law} fails at E={e}, F={f}", inst.name)),
                    Err(err) => return Err(format!("{} {op}: {err} at E={e}, F={f}", inst.name)),
                }
            }
        }
        Ok(n.to_string())
    });
    summarize(results, "law checks")
}

fn tilde_identity() -> Outcome {
    let mut n = 0usize;
    for inst in instances().iter().filter(|i| matches!(i.domain.family(), Family::Valuation(_))) {
        for op in operations(&inst.domain) {
            let spec = SampleSpec::default();
            let pmd = run(Check::Pstarmd, &inst.domain, &op, &spec).map_err(|e| format!("{} {op}: {e}", inst.name))?;
            if !pmd.is_holds() {
                return Err(format!("{} {op}: P*MD is {}", inst.name, pmd.outcome()));
            }
            let tilde = SemistarOp::tilde(op.clone());
            let mut s = Sampler::new(&inst.domain, &spec);
            for _ in 0..100 {
                let (e, f) = (s.fg(false), s.fg(false));
                let lhs = e.sum(&f).and_then(|p| p.mul(&e.intersect(&f)?)).and_then(|m| apply(&tilde, &m));
                let rhs = e.mul(&f).and_then(|m| apply(&tilde, &m));
                match (lhs, rhs) {
                    (Ok(a), Ok(b)) if a == b => n += 1,
                    (a, b) => return Err(format!("{} {op}: E={e}, F={f}: {a:?} vs {b:?}", inst.name)),
                }
            }
        }
    }
    Ok(format!("{n} pairs"))
}

fn exhaustive(gens: &[u64]) -> Result<usize, String> {
    let s = Arc::new(NumericalSemigroup::new(gens).map_err(|e| e.to_string())?);
    let ideals = enumerate_ideals(&s, 0, s.frobenius() + 6);
    let mut n = 0;
    for e in &ideals {
        for f in &ideals {
            let (a, b) = (e.generators(), f.generators());
            let ok = e.sum(f).is_ok_and(|x| x.generators() == oracle::sum(&s, a, b))
                && e.mul(f).is_ok_and(|x| x.generators() == oracle::mul(&s, a, b))
                && e.intersect(f).is_ok_and(|x| x.generators() == oracle::intersect(&s, a, b))
                && e.colon(f).is_ok_and(|x| x.generators() == oracle::colon(&s, a, b));
            if !ok {
                return Err(format!("{gens:?}: {e} and {f}"));
            }
            n += 1;
        }
    }
    Ok(n)
}

fn leveled() -> Result<usize, String> {
    let domains = [
        pullback(quadratic_rationals(), ValueGroup::Integers),
        pullback(quadratic_rationals(), ValueGroup::Rationals),
        pullback(f4(), ValueGroup::Integers),
        pullback(f4(), ValueGroup::Rationals),
    ];
    let mut cases = 0usize;
    for (i, d) in domains.iter().enumerate() {
        let Family::Pullback(p) = d.family() else { unreachable!() };
        let field = d.field();
        let mut s = Sampler::new(d, &SampleSpec::default().with_seed(i as u64));
        for _ in 0..125 {
            let gens: Vec<Generator> = (0..1 + cases % 3).map(|_| s.monomial()).collect();
            let m = LeveledModule::from_generators(p.clone(), &gens).map_err(|e| e.to_string())?;
            let mut x = Expansion::zero();
            for g in &gens {
                let mut c = s.monomial();
                if !c.level.is_positive() {
                    c = Generator::new(field.from_i64(1 + cases as i64 % 2), p.group().zero());
                }
                x = x.add(&field, &Expansion::monomial(&field, g).mul(&field, &Expansion::monomial(&field, &c)));
            }
            if cases.is_multiple_of(2) {
                x = x.add(&field, &Expansion::monomial(&field, &s.monomial()));
            }
            if m.contains(&x) != reduces_to_zero(&field, &gens, &x) {
                return Err(format!("membership of {x:?} in {m}"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn oracles() -> Outcome {
    let mut pairs = 0;
    for gens in [&[3u64, 4, 5][..], &[2, 3], &[4, 6, 9]] {
        pairs += exhaustive(gens)?;
    }
    let cases = leveled()?;
    Ok(format!("{pairs} ideal pairs, {cases} membership cases"))
}

fn suite() -> Outcome {
    let spec = SampleSpec::default().with_count(40);
    let results = per_instance(|inst| {
        let d: &Arc<DomainHandle> = &inst.domain;
        let mut n = 0usize;
        for op in operations(d) {
            let lines = theorem_suite(d, &op, &spec);
            if let Some(bad) = lines.iter().find(|l| l.status == LineStatus::Fail) {
                return Err(format!("{} {op}: {bad}", inst.name));
            }
            let clauses = h_clauses(d, &op).map_err(|e| format!("{} {op}: {e}", inst.name))?;
            clauses_agree(&clauses).map_err(|e| format!("{} {op}: {e}", inst.name))?;
            n += lines.len();
        }
        Ok(n.to_string())
    });
    summarize(results, "suite lines")
}

fn cli_dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn golden_matches(name: &str, args: &[String]) -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_semistar")).args(args).output().map_err(|e| e.to_string())?;
    let want = fs::read(cli_dir("golden").join(name)).map_err(|e| format!("{name}: {e}"))?;
    if out.stdout == want {
        Ok(())
    } else {
        Err(format!("{name} differs"))
    }
}

fn goldens() -> Outcome {
    let mut n = 0;
    let mut doms: Vec<PathBuf> = fs::read_dir(cli_dir("corpus"))
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "dom"))
        .collect();
    doms.sort();
    for dom in &doms {
        let stem = dom.file_stem().unwrap_or_default().to_string_lossy().to_string();
        let list = fs::read_to_string(dom.with_extension("exprs")).map_err(|e| e.to_string())?;
        let mut args = vec!["--domain".to_string(), dom.display().to_string()];
        for l in list.lines().filter(|l| !l.trim().is_empty()) {
            args.extend(["--expr".to_string(), l.to_string()]);
        }
        for (fmt, ext) in [("text", "txt"), ("json", "json")] {
            let mut a = args.clone();
            a.extend(["--format".to_string(), fmt.to_string()]);
            golden_matches(&format!("exprs-{stem}.{ext}"), &a)?;
            n += 1;
        }
    }
    for (fmt, ext) in [("text", "txt"), ("json", "json")] {
        let args: Vec<String> = ["--scenario", "all", "--seed", "0", "--format", fmt].iter().map(|s| s.to_string()).collect();
        golden_matches(&format!("scenarios.{ext}"), &args)?;
        n += 1;
    }
    Ok(format!("{n} golden files"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "numsgr-345", limit: Some(Duration::from_secs(1)), run: || scenario("numsgr-345") },
        Criterion { id: 2, name: "coherent-3.18", limit: Some(Duration::from_secs(5)), run: || scenario("coherent-3.18") },
        Criterion { id: 3, name: "pvd-2.6", limit: Some(Duration::from_secs(1)), run: || scenario("pvd-2.6") },
        Criterion { id: 4, name: "valuation-H-4.4", limit: Some(Duration::from_secs(2)), run: || scenario("valuation-H-4.4") },
        Criterion { id: 5, name: "semistar laws and basic formulas", limit: Some(Duration::from_secs(60)), run: axioms },
        Criterion { id: 6, name: "((E+F)(E&F))^tilde = (EF)^tilde", limit: None, run: tilde_identity },
        Criterion { id: 7, name: "oracle equivalence", limit: Some(Duration::from_secs(120)), run: oracles },
        Criterion { id: 8, name: "theorem suite implications", limit: None, run: suite },
        Criterion { id: 9, name: "CLI golden files", limit: None, run: goldens },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let r = (c.run)();
        let took = start.elapsed();
        let r = match (r, c.limit) {
            (Ok(_), Some(l)) if took > l => Err(format!("took {:.2}s, limit {}s", took.as_secs_f32(), l.as_secs())),
            (r, _) => r,
        };
        let (tag, detail) = match &r {
            Ok(d) => ("PASS", d.as_str()),
            Err(e) => ("FAIL", e.as_str()),
        };
        failed += r.is_err() as usize;
        println!("{tag} {}. {}: {detail} ({:.2}s)", c.id, c.name, took.as_secs_f32());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
