use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, ValueEnum};
use semistar::domain::parse_domain;
use semistar::expr::{eval, parse_expr, print_expr};
use semistar::report::{
    exprs_text, lines_text, to_json, verdicts_text, ExprRecord, SuiteRecord, VerdictRecord,
};
use semistar::scenario::run_scenarios;
use semistar::syntax::parse_op;
use semistar_core::classify::replay::{run_and_replay, Check};
use semistar_core::classify::suite::{suite_passes, theorem_suite, LineStatus};
use semistar_core::classify::{SampleSpec, Verdict};
use semistar_core::semistar::DomainHandle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exact semistar operations on numerical semigroup rings, D + M pullbacks
/// and valuation domains.
#[derive(Debug, Parser)]
#[command(name = "semistar", version)]
struct Args {
    /// Domain file (key=value pairs); inline text is accepted too.
    #[arg(long)]
    domain: Option<String>,
    /// Expression to evaluate in the domain; repeatable.
    #[arg(long)]
    expr: Vec<String>,
    /// Scenario name, or `all`; repeatable.
    #[arg(long)]
    scenario: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sampled inputs per randomized check.
    #[arg(long)]
    samples: Option<usize>,
    /// Maximal number of generators of a sampled ideal.
    #[arg(long)]
    bound: Option<usize>,
    /// Operation term for --check and --suite.
    #[arg(long, default_value = "v")]
    op: String,
    /// Domain level check to decide, e.g. pstarmd or truly-coherent; repeatable, or `all`.
    #[arg(long)]
    check: Vec<String>,
    /// Run the theorem suite for --op on the domain.
    #[arg(long)]
    suite: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write the report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
}

fn load_domain(arg: &str) -> Result<Arc<DomainHandle>, String> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?
    } else if arg.contains('=') {
        arg.to_string()
    } else {
        return Err(format!("{arg}: no such domain file"));
    };
    parse_domain(&text).map_err(|e| format!("{arg}:{e}"))
}

fn exprs(d: &Arc<DomainHandle>, list: &[String]) -> (Vec<ExprRecord>, bool) {
    let mut ok = true;
    let rows = list
        .iter()
        .map(|src| {
            let mut r = ExprRecord {
                domain: d.describe(),
                expr: src.clone(),
                parsed: String::new(),
                value: String::new(),
                outcome: "ok".into(),
            };
            match parse_expr(src, d) {
                Err(e) => {
                    ok = false;
                    r.outcome = "parse error".into();
                    r.value = e.to_string();
                }
                Ok(ast) => {
                    r.parsed = print_expr(&ast, d);
                    match eval(&ast, d) {
                        Ok(v) => r.value = v.to_expr(),
                        Err(e) => {
                            ok = false;
                            r.outcome = "evaluation error".into();
                            r.value = e.to_string();
                        }
                    }
                }
            }
            r
        })
        .collect();
    (rows, ok)
}

fn checks(d: &Arc<DomainHandle>, args: &Args, spec: &SampleSpec) -> Result<Vec<VerdictRecord>, String> {
    let op = parse_op(&args.op).map_err(|e| format!("--op {e}"))?;
    let list: Vec<Check> = if args.check.iter().any(|c| c == "all") {
        Check::ALL.to_vec()
    } else {
        args.check
            .iter()
            .map(|c| {
                Check::parse(c).ok_or_else(|| {
                    let names: Vec<&str> = Check::ALL.iter().map(Check::name).collect();
                    format!("unknown check '{c}', expected one of {}", names.join(", "))
                })
            })
            .collect::<Result<_, _>>()?
    };
    list.into_iter()
        .map(|c| {
            let v = run_and_replay(c, d, &op, spec).map_err(|e| format!("{c}: {e}"))?;
            let mut rec = VerdictRecord {
                instance: d.describe(),
                op: op.to_term(),
                check: c.name().into(),
                anchor: String::new(),
                outcome: v.outcome().name().into(),
                witness: None,
                samples: None,
            };
            match &v {
                Verdict::Holds(r) => rec.anchor = r.anchor.clone(),
                Verdict::Refuted(w) => rec.witness = Some(w.to_string()),
                Verdict::Unknown(s) => rec.samples = Some(s.count),
            }
            Ok(rec)
        })
        .collect()
}

fn suite(d: &Arc<DomainHandle>, args: &Args, spec: &SampleSpec) -> Result<(Vec<SuiteRecord>, bool), String> {
    let op = parse_op(&args.op).map_err(|e| format!("--op {e}"))?;
    let lines = theorem_suite(d, &op, spec);
    let pass = suite_passes(&lines);
    let rows = lines
        .into_iter()
        .map(|l| SuiteRecord {
            instance: d.describe(),
            op: op.to_term(),
            anchor: l.anchor.into(),
            statement: l.statement,
            premise: l.premise.name().into(),
            conclusion: l.conclusion.name().into(),
            outcome: l.status.name().into(),
            note: l.note,
        })
        .collect();
    Ok((rows, pass))
}

fn suite_text(rows: &[SuiteRecord]) -> String {
    let mut s = String::new();
    for r in rows {
        s.push_str(&format!("{} [{}] {}: {} / {}", r.outcome, r.anchor, r.statement, r.premise, r.conclusion));
        if !r.note.is_empty() {
            s.push_str(&format!(" ({})", r.note));
        }
        s.push('\n');
    }
    let failed = rows.iter().filter(|r| r.outcome == LineStatus::Fail.name()).count();
    s.push_str(&format!("{} lines, {} failed\n", rows.len(), failed));
    s
}

/// Produces the report and whether everything passed.
fn execute(args: &Args) -> Result<(String, bool), String> {
    let mut spec = SampleSpec::default().with_seed(args.seed);
    if let Some(n) = args.samples {
        spec = spec.with_count(n);
    }
    if let Some(b) = args.bound {
        if b == 0 {
            return Err("--bound must be positive".into());
        }
        spec.generator_bound = b;
    }
    let json = args.format == Format::Json;
    if !args.scenario.is_empty() {
        if args.domain.is_some() || !args.expr.is_empty() {
            return Err("--scenario cannot be combined with --domain or --expr".into());
        }
        let names: Vec<&str> = args.scenario.iter().map(String::as_str).collect();
        let lines = run_scenarios(&names, &spec)?;
        let pass = lines.iter().all(|l| l.passed());
        return Ok((if json { to_json(&lines) } else { lines_text(&lines) }, pass));
    }
    let Some(src) = &args.domain else {
        return Err("nothing to do: give --scenario, or --domain with --expr, --check or --suite".into());
    };
    let d = load_domain(src)?;
    if !args.expr.is_empty() {
        let (rows, ok) = exprs(&d, &args.expr);
        return Ok((if json { to_json(&rows) } else { exprs_text(&rows) }, ok));
    }
    if !args.check.is_empty() {
        let rows = checks(&d, args, &spec)?;
        return Ok((if json { to_json(&rows) } else { verdicts_text(&rows) }, true));
    }
    if args.suite {
        let (rows, pass) = suite(&d, args, &spec)?;
        return Ok((if json { to_json(&rows) } else { suite_text(&rows) }, pass));
    }
    Ok((format!("{}\n", d.describe()), true))
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok((out, pass)) => {
            print!("{out}");
            if let Some(path) = &args.report {
                if let Err(e) = std::fs::write(path, &out) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
