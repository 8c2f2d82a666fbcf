//! Byte-for-byte comparison against the files in tests/golden.
//! Regenerate with `UPDATE_GOLDEN=1 cargo test -p semistar --test golden`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn semistar(args: &[String]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_semistar")).args(args).output().expect("binary runs");
    (String::from_utf8(out.stdout).expect("utf-8"), out.status.code().unwrap_or(-1))
}

fn strs(a: &[&str]) -> Vec<String> {
    a.iter().map(|s| s.to_string()).collect()
}

fn compare(name: &str, actual: &str) -> Result<(), String> {
    let path = dir("golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).unwrap();
        return Ok(());
    }
    let want = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if want == actual {
        return Ok(());
    }
    let line = want.lines().zip(actual.lines()).position(|(a, b)| a != b).unwrap_or(want.lines().count().min(actual.lines().count()));
    Err(format!("{name} differs from the golden file at line {}", line + 1))
}

fn domains() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = fs::read_dir(dir("corpus"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "dom"))
        .collect();
    v.sort();
    v
}

fn expr_args(dom: &Path) -> Vec<String> {
    let list = fs::read_to_string(dom.with_extension("exprs")).unwrap();
    let mut args = vec!["--domain".to_string(), dom.display().to_string()];
    for l in list.lines().filter(|l| !l.trim().is_empty()) {
        args.push("--expr".into());
        args.push(l.into());
    }
    args
}

#[test]
fn expression_corpus() {
    let mut errors = Vec::new();
    for dom in domains() {
        let stem = dom.file_stem().unwrap().to_string_lossy().to_string();
        for (fmt, ext) in [("text", "txt"), ("json", "json")] {
            let mut args = expr_args(&dom);
            args.extend(strs(&["--format", fmt]));
            let (out, code) = semistar(&args);
            let want_code = if stem.ends_with("-errors") { 1 } else { 0 };
            if code != want_code {
                errors.push(format!("{stem}: exit code {code}, expected {want_code}"));
            }
            if let Err(e) = compare(&format!("exprs-{stem}.{ext}"), &out) {
                errors.push(e);
            }
        }
    }
    assert!(errors.is_empty(), "{}", errors.join("\n"));
}

#[test]
fn scenarios_at_seed_zero() {
    for (fmt, ext) in [("text", "txt"), ("json", "json")] {
        let (out, code) = semistar(&strs(&["--scenario", "all", "--seed", "0", "--format", fmt]));
        assert_eq!(code, 0, "{out}");
        compare(&format!("scenarios.{ext}"), &out).unwrap();
    }
}

#[test]
fn domain_checks() {
    let cases = [("pullback_q", "st[V]"), ("pvd_z", "desc[V](d)"), ("valuation_q", "v"), ("numsgr345", "v")];
    for (stem, op) in cases {
        let dom = dir("corpus").join(format!("{stem}.dom")).display().to_string();
        let args = strs(&["--domain", &dom, "--op", op, "--check", "all", "--format", "json"]);
        let (out, code) = semistar(&args);
        assert_eq!(code, 0, "{out}");
        compare(&format!("checks-{stem}.json"), &out).unwrap();
    }
}

#[test]
fn reports_are_deterministic_and_written() {
    let path = std::env::temp_dir().join(format!("semistar-report-{}.json", std::process::id()));
    let args = strs(&["--scenario", "coherent-3.18", "--format", "json", "--report", &path.display().to_string()]);
    let (a, code) = semistar(&args);
    let (b, _) = semistar(&args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    assert_eq!(fs::read_to_string(&path).unwrap(), a);
    let _ = fs::remove_file(path);
}

#[test]
fn exit_codes() {
    assert_eq!(semistar(&strs(&["--scenario", "no-such"])).1, 2);
    assert_eq!(semistar(&strs(&["--domain", "family=numsgr generators=[4,6]", "--expr", "D"])).1, 2);
    assert_eq!(semistar(&strs(&["--domain", "family=numsgr generators=[2,3]", "--expr", "<x^"])).1, 1);
    assert_eq!(semistar(&strs(&["--domain", "family=numsgr generators=[2,3]", "--expr", "M"])).1, 0);
    assert_ne!(semistar(&strs(&[])).1, 0);
}
