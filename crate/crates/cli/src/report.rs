use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportLine {
    pub scenario: String,
    pub anchor: String,
    pub expr_or_predicate: String,
    pub expected: String,
    pub actual: String,
    pub outcome: String,
}

impl ReportLine {
    pub fn passed(&self) -> bool {
        self.outcome == "PASS"
    }
}

/// One verdict of a domain level check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictRecord {
    pub instance: String,
    pub op: String,
    pub check: String,
    pub anchor: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

pub fn to_json<T: Serialize>(rows: &[T]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("plain data");
    s.push('\n');
    s
}

pub fn lines_text(lines: &[ReportLine]) -> String {
    let mut s = String::new();
    for l in lines {
        s.push_str(&format!(
            "{} {} [{}] {}\n    expected: {}\n    actual:   {}\n",
            l.outcome, l.scenario, l.anchor, l.expr_or_predicate, l.expected, l.actual
        ));
    }
    let failed = lines.iter().filter(|l| !l.passed()).count();
    s.push_str(&format!("{} assertions, {} failed\n", lines.len(), failed));
    s
}

pub fn verdicts_text(rows: &[VerdictRecord]) -> String {
    let mut s = String::new();
    for r in rows {
        s.push_str(&format!("{} {} {}: {}", r.instance, r.op, r.check, r.outcome));
        if !r.anchor.is_empty() {
            s.push_str(&format!(" [{}]", r.anchor));
        }
        if let Some(w) = &r.witness {
            s.push_str(&format!(" witness {w}"));
        }
        if let Some(n) = r.samples {
            s.push_str(&format!(" samples {n}"));
        }
        s.push('\n');
    }
    s
}

/// One evaluated expression.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExprRecord {
    pub domain: String,
    pub expr: String,
    pub parsed: String,
    pub value: String,
    pub outcome: String,
}

pub fn exprs_text(rows: &[ExprRecord]) -> String {
    let mut s = String::new();
    for r in rows {
        if r.outcome == "ok" {
            s.push_str(&format!("{} = {}\n", r.parsed, r.value));
        } else {
            s.push_str(&format!("{}: {}\n", r.expr, r.value));
        }
    }
    s
}

/// One line of the theorem suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteRecord {
    pub instance: String,
    pub op: String,
    pub anchor: String,
    pub statement: String,
    pub premise: String,
    pub conclusion: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}
