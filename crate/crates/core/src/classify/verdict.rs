use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::semistar::{IdealHandle, PrimeTag};

/// Why a property holds: a theorem tag and a short formula anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reason {
    pub theorem: String,
    pub anchor: String,
}

impl Reason {
    pub fn new(theorem: &str, anchor: &str) -> Reason {
        Reason { theorem: theorem.into(), anchor: anchor.into() }
    }

    /// Every module class up to monomial scaling was checked.
    pub fn exhaustive(detail: String) -> Reason {
        Reason { theorem: format!("exhaustive over {detail}"), anchor: "module-classes".into() }
    }
}

/// The data behind a refutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Ideal(IdealHandle),
    Pair(IdealHandle, IdealHandle),
    Triple(IdealHandle, IdealHandle, IdealHandle),
    Chain(Vec<IdealHandle>),
    Prime(PrimeTag),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Ideal(i) => write!(f, "{i}"),
            Witness::Pair(a, b) => write!(f, "({a}, {b})"),
            Witness::Triple(a, b, c) => write!(f, "({a}, {b}, {c})"),
            Witness::Chain(c) => {
                let parts: Vec<String> = c.iter().map(|i| i.to_expr()).collect();
                write!(f, "{}", parts.join(" < "))
            }
            Witness::Prime(p) => f.write_str(p.name()),
        }
    }
}

/// How an inconclusive answer was reached, enough to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleReport {
    pub count: usize,
    pub seed: u64,
    pub generator_bound: usize,
    pub denominator_bound: u64,
    pub window: i64,
    pub note: String,
}

impl SampleReport {
    /// A deterministic sweep over `n` class representatives.
    pub fn universe(n: usize) -> SampleReport {
        SampleReport {
            count: n,
            seed: 0,
            generator_bound: 0,
            denominator_bound: 0,
            window: 0,
            note: "class representatives".into(),
        }
    }

    pub fn with_note(mut self, note: &str) -> SampleReport {
        self.note = note.into();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Verdict {
    Holds(Reason),
    Refuted(Witness),
    Unknown(SampleReport),
}

impl Verdict {
    pub fn is_holds(&self) -> bool {
        matches!(self, Verdict::Holds(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }

    pub fn outcome(&self) -> Outcome {
        match self {
            Verdict::Holds(_) => Outcome::Holds,
            Verdict::Refuted(_) => Outcome::Refuted,
            Verdict::Unknown(_) => Outcome::Unknown,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Refuted(w) => Some(w),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds(r) => write!(f, "Holds[{}]", r.anchor),
            Verdict::Refuted(w) => write!(f, "Refuted[{w}]"),
            Verdict::Unknown(s) => write!(f, "Unknown[{} {}]", s.count, s.note),
        }
    }
}

/// Three valued truth, used when combining verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    Holds,
    Refuted,
    Unknown,
}

impl Outcome {
    pub fn and(self, o: Outcome) -> Outcome {
        match (self, o) {
            (Outcome::Refuted, _) | (_, Outcome::Refuted) => Outcome::Refuted,
            (Outcome::Holds, Outcome::Holds) => Outcome::Holds,
            _ => Outcome::Unknown,
        }
    }

    pub fn or(self, o: Outcome) -> Outcome {
        match (self, o) {
            (Outcome::Holds, _) | (_, Outcome::Holds) => Outcome::Holds,
            (Outcome::Refuted, Outcome::Refuted) => Outcome::Refuted,
            _ => Outcome::Unknown,
        }
    }

    /// Both decided: equal. Otherwise unknown.
    pub fn iff(self, o: Outcome) -> Outcome {
        match (self, o) {
            (Outcome::Unknown, _) | (_, Outcome::Unknown) => Outcome::Unknown,
            (a, b) => Outcome::from_bool(a == b),
        }
    }

    pub fn from_bool(b: bool) -> Outcome {
        if b {
            Outcome::Holds
        } else {
            Outcome::Refuted
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Outcome::Holds => "Holds",
            Outcome::Refuted => "Refuted",
            Outcome::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.theorem, self.anchor)
    }
}
