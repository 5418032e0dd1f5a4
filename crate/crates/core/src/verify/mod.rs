//! Registry of named reproduction checks and the report they produce.
//!
//! Each case is a function of the working order. Golden comparisons ignore
//! the order and use the size of the stored display. Cases run on separate
//! threads; the report is sorted by id.

mod cases;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Result;
use crate::matrix::EntryDiff;

pub const DEFAULT_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail {
        check: String,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        diff: Option<EntryDiff>,
    },
    /// Evidence only: every row below `up_to` agreed.
    ConjectureVerified {
        up_to: usize,
    },
    ConjectureRefuted {
        n: usize,
        generated: String,
        conjectured: String,
    },
    /// A printed statement fails while its corrected form holds.
    Erratum {
        note: String,
    },
    Error {
        message: String,
    },
}

impl Outcome {
    /// Conjecture outcomes and errata never fail a run.
    pub fn is_failure(&self) -> bool {
        matches!(self, Outcome::Fail { .. } | Outcome::Error { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail { .. } => "FAIL",
            Outcome::ConjectureVerified { .. } => "CONJECTURE",
            Outcome::ConjectureRefuted { .. } => "CONJECTURE-REFUTED",
            Outcome::Erratum { .. } => "ERRATUM",
            Outcome::Error { .. } => "ERROR",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => write!(f, "pass"),
            Outcome::Fail {
                check,
                diff: Some(d),
            } => write!(f, "{check}: {d}"),
            Outcome::Fail { check, diff: None } => write!(f, "{check}"),
            Outcome::ConjectureVerified { up_to } => {
                write!(
                    f,
                    "conjecture verified to n={}, not proved",
                    up_to.saturating_sub(1)
                )
            }
            Outcome::ConjectureRefuted {
                n,
                generated,
                conjectured,
            } => write!(
                f,
                "row {n}: generated {generated}, conjectured {conjectured}"
            ),
            Outcome::Erratum { note } => write!(f, "{note}"),
            Outcome::Error { message } => write!(f, "{message}"),
        }
    }
}

/// A registered check.
pub struct Case {
    pub id: &'static str,
    pub topic: &'static str,
    pub description: &'static str,
    run: fn(usize) -> Result<Outcome>,
}

impl Case {
    pub fn run(&self, order: usize) -> CaseReport {
        let outcome = (self.run)(order).unwrap_or_else(|e| Outcome::Error {
            message: e.to_string(),
        });
        CaseReport {
            id: self.id.to_string(),
            topic: self.topic.to_string(),
            description: self.description.to_string(),
            outcome,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub id: String,
    pub topic: String,
    pub description: String,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errata: usize,
    pub conjectures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub order: usize,
    pub success: bool,
    pub summary: Summary,
    pub cases: Vec<CaseReport>,
}

impl VerifyReport {
    fn new(order: usize, mut cases: Vec<CaseReport>) -> Self {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        let count = |p: fn(&Outcome) -> bool| cases.iter().filter(|c| p(&c.outcome)).count();
        let summary = Summary {
            total: cases.len(),
            passed: count(|o| matches!(o, Outcome::Pass)),
            failed: count(Outcome::is_failure),
            errata: count(|o| matches!(o, Outcome::Erratum { .. })),
            conjectures: count(|o| {
                matches!(
                    o,
                    Outcome::ConjectureVerified { .. } | Outcome::ConjectureRefuted { .. }
                )
            }),
        };
        VerifyReport {
            order,
            success: summary.failed == 0,
            summary,
            cases,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.cases.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.cases {
            write!(f, "{:<18} {:<width$}  ", c.outcome.label(), c.id)?;
            match c.outcome {
                Outcome::Pass => writeln!(f, "{}", c.description)?,
                _ => writeln!(f, "{}: {}", c.description, c.outcome)?,
            }
        }
        let s = &self.summary;
        writeln!(
            f,
            "{} cases: {} passed, {} failed, {} errata, {} conjectures (order {})",
            s.total, s.passed, s.failed, s.errata, s.conjectures, self.order
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown case `{id}`; available: {}", available.join(", "))]
pub struct UnknownCase {
    pub id: String,
    pub available: Vec<&'static str>,
}

/// Every case, sorted by id.
pub fn registry() -> &'static [Case] {
    cases::cases()
}

pub fn case_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

fn run_cases(selected: &[&Case], order: usize) -> VerifyReport {
    let results = std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|case| scope.spawn(move || case.run(order)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verify case panicked"))
            .collect()
    });
    VerifyReport::new(order, results)
}

pub fn run_all(order: usize) -> VerifyReport {
    run_cases(&registry().iter().collect::<Vec<_>>(), order)
}

/// `id` is a case id or `all`.
pub fn run(id: &str, order: usize) -> std::result::Result<VerifyReport, UnknownCase> {
    if id == "all" {
        return Ok(run_all(order));
    }
    match registry().iter().find(|c| c.id == id) {
        Some(case) => Ok(run_cases(&[case], order)),
        None => Err(UnknownCase {
            id: id.to_string(),
            available: case_ids(),
        }),
    }
}
