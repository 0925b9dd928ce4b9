//! Structured verdicts for sampled property checks.
//!
//! Every verifier in the crate reports through [`PropertyVerdict`]: a pass/fail
//! flag, how many checks ran, and the concrete witnesses for anything that
//! failed. Verdicts serialize to JSON with a `violations` array of
//! `{point, lhs, rhs}` objects.

use serde::{Deserialize, Serialize};

/// One concrete counterexample found by a sampled check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    /// Which condition failed (e.g. `"upper-bound"`, `"triangle"`).
    pub what: String,
    /// The sample where it failed (coordinates, indices, or grid values).
    pub point: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
}

impl Violation {
    pub fn new(what: impl Into<String>, point: Vec<f64>, lhs: f64, rhs: f64) -> Self {
        Self {
            what: what.into(),
            point,
            lhs,
            rhs,
        }
    }
}

/// Outcome of checking a property over a sample set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PropertyVerdict {
    pub passed: bool,
    /// Number of individual comparisons performed.
    pub checked: usize,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PropertyVerdict {
    pub fn from_violations(checked: usize, violations: Vec<Violation>) -> Self {
        Self {
            passed: violations.is_empty(),
            checked,
            violations,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}
