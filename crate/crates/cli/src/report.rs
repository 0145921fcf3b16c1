use serde::Serialize;
use serde_json::Value;

use crate::{Mode, RunConfig, EXIT_PASS, EXIT_VIOLATION};

/// Fields holding wall-clock measurements; excluded from determinism.
pub const TIMING_FIELDS: &[&str] = &["elapsed_us"];

#[derive(Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: RunConfig,
    pub trials: Vec<TrialRecord>,
    pub summary: Summary,
    pub elapsed_us: u128,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.summary.failed == 0 {
            EXIT_PASS
        } else {
            EXIT_VIOLATION
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TrialRecord {
    pub index: usize,
    /// `"generated"` or the input file path.
    pub source: String,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
    pub elapsed_us: u128,
}

#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub suite: Mode,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub details: Value,
}

#[derive(Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub trials: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Removes every timing field, at any depth.
pub fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            for f in TIMING_FIELDS {
                map.remove(*f);
            }
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}
