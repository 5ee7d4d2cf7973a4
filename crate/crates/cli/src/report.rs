use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::config::RunConfig;

/// Version of the report layout. Bump on any incompatible change.
pub const SCHEMA_VERSION: u32 = 1;

/// One checked instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub input: Value,
    /// `true` when the checked property holds.
    pub verdict: bool,
    /// The data that shows a failure: the computed values next to the expected ones.
    pub witness: Option<Value>,
}

impl Case {
    pub fn pass(id: impl Into<String>, input: Value) -> Self {
        Case {
            id: id.into(),
            input,
            verdict: true,
            witness: None,
        }
    }

    pub fn check(id: impl Into<String>, input: Value, ok: bool, witness: Value) -> Self {
        Case {
            id: id.into(),
            input,
            verdict: ok,
            witness: if ok { None } else { Some(witness) },
        }
    }

    /// A case whose computation itself failed.
    pub fn error(id: impl Into<String>, input: Value, err: &qcanon_core::Error) -> Self {
        Case {
            id: id.into(),
            input,
            verdict: false,
            witness: Some(serde_json::json!({ "error": err.to_string() })),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Deterministic output of one command at one rank.
///
/// Contains no timings, paths or cache statistics, so reruns with the same
/// configuration and seed serialize to identical bytes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    pub suite: String,
    pub config: Value,
    pub notes: Vec<String>,
    pub summary: Summary,
    /// Suite-specific records that are reported but not asserted.
    pub data: Value,
    pub cases: Vec<Case>,
}

impl Report {
    pub fn new(suite: &str, cfg: &RunConfig) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            suite: suite.to_string(),
            config: serde_json::to_value(cfg).expect("config serializes"),
            notes: Vec::new(),
            summary: Summary::default(),
            data: Value::Object(Default::default()),
            cases: Vec::new(),
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn set_data(&mut self, key: &str, v: Value) {
        if let Value::Object(m) = &mut self.data {
            m.insert(key.to_string(), v);
        }
    }

    pub fn extend(&mut self, cases: impl IntoIterator<Item = Case>) {
        for c in cases {
            self.summary.cases += 1;
            if c.verdict {
                self.summary.passed += 1;
            } else {
                self.summary.failed += 1;
            }
            self.cases.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.verdict)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Several reports written as one document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Battery {
    pub schema_version: u32,
    pub reports: Vec<Report>,
}

impl Battery {
    pub fn new(reports: Vec<Report>) -> Self {
        Battery {
            schema_version: SCHEMA_VERSION,
            reports,
        }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
