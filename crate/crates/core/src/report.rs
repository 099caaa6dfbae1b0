//! Check reports as JSON Lines, with a closing summary object.
//!
//! Reports serialize with sorted keys. In canonical mode the timing field is
//! left out, so repeated runs with the same seeds give identical bytes.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct CheckReport {
    pub check_id: String,
    pub family: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    #[serde(default)]
    pub witnesses: Vec<String>,
}

/// What a check found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    pub expected: String,
    pub actual: String,
    pub witnesses: Vec<String>,
}

impl Outcome {
    /// Passes iff `expected == actual`.
    pub fn compare(expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Outcome { passed: expected == actual, expected, actual, witnesses: Vec::new() }
    }

    pub fn new(passed: bool, expected: impl Into<String>, actual: impl Into<String>, witnesses: Vec<String>) -> Self {
        Outcome { passed, expected: expected.into(), actual: actual.into(), witnesses }
    }
}

impl CheckReport {
    pub fn new(check_id: impl Into<String>, family: impl Into<String>) -> Self {
        CheckReport {
            check_id: check_id.into(),
            family: family.into(),
            params: BTreeMap::new(),
            status: Status::Error,
            expected: String::new(),
            actual: String::new(),
            seed: 0,
            elapsed_ms: None,
            witnesses: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.into(), value.into());
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Runs `f`, records its outcome (or error) and the elapsed time.
    pub fn run(mut self, f: impl FnOnce() -> crate::error::Result<Outcome>) -> Self {
        let start = Instant::now();
        let result = f();
        self.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        match result {
            Ok(o) => {
                self.status = if o.passed { Status::Pass } else { Status::Fail };
                self.expected = o.expected;
                self.actual = o.actual;
                self.witnesses = if o.passed {
                    Vec::new()
                } else if o.witnesses.is_empty() {
                    vec![format!("expected {}, got {}", self.expected, self.actual)]
                } else {
                    o.witnesses
                };
            }
            Err(e) => self.set_error(&e),
        }
        self
    }

    pub fn set_error(&mut self, e: &Error) {
        self.status = Status::Error;
        self.actual = e.to_string();
        self.witnesses.clear();
    }

    pub fn to_json(&self, canonical: bool) -> String {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        if canonical {
            if let Value::Object(map) = &mut v {
                map.remove("elapsed-ms");
            }
        }
        v.to_string()
    }

    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        let mut s = format!("{status:5} {} {}: expected {}, actual {}", self.check_id, self.family, self.expected, self.actual);
        for w in &self.witnesses {
            s.push_str("\n      witness: ");
            s.push_str(w);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub summary: bool,
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let count = |s| reports.iter().filter(|r| r.status == s).count();
        Summary {
            summary: true,
            total: reports.len(),
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            error: count(Status::Error),
        }
    }

    /// 0 when everything passed, 1 when some check failed, 2 on any error.
    pub fn exit_code(&self) -> i32 {
        if self.error > 0 {
            2
        } else if self.fail > 0 {
            1
        } else {
            0
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> crate::error::Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "text" => Ok(OutputFormat::Text),
            _ => Err(Error::Parse(format!("unknown output format {s:?}"))),
        }
    }
}

/// All reports followed by the summary, one per line.
pub fn render(reports: &[CheckReport], format: OutputFormat, canonical: bool) -> String {
    let summary = Summary::of(reports);
    let mut out = String::new();
    for r in reports {
        out.push_str(&match format {
            OutputFormat::Json => r.to_json(canonical),
            OutputFormat::Text => r.to_text(),
        });
        out.push('\n');
    }
    out.push_str(&match format {
        OutputFormat::Json => serde_json::to_string(&summary).expect("summary serializes"),
        OutputFormat::Text => format!(
            "{} checks: {} pass, {} fail, {} error",
            summary.total, summary.pass, summary.fail, summary.error
        ),
    });
    out.push('\n');
    out
}
