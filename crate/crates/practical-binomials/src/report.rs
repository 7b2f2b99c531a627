//! Serializable report types shared by the scans, the verification suites,
//! and the command-line surface. Every JSON document carries a top-level
//! `schema` version so downstream scripts can detect format changes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Version stamp on every JSON document this crate emits.
pub const SCHEMA_VERSION: u32 = 1;

/// Outcome of a range scan: the exceptions found, how each verdict was
/// reached, and timing. The method counts always sum to the range size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub schema: u32,
    pub command: String,
    /// Inclusive scan range [lo, hi].
    pub range: [u64; 2],
    /// Sorted ascending, no duplicates.
    pub exceptions: Vec<u64>,
    /// Verdicts per decision stage.
    pub counts: BTreeMap<String, u64>,
    /// Fraction of verdicts settled without the full factorization.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fast_path_hit_rate: Option<f64>,
    pub elapsed_ms: u64,
    /// Echo of the mathematical inputs.
    pub parameters: serde_json::Value,
}

impl ScanReport {
    /// The report with timing zeroed: scans are deterministic in everything
    /// but wall-clock, so this is the form to compare across runs.
    pub fn normalized(&self) -> ScanReport {
        ScanReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

/// Count of n <= limit violating a digit-statistic threshold, with the
/// proof-visible envelope for comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExceptionCountReport {
    /// Which statistic: "tp" (row divisibility count) or "beta"
    /// (central valuation).
    pub statistic: String,
    pub p: u64,
    pub epsilon: f64,
    pub limit: u64,
    pub count: u64,
    pub bound: f64,
}

impl ExceptionCountReport {
    pub fn within_bound(&self) -> bool {
        (self.count as f64) < self.bound
    }
}

/// One named assertion inside a verification suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Result of running a verification suite: hard checks plus report-grade
/// measurements that carry no pass/fail meaning.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    pub measurements: serde_json::Value,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn new(suite: &str) -> Self {
        VerifyReport {
            schema: SCHEMA_VERSION,
            suite: suite.to_string(),
            passed: true,
            checks: Vec::new(),
            measurements: serde_json::Value::Object(Default::default()),
            elapsed_ms: 0,
        }
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: String) {
        self.passed &= passed;
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed,
            detail,
        });
    }

    pub fn measure(&mut self, key: &str, value: serde_json::Value) {
        if let serde_json::Value::Object(map) = &mut self.measurements {
            map.insert(key.to_string(), value);
        }
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.passed &= other.passed;
        self.checks.extend(other.checks);
        if let (serde_json::Value::Object(mine), serde_json::Value::Object(theirs)) =
            (&mut self.measurements, other.measurements)
        {
            for (k, v) in theirs {
                mine.insert(format!("{}.{}", other.suite, k), v);
            }
        }
    }
}

/// Wraps a command payload in the stable top-level envelope.
pub fn envelope(command: &str, payload: serde_json::Value) -> serde_json::Value {
    let mut object = serde_json::Map::new();
    object.insert("schema".into(), SCHEMA_VERSION.into());
    object.insert("command".into(), command.into());
    if let serde_json::Value::Object(map) = payload {
        for (k, v) in map {
            if k != "schema" && k != "command" {
                object.insert(k, v);
            }
        }
    } else {
        object.insert("result".into(), payload);
    }
    serde_json::Value::Object(object)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_report_round_trips() {
        let report = ScanReport {
            schema: SCHEMA_VERSION,
            command: "scan-central".into(),
            range: [1, 100],
            exceptions: vec![4, 10],
            counts: BTreeMap::from([("fast-d-shortcut".into(), 98), ("full-factorization".into(), 2)]),
            fast_path_hit_rate: Some(0.98),
            elapsed_ms: 5,
            parameters: serde_json::json!({"limit": 100, "s": 16}),
        };
        let text = serde_json::to_string(&report).unwrap();
        let back: ScanReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(report.normalized().elapsed_ms, 0);
        assert_eq!(report.normalized().exceptions, report.exceptions);
    }

    #[test]
    fn envelope_inserts_schema_and_command() {
        let v = envelope("row", serde_json::json!({"n": 8, "f": 1}));
        assert_eq!(v["schema"], 1);
        assert_eq!(v["command"], "row");
        assert_eq!(v["n"], 8);
    }

    #[test]
    fn verify_report_aggregates() {
        let mut r = VerifyReport::new("demo");
        r.check("a", true, "fine".into());
        assert!(r.passed);
        r.check("b", false, "broken".into());
        assert!(!r.passed);
        r.measure("x", serde_json::json!(1.5));
        assert_eq!(r.measurements["x"], serde_json::json!(1.5));
    }
}
