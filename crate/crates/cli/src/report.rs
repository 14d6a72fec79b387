//! Machine-readable result reports.
//!
//! JSON schema: top-level {command, inputs, results, verdicts, duration_ms}.
//! Exact values are serialized as "p/q" strings, polynomials as ascending
//! coefficient arrays of strings; verdicts are pass/fail/skipped. Apart
//! from duration_ms, a report is a deterministic function of the inputs.

use serde_json::{json, Map, Value};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerdictStatus {
    Pass,
    Fail,
    Skipped,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::Pass => "pass",
            VerdictStatus::Fail => "fail",
            VerdictStatus::Skipped => "skipped",
        }
    }

    pub fn from_equality(equal: bool) -> Self {
        if equal {
            VerdictStatus::Pass
        } else {
            VerdictStatus::Fail
        }
    }
}

/// One verified identity with both sides printed.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub name: String,
    pub status: VerdictStatus,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<(String, String)>, // (path, sha256)
    pub results: Map<String, Value>,
    pub verdicts: Vec<Verdict>,
    pub duration_ms: u128,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Vec::new(),
            results: Map::new(),
            verdicts: Vec::new(),
            duration_ms: 0,
        }
    }

    pub fn add_input(&mut self, path: &str, digest: String) {
        self.inputs.push((path.to_string(), digest));
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    pub fn verdict(&mut self, name: &str, status: VerdictStatus, lhs: String, rhs: String) {
        self.verdicts.push(Verdict {
            name: name.to_string(),
            status,
            lhs,
            rhs,
        });
    }

    pub fn equality_verdict(&mut self, name: &str, lhs: String, rhs: String) {
        let status = VerdictStatus::from_equality(lhs == rhs);
        self.verdict(name, status, lhs, rhs);
    }

    pub fn any_failed(&self) -> bool {
        self.verdicts
            .iter()
            .any(|v| v.status == VerdictStatus::Fail)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs.iter().map(|(p, d)| json!({"path": p, "sha256": d})).collect::<Vec<_>>(),
            "results": Value::Object(self.results.clone()),
            "verdicts": self.verdicts.iter().map(|v| json!({
                "name": v.name,
                "status": v.status.as_str(),
                "lhs": v.lhs,
                "rhs": v.rhs,
            })).collect::<Vec<_>>(),
            "duration_ms": self.duration_ms,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (path, digest) in &self.inputs {
            out.push_str(&format!("input: {path} (sha256 {digest})\n"));
        }
        for (key, value) in &self.results {
            out.push_str(&format!("{key}: {}\n", render_value(value)));
        }
        if !self.verdicts.is_empty() {
            out.push_str("verdicts:\n");
            for v in &self.verdicts {
                out.push_str(&format!(
                    "  [{}] {}: {} | {}\n",
                    v.status.as_str(),
                    v.name,
                    v.lhs,
                    v.rhs
                ));
            }
        }
        out.push_str(&format!("duration: {} ms\n", self.duration_ms));
        out
    }
}

fn render_value(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(render_value).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}
