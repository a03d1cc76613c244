//! Comparison reports and their JSON and text renderings.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::claims;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    Mismatch,
    NotApplicable,
}

/// One computed value checked against one claim.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub claim: &'static str,
    /// What the verdict is about, when a report holds several instances.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subject: Option<String>,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    /// Compares by equality; panics on an unregistered claim id, which is a
    /// programming error.
    pub fn compare(claim: &'static str, expected: impl Into<Value>, computed: impl Into<Value>) -> Self {
        let (expected, computed) = (expected.into(), computed.into());
        let status = if expected == computed {
            Status::Match
        } else {
            Status::Mismatch
        };
        Self::with_status(claim, expected, computed, status)
    }

    /// `holds` decides the status; `expected` describes the condition.
    pub fn check(claim: &'static str, expected: impl Into<Value>, computed: impl Into<Value>, holds: bool) -> Self {
        let status = if holds { Status::Match } else { Status::Mismatch };
        Self::with_status(claim, expected.into(), computed.into(), status)
    }

    pub fn with_status(claim: &'static str, expected: Value, computed: Value, status: Status) -> Self {
        assert!(claims::statement(claim).is_some(), "unregistered claim id {claim}");
        Verdict {
            claim,
            subject: None,
            expected,
            computed,
            status,
            note: None,
        }
    }

    pub fn about(mut self, subject: impl Into<String>) -> Self {
        self.subject = Some(subject.into());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Turns a mismatch into not-applicable when the hypotheses of the
    /// claim were not certified.
    pub fn unless_generic(mut self, generic: bool, why: &str) -> Self {
        if !generic && self.status == Status::Mismatch {
            self.status = Status::NotApplicable;
            self.note = Some(format!("genericity failure: {why}"));
        }
        self
    }
}

/// Everything a command reports.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub computed: Map<String, Value>,
    pub predicted: Map<String, Value>,
    pub verdicts: Vec<Verdict>,
    pub certificates: Map<String, Value>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ..Report::default()
        }
    }

    pub fn mismatches(&self) -> usize {
        self.verdicts.iter().filter(|v| v.status == Status::Mismatch).count()
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (title, map) in [
            ("computed", &self.computed),
            ("predicted", &self.predicted),
            ("certificates", &self.certificates),
        ] {
            if map.is_empty() {
                continue;
            }
            out.push_str(&format!("{title}:\n"));
            for (k, v) in map {
                write_value(&mut out, k, v, 1);
            }
        }
        if !self.verdicts.is_empty() {
            out.push_str("verdicts:\n");
            for v in &self.verdicts {
                let status = match v.status {
                    Status::Match => "match",
                    Status::Mismatch => "MISMATCH",
                    Status::NotApplicable => "n/a",
                };
                let subject = v.subject.as_deref().map(|s| format!("{s} ")).unwrap_or_default();
                out.push_str(&format!(
                    "  [{status}] {subject}{}: expected {}, computed {}\n",
                    v.claim,
                    inline(&v.expected),
                    inline(&v.computed)
                ));
                if let Some(note) = &v.note {
                    out.push_str(&format!("      {note}\n"));
                }
            }
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn write_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, v) in map {
                write_value(out, k, v, depth + 1);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object()) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (i, item) in items.iter().enumerate() {
                write_value(out, &format!("[{i}]"), item, depth + 1);
            }
        }
        other => out.push_str(&format!("{pad}{key}: {}\n", inline(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn statuses() {
        assert_eq!(Verdict::compare("product_dimension", 2, 2).status, Status::Match);
        let v = Verdict::compare("product_degree", 4, 3);
        assert_eq!(v.status, Status::Mismatch);
        let v = v.unless_generic(false, "center on S");
        assert_eq!(v.status, Status::NotApplicable);
        assert!(v.note.unwrap().contains("center on S"));
    }

    #[test]
    #[should_panic(expected = "unregistered claim id")]
    fn unknown_claims_are_rejected() {
        Verdict::compare("no_such_claim", 1, 1);
    }

    #[test]
    fn renders_text() {
        let mut r = Report::new("demo");
        r.computed.insert("product".into(), json!({"dimension": 2, "degree": 4}));
        r.verdicts.push(Verdict::compare("product_dimension", 2, 2));
        let text = r.to_text();
        assert!(text.contains("  product:\n    degree: 4\n    dimension: 2\n"));
        assert!(text.contains("[match] product_dimension: expected 2, computed 2"));
        assert!(r.to_json().starts_with("{\n  \"command\": \"demo\""));
    }
}
