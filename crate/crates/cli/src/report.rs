//! Report assembly and the exit-code contract.

use std::time::Instant;

use serde_json::{Map, Value};

/// Verdict of a whole run, mapped one-to-one onto exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Verified,
    CounterexampleFound,
    Unresolved,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Verified => 0,
            Outcome::CounterexampleFound => 1,
            Outcome::Unresolved => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Verified => "Verified",
            Outcome::CounterexampleFound => "CounterexampleFound",
            Outcome::Unresolved => "Unresolved",
        }
    }
}

/// Exit code for argument, config, and input mistakes.
pub const EXIT_USAGE: i32 = 64;

/// Record kinds that make a run a counterexample; everything else is
/// informational.
fn is_counterexample(record: &Value) -> bool {
    if record.get("classification").and_then(Value::as_str) == Some("unexpected") {
        return true;
    }
    matches!(
        record.get("kind").and_then(Value::as_str),
        Some("theorem-violation") | Some("uniqueness-violation")
    )
}

fn is_unresolved_marker(record: &Value) -> bool {
    record.get("kind").and_then(Value::as_str) == Some("unresolved")
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub outcome: Outcome,
    pub records: Vec<Value>,
    pub wall_time_ms: u64,
}

impl RunReport {
    /// Derives the outcome from the records: any counterexample record
    /// dominates, then any unresolved record, then Verified.
    pub fn new(
        command: &str,
        parameters: Map<String, Value>,
        records: Vec<Value>,
        started: Instant,
    ) -> RunReport {
        let outcome = if records.iter().any(is_counterexample) {
            Outcome::CounterexampleFound
        } else if records.iter().any(is_unresolved_marker) {
            Outcome::Unresolved
        } else {
            Outcome::Verified
        };
        RunReport {
            command: command.to_string(),
            parameters,
            outcome,
            records,
            wall_time_ms: started.elapsed().as_millis() as u64,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut top = Map::new();
        top.insert("command".into(), Value::String(self.command.clone()));
        top.insert("parameters".into(), Value::Object(self.parameters.clone()));
        top.insert(
            "outcome".into(),
            Value::String(self.outcome.as_str().to_string()),
        );
        top.insert("records".into(), Value::Array(self.records.clone()));
        top.insert("wall_time_ms".into(), Value::Number(self.wall_time_ms.into()));
        Value::Object(top)
    }
}
