//! JSON reports shared by the verification suites and the command line.

use serde_json::{json, Map, Value};

use crate::rational::{self, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub counterexample: Option<Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, counterexample: None }
    }

    pub fn fail(name: impl Into<String>, counterexample: Value) -> Self {
        Check { name: name.into(), status: Status::Fail, counterexample: Some(counterexample) }
    }

    pub fn inconclusive(name: impl Into<String>, detail: Value) -> Self {
        Check { name: name.into(), status: Status::Inconclusive, counterexample: Some(detail) }
    }

    /// Pass when `bad` is empty, otherwise fail with the offending items.
    pub fn from_failures(name: impl Into<String>, bad: Vec<Value>) -> Self {
        if bad.is_empty() {
            Self::pass(name)
        } else {
            Self::fail(name, Value::Array(bad))
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("name".into(), json!(self.name));
        m.insert("status".into(), json!(self.status.as_str()));
        if let Some(c) = &self.counterexample {
            m.insert("counterexample".into(), c.clone());
        }
        Value::Object(m)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub params: Value,
    pub results: Value,
    pub checks: Vec<Check>,
    pub seed: u64,
}

impl Report {
    pub fn new(command: &str, params: Value, seed: u64) -> Self {
        Report { command: command.into(), params, results: Value::Null, checks: Vec::new(), seed }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "params": self.params,
            "results": self.results,
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
            "seed": self.seed,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    /// Pretty JSON with sorted keys.
    pub fn render(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }
}

pub fn q_json(x: &Q) -> Value {
    Value::String(rational::to_string(x))
}

pub fn qs_json(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(q_json).collect())
}
