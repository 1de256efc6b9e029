//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub witness: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub params: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), ..Default::default() }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, id: impl Into<String>, status: Status, witness: impl Into<Value>) {
        self.checks.push(Check { id: id.into(), status, witness: witness.into() });
    }

    pub fn check(&mut self, id: impl Into<String>, ok: bool, witness: impl Into<Value>) {
        self.push(id, Status::from_bool(ok), witness);
    }

    /// Records the outcome of a fallible computation, turning errors into
    /// failed checks.
    pub fn check_result<T>(&mut self, id: impl Into<String>, r: crate::Result<T>, eval: impl FnOnce(T) -> (bool, Value)) {
        match r {
            Ok(v) => {
                let (ok, w) = eval(v);
                self.check(id, ok, w);
            }
            Err(e) => self.push(id, Status::Fail, Value::String(e.to_string())),
        }
    }

    pub fn merge(&mut self, other: Report) {
        let prefix = other.suite.clone();
        for c in other.checks {
            self.checks.push(Check { id: format!("{prefix}/{}", c.id), ..c });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }
}
