//! Pass/fail records for identity and bound checks.

use serde::Serialize;
use serde_json::Value;

/// One evaluated identity or inequality.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub identity: String,
    pub lhs: Value,
    pub rhs: Value,
    pub pass: bool,
}

impl Check {
    pub fn new(identity: impl Into<String>, lhs: impl Into<Value>, rhs: impl Into<Value>, pass: bool) -> Self {
        Self {
            identity: identity.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            pass,
        }
    }

    pub fn eq<T: PartialEq + Into<Value> + Clone>(identity: impl Into<String>, lhs: T, rhs: T) -> Self {
        let pass = lhs == rhs;
        Self::new(identity, lhs, rhs, pass)
    }

    pub fn le<T: PartialOrd + Into<Value> + Clone>(identity: impl Into<String>, lhs: T, rhs: T) -> Self {
        let pass = lhs <= rhs;
        Self::new(identity, lhs, rhs, pass)
    }
}

/// A list of checks plus the names of checks that did not apply.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub skipped: Vec<String>,
}

impl Report {
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn skip(&mut self, identity: impl Into<String>) {
        let id = identity.into();
        if !self.skipped.contains(&id) {
            self.skipped.push(id);
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        for s in other.skipped {
            self.skip(s);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn find(&self, identity: &str) -> impl Iterator<Item = &Check> {
        let id = identity.to_string();
        self.checks.iter().filter(move |c| c.identity == id)
    }
}
