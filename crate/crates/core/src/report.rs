//! Outcomes of identity checks and their text/JSON rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::RingValue;
use crate::weights::is_domain_restriction;

/// Two sides of an identity, compared structurally.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Equation {
    pub lhs: RingValue,
    pub rhs: RingValue,
}

impl Equation {
    pub fn new(lhs: RingValue, rhs: RingValue) -> Equation {
        Equation { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn residual(&self) -> RingValue {
        &self.lhs - &self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail { detail: String },
    Skip { reason: String },
}

impl Outcome {
    pub fn from_equation(eq: &Equation) -> Outcome {
        if eq.holds() {
            Outcome::Pass
        } else {
            Outcome::Fail { detail: format!("lhs = {}, rhs = {}", eq.lhs, eq.rhs) }
        }
    }

    /// Errors from weights that are undefined at the touched indices become
    /// skips; every other error is a failure.
    pub fn from_error(e: &Error) -> Outcome {
        if is_domain_restriction(e) {
            Outcome::Skip { reason: e.to_string() }
        } else {
            Outcome::Fail { detail: format!("error: {e}") }
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }
}

pub type Params = Vec<(&'static str, i64)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub identity: String,
    pub params: BTreeMap<String, i64>,
    #[serde(flatten)]
    pub outcome: Outcome,
    #[serde(skip)]
    order: Vec<String>,
}

impl Check {
    pub fn new(identity: impl Into<String>, params: Params, outcome: Outcome) -> Check {
        Check {
            identity: identity.into(),
            order: params.iter().map(|(k, _)| k.to_string()).collect(),
            params: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            outcome,
        }
    }

    /// Parameters in insertion order, `name=value` separated by spaces.
    pub fn params_text(&self) -> String {
        self.order
            .iter()
            .map(|k| format!("{k}={}", self.params[k]))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn size(&self) -> i64 {
        self.params.values().map(|v| v.abs()).sum()
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub suite: String,
    pub weights: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>, weights: impl Into<String>) -> Report {
        Report { suite: suite.into(), weights: weights.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, identity: &str, params: Params, outcome: Outcome) {
        self.checks.push(Check::new(identity, params, outcome));
    }

    pub fn record(&mut self, identity: &str, params: Params, result: Result<Equation>) {
        let outcome = match result {
            Ok(eq) => Outcome::from_equation(&eq),
            Err(e) => Outcome::from_error(&e),
        };
        self.push(identity, params, outcome);
    }

    /// Records a yes/no check; `detail` is shown when it fails.
    pub fn record_bool(&mut self, identity: &str, params: Params, result: Result<bool>, detail: &str) {
        let outcome = match result {
            Ok(true) => Outcome::Pass,
            Ok(false) => Outcome::Fail { detail: detail.to_string() },
            Err(e) => Outcome::from_error(&e),
        };
        self.push(identity, params, outcome);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    fn count(&self, f: impl Fn(&Outcome) -> bool) -> usize {
        self.checks.iter().filter(|c| f(&c.outcome)).count()
    }

    pub fn passed(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Pass))
    }

    pub fn failed(&self) -> usize {
        self.count(Outcome::is_fail)
    }

    pub fn skipped(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Skip { .. }))
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    /// The failing check with the smallest parameters.
    pub fn minimal_failure(&self) -> Option<&Check> {
        self.checks.iter().filter(|c| c.outcome.is_fail()).min_by_key(|c| c.size())
    }

    /// One summary line per identity, then any failures.
    pub fn render_text(&self, verbose: bool) -> String {
        let mut per_identity: Vec<(String, [usize; 3])> = Vec::new();
        for c in &self.checks {
            let slot = match per_identity.iter().position(|(name, _)| *name == c.identity) {
                Some(i) => i,
                None => {
                    per_identity.push((c.identity.clone(), [0; 3]));
                    per_identity.len() - 1
                }
            };
            let idx = match c.outcome {
                Outcome::Pass => 0,
                Outcome::Fail { .. } => 1,
                Outcome::Skip { .. } => 2,
            };
            per_identity[slot].1[idx] += 1;
        }
        let mut out = String::new();
        let _ = writeln!(out, "suite {} weights {}", self.suite, self.weights);
        for (name, [p, f, s]) in &per_identity {
            let verdict = if *f > 0 { "FAIL" } else { "ok" };
            let _ = writeln!(out, "  {verdict:<4} {name:<28} pass={p} fail={f} skip={s}");
        }
        if verbose {
            for c in &self.checks {
                if let Outcome::Skip { reason } = &c.outcome {
                    let _ = writeln!(out, "  skip {} [{}]: {reason}", c.identity, c.params_text());
                }
            }
        }
        for c in self.checks.iter().filter(|c| c.outcome.is_fail()) {
            if let Outcome::Fail { detail } = &c.outcome {
                let _ = writeln!(out, "  fail {} [{}]: {detail}", c.identity, c.params_text());
            }
        }
        if let Some(c) = self.minimal_failure() {
            if let Outcome::Fail { detail } = &c.outcome {
                let _ = writeln!(out, "counterexample: {} [{}]: {detail}", c.identity, c.params_text());
            }
        }
        let _ = writeln!(
            out,
            "total pass={} fail={} skip={}",
            self.passed(),
            self.failed(),
            self.skipped()
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}
