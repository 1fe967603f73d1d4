use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of a check. `NecessaryConditionPass` marks a check whose success
/// is implied by, but does not imply, the claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "NECESSARY-CONDITION PASS")]
    NecessaryConditionPass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::NecessaryConditionPass => "NECESSARY-CONDITION PASS",
            Status::Fail => "FAIL",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Serialized form used to order JSON values.
fn canonical(v: &Value) -> String {
    v.to_string()
}

/// Structured verification report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub witnesses: Vec<Value>,
    pub elapsed_ms: u64,
}

impl Certificate {
    pub fn new(claim: impl Into<String>) -> Self {
        Certificate {
            claim: claim.into(),
            parameters: BTreeMap::new(),
            status: Status::Pass,
            witnesses: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters
            .insert(key.to_string(), serde_json::to_value(value).expect("serializable parameter"));
        self
    }

    /// Records a confirming witness; does not change the status.
    pub fn witness(&mut self, value: impl Serialize) {
        self.witnesses.push(serde_json::to_value(value).expect("serializable witness"));
    }

    /// Records a counterexample and marks the certificate failed.
    pub fn fail(&mut self, value: impl Serialize) {
        self.status = Status::Fail;
        self.witness(value);
    }

    /// Downgrades a pass to a necessary-condition pass.
    pub fn necessary_only(mut self) -> Self {
        self.status = self.status.max(Status::NecessaryConditionPass);
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// Associative, commutative combination: the worst status wins, claims
    /// and witnesses are unioned in canonical order, conflicting parameters
    /// keep the larger serialized value, and times add up.
    pub fn merge(self, other: Certificate) -> Certificate {
        let mut claims: Vec<&str> = self.claim.split('+').chain(other.claim.split('+')).collect();
        claims.sort_unstable();
        claims.dedup();
        let claim = claims.join("+");

        let mut parameters = self.parameters;
        for (k, v) in other.parameters {
            match parameters.get(&k) {
                Some(old) if canonical(old) >= canonical(&v) => {}
                _ => {
                    parameters.insert(k, v);
                }
            }
        }

        let mut witnesses = self.witnesses;
        witnesses.extend(other.witnesses);
        witnesses.sort_by_cached_key(|w| w.to_string());

        Certificate {
            claim,
            parameters,
            status: self.status.max(other.status),
            witnesses,
            elapsed_ms: self.elapsed_ms + other.elapsed_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}
