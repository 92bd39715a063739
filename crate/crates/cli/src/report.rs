//! Verification reports.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    NotAttempted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub p: Vec<u64>,
    pub n_max: u32,
    pub abc_bound: i64,
    /// Series depths used by the residual checks.
    pub depths: Vec<Depth>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Depth {
    pub p: u64,
    pub n: u32,
    pub depth: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub claim_id: String,
    /// Parameters in `key=value` form, e.g. `p=2,n=3,m=1`.
    pub params: String,
    pub status: Status,
    /// Witness data or the reason for a failure.
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_attempted: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub run_config: RunConfig,
    pub claims: Vec<Claim>,
    pub summary: Summary,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(run_config: RunConfig, claims: Vec<Claim>, notes: Vec<String>) -> Self {
        let mut summary = Summary::default();
        for c in &claims {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::NotAttempted => summary.not_attempted += 1,
            }
        }
        Self { run_config, claims, summary, notes }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
