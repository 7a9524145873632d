//! Verification reports: one JSON line per claim.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Symbolic,
    Sampled,
}

/// One executable claim with its outcome. Sampled verdicts always expose the
/// degree bounds and the (strictly larger) sample counts, so a recorded pass
/// is a proof of the symbolic statement.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: serde_json::Value,
    pub verdict: Verdict,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_bounds: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<serde_json::Value>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialization")
    }
}
