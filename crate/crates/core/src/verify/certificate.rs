use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Inconclusive,
    Fail,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        })
    }
}

/// Outcome of one check. Pass and fail carry a reproducible witness;
/// inconclusive carries the bound that was exhausted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CertificateReport {
    pub fn new(check: &str, status: Status, witness: Option<Value>) -> Self {
        CertificateReport {
            check: check.to_string(),
            status,
            witness,
            note: None,
        }
    }

    pub fn pass(check: &str, witness: Value) -> Self {
        Self::new(check, Status::Pass, Some(witness))
    }

    pub fn fail(check: &str, witness: Value) -> Self {
        Self::new(check, Status::Fail, Some(witness))
    }

    pub fn inconclusive(check: &str, witness: Value) -> Self {
        Self::new(check, Status::Inconclusive, Some(witness))
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn renamed(mut self, check: &str) -> Self {
        self.check = check.to_string();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Worst status of a list: any fail, else any inconclusive, else pass.
pub fn overall(reports: &[CertificateReport]) -> Status {
    reports.iter().map(|r| r.status).max().unwrap_or(Status::Pass)
}
