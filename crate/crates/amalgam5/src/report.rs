//! Machine-readable verification ledger: a flat list of named checks with
//! status, witness, and the claim each one certifies. Reports are
//! deterministic given (command, flags, seed) apart from the timing fields.

use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Inconclusive,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    /// The claim this check certifies, for mapping CI output back to source.
    pub paper_ref: String,
    pub status: Status,
    pub witness: String,
    pub millis: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Toolchain {
    pub package: String,
    pub version: String,
    pub os: String,
    pub arch: String,
}

impl Default for Toolchain {
    fn default() -> Self {
        Toolchain {
            package: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            os: std::env::consts::OS.to_string(),
            arch: std::env::consts::ARCH.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub toolchain: Toolchain,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(seed: u64) -> Self {
        VerificationReport {
            seed,
            toolchain: Toolchain::default(),
            checks: Vec::new(),
        }
    }

    /// Runs a check body and records it. The body returns the status and a
    /// witness string (mandatory on failure: the offending matrix/word/value).
    pub fn check(&mut self, id: &str, claim: &str, body: impl FnOnce() -> (Status, String)) {
        debug_assert!(
            self.checks.iter().all(|c| c.id != id),
            "duplicate check id {id}"
        );
        let start = Instant::now();
        let (status, witness) = body();
        self.checks.push(CheckResult {
            id: id.to_string(),
            paper_ref: claim.to_string(),
            status,
            witness,
            millis: start.elapsed().as_millis() as u64,
        });
    }

    /// Boolean convenience wrapper around [`VerificationReport::check`].
    pub fn check_bool(&mut self, id: &str, claim: &str, body: impl FnOnce() -> (bool, String)) {
        self.check(id, claim, || {
            let (ok, witness) = body();
            (if ok { Status::Pass } else { Status::Fail }, witness)
        })
    }

    pub fn all_passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| matches!(c.status, Status::Pass | Status::Skip))
    }

    /// 0 when nothing failed, 1 on any failure, 2 when the only blemish is an
    /// inconclusive check.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else if self.checks.iter().any(|c| c.status == Status::Inconclusive) {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Copy with timing zeroed, for byte-level determinism comparisons.
    pub fn without_timing(&self) -> Self {
        let mut clone = self.clone();
        for c in &mut clone.checks {
            c.millis = 0;
        }
        clone
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{} {} ({} {}), seed {}\n",
            self.toolchain.package,
            self.toolchain.version,
            self.toolchain.os,
            self.toolchain.arch,
            self.seed
        ));
        let id_width = self
            .checks
            .iter()
            .map(|c| c.id.len())
            .max()
            .unwrap_or(4)
            .max(4);
        out.push_str(&format!(
            "{:<id_width$}  {:<12}  {:>7}  witness\n",
            "id", "status", "millis"
        ));
        for c in &self.checks {
            out.push_str(&format!(
                "{:<id_width$}  {:<12}  {:>7}  {}\n",
                c.id,
                c.status.label(),
                c.millis,
                c.witness
            ));
        }
        let (pass, fail, skip, inconclusive) = self.checks.iter().fold((0, 0, 0, 0), |acc, c| {
            match c.status {
                Status::Pass => (acc.0 + 1, acc.1, acc.2, acc.3),
                Status::Fail => (acc.0, acc.1 + 1, acc.2, acc.3),
                Status::Skip => (acc.0, acc.1, acc.2 + 1, acc.3),
                Status::Inconclusive => (acc.0, acc.1, acc.2, acc.3 + 1),
            }
        });
        out.push_str(&format!(
            "total {}: {} pass, {} fail, {} skip, {} inconclusive\n",
            self.checks.len(),
            pass,
            fail,
            skip,
            inconclusive
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let mut r = VerificationReport::new(0);
        r.check("a", "claim", || (Status::Pass, String::new()));
        assert_eq!(r.exit_code(), 0);
        r.check("b", "claim", || (Status::Inconclusive, "stalled".into()));
        assert_eq!(r.exit_code(), 2);
        r.check("c", "claim", || (Status::Fail, "witness".into()));
        assert_eq!(r.exit_code(), 1);
        assert!(!r.all_passed());
    }

    #[test]
    fn skip_does_not_fail_the_run() {
        let mut r = VerificationReport::new(0);
        r.check("a", "claim", || (Status::Skip, "optional".into()));
        assert_eq!(r.exit_code(), 0);
        assert!(r.all_passed());
    }

    #[test]
    fn json_round_trip() {
        let mut r = VerificationReport::new(7);
        r.check_bool("x", "something", || (true, "ok".into()));
        let j = r.to_json();
        let back = VerificationReport::from_json(&j).unwrap();
        assert_eq!(back.seed, 7);
        assert_eq!(back.checks.len(), 1);
        assert_eq!(back.checks[0].status, Status::Pass);
    }

    #[test]
    fn timing_stripped_reports_are_byte_identical() {
        let build = || {
            let mut r = VerificationReport::new(1);
            r.check_bool("x", "c", || (true, "w".into()));
            r
        };
        let a = build().without_timing().to_json();
        let b = build().without_timing().to_json();
        assert_eq!(a, b);
    }
}
