//! Pass/fail records for the verification suites.

use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    /// A mismatch against a source that is known to be unreliable. It is
    /// reported but does not fail the run.
    #[serde(rename = "report-only-discrepancy")]
    ReportOnly,
}

impl Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ReportOnly => "report-only-discrepancy",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    /// What the check is about, e.g. `"bridge c(2v,i) = s(v,i)"`.
    pub anchor: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub elapsed_ms: f64,
}

impl Check {
    /// Evaluates both sides and records whether they are equal.
    pub fn exact<T, F>(id: impl Into<String>, anchor: &str, sides: F) -> Check
    where
        T: PartialEq + Display,
        F: FnOnce() -> (T, T),
    {
        let start = Instant::now();
        let (lhs, rhs) = sides();
        let status = if lhs == rhs {
            Status::Pass
        } else {
            Status::Fail
        };
        Check {
            id: id.into(),
            anchor: anchor.to_string(),
            status,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }

    /// A check whose verdict was computed elsewhere.
    pub fn verdict(
        id: impl Into<String>,
        anchor: &str,
        ok: bool,
        lhs: String,
        rhs: String,
        elapsed_ms: f64,
    ) -> Check {
        Check {
            id: id.into(),
            anchor: anchor.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            lhs,
            rhs,
            elapsed_ms,
        }
    }

    /// Turns a failure into a report-only discrepancy.
    pub fn report_only(mut self) -> Check {
        if self.status == Status::Fail {
            self.status = Status::ReportOnly;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: &str, checks: Vec<Check>) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            checks,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn ok(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statuses() {
        let pass = Check::exact("a", "x", || (1, 1));
        let fail = Check::exact("b", "x", || (1, 2));
        assert_eq!(pass.status, Status::Pass);
        assert_eq!(fail.status, Status::Fail);
        assert_eq!(fail.clone().report_only().status, Status::ReportOnly);
        assert_eq!(pass.clone().report_only().status, Status::Pass);
        let report = VerificationReport::new("s", vec![pass.clone(), fail.report_only()]);
        assert!(report.ok());
        assert_eq!(report.count(Status::ReportOnly), 1);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["checks"][1]["status"], "report-only-discrepancy");
    }
}
