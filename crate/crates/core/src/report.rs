//! Machine-readable verification reports.
//!
//! A report is a flat list of checks, each naming the identity it verifies
//! and whether the comparison is exact (rational arithmetic) or carries a
//! numeric residual against a stated tolerance. Reports are deterministic
//! for a fixed configuration and seed; the per-check timing is the only
//! field that varies between runs.

use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    /// Stable identifier, `suite.topic.detail`.
    pub id: String,
    /// Human-readable statement of the verified identity.
    pub law: String,
    pub passed: bool,
    /// True when the comparison is exact rational/integer equality.
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub elapsed_ms: u64,
}

/// Accumulates checks with per-check wall-clock timing.
pub struct Checker {
    checks: Vec<Check>,
    mark: Instant,
}

impl Checker {
    pub fn new() -> Self {
        Checker { checks: Vec::new(), mark: Instant::now() }
    }

    fn elapsed(&mut self) -> u64 {
        let now = Instant::now();
        let ms = now.duration_since(self.mark).as_millis() as u64;
        self.mark = now;
        ms
    }

    /// Record an exact pass/fail comparison.
    pub fn exact(&mut self, id: &str, law: &str, passed: bool) {
        let elapsed_ms = self.elapsed();
        self.checks.push(Check {
            id: id.into(),
            law: law.into(),
            passed,
            exact: true,
            residual: None,
            tolerance: None,
            detail: None,
            elapsed_ms,
        });
    }

    pub fn exact_with_detail(&mut self, id: &str, law: &str, passed: bool, detail: String) {
        let elapsed_ms = self.elapsed();
        self.checks.push(Check {
            id: id.into(),
            law: law.into(),
            passed,
            exact: true,
            residual: None,
            tolerance: None,
            detail: Some(detail),
            elapsed_ms,
        });
    }

    /// Record a numeric residual against a tolerance.
    pub fn residual(&mut self, id: &str, law: &str, residual: f64, tolerance: f64) {
        let elapsed_ms = self.elapsed();
        self.checks.push(Check {
            id: id.into(),
            law: law.into(),
            passed: residual.is_finite() && residual < tolerance,
            exact: false,
            residual: Some(residual),
            tolerance: Some(tolerance),
            detail: None,
            elapsed_ms,
        });
    }

    /// Record a failure produced by an error path that should not trigger.
    pub fn error(&mut self, id: &str, law: &str, message: String) {
        let elapsed_ms = self.elapsed();
        self.checks.push(Check {
            id: id.into(),
            law: law.into(),
            passed: false,
            exact: false,
            residual: None,
            tolerance: None,
            detail: Some(message),
            elapsed_ms,
        });
    }

    pub fn into_checks(self) -> Vec<Check> {
        self.checks
    }
}

impl Default for Checker {
    fn default() -> Self {
        Checker::new()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub suite: String,
    pub config: crate::suites::SuiteConfig,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn assemble(
        suite: &str,
        config: crate::suites::SuiteConfig,
        checks: Vec<Check>,
        started: Instant,
    ) -> Self {
        let failed = checks.iter().filter(|c| !c.passed).count();
        SuiteReport {
            schema: "conformal-ladder-report/v1",
            suite: suite.into(),
            config,
            passed: failed == 0,
            total: checks.len(),
            failed,
            checks,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }
}
