//! Named verification suites aggregating every identity check in the crate
//! into deterministic, machine-readable reports.

mod clifford_suite;
mod geometry_suite;
mod ladder_suite;
mod modular_suite;
mod planck_suite;
mod vertex_suite;

pub use clifford_suite::clifford_suite;
pub use geometry_suite::geometry_suite;
pub use ladder_suite::ladder_suite;
pub use modular_suite::modular_suite;
pub use planck_suite::planck_suite;
pub use vertex_suite::vertex_suite;

use crate::report::{Checker, SuiteReport};
use serde::Serialize;
use std::time::Instant;
use thiserror::Error;

/// Pinned tolerances and sampling constants. Exact identities carry no
/// tolerance at all; every constant here applies to a floating-point check
/// and is fixed once, next to its justification.
pub mod tol {
    /// Round trips and reciprocal laws of the rational conformal maps:
    /// a handful of f64 operations, so 1e-12 leaves ~3 digits of headroom.
    pub const GEOMETRY_EXACT_MAP: f64 = 1e-12;
    /// Residual of the quadric pairing identity at unit scale.
    pub const QUADRIC_PAIRING: f64 = 1e-12;
    /// Two-point-function and norm series against their closed forms at the
    /// fixed ladder cutoff below; the grid keeps |z2| <= 0.3 so the
    /// geometric tail sits under 1e-8 relative.
    pub const VERTEX_SERIES_REL: f64 = 1e-8;
    /// Conjugation-law residual over random sampled pairs.
    pub const CONJUGATION: f64 = 1e-10;
    /// Modular covariance residuals at order 600 truncations.
    pub const MODULAR_RESIDUAL: f64 = 1e-6;
    /// Sharper S-transformation check at tau = 2i, order 400.
    pub const MODULAR_RESIDUAL_2I: f64 = 1e-8;
    /// Per-mode Planck identity is algebraic; roundoff only.
    pub const PLANCK_IDENTITY_REL: f64 = 1e-12;
    /// Stefan-Boltzmann ratio windows at R/beta = 1e3 and 1e5.
    pub const SB_RATIO_1E3: f64 = 1e-2;
    pub const SB_RATIO_1E5: f64 = 1e-4;

    /// Ladder cutoff for the two-point/norm series checks (k runs to
    /// e_max - 1 = 19).
    pub const VERTEX_SERIES_E_MAX: usize = 20;
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("unknown suite `{0}` (expected clifford, ladder, geometry, vertex, modular, planck or all)")]
    UnknownSuite(String),
    #[error("e_max must be at least 2, got {0}")]
    EMaxTooSmall(u16),
    #[error("series_order must be at least 8, got {0}")]
    SeriesOrderTooSmall(usize),
    #[error("tolerance must be positive, got {0}")]
    NonPositiveTolerance(f64),
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub suite: String,
    pub e_max: u16,
    pub series_order: usize,
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: "all".into(),
            e_max: 8,
            series_order: 200,
            tolerance: 1e-10,
            seed: 20181208,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.e_max < 2 {
            return Err(ConfigError::EMaxTooSmall(self.e_max));
        }
        if self.series_order < 8 {
            return Err(ConfigError::SeriesOrderTooSmall(self.series_order));
        }
        if !(self.tolerance > 0.0) {
            return Err(ConfigError::NonPositiveTolerance(self.tolerance));
        }
        match self.suite.as_str() {
            "clifford" | "ladder" | "geometry" | "vertex" | "modular" | "planck" | "all" => Ok(()),
            other => Err(ConfigError::UnknownSuite(other.into())),
        }
    }
}

/// Run one named suite (or all of them) and assemble the report.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, ConfigError> {
    config.validate()?;
    let started = Instant::now();
    let mut checker = Checker::new();
    let single = |name: &str, checker: &mut Checker| match name {
        "clifford" => clifford_suite(config, checker),
        "ladder" => ladder_suite(config, checker),
        "geometry" => geometry_suite(config, checker),
        "vertex" => vertex_suite(config, checker),
        "modular" => modular_suite(config, checker),
        "planck" => planck_suite(config, checker),
        _ => unreachable!("validated"),
    };
    if config.suite == "all" {
        for name in ["clifford", "ladder", "geometry", "vertex", "modular", "planck"] {
            single(name, &mut checker);
        }
    } else {
        single(&config.suite, &mut checker);
    }
    Ok(SuiteReport::assemble(
        &config.suite,
        config.clone(),
        checker.into_checks(),
        started,
    ))
}
