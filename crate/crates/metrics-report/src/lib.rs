//! Scoring of composite gates, convention calibration against published
//! words, and the controlled-injection versus decomposition comparison.

mod calibrate;
mod error;
pub mod fixtures;
mod report;
mod score;
pub mod stats;

pub use braid_circuits::{ConventionProfile, LowerStrands, StrandNumbering};
pub use calibrate::{calibrate_conventions, standalone_residuals, COMPOSITE_TOL, STANDALONE_TOL};
pub use error::ReportError;
pub use report::{comparison_report, ComparisonReport, Row};
pub use score::{overall_error, score_evaluation, score_gate, GateScore};
pub use stats::{combination_statistics, RolePool, Statistics, Summary, DEFAULT_TOP_K};

pub type Result<T> = std::result::Result<T, ReportError>;

/// The profile committed after calibration.
pub const PINNED_PROFILE_JSON: &str = include_str!("../fixtures/profile.json");

pub fn pinned_profile() -> ConventionProfile {
    ConventionProfile::from_json(PINNED_PROFILE_JSON).expect("committed profile parses")
}
