//! Crate-wide error type and its CLI exit-code mapping.

use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown corpus function `{0}`")]
    UnknownName(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("evaluation outside the function domain at {0}")]
    DomainExit(Complex64),
    #[error("evaluation at a declared pole {0}")]
    PoleHit(Complex64),
    #[error("point {0} lies outside the band 1-delta < |z| < 1")]
    OutOfBand(Complex64),
    #[error("invalid region: {0}")]
    InvalidRegion(String),
    #[error("cell budget exceeded: {count} cells > {budget}")]
    Budget { count: usize, budget: usize },
    #[error("critical-point search exhausted its budget with {undecided} undecided cells")]
    NonConvergence { undecided: usize },
    #[error("ambiguous level-set topology near a critical point (around {0})")]
    CriticalProximity(Complex64),
    #[error("level-set projection left its owning cell near {0}")]
    Projection(Complex64),
    #[error("polyline references function `{got}`, expected `{expected}`")]
    Mismatch { expected: String, got: String },
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("config parse error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit status for the CLI: 2 for validation problems, 3 for numeric failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::UnknownName(_)
            | Error::InvalidParams(_)
            | Error::InvalidRegion(_)
            | Error::InvalidConfig(_)
            | Error::OutOfBand(_)
            | Error::Json(_) => 2,
            _ => 3,
        }
    }
}
