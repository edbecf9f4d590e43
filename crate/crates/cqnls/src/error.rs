//! Error types shared across the crate.

use thiserror::Error;

/// Unified error type for all numeric operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("field contains non-finite samples")]
    InvalidField,
    #[error("grid too coarse for the requested stencil (n = {n}, need >= {need})")]
    GridTooCoarse { n: usize, need: usize },
    #[error("fields live on different grids")]
    GridMismatch,
    #[error("no ground state exists at omega = {omega} (window is 0 < omega < 3/16)")]
    NoGroundState { omega: f64 },
    #[error("no sign change found while scanning the amplitude window at omega = {omega}")]
    ShootingBracketFailure { omega: f64 },
    #[error("convergence failure: {0}")]
    ConvergenceFailure(String),
    #[error("integration reached r = {r_max} without an undershoot/overshoot event")]
    Undecided { r_max: f64 },
    #[error("decay fit window contains non-positive samples")]
    DecayFitFailure,
    #[error("weinstein functional undefined for the zero field")]
    DivisionByZeroField,
    #[error("rescaling by lambda = {lambda} leaves the grid support")]
    ScaleOutOfRange { lambda: f64 },
    #[error("no positive root of the pohozaev scaling equation (quartic discriminant)")]
    NoPohozaevScale,
    #[error("multiplier recovery needs 1/3 <= beta < 1, got beta = {beta}")]
    MultiplierOutOfRange { beta: f64 },
    #[error("requested value lies outside the traced curve range: {0}")]
    CurveRangeTooNarrow(String),
    #[error("eigenvalue iteration failed: {0}")]
    EigenConvergenceFailure(String),
    #[error("numerical blow-up at t = {t}")]
    NumericalBlowUp { t: f64 },
    #[error("perturbation size {eps} outside the allowed range |eps| <= 0.1")]
    PerturbationOutOfRange { eps: f64 },
    #[error("gradient-flow oracle did not converge within {max_iter} iterations")]
    OracleDidNotConverge { max_iter: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
