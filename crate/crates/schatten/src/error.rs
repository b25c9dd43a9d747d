//! Error type shared by every module of the toolkit.

use thiserror::Error;

/// Errors produced by construction, conversion, and estimation routines.
///
/// Numerical tolerance violations (a matrix that should have been Hermitian,
/// a probability vector that does not sum to one) are reported as errors
/// rather than silently repaired, so that callers notice broken inputs early.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },

    #[error("matrix is not Hermitian: max |A_ij - conj(A_ji)| = {deviation:.3e} exceeds tolerance")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("p exponent {p} is below 1; Schatten norms require p in [1, inf]")]
    InvalidExponent { p: f64 },

    #[error("projector dimension d={d} out of range 1..={max}")]
    ProjectorDimension { d: usize, max: usize },

    #[error("Kraus representation requires a completely positive map; Choi minimum eigenvalue {min_eig:.3e}")]
    NotCompletelyPositive { min_eig: f64 },

    #[error("the map does not preserve Hermiticity; Hermitian-domain optimization is undefined for it")]
    NotHermiticityPreserving,

    #[error("the map is not trace-preserving (deviation {deviation:.3e})")]
    NotTracePreserving { deviation: f64 },

    #[error("invalid probability vector: {reason}")]
    InvalidProbabilities { reason: String },

    #[error("Kraus representation not attached; convert the map first")]
    MissingKraus,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("channel spec: {0}")]
    ChannelSpec(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
