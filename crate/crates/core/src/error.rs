use thiserror::Error;

/// Everything that can go wrong while building diagrams, braids or transports.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("truncation degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("circle count mismatch: {left} vs {right}")]
    CircleMismatch { left: usize, right: usize },

    #[error("invalid chord ({i},{j}) on {n_strands} strands")]
    InvalidChord { i: usize, j: usize, n_strands: usize },

    #[error("invalid braid token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("generator index out of range: `{token}` needs |k| <= {max}")]
    GeneratorOutOfRange { token: String, max: usize },

    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),

    #[error("time {0} outside [0,1]")]
    TimeOutOfRange(f64),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("simplex quadrature of degree {degree} is limited to degree 3 (cost grows as grid^degree = {grid}^{degree})")]
    DegreeTooLarge { degree: usize, grid: usize },

    #[error("integration produced a non-finite value at t = {t}")]
    NonFinite { t: f64 },

    #[error("relation set inconsistency: {0}")]
    Inconsistent(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
