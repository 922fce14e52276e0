use thiserror::Error;

/// Errors raised by the algebra, geometry and series layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported Cayley-Dickson level {0} (expected 0..=4)")]
    UnsupportedLevel(u8),

    #[error("level mismatch: left operand has level {left}, right operand has level {right}")]
    LevelMismatch { left: u8, right: u8 },

    #[error("cannot demote an element of level {from} to level {to} without losing coefficients")]
    LossyDemotion { from: u8, to: u8 },

    #[error("{0} is not a slice unit")]
    NotSliceUnit(String),

    #[error("{0} is not a zero divisor")]
    NotZeroDivisor(String),

    #[error("({0}, {1}) is not a hyper-solution")]
    NotHyperSolution(String, String),

    #[error("point is not in the slice cone: {0}")]
    NotInSliceCone(String),

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
