use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at t = {0}")]
    Pole(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("factor count mismatch: expected {expected}, got {got}")]
    FactorMismatch { expected: usize, got: usize },

    #[error("index {index} out of range for {len} factors")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("strand mismatch: braid has {braid} strands, input has {input} factors")]
    StrandMismatch { braid: usize, input: usize },

    #[error("degree overflow: {what} has degree {degree}, bound is {bound}")]
    DegreeOverflow { what: &'static str, degree: usize, bound: usize },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
