use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("subset state has capacity {capacity}, cannot serve n = {requested}")]
    CapacityExceeded { capacity: usize, requested: usize },

    #[error("subset state is not in empty-set form")]
    StateNotEmpty,

    #[error("active n can only move by one (from {from} to {to})")]
    NonAdjacentShift { from: usize, to: usize },

    /// Overlapping, missing or out-of-bounds tiles. Distinct from a
    /// covering that is structurally sound but violates the tatami rule.
    #[error("not a perfect cover: {0}")]
    Structural(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid element for n = {n}: {message}")]
    InvalidElement { n: usize, message: String },

    #[error("search size {size} exceeds the guard of {limit}")]
    GuardExceeded { size: u128, limit: u128 },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
