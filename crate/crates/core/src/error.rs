use thiserror::Error;

use crate::cell::Cell;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("rank {rank} out of range for degree {degree}")]
    RankOutOfRange { rank: u64, degree: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cell {0} is not a corner")]
    NotACorner(Cell),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("shape mismatch between insertion and recording tableaux")]
    ShapeMismatch,
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("rank {rank} too small for degree {degree} (need rank >= degree - 1)")]
    RankTooSmall { rank: usize, degree: usize },
    #[error("tableau is not canonical (core is not a staircase)")]
    NonCanonical,
    #[error("label {0} not present")]
    MissingLabel(u32),
    #[error("label set is not a cycle: {0}")]
    NotACycle(String),
    #[error("move is not applicable: {0}")]
    InapplicableMove(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
