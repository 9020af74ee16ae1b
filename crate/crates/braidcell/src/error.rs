//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("vertex outside cell graph: {0}")]
    VertexOutsideGraph(String),
    #[error("bad base choice: {0}")]
    BadBaseChoice(String),
    #[error("radius must be at least 1 (got {0})")]
    RadiusTooSmall(i64),
    #[error("wavefront reached the boundary of an incomplete cell graph at vertex {0}")]
    WavefrontOutOfRadius(String),
    #[error("zigzag truncation violated: {0}")]
    ZigzagTruncationViolated(String),
    #[error("inconsistent differential: d^2 != 0 ({0})")]
    InconsistentDifferential(String),
    #[error("complex is not minimal")]
    NotMinimal,
    #[error("complex is empty")]
    EmptyComplex,
    #[error("no anchor found at top perverse degree {0}")]
    NoAnchorFound(i32),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
