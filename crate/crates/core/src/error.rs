use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {0} appears in more than one pair")]
    DuplicatePoint(usize),
    #[error("point {0} is not covered by any pair")]
    UncoveredPoint(usize),
    #[error("point {0} is paired with itself")]
    SelfPair(usize),
    #[error("odd number of points: {0}")]
    OddPointCount(usize),
    #[error("point {point} is out of range for {points} points")]
    PointOutOfRange { point: usize, points: usize },
    #[error("size mismatch: diagram has {diagram} points, symmetry acts on {symmetry}")]
    SizeMismatch { diagram: usize, symmetry: usize },
    #[error("diagram is not fixed by {0}")]
    NotFixed(String),
    #[error("diagram is not maximal")]
    NotMaximal,
    #[error("signed matching is not a one-vertex map")]
    NotUnicellular,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("inexact division in {context}")]
    InexactDivision { context: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{what} = {value} exceeds the desk-scale limit {limit}; pass --force to lift it")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
}
