use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: bad rational, wrong vector length, bad JSON.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("half-space system is unbounded in direction {0}")]
    Unbounded(String),

    #[error("point {point} lies on {wall}; perturb it off the arrangement")]
    OnWall { point: String, wall: String },

    #[error("segment lies inside wall {0}")]
    DegenerateSegment(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("one-parameter subgroup {0} is not anti-dominant")]
    NotAntiDominant(String),

    #[error("{0} is not generic for the zonotope")]
    NotGeneric(String),

    #[error("zonotope hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("{0} is not Weyl-invariant")]
    NotInvariant(String),

    #[error("vector {0} lies outside the span of the weights")]
    OutsideSpan(String),

    #[error("{0} already lies in the target window")]
    AlreadyInWindow(String),

    #[error("segment crosses {0} walls; subdivide it into single-wall steps")]
    MultipleWalls(usize),

    #[error("invalid arrow at step {step}: {reason}")]
    InvalidArrow { step: usize, reason: String },

    #[error("matrix is not invertible over the integers")]
    NotUnimodular,

    /// Broken invariant inside an algorithm; indicates a convention bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// CLI exit code: 2 for parse/usage problems, 1 for domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Dimension { .. } => 2,
            _ => 1,
        }
    }
}
