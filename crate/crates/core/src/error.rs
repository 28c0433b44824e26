use std::fmt;

use crate::partitions::Partition;
use crate::series::Poly;

/// Location of a parse failure inside a textual input (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    /// Shift a parse error produced on a sub-slice so it points into the
    /// enclosing text.
    pub fn at(mut self, line: usize, column_offset: usize) -> Self {
        self.line = line;
        self.column += column_offset;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },

    #[error("degree {degree} exceeds the configured maximum {max}")]
    DegreeCap { degree: usize, max: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("truncation order {have} is too small, need at least {need}")]
    Truncation { need: usize, have: usize },

    #[error("constant term must be {expected}, found {found}")]
    ConstantTerm { expected: String, found: String },

    #[error("series has a non-invertible constant term")]
    NotInvertible,

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("tensor space of dimension {dim} exceeds the cap {cap}")]
    CapExceeded { dim: usize, cap: usize },

    #[error("parameter q must be nonzero")]
    ZeroParameter,

    #[error("symmetries have different parameters q = {left} and q' = {right}")]
    ParameterMismatch { left: String, right: String },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("braid relation fails on basis triple ({}, {}, {})", .0[0], .0[1], .0[2])]
    BraidViolation([usize; 3]),

    #[error("Hecke relation fails on basis pair ({}, {})", .0[0], .0[1])]
    HeckeViolation([usize; 2]),

    #[error("rationality not detected: inconclusive at truncation order {order}")]
    Inconclusive { order: usize },

    #[error("root location check failed for polynomial {poly}")]
    RootLocation { poly: Poly },

    #[error("coefficients of {0} are not integers")]
    NonIntegral(Poly),

    #[error("sequence is not totally positive: s_{partition} evaluates to {value}")]
    NotTotallyPositive { partition: Partition, value: String },

    #[error("birank bound violated: r0 + r1 = {sum} exceeds dim V = {dim}")]
    BirankBound { sum: usize, dim: String },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
