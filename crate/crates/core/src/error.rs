use thiserror::Error;

use crate::diagram::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("period must satisfy m >= 1 and ell >= 1, got m={m}, ell={ell}")]
    InvalidOmega { m: i64, ell: i64 },

    #[error("expected {expected} parts, got {got}")]
    BadLength { expected: usize, got: usize },

    #[error("parts are not weakly decreasing at position {index}")]
    NotWeaklyDecreasing { index: usize },

    #[error("first part minus last part is {spread}, exceeds ell={ell}")]
    NotRestricted { spread: i64, ell: i64 },

    #[error("ordinary partition has a negative part at position {index}")]
    NegativePart { index: usize },

    #[error("inner shape is not contained in the outer shape (row {row})")]
    NotContained { row: usize },

    #[error("partitions use different periods")]
    PeriodMismatch,

    #[error("cell ({}, {}) is not in the diagram", .0.row, .0.col)]
    CellNotInDiagram(Cell),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("cell ({}, {}) is not active", .0.row, .0.col)]
    NotActive(Cell),

    #[error("invalid bar tuple: {0}")]
    InvalidTuple(String),

    #[error("path endpoints do not match: {0}")]
    BadEndpoints(String),

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("cell ({}, {}) lies outside the region rows >= 1, cols <= ell + 1", .0.row, .0.col)]
    NoDecomposition(Cell),

    #[error("tail estimate needs at least {needed} strata, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("strata sums are not decaying; no tail estimate")]
    NotDecaying,

    #[error("sequence violates a hypothesis: {0}")]
    BadSequence(String),

    #[error("shifted diagram is not representable: {0}")]
    NotRepresentable(String),

    #[error("the bar recursion needs a one-row period, got m={0}")]
    NotOneRow(i64),

    #[error("window must be non-negative, got {0}")]
    InvalidWindow(i64),

    #[error("tolerance must be positive")]
    InvalidTolerance,

    #[error("cannot parse number {0:?}")]
    ParseNumber(String),
}

pub type Result<T> = std::result::Result<T, Error>;
