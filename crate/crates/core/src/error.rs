use thiserror::Error;

use crate::symmetry::SubgroupId;

/// Errors raised by the decision procedures and constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),

    #[error("margin entries must be nonnegative, got {0}")]
    NegativeEntry(String),

    #[error("row total {rows} differs from column total {cols}")]
    SumMismatch { rows: String, cols: String },

    #[error("integer entries required, got {0}")]
    NonInteger(String),

    #[error("(0,1) bounds violated: {0}")]
    BoundViolation(String),

    #[error("subgroup {subgroup} acts only on square matrices, got {m}x{n}")]
    NotSquare { subgroup: SubgroupId, m: usize, n: usize },

    #[error("vector is not palindromic")]
    NotPalindromic,

    #[error("ragged matrix: row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },

    #[error("symmetric matrix with {0} diagonal ones cannot be cleaned (odd count)")]
    OddDiagonalOnes(usize),

    #[error("matrix has a one on the diagonal at position {0}")]
    DiagonalOne(usize),

    #[error("matrix is not a symmetric (0,1,2)-matrix")]
    NotSymmetric012,

    #[error("margins are not realizable: {0}")]
    Infeasible(String),

    #[error("the real class cannot be enumerated")]
    RealEnumeration,

    #[error("unknown {kind} name {name:?}")]
    UnknownName { kind: &'static str, name: String },

    #[error("constructed witness failed verification: {0}")]
    WitnessRejected(String),
}

pub type Result<T> = std::result::Result<T, Error>;
