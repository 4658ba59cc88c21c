//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the exact computation routines.
///
/// Every variant corresponds to a domain violation (bad rank, wrong
/// coordinate sum, missing dominance, malformed partitions) or to a
/// structural failure in the chamber machinery.  None of the library
/// routines panic on bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    InvalidRank,
    #[error("could not parse weight from {0:?}")]
    ParseWeight(String),
    #[error("{0:?} is not a permutation of 0..{1}")]
    NotAPermutation(Vec<usize>, usize),
    #[error("coordinate length {found} does not match expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("weight {0} has nonzero coordinate sum")]
    NonzeroTrace(String),
    #[error("coordinate sums do not match: {0}")]
    TraceMismatch(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("weight {0} is not strictly dominant")]
    NotStrictlyDominant(String),
    #[error("parts must be weakly decreasing and nonnegative: {0}")]
    InvalidPartition(String),
    #[error("partition {0} has repeated parts")]
    NotStrict(String),
    #[error("partitions do not interlace: {0}")]
    NotInterlacing(String),
    #[error("rank {0} is not supported by this operation")]
    UnsupportedRank(usize),
    #[error("root index {0} is out of range (only {1} positive roots)")]
    InvalidRootIndex(usize, usize),
    #[error("too many parts: partition has {parts} parts but only {vars} variables")]
    TooManyParts { parts: usize, vars: usize },
    #[error("point lies outside the positive hull of the columns")]
    OutsideCone,
    #[error("sample points do not share a single chamber signature")]
    StraddledSample,
    #[error("not enough sample points: need at least {needed}, got {got}")]
    NotEnoughPoints { needed: usize, got: usize },
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
