//! Exact computations around the Kostant partition function, its
//! q-analogues, and twisted type-A representations.

pub mod branching_gt;
pub mod chamber;
pub mod error;
pub mod lie_core;
mod linalg;
pub mod multiplicity;
pub mod partition_fn;
pub mod poly;
pub mod symmetric_fn;

pub use branching_gt::GTDiagram;
pub use chamber::{Chamber, CoarseningReport, Membership, RootMatrix};
pub use error::{Error, Result};
pub use lie_core::{RootSystemA, Weight, WeylElement};
pub use multiplicity::{DecompositionTable, TwistedDecomposition};
pub use partition_fn::RootCombination;
pub use poly::{MPoly, QPoly, Scalar};
pub use symmetric_fn::Partition;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Values of the partition-function q-analogues: integer polynomials
/// in `q`.
pub type QPolynomial = QPoly<BigInt>;

/// Characters and Schur polynomials: integer multivariate polynomials
/// in `x_1, ..., x_k`.
pub type CharacterPoly = MPoly<BigInt>;

/// Fitted chamber polynomials: polynomials in the simple-root
/// coordinates `a_1, ..., a_n` whose coefficients are rational
/// polynomials in `q`.
pub type ChamberPoly = MPoly<QPoly<BigRational>>;
