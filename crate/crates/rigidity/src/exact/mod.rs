//! Exact number and linear-algebra kernel: arbitrary-precision rationals,
//! the cyclotomic field of order 21, Hermite-normal-form lattice bases and
//! an exact simplex solver with a deterministic pivot rule.

pub mod cyclotomic;
pub mod hnf;
pub mod lp;
pub mod mat3;
pub mod matrix;
pub mod rational;

pub use cyclotomic::Cyclotomic;
pub use lp::{lp_minimize, vertex_enumeration_minimize, LinearProgram, LpOutcome};
pub use matrix::RationalMatrix;
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("generator set does not span full rank {expected} (rank {found})")]
    RankDeficient { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}
