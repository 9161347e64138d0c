use thiserror::Error;

use crate::params::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("gcd(N,{which}) must be 1: gcd({n},{value}) = {gcd}")]
    NonCoprime { which: char, n: u32, value: u32, gcd: u32 },

    #[error("{0} (the minimal-surface construction needs N >= 2, p > N, q > N)")]
    OutOfRange(String),

    #[error("phase {0} is a critical phase: two strands of the curve intersect")]
    CriticalPhase(Rational),

    #[error("crossing levels are not separated: {0}")]
    LevelCollision(String),

    #[error("degenerate crossing sign at t = {time} on strands ({k},{l}): |Re B_k - Re B_l| = {gap:e}")]
    DegenerateSign { time: Rational, k: u32, l: u32, gap: f64 },

    #[error("closed-form crossing sign disagrees with direct evaluation at t = {time} on strands ({k},{l})")]
    FormulaMismatch { time: Rational, k: u32, l: u32 },

    #[error("closure has {0} components, expected a knot")]
    NotAKnot(usize),

    #[error("{strands} strands exceeds the supported limit of {limit}")]
    StrandLimit { strands: usize, limit: usize },

    #[error("polynomial is not symmetric under t -> 1/t")]
    NotSymmetric,

    #[error("unresolved crossing near t = {time:.12} on strands ({k},{l}): real parts agree to {gap:e}")]
    UnresolvedCrossing { time: f64, k: u32, l: u32, gap: f64 },

    #[error("catalog schema error at {location}: {message}")]
    Schema { location: String, message: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("internal error: {0}")]
    Internal(String),
}
