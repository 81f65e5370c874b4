use thiserror::Error;

use crate::linalg::LinalgError;
use crate::poly::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("weight entry does not fit in a machine integer")]
    WeightOverflow,
    #[error("term order is not a well-order and the input is not homogeneous")]
    NonGlobalOrder,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("weight vector lies outside the Groebner cone")]
    NotInCone,
    #[error("initial ideal contains no monomial")]
    NoMonomial,
    #[error("not a curve: dim = {dim}, homogeneity = {homog}")]
    NotACurve { dim: usize, homog: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{what}: retry budget exhausted (seed {seed})")]
    RetryExhausted { what: String, seed: u64 },
    #[error("inconsistent lift: {0}")]
    InconsistentLift(String),
    #[error("permutation {0} does not keep the ideal invariant")]
    NotInvariant(String),
    #[error("coefficient matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
}
