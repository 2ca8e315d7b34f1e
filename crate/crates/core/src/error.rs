use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    InvalidPrime(u64),
    #[error("field of order {0} is too large for this implementation")]
    FieldTooLarge(u128),
    #[error("modulus is not a monic irreducible polynomial of the requested degree")]
    InvalidModulus,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("degree {m} does not divide extension degree {k}")]
    NotASubfield { m: u32, k: u32 },
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("characteristic 2 is not supported here")]
    EvenCharUnsupported,
    #[error("no element of order {m}: it does not divide q-1 = {order}")]
    NoSuchOrder { m: u64, order: u64 },
    #[error("enumeration of {needed} items exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("expected rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspace is not contained in the radical")]
    NotInRadical,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("census totals {found}, expected q^d - 1 = {expected}")]
    CensusInvalid { found: u64, expected: u64 },
    #[error("n = {0} is too small (need n >= 2)")]
    TooSmall(usize),
    #[error("no intermediate subfield of degree {m} in an extension of degree {degree}")]
    NoSubfield { m: usize, degree: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("linearly dependent input: {0}")]
    LinearlyDependent(String),
    #[error("parse error: {0}")]
    Parse(String),
}
