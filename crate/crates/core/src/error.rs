use num_bigint::{BigInt, BigUint};
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("singular presentation matrix")]
    SingularPresentation,

    #[error("infinite homology: input is not the presentation matrix of a knot's branched cover")]
    InfiniteHomology,

    #[error("invalid invariant factors: {0}")]
    InvalidGroup(String),

    #[error("invalid linking form: {0}")]
    InvalidForm(String),

    #[error("brute-force isometry search disagrees with the residue criterion at p = {0}")]
    OracleDisagreement(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} must be an odd prime")]
    NotOddPrime(u64),

    #[error("cannot factorize zero")]
    FactorizeZero,

    #[error("prime factor {0} does not fit in 64 bits")]
    FactorTooLarge(BigUint),

    #[error("{value} is not a unit modulo {prime}")]
    NotAUnit { value: BigInt, prime: u64 },

    #[error("expected a form on a nonzero cyclic p-primary group, got {0}")]
    NotCyclicPrimary(String),

    #[error("form is singular: {0} divides the linking unit")]
    SingularForm(u64),

    #[error("oracle bound exceeded: modulus {modulus} > bound {bound}")]
    OracleBoundExceeded { modulus: BigUint, bound: u64 },

    #[error("{0} is not a knot determinant (knot determinants are odd)")]
    NotKnotDeterminant(BigUint),

    #[error("not an Alexander polynomial of a knot: value at -1 is zero")]
    NotAlexanderPolynomial,

    #[error("inconsistent knot data for {label}: Seifert determinant {seifert}, Alexander determinant {alexander}")]
    InconsistentKnotData { label: String, seifert: BigUint, alexander: BigUint },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("table row {row}: {message}")]
    TableRow { row: u64, message: String },

    #[error("invalid knot record: {0}")]
    InvalidRecord(String),

    #[error("duplicate knot label {0:?}")]
    DuplicateLabel(String),

    #[error("no knot labelled {0:?}")]
    UnknownLabel(String),

    #[error("malformed report: {0}")]
    Report(String),
}
