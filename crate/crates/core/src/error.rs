use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact division: no Laurent polynomial quotient exists")]
    InexactDivision,
    #[error("polynomial has negative exponents (lowest exponent {0})")]
    NegativeSupport(i64),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("gcd({m}, {n}) = {gcd} > 1: C_{{m,n}} is not a polynomial, use cbar instead")]
    NonCoprimePair { m: u32, n: u32, gcd: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("monomials with equal exponent vectors are incomparable")]
    Incomparable,
    #[error("dominant monomial of a denominator factor must have a unit coefficient")]
    NonUnitDominant,
    #[error("expansion is not a power series in x")]
    NotPowerSeries,
    #[error("q-exponent {exponent} at x^{x} is at or beyond the truncation ceiling {ceiling}")]
    BeyondCeiling { x: usize, exponent: i64, ceiling: i64 },
    #[error("negative q-part at x^{x} is truncated (ceiling {ceiling} < 0)")]
    NegativePartTruncated { x: usize, ceiling: i64 },
    #[error("comparison window exceeds exactness at x^{x}: window top {hi}, ceiling {ceiling}")]
    WindowExceedsExactness { x: usize, hi: i64, ceiling: i64 },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
