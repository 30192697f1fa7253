//! Scalar and polynomial arithmetic: exact rationals, the field Q(t) in
//! canonical valuation form, and sparse weighted-graded multivariate
//! polynomials.
//!
//! Scalars of Q(t) are kept as `t^v * num/den` with `num(0) != 0`,
//! `den(0) = 1` and `gcd(num, den) = 1`, so every divisibility test
//! "t^k | a" is an exact integer comparison on valuations.

mod poly;
mod tpoly;
mod trat;

pub use poly::{Homogeneity, Ideal, Monomial, Poly, RingSpec};
pub use tpoly::TPoly;
pub use trat::TRat;

use num_bigint::BigInt;
use thiserror::Error;

/// Exact rational scalar; the coefficient field of the base ring.
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d` in lowest terms. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficient domain of a polynomial ring.
///
/// `FieldQ` forbids any t in coefficients, `Dvr` requires nonnegative
/// valuation everywhere, `FieldQt` is unrestricted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffDomain {
    FieldQ,
    FieldQt,
    Dvr,
}

impl CoeffDomain {
    pub fn admits(&self, c: &TRat) -> bool {
        match self {
            CoeffDomain::FieldQ => c.is_rational(),
            CoeffDomain::FieldQt => true,
            CoeffDomain::Dvr => c.is_regular(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CoeffDomain::FieldQ => "Q",
            CoeffDomain::FieldQt => "Q(t)",
            CoeffDomain::Dvr => "Q[t]_(t)",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar is not regular (valuation {valuation} < 0)")]
    NotRegular { valuation: i64 },
    #[error("polynomial is not regular at monomial {monomial}")]
    NotRegularAt { monomial: String },
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("coefficient at {monomial} violates the {domain} coefficient domain")]
    DomainViolation { monomial: String, domain: &'static str },
    #[error("operation requires a homogeneous polynomial of positive degree")]
    Inhomogeneous,
    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("{0}")]
    Invalid(String),
}
