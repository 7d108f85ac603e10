//! Exact scalars and sparse multivariate polynomial arithmetic.

mod context;
mod gaussian;
mod gcd;
mod heugcd;
mod modp;
mod poly;
mod ratfunc;
mod scalar;

pub use context::VariableContext;
pub use gaussian::GaussianRational;
pub use gcd::{exact_div, gcd, lcm};
pub use poly::{Monomial, MultiPoly};
pub use ratfunc::RationalFunction;
pub use scalar::{rational_to_f64, Field, Ring, FLOAT_REL_TOL};

pub use num_complex::Complex64;
pub use num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("divisor does not divide the dividend")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("empty input list")]
    EmptyList,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroInput,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("evaluation point assigns {got} values but the context has {expected} variables")]
    MissingAssignment { expected: usize, got: usize },
    #[error("exponent vector has {got} entries, context has {expected}")]
    ExponentArity { expected: usize, got: usize },
    #[error("operands live in different variable contexts")]
    ContextMismatch,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
}

/// Shorthand for a rational from a numerator and denominator.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
