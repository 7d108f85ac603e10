//! Scalar abstractions shared by the polynomial, matrix and realization code.
//!
//! [`Ring`] covers everything the characteristic polynomial machinery needs:
//! commutative ring operations plus division by small integers (all rings used
//! here are algebras over the rationals). [`Field`] adds inversion, a canonical
//! total order for deterministic pairing, and the tolerance model used by the
//! floating backend.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integers `n_i` and a common denominator `d` with `v_i = n_i / d`.
pub(crate) fn integer_parts(v: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    use num_integer::Integer;
    let d = v.iter().fold(BigInt::one(), |acc, q| if q.denom().is_one() { acc } else { acc.lcm(q.denom()) });
    let n = v
        .iter()
        .map(|q| if q.denom() == &d { q.numer().clone() } else { q.numer() * (&d / q.denom()) })
        .collect();
    (n, d)
}

/// Relative tolerance used by every approximate comparison in the floating backend.
pub const FLOAT_REL_TOL: f64 = 1e-9;

/// A commutative algebra over the rationals.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// Embeds a rational constant into the same ring (and context) as `self`.
    fn rational_like(&self, q: &BigRational) -> Self;
    fn is_zero_elem(&self) -> bool;

    fn div_integer(&self, n: i64) -> Self {
        assert!(n != 0, "division by the integer zero");
        self.clone() * self.rational_like(&BigRational::new(BigInt::one(), BigInt::from(n)))
    }

    /// Coefficients of the product of two dense univariate polynomials, both
    /// given lowest degree first and nonempty.
    fn convolve(a: &[Self], b: &[Self]) -> Vec<Self> {
        let mut out = vec![a[0].zero_like(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero_elem() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero_elem() {
                    out[i + j] = out[i + j].clone() + x.clone() * y.clone();
                }
            }
        }
        out
    }
}

/// A field with the extra structure needed by realization and verification.
pub trait Field: Ring + Send + Sync {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn from_rational(q: &BigRational) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Absolute value, or an f64 approximation of it.
    fn magnitude(&self) -> f64;
    /// Total order on encodings: lexicographic on (re, im).
    fn canonical_cmp(&self, other: &Self) -> Ordering;
    fn is_exact() -> bool;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    /// True if `self` should be treated as zero. Exact fields decide exactly;
    /// floating values vanish when `|self| <= FLOAT_REL_TOL * scale`.
    fn is_negligible(&self, scale: f64) -> bool {
        if Self::is_exact() {
            self.is_zero_elem()
        } else {
            self.magnitude() <= FLOAT_REL_TOL * scale
        }
    }

    /// Equality for exact fields, relative closeness for floating ones.
    fn approx_eq(&self, other: &Self) -> bool {
        if Self::is_exact() {
            self == other
        } else {
            let scale = self.magnitude().max(other.magnitude()).max(1.0);
            (self.clone() - other.clone()).magnitude() <= FLOAT_REL_TOL * scale
        }
    }
}

impl Ring for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn rational_like(&self, q: &BigRational) -> Self {
        q.clone()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn div_integer(&self, n: i64) -> Self {
        self / BigRational::from_integer(BigInt::from(n))
    }
    // num-rational normalizes after every operation, and its binary gcd is
    // slow on large operands; clearing denominators first avoids all of that
    fn convolve(a: &[Self], b: &[Self]) -> Vec<Self> {
        let (ia, da) = integer_parts(a);
        let (ib, db) = integer_parts(b);
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in ia.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in ib.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let d = da * db;
        out.into_iter()
            .map(|n| if d.is_one() { BigRational::from_integer(n) } else { BigRational::new(n, d.clone()) })
            .collect()
    }
}

impl Field for BigRational {
    fn zero_value() -> Self {
        BigRational::zero()
    }
    fn one_value() -> Self {
        BigRational::one()
    }
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn magnitude(&self) -> f64 {
        rational_to_f64(&self.abs())
    }
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
    fn is_exact() -> bool {
        true
    }
}

impl Ring for Complex64 {
    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one_like(&self) -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn rational_like(&self, q: &BigRational) -> Self {
        Complex64::new(rational_to_f64(q), 0.0)
    }
    fn is_zero_elem(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn div_integer(&self, n: i64) -> Self {
        self / n as f64
    }
}

impl Field for Complex64 {
    fn zero_value() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one_value() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_rational(q: &BigRational) -> Self {
        Complex64::new(rational_to_f64(q), 0.0)
    }
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero_elem(self) {
            None
        } else {
            Some(Complex64::new(1.0, 0.0) / self)
        }
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.re
            .total_cmp(&other.re)
            .then_with(|| self.im.total_cmp(&other.im))
    }
    fn is_exact() -> bool {
        false
    }
}

/// Nearest f64 to a rational, robust to numerators and denominators beyond f64 range.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // shift both to ~60 significant bits before dividing
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift_n = (nb - 60).max(0);
    let shift_d = (db - 60).max(0);
    let n = (q.numer() >> shift_n as usize).to_f64().unwrap_or(0.0);
    let d = (q.denom() >> shift_d as usize).to_f64().unwrap_or(1.0);
    (n / d) * 2f64.powi((shift_n - shift_d) as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_to_f64_handles_huge_values() {
        let big = BigRational::from_integer(BigInt::from(10).pow(400));
        let r = big.clone() / (big * BigInt::from(4));
        assert_eq!(rational_to_f64(&r), 0.25);
        assert_eq!(rational_to_f64(&q(-3, 8)), -0.375);
    }

    #[test]
    fn float_negligible_is_relative() {
        let tiny = Complex64::new(1e-12, 0.0);
        assert!(tiny.is_negligible(1.0));
        assert!(!tiny.is_negligible(1e-6));
        assert!(!q(1, 1_000_000_000_000).is_negligible(1e30));
    }

    #[test]
    fn div_integer_matches_division() {
        assert_eq!(q(3, 4).div_integer(3), q(1, 4));
        assert_eq!(Complex64::new(3.0, 6.0).div_integer(3), Complex64::new(1.0, 2.0));
    }
}
