use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use super::context::VariableContext;
use super::gcd::{exact_div, gcd_unnormalized};
use super::poly::MultiPoly;
use super::scalar::Ring;
use super::AlgebraError;

/// Reduced quotient `num / den`: the two parts share no nonconstant factor
/// and `den` has leading coefficient 1.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, AlgebraError> {
        num.check_context(&den)?;
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.context());
        RationalFunction { num: p, den }
    }

    fn reduced(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            let one = MultiPoly::one(den.context());
            return RationalFunction { num, den: one };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd_unnormalized(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    exact_div(&num, &g).expect("gcd divides numerator"),
                    exact_div(&den, &g).expect("gcd divides denominator"),
                )
            }
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    /// Re-runs the reduction; a no-op on any value built through the public API.
    pub fn reduce(&self) -> Self {
        Self::reduced(self.num.clone(), self.den.clone())
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        self.num.context()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.num.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    /// Replaces variable `v` by `value` and reduces.
    pub fn substitute(&self, v: usize, value: &RationalFunction) -> RationalFunction {
        let (an, kn) = homogenized_substitution(&self.num, v, value);
        let (ad, kd) = homogenized_substitution(&self.den, v, value);
        // (an / D^kn) / (ad / D^kd)
        let d = &value.den;
        let (num, den) = if kn >= kd {
            (an, &ad * &d.pow(kn - kd))
        } else {
            (&an * &d.pow(kd - kn), ad)
        };
        RationalFunction::new(num, den).expect("substitution into a valid denominator stays nonzero")
    }

    pub fn with_context(&self, target: &Arc<VariableContext>) -> Result<Self, AlgebraError> {
        Ok(RationalFunction { num: self.num.with_context(target)?, den: self.den.with_context(target)? })
    }
}

/// For `p` of degree `k` in `v` and `value = N/D`, returns `(D^k * p(N/D), k)`.
fn homogenized_substitution(p: &MultiPoly, v: usize, value: &RationalFunction) -> (MultiPoly, u32) {
    let coeffs = p.to_univariate(v);
    let k = coeffs.len() - 1;
    if k == 0 {
        return (p.clone(), 0);
    }
    let n_pows = powers(&value.num, k);
    let d_pows = powers(&value.den, k);
    let mut acc = MultiPoly::zero(p.context());
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        acc = &acc + &(&(c * &n_pows[j]) * &d_pows[k - j]);
    }
    (acc, k as u32)
}

fn powers(p: &MultiPoly, k: usize) -> Vec<MultiPoly> {
    let mut out = Vec::with_capacity(k + 1);
    out.push(MultiPoly::one(p.context()));
    for i in 1..=k {
        let next = &out[i - 1] * p;
        out.push(next);
    }
    out
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.den == o.den {
            return Self::reduced(&self.num + &o.num, self.den);
        }
        let g = gcd_unnormalized(&self.den, &o.den);
        let a = exact_div(&o.den, &g).unwrap();
        let b = exact_div(&self.den, &g).unwrap();
        Self::reduced(&(&self.num * &a) + &(&o.num * &b), &self.den * &a)
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::from_poly(MultiPoly::zero(self.context()));
        }
        // cross-cancel first to keep the product small
        let g1 = gcd_unnormalized(&self.num, &o.den);
        let g2 = gcd_unnormalized(&o.num, &self.den);
        let n1 = exact_div(&self.num, &g1).unwrap();
        let d2 = exact_div(&o.den, &g1).unwrap();
        let n2 = exact_div(&o.num, &g2).unwrap();
        let d1 = exact_div(&self.den, &g2).unwrap();
        Self::reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl Ring for RationalFunction {
    fn zero_like(&self) -> Self {
        RationalFunction::from_poly(MultiPoly::zero(self.context()))
    }
    fn one_like(&self) -> Self {
        RationalFunction::from_poly(MultiPoly::one(self.context()))
    }
    fn rational_like(&self, q: &BigRational) -> Self {
        RationalFunction::from_poly(MultiPoly::constant(self.context(), q.clone()))
    }
    fn is_zero_elem(&self) -> bool {
        self.num.is_zero()
    }
}
