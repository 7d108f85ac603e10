//! Exact complex numbers with rational real and imaginary parts.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::{rational_to_f64, Field, Ring};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    pub fn i() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im < BigRational::zero() {
                    write!(f, "{}-{}i", self.re, -self.im.clone())
                } else {
                    write!(f, "{}+{}i", self.re, self.im)
                }
            }
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussianRational { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussianRational { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianRational::real(self.re * o.re);
        }
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        GaussianRational::real(re)
    }
}

impl Ring for GaussianRational {
    fn zero_like(&self) -> Self {
        <Self as Field>::zero_value()
    }
    fn one_like(&self) -> Self {
        <Self as Field>::one_value()
    }
    fn rational_like(&self, q: &BigRational) -> Self {
        GaussianRational::real(q.clone())
    }
    fn is_zero_elem(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn div_integer(&self, n: i64) -> Self {
        let n = BigRational::from_integer(n.into());
        GaussianRational { re: &self.re / &n, im: &self.im / &n }
    }
    fn convolve(a: &[Self], b: &[Self]) -> Vec<Self> {
        let parts = |v: &[Self]| -> (Vec<BigRational>, Vec<BigRational>) {
            (v.iter().map(|z| z.re.clone()).collect(), v.iter().map(|z| z.im.clone()).collect())
        };
        let (ar, ai) = parts(a);
        let (br, bi) = parts(b);
        let rr = BigRational::convolve(&ar, &br);
        if ai.iter().all(Zero::is_zero) && bi.iter().all(Zero::is_zero) {
            return rr.into_iter().map(GaussianRational::real).collect();
        }
        let ii = BigRational::convolve(&ai, &bi);
        let ri = BigRational::convolve(&ar, &bi);
        let ir = BigRational::convolve(&ai, &br);
        rr.into_iter()
            .zip(ii)
            .zip(ri.into_iter().zip(ir))
            .map(|((rr, ii), (ri, ir))| GaussianRational { re: rr - ii, im: ri + ir })
            .collect()
    }
}

impl Field for GaussianRational {
    fn zero_value() -> Self {
        GaussianRational::real(BigRational::zero())
    }
    fn one_value() -> Self {
        GaussianRational::real(BigRational::one())
    }
    fn from_rational(q: &BigRational) -> Self {
        GaussianRational::real(q.clone())
    }
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero_elem(self) {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational { re: &self.re / &n, im: -(&self.im / &n) })
    }
    fn magnitude(&self) -> f64 {
        rational_to_f64(&self.norm_sqr()).sqrt()
    }
    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
    fn is_exact() -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::new(BigRational::new(a.into(), b.into()), BigRational::new(c.into(), d.into()))
    }

    fn arb() -> impl Strategy<Value = GaussianRational> {
        (-20i64..20, 1i64..9, -20i64..20, 1i64..9).prop_map(|(a, b, c, d)| g(a, b, c, d))
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(i.clone() * i, -<GaussianRational as Field>::one_value());
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(1, 2, -3, 4).to_string(), "1/2-3/4i");
        assert_eq!(g(0, 1, 2, 1).to_string(), "2i");
        assert_eq!(g(5, 1, 0, 1).to_string(), "5");
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
        }

        #[test]
        fn inverse_is_two_sided(a in arb()) {
            prop_assume!(!Ring::is_zero_elem(&a));
            let inv = a.inv().unwrap();
            prop_assert_eq!(a.clone() * inv.clone(), <GaussianRational as Field>::one_value());
            prop_assert_eq!(inv * a, <GaussianRational as Field>::one_value());
        }
    }
}
