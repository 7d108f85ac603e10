//! Heuristic GCD by evaluation at a large integer.
//!
//! One variable is replaced by an integer `xi`, the GCD of the images is
//! found recursively, and a candidate is read back from the balanced
//! `xi`-adic digits of its coefficients. A candidate is returned only if it
//! divides both inputs; whether it is the greatest divisor is left to the
//! caller.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::gcd::exact_div;
use super::poly::MultiPoly;

/// Give up once `bits(xi) * degree` exceeds this.
const MAX_BITS: u64 = 4096;
const ATTEMPTS: usize = 6;
/// Recursive calls allowed per top-level call; retries at every level would
/// otherwise multiply with the number of variables.
const BUDGET: usize = 64;

fn norm(p: &MultiPoly) -> BigInt {
    p.terms().iter().map(|(_, c)| c.numer().abs()).max().unwrap_or_default()
}

fn integer_content(p: &MultiPoly) -> BigInt {
    p.terms().iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c.numer()))
}

fn constant(p: &MultiPoly, n: BigInt) -> MultiPoly {
    MultiPoly::constant(p.context(), BigRational::from_integer(n))
}

fn substitute(p: &MultiPoly, v: usize, xi: &BigRational) -> MultiPoly {
    let coeffs = p.to_univariate(v);
    let mut acc = MultiPoly::zero(p.context());
    for c in coeffs.iter().rev() {
        acc = &acc.scale(xi) + c;
    }
    acc
}

fn balanced_mod(c: &BigInt, xi: &BigInt) -> BigInt {
    let r = c.mod_floor(xi);
    if &r * 2 > *xi {
        r - xi
    } else {
        r
    }
}

/// Reads `gamma` as `sum g_k xi^k` with balanced digits and returns `sum g_k v^k`.
fn interpolate(gamma: MultiPoly, v: usize, xi: &BigInt, max_digits: usize) -> Option<MultiPoly> {
    let ctx = gamma.context().clone();
    let inv = BigRational::new(1.into(), xi.clone());
    let mut rest = gamma;
    let mut digits = Vec::new();
    while !rest.is_zero() {
        if digits.len() > max_digits {
            return None;
        }
        let terms = rest.terms().iter().map(|(m, c)| (m.exponents().to_vec(), BigRational::from_integer(balanced_mod(c.numer(), xi))));
        let d = MultiPoly::from_terms(&ctx, terms).expect("same context");
        rest = (&rest - &d).scale(&inv);
        digits.push(d);
    }
    Some(MultiPoly::from_univariate(&ctx, v, &digits))
}

/// GCD of two polynomials with integer coefficients, up to sign, or `None`
/// when no candidate is found within the size limits.
pub(crate) fn heuristic_gcd(a: &MultiPoly, b: &MultiPoly) -> Option<MultiPoly> {
    let mut budget = BUDGET;
    heu(a, b, &mut budget)
}

fn heu(a: &MultiPoly, b: &MultiPoly, budget: &mut usize) -> Option<MultiPoly> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    let (ca, cb) = (integer_content(a), integer_content(b));
    let g_int = ca.gcd(&cb);
    if a.is_constant() || b.is_constant() {
        return Some(constant(a, g_int));
    }
    let a = a.scale(&BigRational::new(1.into(), ca));
    let b = b.scale(&BigRational::new(1.into(), cb));
    let v = a.variables().into_iter().chain(b.variables()).max().expect("nonconstant");
    let deg = a.degree_in(v).max(b.degree_in(v)) as u64;
    let mut xi: BigInt = norm(&a).min(norm(&b)) * 2 + 29;
    for _ in 0..ATTEMPTS {
        if xi.bits() * deg.max(1) > MAX_BITS {
            return None;
        }
        let x = BigRational::from_integer(xi.clone());
        let (av, bv) = (substitute(&a, v, &x), substitute(&b, v, &x));
        if !av.is_zero() && !bv.is_zero() {
            if let Some(gamma) = heu(&av, &bv, budget) {
                if let Some(g) = interpolate(gamma, v, &xi, deg as usize) {
                    let g = g.integer_primitive();
                    if !g.is_zero() && exact_div(&a, &g).is_ok() && exact_div(&b, &g).is_ok() {
                        return Some(g.scale(&BigRational::from_integer(g_int)));
                    }
                }
            }
        }
        if *budget == 0 {
            return None;
        }
        xi = xi * 73794 / 27011;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::VariableContext;

    #[test]
    fn recovers_shared_factor() {
        let c = VariableContext::numbered("x", 1, 3);
        let x = |i| MultiPoly::var(&c, i);
        let one = MultiPoly::one(&c);
        let s = &(&(&x(0) * &x(1)) - &x(2).scale(&BigRational::from_integer(3.into()))) + &one;
        let p = &s * &(&x(0) + &x(2));
        let q = &s * &(&(&x(1) * &x(1)) - &one);
        let g = heuristic_gcd(&p.integer_primitive(), &q.integer_primitive()).unwrap();
        assert_eq!(g.monic(), s.monic());
    }

    #[test]
    fn balanced_digits() {
        let xi = BigInt::from(10);
        assert_eq!(balanced_mod(&BigInt::from(7), &xi), BigInt::from(-3));
        assert_eq!(balanced_mod(&BigInt::from(-7), &xi), BigInt::from(3));
        assert_eq!(balanced_mod(&BigInt::from(5), &xi), BigInt::from(5));
    }
}
