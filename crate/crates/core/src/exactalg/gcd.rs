//! Exact division, GCD and LCM for [`MultiPoly`].
//!
//! The GCD is a subresultant polynomial remainder sequence over the
//! rationals. A polynomial is viewed as univariate in one of its variables
//! with coefficients in the remaining ones; contents are computed by
//! recursion, once for the inputs and once for the last nonzero remainder.
//! A heuristic candidate is tried first and kept when the modular degree
//! bounds certify it.

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{Monomial, MultiPoly};
use super::heugcd::heuristic_gcd;
use super::modp::gcd_degree_bound;
use super::AlgebraError;

const HEURISTIC_MAX_TERMS: usize = 200;

/// Returns `r` with `p = q * r`, or [`AlgebraError::NotDivisible`] when no
/// such polynomial exists. `NotDivisible` is a definite answer, not a failure.
pub fn exact_div(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
    p.check_context(q)?;
    if q.is_zero() {
        return Err(AlgebraError::ZeroDivisor);
    }
    if p.is_zero() {
        return Ok(p.clone());
    }
    if let Some(c) = q.as_constant() {
        return Ok(p.scale(&c.recip()));
    }
    for v in 0..q.nvars() {
        if q.degree_in(v) > p.degree_in(v) {
            return Err(AlgebraError::NotDivisible);
        }
    }
    if q.total_degree() > p.total_degree() {
        return Err(AlgebraError::NotDivisible);
    }
    let (lm_q, lc_q) = q.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
    let lc_q_inv = lc_q.recip();
    let mut rem = p.clone();
    let mut quot: Vec<(Monomial, BigRational)> = Vec::new();
    while let Some((lm_r, lc_r)) = rem.leading_term() {
        let m = lm_r.checked_div(&lm_q).ok_or(AlgebraError::NotDivisible)?;
        let c = lc_r * &lc_q_inv;
        rem = &rem - &q.mul_term(&m, &c);
        quot.push((m, c));
    }
    Ok(MultiPoly::from_sorted_terms(p.context(), quot))
}

/// Greatest common divisor, normalized to leading coefficient 1.
/// `gcd(p, 0)` is `p` made monic; both zero is rejected.
pub fn gcd(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
    p.check_context(q)?;
    if p.is_zero() && q.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    Ok(gcd_unnormalized(p, q).monic())
}

/// Least common multiple of a nonempty list of nonzero polynomials, leading coefficient 1.
pub fn lcm(ps: &[MultiPoly]) -> Result<MultiPoly, AlgebraError> {
    let (first, rest) = ps.split_first().ok_or(AlgebraError::EmptyList)?;
    if ps.iter().any(MultiPoly::is_zero) {
        return Err(AlgebraError::ZeroInput);
    }
    let mut acc = first.monic();
    for p in rest {
        acc.check_context(p)?;
        let g = gcd_unnormalized(&acc, p);
        let cofactor = exact_div(p, &g)?;
        acc = (&acc * &cofactor).monic();
    }
    Ok(acc)
}

/// GCD up to a rational unit.
pub(crate) fn gcd_unnormalized(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one(p.context());
    }
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let common = Monomial(mp.0.iter().zip(&mq.0).map(|(a, b)| (*a).min(*b)).collect());
    let p = if mp.is_one() { p.clone() } else { p.div_monomial(&mp) };
    let q = if mq.is_one() { q.clone() } else { q.div_monomial(&mq) };
    let g = gcd_no_monomial_content(&p, &q);
    if common.is_one() {
        g
    } else {
        g.mul_term(&common, &BigRational::from_integer(1.into()))
    }
}

fn gcd_no_monomial_content(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one(p.context());
    }
    let vp = p.variables();
    let vq = q.variables();
    // a variable present in only one argument cannot occur in the gcd
    if let Some(&v) = vp.iter().find(|v| !vq.contains(v)) {
        return gcd_with_coefficients(q, p.to_univariate(v));
    }
    if let Some(&v) = vq.iter().find(|v| !vp.contains(v)) {
        return gcd_with_coefficients(p, q.to_univariate(v));
    }
    let bounds: Vec<(usize, u32)> = vp.iter().map(|&v| (v, gcd_degree_bound(p, q, v))).collect();
    if bounds.iter().all(|&(_, b)| b == 0) {
        return MultiPoly::one(p.context());
    }
    // likewise for a variable the gcd provably does not involve
    if let Some(&(v, _)) = bounds.iter().find(|&&(_, b)| b == 0) {
        return gcd_with_coefficients(q, p.to_univariate(v));
    }
    let (small, large) = if p.num_terms() <= q.num_terms() { (p, q) } else { (q, p) };
    if exact_div(large, small).is_ok() {
        return small.clone();
    }
    // accepted only when it reaches the degree bound in every variable; it
    // divides the true gcd, so equal degrees make them equal up to a unit
    // the heuristic pays off on small dense inputs; large sparse ones go straight to the PRS
    if p.num_terms() + q.num_terms() <= HEURISTIC_MAX_TERMS {
        if let Some(g) = heuristic_gcd(&p.integer_primitive(), &q.integer_primitive()) {
            if bounds.iter().all(|&(v, b)| g.degree_in(v) == b) {
                return g;
            }
        }
    }
    let v = bounds
        .iter()
        .min_by_key(|&&(v, b)| (p.degree_in(v).min(q.degree_in(v)), b))
        .map(|&(v, _)| v)
        .expect("shared variables exist");
    subresultant_prs(p, q, v)
}

fn gcd_with_coefficients(base: &MultiPoly, mut coeffs: Vec<MultiPoly>) -> MultiPoly {
    coeffs.retain(|c| !c.is_zero());
    coeffs.sort_by_key(MultiPoly::num_terms);
    let mut g = base.clone();
    for c in &coeffs {
        g = gcd_unnormalized(&g, c);
        if g.is_constant() {
            return MultiPoly::one(base.context());
        }
    }
    g.integer_primitive()
}

/// GCD of a list of polynomials (the content of a univariate view).
fn content(coeffs: &[MultiPoly]) -> MultiPoly {
    let mut nz: Vec<&MultiPoly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    nz.sort_by_key(|c| c.num_terms());
    let mut g = match nz.first() {
        Some(c) => (*c).clone(),
        None => unreachable!("content of the zero polynomial"),
    };
    for c in &nz[1..] {
        if g.is_constant() {
            break;
        }
        g = gcd_unnormalized(&g, c);
    }
    if g.is_constant() {
        MultiPoly::one(g.context())
    } else {
        g.integer_primitive()
    }
}

fn divide_all(coeffs: &[MultiPoly], d: &MultiPoly) -> Vec<MultiPoly> {
    if d.is_one() {
        return coeffs.to_vec();
    }
    coeffs
        .iter()
        .map(|c| exact_div(c, d).expect("content divides every coefficient"))
        .collect()
}

/// Primitive part of a univariate view, with integer content stripped too.
fn primitive(coeffs: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let c = content(&coeffs);
    let mut out = divide_all(&coeffs, &c);
    if let Some(s) = integer_scale(&out) {
        for c in &mut out {
            *c = c.scale(&s);
        }
    }
    out
}

/// Factor that makes all coefficients integral with content 1 and the top one positive.
fn integer_scale(coeffs: &[MultiPoly]) -> Option<BigRational> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed};
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for c in coeffs {
        for (_, a) in c.terms() {
            den_lcm = den_lcm.lcm(a.denom());
            num_gcd = num_gcd.gcd(a.numer());
        }
    }
    if num_gcd.is_zero() {
        return None;
    }
    let mut f = BigRational::new(den_lcm, num_gcd);
    let top = coeffs.iter().rev().find(|c| !c.is_zero())?;
    if top.leading_coeff().unwrap().is_negative() {
        f = -f;
    }
    if f.is_one() {
        None
    } else {
        Some(f)
    }
}

fn trim(r: &mut Vec<MultiPoly>) {
    while r.last().is_some_and(MultiPoly::is_zero) {
        r.pop();
    }
}

/// `lc(b)^(deg a - deg b + 1) * a mod b` in the univariate view.
fn full_pseudo_rem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.to_vec();
    let mut steps = a.len() - db;
    while r.len() > db {
        let dr = r.len() - 1;
        let lcr = r.pop().expect("nonempty");
        let shift = dr - db;
        for c in r.iter_mut() {
            if !c.is_zero() {
                *c = &*c * lcb;
            }
        }
        for (j, bj) in b[..db].iter().enumerate() {
            if !bj.is_zero() {
                r[j + shift] = &r[j + shift] - &(&lcr * bj);
            }
        }
        steps -= 1;
        trim(&mut r);
    }
    if steps > 0 {
        let f = lcb.pow(steps as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn subresultant_prs(p: &MultiPoly, q: &MultiPoly, v: usize) -> MultiPoly {
    let ctx = p.context().clone();
    let pc = p.to_univariate(v);
    let qc = q.to_univariate(v);
    let cont_p = content(&pc);
    let cont_q = content(&qc);
    let cont = gcd_unnormalized(&cont_p, &cont_q);
    let mut a = primitive(divide_all(&pc, &cont_p));
    let mut b = primitive(divide_all(&qc, &cont_q));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = MultiPoly::one(&ctx);
    let mut h = MultiPoly::one(&ctx);
    let last = loop {
        if b.len() == 1 {
            break vec![MultiPoly::one(&ctx)];
        }
        let delta = (a.len() - b.len()) as u32;
        let r = full_pseudo_rem(&a, &b);
        if r.is_empty() {
            break primitive(b);
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = divide_all(&r, &divisor);
        g = a.last().expect("nonempty").clone();
        h = if delta == 0 {
            h
        } else {
            exact_div(&g.pow(delta), &h.pow(delta - 1)).expect("subresultant identity")
        };
    };
    let g = MultiPoly::from_univariate(&ctx, v, &last);
    (&cont * &g).integer_primitive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::VariableContext;
    use std::sync::Arc;

    fn ctx() -> Arc<VariableContext> {
        VariableContext::numbered("x", 1, 3)
    }

    fn x(c: &Arc<VariableContext>, i: usize) -> MultiPoly {
        MultiPoly::var(c, i - 1)
    }

    fn k(c: &Arc<VariableContext>, n: i64) -> MultiPoly {
        MultiPoly::from_int(c, n)
    }

    #[test]
    fn difference_of_squares_division() {
        let c = ctx();
        let p = &(&x(&c, 1) * &x(&c, 1)) - &k(&c, 1);
        let q = &x(&c, 1) - &k(&c, 1);
        assert_eq!(exact_div(&p, &q).unwrap(), &x(&c, 1) + &k(&c, 1));
    }

    #[test]
    fn not_divisible_and_zero_divisor() {
        let c = ctx();
        let p = &x(&c, 1) + &k(&c, 1);
        assert_eq!(exact_div(&p, &x(&c, 2)), Err(AlgebraError::NotDivisible));
        assert_eq!(exact_div(&p, &MultiPoly::zero(&c)), Err(AlgebraError::ZeroDivisor));
        assert_eq!(exact_div(&x(&c, 1), &(&x(&c, 1) + &k(&c, 1))), Err(AlgebraError::NotDivisible));
    }

    #[test]
    fn gcd_basic_cases() {
        let c = ctx();
        let a = &(&x(&c, 1) * &x(&c, 1)) - &(&x(&c, 2) * &x(&c, 2));
        let b = &x(&c, 1) - &x(&c, 2);
        assert_eq!(gcd(&a, &b).unwrap(), b);
        let p = (&x(&c, 1) * &x(&c, 3)).scale(&BigRational::from_integer((-4).into()));
        assert_eq!(gcd(&p, &MultiPoly::zero(&c)).unwrap(), &x(&c, 1) * &x(&c, 3));
        assert_eq!(gcd(&MultiPoly::zero(&c), &MultiPoly::zero(&c)), Err(AlgebraError::ZeroInput));
    }

    #[test]
    fn gcd_with_shared_factor_in_all_variables() {
        let c = ctx();
        let r = &(&x(&c, 1) * &x(&c, 2)) + &(&x(&c, 3) - &k(&c, 2));
        let p = &(&x(&c, 1) + &x(&c, 3)) * &r;
        let q = &(&(&x(&c, 2) * &x(&c, 2)) - &x(&c, 1)) * &r;
        assert_eq!(gcd(&p, &q).unwrap(), r.monic());
    }

    #[test]
    fn dense_common_factor_in_three_variables() {
        let c = ctx();
        let parse = |terms: &[(i64, i64, [u32; 3])]| {
            MultiPoly::from_terms(
                &c,
                terms.iter().map(|&(n, d, e)| (e.to_vec(), BigRational::new(n.into(), d.into()))),
            )
            .unwrap()
        };
        let p = parse(&[(-6, 5, [3, 1, 3]), (-1, 4, [2, 0, 1]), (4, 5, [1, 2, 0]), (-4, 5, [0, 2, 0])]);
        let r = parse(&[(1, 1, [3, 3, 1]), (1, 2, [2, 3, 2]), (1, 1, [3, 1, 2]), (-2, 1, [0, 1, 0])]);
        let s = parse(&[(-1, 1, [2, 1, 3]), (-1, 5, [1, 2, 2]), (-5, 2, [1, 2, 1]), (-3, 1, [1, 0, 3]), (-2, 1, [1, 0, 0])]);
        let g = gcd(&(&p * &s), &(&r * &s)).unwrap();
        assert_eq!(g, (&gcd(&p, &r).unwrap() * &s).monic());
    }

    #[test]
    fn lcm_cases() {
        let c = ctx();
        let x1 = x(&c, 1);
        assert_eq!(lcm(&[x1.clone(), &x1 * &x1]).unwrap(), &x1 * &x1);
        let a = &x1 - &k(&c, 1);
        assert_eq!(lcm(&[a.clone(), x(&c, 2)]).unwrap(), &a * &x(&c, 2));
        assert_eq!(lcm(&[]), Err(AlgebraError::EmptyList));
        assert_eq!(lcm(&[a, MultiPoly::zero(&c)]), Err(AlgebraError::ZeroInput));
    }
}
