#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use rand::Rng;
use zeropatterns::charpoly::{det_bruteforce, MonicPoly, SquareMatrix};
use zeropatterns::exactalg::{BigRational, MultiPoly, VariableContext};

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn small_rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| q(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=5).prop_map(|(n, d)| q(n, d))
}

pub fn ctx3() -> Arc<VariableContext> {
    VariableContext::numbered("x", 1, 3)
}

/// Sparse polynomials in three variables, up to five terms of degree <= 3 per variable.
pub fn poly3() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec(((0u32..=3, 0u32..=3, 0u32..=3), small_rational()), 0..=5).prop_map(|terms| {
        MultiPoly::from_terms(&ctx3(), terms.into_iter().map(|((a, b, c), k)| (vec![a, b, c], k))).unwrap()
    })
}

pub fn rational_matrix(n: usize) -> impl Strategy<Value = SquareMatrix<BigRational>> {
    proptest::collection::vec(small_rational(), n * n).prop_map(move |v| SquareMatrix::from_fn(n, |i, j| v[i * n + j].clone()))
}

/// `det(tI - M)` by cofactor expansion over `Q[t]`: independent of the
/// recurrence used by `char_poly`.
pub fn charpoly_oracle(m: &SquareMatrix<BigRational>) -> MonicPoly<BigRational> {
    let ctx = VariableContext::new(["t"]).unwrap();
    let t = MultiPoly::var(&ctx, 0);
    let n = m.n();
    let tm = SquareMatrix::from_fn(n, |i, j| {
        let e = MultiPoly::constant(&ctx, -m.get(i, j).clone());
        if i == j {
            &e + &t
        } else {
            e
        }
    });
    let det = det_bruteforce(&tm).unwrap();
    let mut coeffs: Vec<BigRational> =
        det.to_univariate(0).iter().map(|c| c.as_constant().unwrap_or_else(|| q(0, 1))).collect();
    coeffs.resize(n + 1, q(0, 1));
    assert_eq!(coeffs[n], q(1, 1));
    coeffs.pop();
    MonicPoly::from_coeffs(coeffs)
}

pub fn random_rational<R: Rng>(rng: &mut R, span: i64, den: i64) -> BigRational {
    q(rng.gen_range(-span..=span), rng.gen_range(1..=den))
}

pub fn random_nonzero<R: Rng>(rng: &mut R, span: i64, den: i64) -> BigRational {
    loop {
        let v = random_rational(rng, span, den);
        if v != q(0, 1) {
            return v;
        }
    }
}
