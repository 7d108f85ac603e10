//! Images of polynomials modulo the prime `2^61 - 1`, used to bound GCD degrees.
//!
//! If `a` is a point where the leading coefficients of `p` and `q` in `v` do
//! not vanish (mod the prime), then `deg_v gcd(p, q)` is at most the degree of
//! the GCD of the univariate images `p(v, a)` and `q(v, a)` mod the prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::MultiPoly;

const P: u64 = (1 << 61) - 1;

/// Evaluation points tried before giving up on a bound.
const ATTEMPTS: u64 = 4;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

fn inv(a: u64) -> u64 {
    pow(a, P - 2)
}

fn int_mod(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P)).to_u64().expect("reduced below the modulus")
}

fn rational_mod(q: &BigRational) -> Option<u64> {
    let d = int_mod(q.denom());
    (d != 0).then(|| mul(int_mod(q.numer()), inv(d)))
}

/// Coefficients (by degree in `v`) of `p` with every other variable set to `point`.
fn image(p: &MultiPoly, v: usize, point: &[u64]) -> Option<Vec<u64>> {
    let mut out = vec![0u64; p.degree_in(v) as usize + 1];
    for (m, c) in p.terms() {
        let mut t = rational_mod(c)?;
        for (w, &e) in m.exponents().iter().enumerate() {
            if w != v && e > 0 {
                t = mul(t, pow(point[w], e as u64));
            }
        }
        let k = m.exponents()[v] as usize;
        out[k] = add(out[k], t);
    }
    Some(out)
}

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn rem(a: &mut Vec<u64>, b: &[u64]) {
    let lb_inv = inv(*b.last().unwrap());
    let db = b.len() - 1;
    while a.len() > db {
        let da = a.len() - 1;
        let f = mul(a[da], lb_inv);
        if f != 0 {
            for (j, &bj) in b.iter().enumerate() {
                a[j + da - db] = sub(a[j + da - db], mul(f, bj));
            }
        }
        a.pop();
        trim(a);
    }
}

fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        rem(&mut a, &b);
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Upper bound on `deg_v gcd(p, q)`. Falls back to the trivial bound when no
/// admissible evaluation point is found.
pub(crate) fn gcd_degree_bound(p: &MultiPoly, q: &MultiPoly, v: usize) -> u32 {
    let (dp, dq) = (p.degree_in(v), q.degree_in(v));
    let trivial = dp.min(dq);
    if trivial == 0 {
        return 0;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ v as u64);
    for _ in 0..ATTEMPTS {
        let point: Vec<u64> = (0..p.nvars()).map(|_| rng.gen_range(1..P)).collect();
        let (Some(a), Some(b)) = (image(p, v, &point), image(q, v, &point)) else {
            continue;
        };
        if a[dp as usize] == 0 || b[dq as usize] == 0 {
            continue;
        }
        return gcd_degree(a, b) as u32;
    }
    trivial
}
