//! Exact characteristic polynomials over any commutative algebra over the
//! rationals, plus a cofactor-expansion determinant used as an oracle.

mod matrix;
mod monic;

pub use matrix::SquareMatrix;
pub use monic::{poly_product, MonicPoly};

use thiserror::Error;

use crate::exactalg::Ring;

/// Largest dimension accepted by [`det_bruteforce`].
pub const BRUTEFORCE_MAX_DIM: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharPolyError {
    #[error("matrix has no rows")]
    Empty,
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("empty polynomial list")]
    EmptyList,
    #[error("dimension {n} exceeds the brute-force limit of {max}")]
    DimensionTooLarge { n: usize, max: usize },
}

/// `det(tI - M)` by the Faddeev-LeVerrier recurrence.
///
/// With `N_1 = I`, each step forms `A_k = M * N_k`, reads off
/// `c_{n-k} = -tr(A_k) / k`, and sets `N_{k+1} = A_k + c_{n-k} I`.
/// Only divisions by the integers `1..=n` occur, so this works verbatim over
/// rationals, Gaussian rationals and polynomial entries.
pub fn char_poly<R: Ring>(m: &SquareMatrix<R>) -> MonicPoly<R> {
    let n = m.n();
    let proto = m.proto().clone();
    let mut coeffs = vec![proto.zero_like(); n];
    let mut acc = SquareMatrix::identity_like(n, &proto);
    for k in 1..=n {
        let a = m.mul(&acc);
        let c = -(a.trace().div_integer(k as i64));
        if k < n {
            acc = a;
            for i in 0..n {
                let d = acc.get(i, i).clone() + c.clone();
                acc.set(i, i, d);
            }
        }
        coeffs[n - k] = c;
    }
    MonicPoly::from_coeffs(coeffs)
}

/// Determinant by Laplace expansion along the first remaining row, skipping
/// zero entries. Exponential cost, so limited to [`BRUTEFORCE_MAX_DIM`].
pub fn det_bruteforce<R: Ring>(m: &SquareMatrix<R>) -> Result<R, CharPolyError> {
    let n = m.n();
    if n > BRUTEFORCE_MAX_DIM {
        return Err(CharPolyError::DimensionTooLarge { n, max: BRUTEFORCE_MAX_DIM });
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(laplace(m, 0, &cols))
}

fn laplace<R: Ring>(m: &SquareMatrix<R>, row: usize, cols: &[usize]) -> R {
    if cols.is_empty() {
        return m.proto().one_like();
    }
    let mut acc = m.proto().zero_like();
    for (pos, &c) in cols.iter().enumerate() {
        let v = m.get(row, c);
        if v.is_zero_elem() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = laplace(m, row + 1, &rest);
        if minor.is_zero_elem() {
            continue;
        }
        let term = v.clone() * minor;
        acc = if pos % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat, BigRational, Field, MultiPoly, VariableContext};

    fn qm(rows: &[&[i64]]) -> SquareMatrix<BigRational> {
        SquareMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn nilpotent_jordan_block() {
        let p = char_poly(&qm(&[&[0, 1], &[0, 0]]));
        assert_eq!(p.coeffs(), &[int(0), int(0)]);
    }

    #[test]
    fn identity_determinant() {
        assert_eq!(det_bruteforce(&SquareMatrix::<BigRational>::identity(3)).unwrap(), int(1));
    }

    #[test]
    fn symbolic_two_by_two_determinant() {
        let ctx = VariableContext::new(["a", "b", "c", "d"]).unwrap();
        let v = |i| MultiPoly::var(&ctx, i);
        let m = SquareMatrix::from_rows(vec![vec![v(0), v(1)], vec![v(2), v(3)]]).unwrap();
        assert_eq!(det_bruteforce(&m).unwrap(), &(&v(0) * &v(3)) - &(&v(1) * &v(2)));
    }

    #[test]
    fn dimension_limit() {
        let m = SquareMatrix::<BigRational>::identity(10);
        assert_eq!(det_bruteforce(&m), Err(CharPolyError::DimensionTooLarge { n: 10, max: 9 }));
    }

    #[test]
    fn product_of_linear_factors() {
        let a = MonicPoly::from_roots(&[int(1)]);
        let b = MonicPoly::from_roots(&[int(-1)]);
        assert_eq!(poly_product(&[a, b]).unwrap().coeffs(), &[int(-1), int(0)]);
        assert_eq!(poly_product::<BigRational>(&[]), Err(CharPolyError::EmptyList));
    }

    #[test]
    fn repeated_root_gives_binomials() {
        let c = rat(3, 2);
        let p = poly_product(&vec![MonicPoly::from_roots(std::slice::from_ref(&c)); 8]).unwrap();
        let binom = [1i64, 8, 28, 56, 70, 56, 28, 8];
        for (k, coef) in p.coeffs().iter().enumerate() {
            let sign = if (8 - k) % 2 == 0 { 1 } else { -1 };
            let expect = int(sign * binom[k]) * num_traits::Pow::pow(c.clone(), (8 - k) as u32);
            assert_eq!(coef, &expect, "coefficient of t^{k}");
        }
        assert_eq!(p, MonicPoly::power_of_linear(&c, 8));
    }

    #[test]
    fn from_roots_evaluates_to_zero_at_roots() {
        let roots = [int(2), rat(-1, 3), int(0)];
        let p = MonicPoly::from_roots(&roots);
        for r in &roots {
            assert!(Field::is_negligible(&p.eval(r), 0.0));
        }
    }

    #[test]
    fn mismatched_rows_rejected() {
        let r = SquareMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(3)]]);
        assert_eq!(r, Err(CharPolyError::NotSquare { row: 1, len: 1, n: 2 }));
    }
}
