//! Spectra of even size on block-diagonal patterns of full 2x2 blocks.

use thiserror::Error;

use crate::charpoly::SquareMatrix;
use crate::exactalg::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("spectrum has odd size {0}")]
    OddCardinality(usize),
}

/// The matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairRealization<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
}

impl<F: Field> PairRealization<F> {
    pub fn matrix(&self) -> SquareMatrix<F> {
        SquareMatrix::from_rows(vec![vec![self.a.clone(), self.b.clone()], vec![self.c.clone(), self.d.clone()]])
            .expect("2x2")
    }

    pub fn entries(&self) -> [&F; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

/// A 2x2 matrix with no zero entries and eigenvalues `lambda`, `mu`.
///
/// With `s = lambda + mu` and `p = lambda * mu`, `a` is the first positive
/// integer with `a != s` and `a (s - a) != p`; then `d = s - a`, `b = 1`,
/// `c = a d - p`.
pub fn realize_pair<F: Field>(lambda: &F, mu: &F) -> PairRealization<F> {
    let s = lambda.clone() + mu.clone();
    let p = lambda.clone() * mu.clone();
    let mut k = 1;
    loop {
        let a = F::from_i64(k);
        let d = s.clone() - a.clone();
        let c = a.clone() * d.clone() - p.clone();
        if !d.is_negligible(s.magnitude() + a.magnitude()) && !c.is_negligible(c_scale(&a, &d, &p)) {
            return PairRealization { a, b: F::one_value(), c, d };
        }
        k += 1;
    }
}

fn c_scale<F: Field>(a: &F, d: &F, p: &F) -> f64 {
    a.magnitude() * d.magnitude() + p.magnitude()
}

/// Block-diagonal matrix of full 2x2 blocks with the given spectrum. Values
/// are sorted canonically and adjacent ones are paired.
pub fn realize_d<F: Field>(spectrum: &[F]) -> Result<SquareMatrix<F>, BlockError> {
    if !spectrum.len().is_multiple_of(2) {
        return Err(BlockError::OddCardinality(spectrum.len()));
    }
    let mut sorted = spectrum.to_vec();
    sorted.sort_by(F::canonical_cmp);
    let blocks: Vec<SquareMatrix<F>> = sorted.chunks(2).map(|pr| realize_pair(&pr[0], &pr[1]).matrix()).collect();
    Ok(SquareMatrix::block_diagonal(&blocks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::{char_poly, MonicPoly};
    use crate::exactalg::{int, BigRational, GaussianRational, Ring};
    use crate::pattern_s::ZeroPattern;
    use proptest::prelude::*;

    #[test]
    fn pair_examples() {
        let r = realize_pair(&int(2), &int(3));
        assert_eq!(r, PairRealization { a: int(1), b: int(1), c: int(-2), d: int(4) });
        let r = realize_pair(&int(0), &int(0));
        assert_eq!(r, PairRealization { a: int(1), b: int(1), c: int(-1), d: int(-1) });
        let i = GaussianRational::i();
        let r = realize_pair(&i, &-i.clone());
        let g = |v| GaussianRational::real(int(v));
        assert_eq!(r, PairRealization { a: g(1), b: g(1), c: g(-2), d: g(-1) });
    }

    #[test]
    fn skips_forbidden_candidates() {
        // s = 1 rules out a = 1; p = 2 * (1 - 2) rules out a = 2
        let (l, m) = (int(2), int(-1));
        let r = realize_pair(&l, &m);
        assert_eq!(r.a, int(3));
        assert_eq!(char_poly(&r.matrix()), MonicPoly::from_roots(&[l, m]));
    }

    #[test]
    fn small_d_pattern() {
        let m = realize_d(&[int(2), int(1), int(2), int(1)]).unwrap();
        assert_eq!(ZeroPattern::of_matrix(&m), ZeroPattern::full_blocks(2));
        assert_eq!(char_poly(&m), MonicPoly::from_roots(&[int(1), int(1), int(2), int(2)]));
        assert_eq!(realize_d(&[int(1)]), Err(BlockError::OddCardinality(1)));
    }

    proptest! {
        #[test]
        fn pair_has_full_support_and_spectrum(a in -30i64..30, b in 1i64..6, c in -30i64..30, d in 1i64..6) {
            let l = BigRational::new(a.into(), b.into());
            let m = BigRational::new(c.into(), d.into());
            let r = realize_pair(&l, &m);
            prop_assert!(r.entries().iter().all(|e| !e.is_zero_elem()));
            prop_assert_eq!(char_poly(&r.matrix()), MonicPoly::from_roots(&[l, m]));
        }
    }
}
