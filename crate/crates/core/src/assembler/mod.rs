//! Realizes a multiset `U` of `8 + 2m` values on `diag(S, D_2m)`: an
//! 8-element part goes on S, the rest on full 2x2 blocks.

use std::cmp::Ordering;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::blocks::{realize_d, BlockError};
use crate::charpoly::{char_poly, poly_product, MonicPoly, SquareMatrix};
use crate::exactalg::Field;
use crate::pattern_s::{XParams, ZeroPattern, S_DIM};
use crate::solver::{construction, SolverError};

/// Number of distinct values above which an 8-subset off the zero set of
/// `psi` is guaranteed: `deg psi + 8`.
pub const DISTINCT_THRESHOLD: usize = 102;

pub const DEFAULT_RETRIES: usize = 10_000;

pub const DEFAULT_SEED: u64 = 0;

/// Largest matrix (or diagonal block) whose characteristic polynomial
/// [`verify`] computes directly.
pub const MAX_DIRECT_DIM: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AssemblerError {
    #[error("no realizable 8-subset found after {tried} candidates")]
    SelectionFailed { tried: usize },
    #[error("multiset of size {0} is not 8 plus an even number")]
    BadCardinality(usize),
    #[error("matrix is {matrix}x{matrix} but pattern is {pattern}x{pattern} and target has degree {target}")]
    DimensionMismatch { matrix: usize, pattern: usize, target: usize },
    #[error("diagonal block of size {size} at {start} exceeds the direct limit of {max}")]
    BlockTooLarge { start: usize, size: usize, max: usize },
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Block(#[from] BlockError),
}

#[derive(Debug, Clone)]
pub struct SelectionConfig {
    pub distinct_threshold: usize,
    pub retries: usize,
    pub seed: u64,
}

impl Default for SelectionConfig {
    fn default() -> Self {
        SelectionConfig { distinct_threshold: DISTINCT_THRESHOLD, retries: DEFAULT_RETRIES, seed: DEFAULT_SEED }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    GenericSubset,
    RepeatedValue,
}

#[derive(Debug, Clone)]
pub struct SubsetSelection<F> {
    pub branch: Branch,
    pub sigma: Vec<F>,
    pub remainder: Vec<F>,
    /// Candidate subsets tested (0 for the repeated-value branch taken directly).
    pub tried: usize,
    /// Parameters of X realizing `sigma`.
    pub params: XParams<F>,
}

/// Distinct values in canonical order with their multiplicities.
pub fn distinct_with_multiplicity<F: Field>(u: &[F]) -> Vec<(F, usize)> {
    let mut sorted = u.to_vec();
    sorted.sort_by(F::canonical_cmp);
    let mut out: Vec<(F, usize)> = Vec::new();
    for v in sorted {
        match out.last_mut() {
            Some((w, k)) if w.canonical_cmp(&v) == Ordering::Equal => *k += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

/// `u` with one occurrence of each element of `take` removed, order kept.
fn multiset_minus<F: Field>(u: &[F], take: &[F]) -> Vec<F> {
    let mut used = vec![false; u.len()];
    for t in take {
        let i = (0..u.len())
            .find(|&i| !used[i] && u[i].canonical_cmp(t) == Ordering::Equal)
            .expect("subset drawn from the multiset");
        used[i] = true;
    }
    u.iter().zip(used).filter(|(_, used)| !used).map(|(v, _)| v.clone()).collect()
}

/// Picks the part of `u` that goes on S.
pub fn select_subset<F: Field>(u: &[F], config: &SelectionConfig) -> Result<SubsetSelection<F>, AssemblerError> {
    if u.len() < S_DIM {
        return Err(AssemblerError::BadCardinality(u.len()));
    }
    let c = construction()?;
    let distinct = distinct_with_multiplicity(u);
    let repeated = distinct.iter().find(|(_, k)| *k >= S_DIM).map(|(v, _)| v.clone());
    let repeated_branch = |value: F, tried: usize| -> Result<SubsetSelection<F>, AssemblerError> {
        let sigma = vec![value; S_DIM];
        let params = c.realize_spectrum(&sigma)?;
        Ok(SubsetSelection { branch: Branch::RepeatedValue, remainder: multiset_minus(u, &sigma), sigma, tried, params })
    };
    if distinct.len() < config.distinct_threshold {
        if let Some(v) = repeated {
            return repeated_branch(v, 0);
        }
    }
    let mut tried = 0;
    if distinct.len() >= S_DIM {
        let mut by_mult: Vec<usize> = (0..distinct.len()).collect();
        by_mult.sort_by(|&a, &b| distinct[b].1.cmp(&distinct[a].1).then(a.cmp(&b)));
        let greedy: Vec<usize> = by_mult[..S_DIM].to_vec();
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        let candidates = std::iter::once(greedy)
            .chain(std::iter::repeat_with(|| sample(&mut rng, distinct.len(), S_DIM).into_vec()));
        for idx in candidates.take(config.retries.max(1)) {
            tried += 1;
            let sigma: Vec<F> = idx.iter().map(|&i| distinct[i].0.clone()).collect();
            match c.realize_spectrum(&sigma) {
                Ok(params) => {
                    return Ok(SubsetSelection {
                        branch: Branch::GenericSubset,
                        remainder: multiset_minus(u, &sigma),
                        sigma,
                        tried,
                        params,
                    })
                }
                Err(SolverError::Unrealizable(_)) => continue,
                Err(e) => return Err(e.into()),
            }
        }
    }
    match repeated {
        Some(v) => repeated_branch(v, tried),
        None => Err(AssemblerError::SelectionFailed { tried }),
    }
}

/// `diag(S, D_{2m})` for a multiset of size `8 + 2m`.
pub fn assembled_pattern(size: usize) -> Result<ZeroPattern, AssemblerError> {
    if size < S_DIM || !(size - S_DIM).is_multiple_of(2) {
        return Err(AssemblerError::BadCardinality(size));
    }
    Ok(ZeroPattern::block_diagonal(&[ZeroPattern::s(), ZeroPattern::full_blocks((size - S_DIM) / 2)]))
}

#[derive(Debug, Clone)]
pub struct RealizationReport<F> {
    pub matrix: SquareMatrix<F>,
    /// Pattern positions holding a zero.
    pub missing: Vec<(usize, usize)>,
    /// Nonzero entries outside the pattern.
    pub extra: Vec<(usize, usize)>,
    pub nonzero_count: usize,
    /// `(start, size, char poly)` per diagonal block of the matrix.
    pub block_polys: Vec<(usize, usize, MonicPoly<F>)>,
    pub assembled: MonicPoly<F>,
    pub target: MonicPoly<F>,
    /// Whether the whole-matrix characteristic polynomial agrees with the
    /// blockwise product; only computed for small matrices.
    pub whole_matrix_agrees: Option<bool>,
    pub pass: bool,
}

impl<F: Field> RealizationReport<F> {
    pub fn pattern_ok(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }

    pub fn count_ok(&self) -> bool {
        self.nonzero_count + 1 == 2 * self.matrix.n()
    }

    pub fn poly_ok(&self) -> bool {
        self.assembled.approx_eq(&self.target) && self.whole_matrix_agrees != Some(false)
    }

    /// Human-readable reasons for failure; empty on pass.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.pattern_ok() {
            out.push(format!(
                "pattern violation: {} missing, {} extra positions",
                self.missing.len(),
                self.extra.len()
            ));
        }
        if !self.count_ok() {
            out.push(format!("nonzero count {} is not 2n-1 = {}", self.nonzero_count, 2 * self.matrix.n() - 1));
        }
        if self.whole_matrix_agrees == Some(false) {
            out.push("blockwise and whole-matrix characteristic polynomials differ".into());
        }
        if !self.assembled.approx_eq(&self.target) {
            out.push("polynomial mismatch".into());
        }
        out
    }
}

/// Independent check of a claimed realization: support against `pattern`,
/// nonzero count against `2n - 1`, and characteristic polynomial against
/// `target`, computed blockwise over the diagonal blocks of the matrix.
pub fn verify<F: Field>(
    m: &SquareMatrix<F>,
    pattern: &ZeroPattern,
    target: &MonicPoly<F>,
) -> Result<RealizationReport<F>, AssemblerError> {
    let n = m.n();
    if pattern.n() != n || target.degree() != n {
        return Err(AssemblerError::DimensionMismatch { matrix: n, pattern: pattern.n(), target: target.degree() });
    }
    let support = ZeroPattern::of_matrix(m);
    let missing = one_based(pattern.difference(&support));
    let extra = one_based(support.difference(pattern));
    let mut block_polys = Vec::new();
    for (start, size) in support.diagonal_blocks() {
        if size > MAX_DIRECT_DIM {
            return Err(AssemblerError::BlockTooLarge { start, size, max: MAX_DIRECT_DIM });
        }
        block_polys.push((start, size, char_poly(&m.block(start, size))));
    }
    let polys: Vec<MonicPoly<F>> = block_polys.iter().map(|(_, _, p)| p.clone()).collect();
    let assembled = poly_product(&polys).unwrap_or_else(|_| MonicPoly::from_coeffs(Vec::new()));
    let whole_matrix_agrees = (n <= MAX_DIRECT_DIM).then(|| char_poly(m).approx_eq(&assembled));
    let mut report = RealizationReport {
        matrix: m.clone(),
        missing,
        extra,
        nonzero_count: support.len(),
        block_polys,
        assembled,
        target: target.clone(),
        whole_matrix_agrees,
        pass: false,
    };
    report.pass = report.failures().is_empty();
    Ok(report)
}

fn one_based(v: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    v.into_iter().map(|(r, c)| (r + 1, c + 1)).collect()
}

/// Selection plus the verified realization.
#[derive(Debug, Clone)]
pub struct Assembly<F> {
    pub selection: SubsetSelection<F>,
    pub report: RealizationReport<F>,
}

/// Realizes `prod (t - u)` on `diag(S, D_{2m})`, `|u| = 8 + 2m`.
pub fn realize_full<F: Field>(u: &[F], config: &SelectionConfig) -> Result<Assembly<F>, AssemblerError> {
    let pattern = assembled_pattern(u.len())?;
    let selection = select_subset(u, config)?;
    let s_block = selection.params.matrix();
    let d_block = realize_d(&selection.remainder)?;
    let matrix = SquareMatrix::block_diagonal(&[s_block, d_block]);
    let report = verify(&matrix, &pattern, &MonicPoly::from_roots(u))?;
    Ok(Assembly { selection, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, BigRational};

    fn ints(r: std::ops::RangeInclusive<i64>) -> Vec<BigRational> {
        r.map(int).collect()
    }

    #[test]
    fn desk_scale_pipeline() {
        let u = ints(1..=10);
        let a = realize_full(&u, &SelectionConfig::default()).unwrap();
        assert!(a.report.pass, "{:?}", a.report.failures());
        assert_eq!(a.report.nonzero_count, 19);
        assert_eq!(a.report.whole_matrix_agrees, Some(true));
        assert_eq!(a.selection.branch, Branch::GenericSubset);
    }

    #[test]
    fn repeated_value_branch() {
        let u = vec![int(5); 12];
        let a = realize_full(&u, &SelectionConfig::default()).unwrap();
        assert_eq!(a.selection.branch, Branch::RepeatedValue);
        assert!(a.report.pass);
    }

    #[test]
    fn cardinality_checked() {
        assert_eq!(
            realize_full(&ints(1..=9), &SelectionConfig::default()).unwrap_err(),
            AssemblerError::BadCardinality(9)
        );
        assert_eq!(select_subset(&ints(1..=7), &SelectionConfig::default()).unwrap_err(), AssemblerError::BadCardinality(7));
    }

    #[test]
    fn conservation_and_determinism() {
        let mut u = ints(1..=12);
        u.extend(ints(3..=6));
        let cfg = SelectionConfig { seed: 7, ..Default::default() };
        let a = select_subset(&u, &cfg).unwrap();
        let b = select_subset(&u, &cfg).unwrap();
        assert_eq!(a.sigma, b.sigma);
        let mut joined = a.sigma.clone();
        joined.extend(a.remainder.clone());
        joined.sort();
        let mut sorted = u.clone();
        sorted.sort();
        assert_eq!(joined, sorted);
    }

    #[test]
    fn negative_controls() {
        let u = ints(1..=10);
        let a = realize_full(&u, &SelectionConfig::default()).unwrap();
        let pattern = assembled_pattern(10).unwrap();
        let (r, c) = *pattern.support().iter().next().unwrap();
        let mut m = a.report.matrix.clone();
        m.set(r, c, int(0));
        let bad = verify(&m, &pattern, &a.report.target).unwrap();
        assert!(!bad.pass && !bad.pattern_ok());
        let mut wrong = u.clone();
        wrong[0] = int(11);
        let bad = verify(&a.report.matrix, &pattern, &MonicPoly::from_roots(&wrong)).unwrap();
        assert!(!bad.pass && bad.pattern_ok());
        assert_eq!(bad.failures(), vec!["polynomial mismatch".to_string()]);
        assert!(matches!(
            verify(&a.report.matrix, &ZeroPattern::s(), &a.report.target),
            Err(AssemblerError::DimensionMismatch { .. })
        ));
    }
}
