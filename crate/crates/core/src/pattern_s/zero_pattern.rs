use std::collections::BTreeSet;

use crate::charpoly::SquareMatrix;
use crate::exactalg::Ring;

use super::PatternError;

/// The `*`-positions of an `n x n` zero pattern, stored zero-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZeroPattern {
    n: usize,
    support: BTreeSet<(usize, usize)>,
}

/// One-based `(row, col)` positions of the pattern S, in display order.
pub const S_POSITIONS: [(usize, usize); 15] = [
    (1, 1),
    (1, 2),
    (2, 1),
    (2, 2),
    (2, 3),
    (3, 2),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 2),
    (6, 7),
    (7, 8),
    (8, 1),
    (8, 4),
    (8, 6),
];

impl ZeroPattern {
    pub fn new(n: usize, support: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, PatternError> {
        let support: BTreeSet<_> = support.into_iter().collect();
        if let Some(&(r, c)) = support.iter().find(|&&(r, c)| r >= n || c >= n) {
            return Err(PatternError::OutOfRange { row: r + 1, col: c + 1, n });
        }
        Ok(ZeroPattern { n, support })
    }

    /// Builds from one-based positions, as used in the JSON encoding.
    pub fn from_one_based(n: usize, positions: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, PatternError> {
        let mut zero_based = Vec::new();
        for (r, c) in positions {
            if r == 0 || c == 0 {
                return Err(PatternError::OutOfRange { row: r, col: c, n });
            }
            zero_based.push((r - 1, c - 1));
        }
        Self::new(n, zero_based)
    }

    /// The 8x8 pattern S.
    pub fn s() -> Self {
        Self::from_one_based(8, S_POSITIONS).expect("S positions are in range")
    }

    /// `D_{2m}`: `m` full 2x2 blocks down the diagonal.
    pub fn full_blocks(m: usize) -> Self {
        let support = (0..m).flat_map(|b| {
            let o = 2 * b;
            [(o, o), (o, o + 1), (o + 1, o), (o + 1, o + 1)]
        });
        ZeroPattern { n: 2 * m, support: support.collect() }
    }

    pub fn block_diagonal(parts: &[ZeroPattern]) -> Self {
        let mut off = 0;
        let mut support = BTreeSet::new();
        for p in parts {
            support.extend(p.support.iter().map(|&(r, c)| (r + off, c + off)));
            off += p.n;
        }
        ZeroPattern { n: off, support }
    }

    pub fn of_matrix<R: Ring>(m: &SquareMatrix<R>) -> Self {
        ZeroPattern { n: m.n(), support: m.nonzero_positions() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.support.contains(&(row, col))
    }

    pub fn support(&self) -> &BTreeSet<(usize, usize)> {
        &self.support
    }

    pub fn one_based(&self) -> Vec<(usize, usize)> {
        self.support.iter().map(|&(r, c)| (r + 1, c + 1)).collect()
    }

    /// Positions in `self` but not in `other`.
    pub fn difference(&self, other: &ZeroPattern) -> Vec<(usize, usize)> {
        self.support.difference(&other.support).copied().collect()
    }

    /// Finest partition of `0..n` into consecutive diagonal blocks such that
    /// no support position couples two different blocks. Returns `(start, size)`.
    pub fn diagonal_blocks(&self) -> Vec<(usize, usize)> {
        let mut reach: Vec<usize> = (0..self.n).collect();
        for &(r, c) in &self.support {
            let (lo, hi) = (r.min(c), r.max(c));
            reach[lo] = reach[lo].max(hi);
        }
        let mut blocks = Vec::new();
        let mut start = 0;
        let mut far = 0;
        for i in 0..self.n {
            far = far.max(reach[i]);
            if far == i {
                blocks.push((start, i + 1 - start));
                start = i + 1;
            }
        }
        blocks
    }
}
