use std::collections::BTreeSet;
use std::fmt;

use crate::exactalg::{Field, Ring};

use super::CharPolyError;

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> SquareMatrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, CharPolyError> {
        let n = rows.len();
        if n == 0 {
            return Err(CharPolyError::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(CharPolyError::NotSquare { row: i, len: row.len(), n });
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { n, entries }
    }

    pub fn zeros_like(n: usize, proto: &R) -> Self {
        SquareMatrix { n, entries: vec![proto.zero_like(); n * n] }
    }

    pub fn identity_like(n: usize, proto: &R) -> Self {
        let mut m = Self::zeros_like(n, proto);
        for i in 0..n {
            m.entries[i * n + i] = proto.one_like();
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[R]> {
        self.entries.chunks(self.n)
    }

    /// A prototype scalar for building constants of the same ring.
    pub fn proto(&self) -> &R {
        &self.entries[0]
    }

    pub fn trace(&self) -> R {
        (1..self.n).fold(self.get(0, 0).clone(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Zero-based positions of the nonzero entries.
    pub fn nonzero_positions(&self) -> BTreeSet<(usize, usize)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero_elem())
            .map(|(k, _)| (k / self.n, k % self.n))
            .collect()
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|v| !v.is_zero_elem()).count()
    }

    /// Product skipping zero entries on both sides.
    pub fn mul(&self, other: &SquareMatrix<R>) -> SquareMatrix<R> {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let row_nz: Vec<Vec<usize>> =
            (0..n).map(|k| (0..n).filter(|&j| !other.get(k, j).is_zero_elem()).collect()).collect();
        let mut out: Vec<Option<R>> = vec![None; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero_elem() {
                    continue;
                }
                for &j in &row_nz[k] {
                    let term = a.clone() * other.get(k, j).clone();
                    let slot = &mut out[i * n + j];
                    *slot = Some(match slot.take() {
                        Some(s) => s + term,
                        None => term,
                    });
                }
            }
        }
        let zero = self.proto().zero_like();
        SquareMatrix { n, entries: out.into_iter().map(|v| v.unwrap_or_else(|| zero.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> SquareMatrix<R> {
        let mut acc = Self::identity_like(self.n, self.proto());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &R) -> SquareMatrix<R> {
        SquareMatrix { n: self.n, entries: self.entries.iter().map(|v| v.clone() * c.clone()).collect() }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SquareMatrix<S> {
        SquareMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Ring::is_zero_elem)
    }

    /// The principal submatrix on rows/columns `start..start + size`.
    pub fn block(&self, start: usize, size: usize) -> SquareMatrix<R> {
        SquareMatrix::from_fn(size, |i, j| self.get(start + i, start + j).clone())
    }
}

impl<F: Field> SquareMatrix<F> {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix { n, entries: vec![F::zero_value(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::identity_like(n, &F::one_value())
    }

    pub fn block_diagonal(blocks: &[SquareMatrix<F>]) -> Self {
        let n = blocks.iter().map(|b| b.n).sum();
        let mut m = Self::zeros(n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    let v = b.get(i, j);
                    if !v.is_zero_elem() {
                        m.set(off + i, off + j, v.clone());
                    }
                }
            }
            off += b.n;
        }
        m
    }

    /// `D * M * D^-1` for `D = diag(d)`; `None` if some `d_i` is zero.
    pub fn conjugate_by_diagonal(&self, d: &[F]) -> Option<SquareMatrix<F>> {
        assert_eq!(d.len(), self.n);
        let inv: Vec<F> = d.iter().map(Field::inv).collect::<Option<_>>()?;
        Some(SquareMatrix::from_fn(self.n, |i, j| {
            let v = self.get(i, j);
            if v.is_zero_elem() {
                v.clone()
            } else {
                d[i].clone() * v.clone() * inv[j].clone()
            }
        }))
    }
}

impl<R: fmt::Display> fmt::Display for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<R: fmt::Debug> fmt::Debug for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.chunks(self.n)).finish()
    }
}
