use std::fmt;

use crate::exactalg::{Field, Ring};

use super::CharPolyError;

/// `t^n + c_{n-1} t^{n-1} + ... + c_0`, stored as `[c_0, ..., c_{n-1}]`.
#[derive(Clone, PartialEq)]
pub struct MonicPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> MonicPoly<R> {
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        MonicPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `t^k` for `k <= degree`.
    pub fn coeff(&self, k: usize) -> Option<R> {
        match k.cmp(&self.coeffs.len()) {
            std::cmp::Ordering::Less => Some(self.coeffs[k].clone()),
            std::cmp::Ordering::Equal => self.coeffs.first().map(Ring::one_like),
            std::cmp::Ordering::Greater => None,
        }
    }

    /// Product with another monic polynomial.
    pub fn mul(&self, other: &MonicPoly<R>) -> MonicPoly<R> {
        if self.coeffs.is_empty() {
            return other.clone();
        }
        if other.coeffs.is_empty() {
            return self.clone();
        }
        let one = self.coeffs[0].one_like();
        let full = |c: &[R]| c.iter().cloned().chain(std::iter::once(one.clone())).collect::<Vec<R>>();
        let mut out = R::convolve(&full(&self.coeffs), &full(&other.coeffs));
        out.pop();
        MonicPoly { coeffs: out }
    }
}

/// Balanced product tree, so that large coefficients only meet at the top.
fn tree_product<R: Ring>(mut ps: Vec<MonicPoly<R>>) -> Option<MonicPoly<R>> {
    while ps.len() > 1 {
        ps = ps.chunks(2).map(|c| if c.len() == 2 { c[0].mul(&c[1]) } else { c[0].clone() }).collect();
    }
    ps.pop()
}

impl<F: Field> MonicPoly<F> {
    /// `prod (t - r)` over the given roots.
    pub fn from_roots(roots: &[F]) -> Self {
        let linear = roots.iter().map(|r| MonicPoly { coeffs: vec![-r.clone()] }).collect();
        tree_product(linear).unwrap_or(MonicPoly { coeffs: Vec::new() })
    }

    /// `(t - c)^n` expanded.
    pub fn power_of_linear(c: &F, n: usize) -> Self {
        Self::from_roots(&vec![c.clone(); n])
    }

    /// Exact equality in exact fields, coefficientwise relative closeness otherwise.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.degree() == other.degree() && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a.approx_eq(b))
    }

    pub fn eval(&self, t: &F) -> F {
        let mut acc = F::one_value();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }
}

/// Product of monic polynomials; the degree of the result is the sum of degrees.
pub fn poly_product<R: Ring>(ps: &[MonicPoly<R>]) -> Result<MonicPoly<R>, CharPolyError> {
    tree_product(ps.to_vec()).ok_or(CharPolyError::EmptyList)
}

impl<R: Ring + fmt::Display> fmt::Display for MonicPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.coeffs.len();
        match n {
            0 => write!(f, "1")?,
            1 => write!(f, "t")?,
            _ => write!(f, "t^{n}")?,
        }
        for k in (0..n).rev() {
            let c = &self.coeffs[k];
            if c.is_zero_elem() {
                continue;
            }
            match k {
                0 => write!(f, " + ({c})")?,
                1 => write!(f, " + ({c})*t")?,
                _ => write!(f, " + ({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl<R: fmt::Debug> fmt::Debug for MonicPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonicPoly").field("coeffs", &self.coeffs).finish()
    }
}
