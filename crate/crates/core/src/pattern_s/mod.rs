//! The 8x8 pattern S: the parametrized matrix X, its symbolic characteristic
//! coefficients, the certificate that S is not spectrally arbitrary on its
//! own, the two known rational witnesses, and diagonal-similarity normalization.

mod zero_pattern;

pub use zero_pattern::{ZeroPattern, S_POSITIONS};

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::charpoly::{char_poly, SquareMatrix};
use crate::exactalg::{exact_div, rat, AlgebraError, BigRational, Field, MultiPoly, Ring, VariableContext};

/// Dimension of S.
pub const S_DIM: usize = 8;

/// Number of free parameters of X.
pub const NUM_PARAMS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("parameter x{0} is zero")]
    ZeroParameter(usize),
    #[error("expected {expected} parameters, got {got}")]
    ParamCount { expected: usize, got: usize },
    #[error("matrix does not have pattern S ({missing} missing, {extra} extra positions)")]
    WrongPattern { missing: usize, extra: usize },
    #[error("chain entry ({row},{col}) is zero")]
    ZeroChainEntry { row: usize, col: usize },
    #[error("scale factor is zero")]
    ZeroScale,
    #[error("position ({row},{col}) outside a {n}x{n} pattern")]
    OutOfRange { row: usize, col: usize, n: usize },
    #[error("certificate failed: {0}")]
    CertificateFailed(String),
}

/// Values for `x1..x8`, all nonzero.
#[derive(Clone, PartialEq, Debug)]
pub struct XParams<F> {
    values: Vec<F>,
}

impl<F: Field> XParams<F> {
    pub fn new(values: Vec<F>) -> Result<Self, PatternError> {
        if values.len() != NUM_PARAMS {
            return Err(PatternError::ParamCount { expected: NUM_PARAMS, got: values.len() });
        }
        if let Some(i) = values.iter().position(Ring::is_zero_elem) {
            return Err(PatternError::ZeroParameter(i + 1));
        }
        Ok(XParams { values })
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    /// `x_i` with the one-based index used throughout.
    pub fn x(&self, i: usize) -> &F {
        &self.values[i - 1]
    }

    pub fn matrix(&self) -> SquareMatrix<F> {
        build_x(&self.values).expect("validated parameters")
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<XParams<G>, PatternError> {
        XParams::new(self.values.iter().map(f).collect())
    }
}

impl XParams<BigRational> {
    pub fn to_field<F: Field>(&self) -> XParams<F> {
        XParams { values: self.values.iter().map(F::from_rational).collect() }
    }
}

/// The matrix X(x1, ..., x8). Works over any ring, including polynomial
/// entries for the symbolic computation.
pub fn build_x<R: Ring>(x: &[R]) -> Result<SquareMatrix<R>, PatternError> {
    if x.len() != NUM_PARAMS {
        return Err(PatternError::ParamCount { expected: NUM_PARAMS, got: x.len() });
    }
    if let Some(i) = x.iter().position(Ring::is_zero_elem) {
        return Err(PatternError::ZeroParameter(i + 1));
    }
    let one = x[0].one_like();
    let mut m = SquareMatrix::zeros_like(S_DIM, &x[0]);
    // chain of ones on the superdiagonal, except (8,1) closing the cycle via x6
    for i in 0..7 {
        m.set(i, i + 1, one.clone());
    }
    let mut put = |r: usize, c: usize, k: usize| m.set(r - 1, c - 1, x[k - 1].clone());
    put(1, 1, 1);
    put(2, 2, 2);
    put(3, 2, 3);
    put(8, 6, 4);
    put(8, 4, 5);
    put(8, 1, 6);
    put(2, 1, 7);
    put(6, 2, 8);
    Ok(m)
}

/// The symbolic coefficients of `det(tI - X) = t^8 + phi_7 t^7 + ... + phi_0`.
#[derive(Clone, Debug)]
pub struct SymbolicPhi {
    context: Arc<VariableContext>,
    coeffs: Vec<MultiPoly>,
}

impl SymbolicPhi {
    /// Computes the coefficients from scratch; [`phi_symbolic`] caches this.
    pub fn compute() -> Self {
        let context = VariableContext::numbered("x", 1, NUM_PARAMS);
        let vars: Vec<MultiPoly> = (0..NUM_PARAMS).map(|i| MultiPoly::var(&context, i)).collect();
        let x = build_x(&vars).expect("variables are nonzero");
        let coeffs = char_poly(&x).into_coeffs();
        SymbolicPhi { context, coeffs }
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.context
    }

    /// `phi_i`, the coefficient of `t^i`.
    pub fn phi(&self, i: usize) -> &MultiPoly {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// All eight coefficients at a concrete parameter point.
    pub fn evaluate<F: Field>(&self, x: &[F]) -> Result<Vec<F>, AlgebraError> {
        self.coeffs.iter().map(|p| p.evaluate(x)).collect()
    }
}

static PHI: OnceLock<SymbolicPhi> = OnceLock::new();

/// Cached symbolic coefficients of the characteristic polynomial of X.
pub fn phi_symbolic() -> &'static SymbolicPhi {
    PHI.get_or_init(SymbolicPhi::compute)
}

/// Certifies that `phi_4` is a multiple of `phi_7 = -(x1 + x2)`, so no matrix
/// with pattern S has `phi_7 = 0` and `phi_4 != 0`. Returns the quotient.
pub fn obstruction_certificate() -> Result<MultiPoly, PatternError> {
    let phi = phi_symbolic();
    let phi7 = phi.phi(7);
    let phi4 = phi.phi(4);
    if phi7.is_zero() {
        return Err(PatternError::CertificateFailed("phi_7 vanishes identically".into()));
    }
    let q = match exact_div(phi4, phi7) {
        Ok(q) => q,
        Err(AlgebraError::NotDivisible) => {
            return Err(PatternError::CertificateFailed("phi_7 does not divide phi_4".into()))
        }
        Err(e) => return Err(PatternError::CertificateFailed(e.to_string())),
    };
    if q.is_zero() {
        return Err(PatternError::CertificateFailed("quotient is zero".into()));
    }
    if &(&q * phi7) != phi4 {
        return Err(PatternError::CertificateFailed("re-multiplication mismatch".into()));
    }
    Ok(q)
}

/// `X(1, -1, 1, 1, -1, 1, -2, 1)`, which is nilpotent.
pub fn witness_nilpotent() -> XParams<BigRational> {
    XParams::new([1, -1, 1, 1, -1, 1, -2, 1].iter().map(|&v| rat(v, 1)).collect()).expect("nonzero witness")
}

/// Parameters whose matrix has characteristic polynomial `(t - 1)^8`.
pub fn witness_all_ones_spectrum() -> XParams<BigRational> {
    let x7 = BigRational::new(1_007_374_319.into(), 138_787_072.into());
    XParams::new(vec![
        rat(1737, 848),
        rat(5047, 848),
        rat(-4452, 193),
        rat(35, 4),
        rat(2, 7),
        rat(25, 2),
        x7,
        rat(-1325, 7),
    ])
    .expect("nonzero witness")
}

/// Result of [`normalize_to_x`]: the parameters and the diagonal `D` with
/// `D * M * D^-1 = X(params)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Normalization<F> {
    pub params: XParams<F>,
    pub diagonal: Vec<F>,
}

/// Chain positions (one-based) that normalization turns into ones.
const CHAIN: [(usize, usize); 7] = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)];

/// Conjugates a matrix with pattern exactly S by a diagonal matrix so that
/// every chain entry becomes 1, and reads off the parameters.
pub fn normalize_to_x<F: Field>(m: &SquareMatrix<F>) -> Result<Normalization<F>, PatternError> {
    let s = ZeroPattern::s();
    if m.n() != S_DIM {
        return Err(PatternError::WrongPattern { missing: s.len(), extra: m.nonzero_count() });
    }
    let actual = ZeroPattern::of_matrix(m);
    if actual != s {
        return Err(PatternError::WrongPattern {
            missing: s.difference(&actual).len(),
            extra: actual.difference(&s).len(),
        });
    }
    let mut d = vec![F::one_value()];
    for &(r, c) in &CHAIN {
        let e = m.get(r - 1, c - 1);
        if e.is_zero_elem() {
            return Err(PatternError::ZeroChainEntry { row: r, col: c });
        }
        let next = d[r - 1].clone() * e.clone();
        d.push(next);
    }
    let conj = m.conjugate_by_diagonal(&d).expect("diagonal entries are products of nonzero entries");
    let at = |r: usize, c: usize| conj.get(r - 1, c - 1).clone();
    let params = XParams::new(vec![at(1, 1), at(2, 2), at(3, 2), at(8, 6), at(8, 4), at(8, 1), at(2, 1), at(6, 2)])?;
    Ok(Normalization { params, diagonal: d })
}

/// Parameters realizing `c^8 f(t / c)` when `p` realizes `f`: the
/// normalization of `c * X(p)`.
pub fn scale_realization<F: Field>(p: &XParams<F>, c: &F) -> Result<XParams<F>, PatternError> {
    if c.is_zero_elem() {
        return Err(PatternError::ZeroScale);
    }
    Ok(normalize_to_x(&p.matrix().scale(c))?.params)
}
