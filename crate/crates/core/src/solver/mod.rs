//! Symbolic solution of `phi_i = tau_i` for the parameters of X, the
//! polynomial `pi` collecting every numerator and denominator, and concrete
//! realization of coefficient vectors and spectra on S.

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::charpoly::{char_poly, MonicPoly};
use crate::exactalg::{lcm, AlgebraError, Field, MultiPoly, RationalFunction, VariableContext};
use crate::pattern_s::{
    phi_symbolic, scale_realization, witness_all_ones_spectrum, witness_nilpotent, PatternError, SymbolicPhi,
    XParams, NUM_PARAMS, S_DIM,
};

/// `w(tau_i) = 8 - i`: the degree of `tau_i` as a function of the spectrum.
pub const VIETA_WEIGHTS: [u64; 8] = [8, 7, 6, 5, 4, 3, 2, 1];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnrealizableReason {
    /// The denominator of the rational function for `x_variable` vanishes.
    DenominatorVanishes { variable: usize },
    /// The rational function for `x_variable` evaluates to zero.
    NumeratorVanishes { variable: usize },
}

impl fmt::Display for UnrealizableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnrealizableReason::DenominatorVanishes { variable } => write!(f, "denominator of x{variable} vanishes"),
            UnrealizableReason::NumeratorVanishes { variable } => write!(f, "numerator of x{variable} vanishes"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("elimination stalled after solving {solved} variables: no remaining equation is linear in an unsolved one")]
    NotTriangular { solved: usize },
    #[error("not realizable on S: {0}")]
    Unrealizable(UnrealizableReason),
    #[error("expected {expected} values, got {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("realized parameters do not reproduce the target characteristic polynomial")]
    RoundTripFailed,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// One step of the elimination: equation `phi_equation = tau_equation` was
/// solved for `x_variable`, giving `expression` over the working context.
#[derive(Clone, Debug)]
pub struct EliminationStep {
    pub equation: usize,
    pub variable: usize,
    pub expression: RationalFunction,
}

/// `x1..x8` as rational functions of `tau0..tau7`.
#[derive(Clone, Debug)]
pub struct SolutionMap {
    context: Arc<VariableContext>,
    values: Vec<RationalFunction>,
    trace: Vec<EliminationStep>,
}

impl SolutionMap {
    /// The `tau0..tau7` context.
    pub fn context(&self) -> &Arc<VariableContext> {
        &self.context
    }

    /// `x_i` for one-based `i`.
    pub fn value(&self, i: usize) -> &RationalFunction {
        &self.values[i - 1]
    }

    pub fn values(&self) -> &[RationalFunction] {
        &self.values
    }

    pub fn trace(&self) -> &[EliminationStep] {
        &self.trace
    }

    /// `phi_i` with the solution substituted, for every `i`.
    pub fn back_substitute(&self, phi: &SymbolicPhi) -> Result<Vec<RationalFunction>, AlgebraError> {
        phi.coeffs().iter().map(|p| p.evaluate(&self.values)).collect()
    }

    /// Checks `phi_i(solution) = tau_i` as an identity of rational functions.
    /// Returns the first failing index.
    pub fn check_back_substitution(&self, phi: &SymbolicPhi) -> Result<(), usize> {
        let got = self.back_substitute(phi).map_err(|_| 0usize)?;
        for (i, r) in got.iter().enumerate() {
            let tau = MultiPoly::var(&self.context, i);
            if !(r.is_polynomial() && r.numer() == &tau) {
                return Err(i);
            }
        }
        Ok(())
    }

    /// Evaluates the solution at concrete coefficients.
    pub fn realize_coeffs<F: Field>(&self, tau: &CoeffVector<F>) -> Result<XParams<F>, SolverError> {
        let point = tau.values();
        let mut params = Vec::with_capacity(NUM_PARAMS);
        for (k, r) in self.values.iter().enumerate() {
            let variable = k + 1;
            let den = r.denom().evaluate_field(point)?;
            if den.is_negligible(r.denom().magnitude_bound(point)) {
                return Err(SolverError::Unrealizable(UnrealizableReason::DenominatorVanishes { variable }));
            }
            let num = r.numer().evaluate_field(point)?;
            if num.is_negligible(r.numer().magnitude_bound(point)) {
                return Err(SolverError::Unrealizable(UnrealizableReason::NumeratorVanishes { variable }));
            }
            params.push(num.div(&den).expect("denominator checked nonzero"));
        }
        let params = XParams::new(params)?;
        if !char_poly(&params.matrix()).approx_eq(&tau.to_monic()) {
            return Err(SolverError::RoundTripFailed);
        }
        Ok(params)
    }
}

fn working_context() -> Arc<VariableContext> {
    let names = (1..=NUM_PARAMS).map(|i| format!("x{i}")).chain((0..S_DIM).map(|i| format!("tau{i}")));
    VariableContext::new(names).expect("distinct names")
}

/// The `tau0..tau7` context.
pub fn tau_context() -> Arc<VariableContext> {
    VariableContext::numbered("tau", 0, S_DIM)
}

/// Triangular elimination: repeatedly takes the first unused equation (from
/// `phi_7` down to `phi_0`) whose numerator has degree exactly 1 in some
/// unsolved variable (scanning `x1..x8`), solves it and substitutes the result
/// everywhere.
pub fn solve_symbolic(phi: &SymbolicPhi) -> Result<SolutionMap, SolverError> {
    let ctx = working_context();
    let mut eqs: Vec<Option<RationalFunction>> = (0..S_DIM)
        .map(|i| {
            let p = phi.phi(i).with_context(&ctx).expect("x variables are in the working context");
            let tau = MultiPoly::var(&ctx, NUM_PARAMS + i);
            Some(RationalFunction::from_poly(&p - &tau))
        })
        .collect();
    let mut sol: Vec<Option<RationalFunction>> = vec![None; NUM_PARAMS];
    let mut trace = Vec::new();
    while trace.len() < NUM_PARAMS {
        let (eq, v, value) = next_pivot(&eqs, &sol).ok_or(SolverError::NotTriangular { solved: trace.len() })?;
        eqs[eq] = None;
        for e in eqs.iter_mut().flatten() {
            *e = e.substitute(v, &value);
        }
        for s in sol.iter_mut().flatten() {
            *s = s.substitute(v, &value);
        }
        sol[v] = Some(value.clone());
        trace.push(EliminationStep { equation: eq, variable: v + 1, expression: value });
    }
    let tau_ctx = tau_context();
    let values = sol
        .into_iter()
        .map(|s| s.expect("all solved").with_context(&tau_ctx))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SolutionMap { context: tau_ctx, values, trace })
}

fn next_pivot(
    eqs: &[Option<RationalFunction>],
    sol: &[Option<RationalFunction>],
) -> Option<(usize, usize, RationalFunction)> {
    for i in (0..eqs.len()).rev() {
        let Some(e) = &eqs[i] else { continue };
        let num = e.numer();
        for v in 0..sol.len() {
            if sol[v].is_some() || num.degree_in(v) != 1 {
                continue;
            }
            // degree exactly 1 means the linear coefficient is a nonzero polynomial
            let c = num.to_univariate(v);
            let value = RationalFunction::new(-c[0].clone(), c[1].clone()).expect("nonzero linear coefficient");
            return Some((i, v, value));
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FractionPart {
    Numerator,
    Denominator,
}

/// One of the sixteen polynomials whose lcm is `pi`.
#[derive(Clone, Debug)]
pub struct PiFactor {
    pub variable: usize,
    pub part: FractionPart,
    pub poly: MultiPoly,
}

/// `pi`: monic lcm of all numerators and denominators of the solution.
/// Wherever `pi` is nonzero the corresponding polynomial is realizable on S.
#[derive(Clone, Debug)]
pub struct PiPolynomial {
    pub pi: MultiPoly,
    pub provenance: Vec<PiFactor>,
}

impl PiPolynomial {
    /// Degree under `w(tau_i) = 8 - i`.
    pub fn vieta_degree(&self) -> u64 {
        self.pi.weighted_degree(&VIETA_WEIGHTS).expect("pi is nonzero")
    }
}

pub fn build_pi(s: &SolutionMap) -> PiPolynomial {
    let mut provenance = Vec::with_capacity(2 * NUM_PARAMS);
    for (k, r) in s.values().iter().enumerate() {
        for (part, poly) in [(FractionPart::Numerator, r.numer()), (FractionPart::Denominator, r.denom())] {
            provenance.push(PiFactor { variable: k + 1, part, poly: poly.clone() });
        }
    }
    let polys: Vec<MultiPoly> = provenance.iter().map(|f| f.poly.clone()).collect();
    let pi = lcm(&polys).expect("no parameter is identically zero");
    PiPolynomial { pi, provenance }
}

/// Concrete `tau_0..tau_7`, the non-leading coefficients of a monic degree-8
/// polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffVector<F> {
    tau: Vec<F>,
}

impl<F: Field> CoeffVector<F> {
    pub fn new(tau: Vec<F>) -> Result<Self, SolverError> {
        if tau.len() != S_DIM {
            return Err(SolverError::WrongArity { expected: S_DIM, got: tau.len() });
        }
        Ok(CoeffVector { tau })
    }

    pub fn from_monic(p: &MonicPoly<F>) -> Result<Self, SolverError> {
        Self::new(p.coeffs().to_vec())
    }

    /// Vieta: the coefficients of `prod (t - sigma_j)`.
    pub fn from_spectrum(sigma: &[F]) -> Result<Self, SolverError> {
        check_arity(sigma)?;
        let e = elementary_symmetric(sigma);
        let n = sigma.len();
        // tau_{n-k} = (-1)^k e_k
        let tau = (0..n)
            .map(|i| {
                let k = n - i;
                if k.is_multiple_of(2) {
                    e[k].clone()
                } else {
                    -e[k].clone()
                }
            })
            .collect();
        Ok(CoeffVector { tau })
    }

    pub fn values(&self) -> &[F] {
        &self.tau
    }

    pub fn to_monic(&self) -> MonicPoly<F> {
        MonicPoly::from_coeffs(self.tau.clone())
    }
}

fn check_arity<T>(sigma: &[T]) -> Result<(), SolverError> {
    if sigma.len() != S_DIM {
        return Err(SolverError::WrongArity { expected: S_DIM, got: sigma.len() });
    }
    Ok(())
}

/// `e_0..e_n` of the given values.
pub fn elementary_symmetric<F: Field>(values: &[F]) -> Vec<F> {
    let mut e = vec![F::zero_value(); values.len() + 1];
    e[0] = F::one_value();
    for (j, v) in values.iter().enumerate() {
        for k in (1..=j + 1).rev() {
            let add = e[k - 1].clone() * v.clone();
            e[k] = e[k].clone() + add;
        }
    }
    e
}

/// The solution map together with `pi`; built once.
#[derive(Clone, Debug)]
pub struct Construction {
    pub solution: SolutionMap,
    pub pi: PiPolynomial,
}

impl Construction {
    pub fn build() -> Result<Self, SolverError> {
        let solution = solve_symbolic(phi_symbolic())?;
        let pi = build_pi(&solution);
        Ok(Construction { solution, pi })
    }

    /// `pi(s_8, s_7, ..., s_1)` where `s_k` is `(-1)^k e_k(sigma)`.
    pub fn psi<F: Field>(&self, sigma: &[F]) -> Result<F, SolverError> {
        let tau = CoeffVector::from_spectrum(sigma)?;
        Ok(self.pi.pi.evaluate_field(tau.values())?)
    }

    pub fn realize_coeffs<F: Field>(&self, tau: &CoeffVector<F>) -> Result<XParams<F>, SolverError> {
        self.solution.realize_coeffs(tau)
    }

    /// Realizes `prod (t - sigma_j)` on S, falling back to the scaled
    /// witnesses when all eight values coincide.
    pub fn realize_spectrum<F: Field>(&self, sigma: &[F]) -> Result<XParams<F>, SolverError> {
        let tau = CoeffVector::from_spectrum(sigma)?;
        let params = match self.realize_coeffs(&tau) {
            Ok(p) => return Ok(p),
            Err(SolverError::Unrealizable(reason)) => match constant_value(sigma) {
                Some(c) if c.is_zero_elem() => witness_nilpotent().to_field::<F>(),
                Some(c) => scale_realization(&witness_all_ones_spectrum().to_field::<F>(), c)?,
                None => return Err(SolverError::Unrealizable(reason)),
            },
            Err(e) => return Err(e),
        };
        if !char_poly(&params.matrix()).approx_eq(&tau.to_monic()) {
            return Err(SolverError::RoundTripFailed);
        }
        Ok(params)
    }
}

fn constant_value<F: Field>(sigma: &[F]) -> Option<&F> {
    let first = sigma.first()?;
    sigma.iter().all(|s| s.approx_eq(first)).then_some(first)
}

static CONSTRUCTION: OnceLock<Result<Construction, SolverError>> = OnceLock::new();

/// Cached [`Construction::build`].
pub fn construction() -> Result<&'static Construction, SolverError> {
    CONSTRUCTION.get_or_init(Construction::build).as_ref().map_err(Clone::clone)
}

pub fn realize_coeffs<F: Field>(tau: &CoeffVector<F>) -> Result<XParams<F>, SolverError> {
    construction()?.realize_coeffs(tau)
}

pub fn realize_spectrum_s<F: Field>(sigma: &[F]) -> Result<XParams<F>, SolverError> {
    construction()?.realize_spectrum(sigma)
}

pub fn psi<F: Field>(sigma: &[F]) -> Result<F, SolverError> {
    construction()?.psi(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat, BigRational, GaussianRational, Ring};

    fn ones_tau() -> CoeffVector<BigRational> {
        CoeffVector::from_monic(&MonicPoly::power_of_linear(&int(1), 8)).unwrap()
    }

    #[test]
    fn elimination_order_starts_with_trace() {
        let c = construction().unwrap();
        let first = &c.solution.trace()[0];
        assert_eq!((first.equation, first.variable), (7, 1));
        assert_eq!(c.solution.trace().len(), 8);
    }

    #[test]
    fn back_substitution_identity() {
        let c = construction().unwrap();
        assert_eq!(c.solution.check_back_substitution(phi_symbolic()), Ok(()));
    }

    #[test]
    fn pi_degree_and_divisibility() {
        let c = construction().unwrap();
        assert_eq!(c.pi.vieta_degree(), 94);
        assert_eq!(c.pi.pi.leading_coeff(), Some(&int(1)));
        for f in &c.pi.provenance {
            assert!(crate::exactalg::exact_div(&c.pi.pi, &f.poly).is_ok());
        }
    }

    #[test]
    fn witness_recovered_exactly() {
        let p = realize_coeffs(&ones_tau()).unwrap();
        assert_eq!(p, witness_all_ones_spectrum());
    }

    #[test]
    fn conjugate_spectrum_unrealizable() {
        let tau = CoeffVector::new([1, 0, 4, 0, 6, 0, 4, 0].iter().map(|&v| int(v)).collect()).unwrap();
        assert!(matches!(realize_coeffs(&tau), Err(SolverError::Unrealizable(_))));
        let i = GaussianRational::i();
        let sigma: Vec<_> = (0..8).map(|k| if k % 2 == 0 { i.clone() } else { -i.clone() }).collect();
        assert!(psi(&sigma).unwrap().is_zero_elem());
        assert!(matches!(realize_spectrum_s(&sigma), Err(SolverError::Unrealizable(_))));
    }

    #[test]
    fn constant_spectra_fall_back() {
        assert_eq!(realize_spectrum_s(&vec![int(0); 8]).unwrap(), witness_nilpotent());
        let p = realize_spectrum_s(&vec![int(3); 8]).unwrap();
        assert_eq!(char_poly(&p.matrix()), MonicPoly::power_of_linear(&int(3), 8));
    }

    #[test]
    fn distinct_integers_realize() {
        let sigma: Vec<_> = (1..=8).map(int).collect();
        let p = realize_spectrum_s(&sigma).unwrap();
        assert_eq!(char_poly(&p.matrix()), MonicPoly::from_roots(&sigma));
        assert!(!psi(&sigma).unwrap().is_zero_elem());
    }

    #[test]
    fn vieta_matches_product() {
        let sigma = vec![int(2), rat(-1, 3), int(0), int(5), rat(7, 2), int(-4), int(1), int(1)];
        assert_eq!(CoeffVector::from_spectrum(&sigma).unwrap().to_monic(), MonicPoly::from_roots(&sigma));
        assert_eq!(
            CoeffVector::<BigRational>::from_spectrum(&sigma[..3]),
            Err(SolverError::WrongArity { expected: 8, got: 3 })
        );
    }
}
