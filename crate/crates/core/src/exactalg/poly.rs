//! Sparse multivariate polynomials with rational coefficients.
//!
//! Terms are stored in a vector sorted by descending graded lexicographic
//! order, with no zero coefficients, so structural equality is polynomial
//! equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::context::VariableContext;
use super::scalar::{Field, Ring};
use super::AlgebraError;

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then lexicographic with the first context variable most significant).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone)]
pub struct MultiPoly {
    ctx: Arc<VariableContext>,
    terms: Vec<(Monomial, BigRational)>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl MultiPoly {
    pub fn zero(ctx: &Arc<VariableContext>) -> Self {
        MultiPoly { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn one(ctx: &Arc<VariableContext>) -> Self {
        Self::constant(ctx, BigRational::one())
    }

    pub fn constant(ctx: &Arc<VariableContext>, c: BigRational) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(Monomial::one(ctx.len()), c)] };
        MultiPoly { ctx: ctx.clone(), terms }
    }

    pub fn from_int(ctx: &Arc<VariableContext>, c: i64) -> Self {
        Self::constant(ctx, BigRational::from_integer(c.into()))
    }

    /// The polynomial consisting of the single variable with index `i`.
    pub fn var(ctx: &Arc<VariableContext>, i: usize) -> Self {
        assert!(i < ctx.len(), "variable index {i} out of range");
        let mut e = vec![0; ctx.len()];
        e[i] = 1;
        MultiPoly { ctx: ctx.clone(), terms: vec![(Monomial(e), BigRational::one())] }
    }

    pub fn var_named(ctx: &Arc<VariableContext>, name: &str) -> Result<Self, AlgebraError> {
        ctx.index_of(name)
            .map(|i| Self::var(ctx, i))
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(
        ctx: &Arc<VariableContext>,
        terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>,
    ) -> Result<Self, AlgebraError> {
        let mut acc: HashMap<Vec<u32>, BigRational> = HashMap::new();
        for (e, c) in terms {
            if e.len() != ctx.len() {
                return Err(AlgebraError::ExponentArity { expected: ctx.len(), got: e.len() });
            }
            *acc.entry(e).or_insert_with(BigRational::zero) += c;
        }
        Ok(Self::from_map(ctx, acc))
    }

    fn from_map(ctx: &Arc<VariableContext>, acc: HashMap<Vec<u32>, BigRational>) -> Self {
        let mut terms: Vec<(Monomial, BigRational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (Monomial(e), c)).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { ctx: ctx.clone(), terms }
    }

    /// Terms already sorted descending and free of zeros.
    pub(crate) fn from_sorted_terms(ctx: &Arc<VariableContext>, terms: Vec<(Monomial, BigRational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        MultiPoly { ctx: ctx.clone(), terms }
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.ctx.len()
    }

    pub fn same_context(&self, other: &MultiPoly) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx == other.ctx
    }

    pub(crate) fn check_context(&self, other: &MultiPoly) -> Result<(), AlgebraError> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    fn assert_context(&self, other: &MultiPoly) {
        assert!(self.same_context(other), "polynomials over different contexts: {:?} vs {:?}", self.ctx, other.ctx);
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Constant term value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[v]).max().unwrap_or(0)
    }

    /// Indices of the variables that occur with a positive exponent.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&v| self.terms.iter().any(|(m, _)| m.0[v] > 0)).collect()
    }

    pub fn involves(&self, v: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.0[v] > 0)
    }

    /// Maximum of `sum(exponent * weight)` over the terms.
    pub fn weighted_degree(&self, weights: &[u64]) -> Result<u64, AlgebraError> {
        if weights.len() != self.nvars() {
            return Err(AlgebraError::ExponentArity { expected: self.nvars(), got: weights.len() });
        }
        self.terms
            .iter()
            .map(|(m, _)| m.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum())
            .max()
            .ok_or(AlgebraError::ZeroPolynomial)
    }

    /// The sum of the terms of maximal weighted degree.
    pub fn weighted_top_component(&self, weights: &[u64]) -> MultiPoly {
        let wdeg = |m: &Monomial| m.0.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum::<u64>();
        let top = self.terms.iter().map(|(m, _)| wdeg(m)).max();
        let terms = self.terms.iter().filter(|(m, _)| Some(wdeg(m)) == top).cloned().collect();
        MultiPoly::from_sorted_terms(&self.ctx, terms)
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ctx);
        }
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by `c * x^m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ctx);
        }
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// Divides every term by `x^m`; panics if some term is not divisible.
    pub(crate) fn div_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.checked_div(m).expect("monomial divides every term"), a.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent over all terms.
    pub(crate) fn monomial_content(&self) -> Monomial {
        let mut e = match self.terms.first() {
            Some((m, _)) => m.0.clone(),
            None => return Monomial::one(self.nvars()),
        };
        for (m, _) in &self.terms[1..] {
            for (a, &b) in e.iter_mut().zip(&m.0) {
                *a = (*a).min(b);
            }
        }
        Monomial(e)
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Scales to integer coefficients with content 1 and a positive leading coefficient.
    pub fn integer_primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut factor = BigRational::new(den_lcm, num_gcd);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        if factor.is_one() {
            self.clone()
        } else {
            self.scale(&factor)
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = MultiPoly::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Coefficients with respect to variable `v`: entry `k` multiplies `v^k`
    /// and does not involve `v`.
    pub fn to_univariate(&self, v: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigRational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[v] as usize;
            let mut e = m.0.clone();
            e[v] = 0;
            buckets[k].push((Monomial(e), c.clone()));
        }
        // removing one exponent keeps grlex order within a bucket (all shifted by the same degree)
        buckets.into_iter().map(|t| MultiPoly::from_sorted_terms(&self.ctx, t)).collect()
    }

    pub fn from_univariate(ctx: &Arc<VariableContext>, v: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut acc = HashMap::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut e = m.0.clone();
                e[v] += k as u32;
                acc.insert(e, a.clone());
            }
        }
        MultiPoly::from_map(ctx, acc)
    }

    /// Re-expresses the polynomial over another context, matching variables by name.
    /// Fails if a variable that actually occurs is missing from the target.
    pub fn with_context(&self, target: &Arc<VariableContext>) -> Result<MultiPoly, AlgebraError> {
        let mut map = Vec::with_capacity(self.nvars());
        for (i, name) in self.ctx.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None if self.involves(i) => return Err(AlgebraError::UnknownVariable(name.clone())),
                None => map.push(None),
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = x;
                }
            }
            (e, c.clone())
        });
        MultiPoly::from_terms(target, terms)
    }

    /// Evaluates at a point assigning a value to every context variable.
    /// Coefficients are embedded through [`Ring::rational_like`] of the first
    /// point value, so the point must be nonempty.
    pub fn evaluate<R: Ring>(&self, point: &[R]) -> Result<R, AlgebraError> {
        if point.len() != self.nvars() || point.is_empty() {
            return Err(AlgebraError::MissingAssignment { expected: self.nvars(), got: point.len() });
        }
        let proto = &point[0];
        // cache powers per variable
        let mut powers: Vec<Vec<R>> = point.iter().map(|p| vec![p.one_like(), p.clone()]).collect();
        let mut acc = proto.zero_like();
        for (m, c) in &self.terms {
            let mut term = proto.rational_like(c);
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[v].len() <= e {
                    let next = powers[v].last().unwrap().clone() * point[v].clone();
                    powers[v].push(next);
                }
                term = term * powers[v][e].clone();
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Field evaluation; the empty context is allowed here.
    pub fn evaluate_field<F: Field>(&self, point: &[F]) -> Result<F, AlgebraError> {
        if self.nvars() == 0 {
            return Ok(F::from_rational(&self.as_constant().expect("constant over empty context")));
        }
        self.evaluate(point)
    }

    /// `sum |c| * prod |v|^e`, the reference scale for relative floating tests.
    pub fn magnitude_bound<F: Field>(&self, point: &[F]) -> f64 {
        let mags: Vec<f64> = point.iter().map(Field::magnitude).collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = super::scalar::rational_to_f64(&c.abs());
                for (v, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        t *= mags[v].powi(e as i32);
                    }
                }
                t
            })
            .sum()
    }

    /// Substitutes polynomial values for every variable (result lives in the values' context).
    pub fn compose(&self, values: &[MultiPoly]) -> Result<MultiPoly, AlgebraError> {
        self.evaluate(values)
    }

    fn merge(&self, other: &MultiPoly, negate_other: bool) -> MultiPoly {
        self.assert_context(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate_other { -t.1.clone() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        MultiPoly { ctx: self.ctx.clone(), terms: out }
    }

    fn product(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_context(other);
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.ctx);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Vec<u32>, BigRational> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        MultiPoly::from_map(&self.ctx, acc)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        self.ctx.name(v).to_string()
                    } else {
                        format!("{}^{}", self.ctx.name(v), e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                $body(self, rhs)
            }
        }
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &MultiPoly, b: &MultiPoly| a.merge(b, false));
forward_binop!(Sub, sub, |a: &MultiPoly, b: &MultiPoly| a.merge(b, true));
forward_binop!(Mul, mul, |a: &MultiPoly, b: &MultiPoly| a.product(b));

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for (_, c) in &mut self.terms {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(&self.ctx)
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(&self.ctx)
    }
    fn rational_like(&self, q: &BigRational) -> Self {
        MultiPoly::constant(&self.ctx, q.clone())
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn div_integer(&self, n: i64) -> Self {
        self.scale(&BigRational::new(BigInt::one(), BigInt::from(n)))
    }
}
