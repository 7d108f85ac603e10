//! JSON encodings for scalars, polynomials, parameters, patterns, matrices and
//! spectra.
//!
//! Exact rationals are strings `"p/q"` (`"p"` when the denominator is 1),
//! Gaussian rationals are `{"re": .., "im": ..}`, floating values are numbers
//! or `{"re": x, "im": y}`. Indices in patterns and matrices are one-based.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::charpoly::{MonicPoly, SquareMatrix};
use crate::exactalg::{BigRational, Complex64, Field, GaussianRational, MultiPoly, RationalFunction, VariableContext};
use crate::pattern_s::{XParams, ZeroPattern, NUM_PARAMS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("invalid JSON: {0}")]
    Syntax(String),
    #[error("bad rational `{0}`")]
    BadRational(String),
    #[error("expected {0}")]
    Shape(String),
}

fn shape(what: &str) -> CodecError {
    CodecError::Shape(what.to_string())
}

pub fn parse_json(text: &str) -> Result<Value, CodecError> {
    serde_json::from_str(text).map_err(|e| CodecError::Syntax(e.to_string()))
}

pub fn parse_rational(s: &str) -> Result<BigRational, CodecError> {
    let bad = || CodecError::BadRational(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn rational_from_value(v: &Value) -> Result<BigRational, CodecError> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        _ => Err(shape("a rational as \"p/q\" or an integer")),
    }
}

/// Scalars with a JSON encoding.
pub trait JsonScalar: Field {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, CodecError>;
}

impl JsonScalar for BigRational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(v: &Value) -> Result<Self, CodecError> {
        rational_from_value(v)
    }
}

impl JsonScalar for GaussianRational {
    fn to_json(&self) -> Value {
        json!({"re": self.re.to_string(), "im": self.im.to_string()})
    }
    fn from_json(v: &Value) -> Result<Self, CodecError> {
        match v {
            Value::Object(m) => {
                let part = |k: &str| m.get(k).map_or(Ok(BigRational::from_integer(0.into())), rational_from_value);
                Ok(GaussianRational::new(part("re")?, part("im")?))
            }
            _ => Ok(GaussianRational::real(rational_from_value(v)?)),
        }
    }
}

impl JsonScalar for Complex64 {
    fn to_json(&self) -> Value {
        if self.im == 0.0 {
            json!(self.re)
        } else {
            json!({"re": self.re, "im": self.im})
        }
    }
    fn from_json(v: &Value) -> Result<Self, CodecError> {
        fn real(v: &Value) -> Result<f64, CodecError> {
            match v {
                Value::Number(n) => n.as_f64().ok_or_else(|| shape("a finite number")),
                Value::String(s) => Ok(crate::exactalg::rational_to_f64(&parse_rational(s)?)),
                _ => Err(shape("a number")),
            }
        }
        match v {
            Value::Object(m) => {
                let part = |k: &str| m.get(k).map_or(Ok(0.0), real);
                Ok(Complex64::new(part("re")?, part("im")?))
            }
            _ => Ok(Complex64::new(real(v)?, 0.0)),
        }
    }
}

/// Polynomials as `[{"exponents": [..], "coeff": "p/q"}, ..]`, leading term first.
pub fn poly_to_json(p: &MultiPoly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(m, c)| json!({"exponents": m.exponents(), "coeff": c.to_string()}))
            .collect(),
    )
}

pub fn poly_from_json(ctx: &Arc<VariableContext>, v: &Value) -> Result<MultiPoly, CodecError> {
    let terms = v.as_array().ok_or_else(|| shape("a list of terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let exps = t
            .get("exponents")
            .and_then(Value::as_array)
            .ok_or_else(|| shape("term exponents"))?
            .iter()
            .map(|e| e.as_u64().and_then(|e| u32::try_from(e).ok()).ok_or_else(|| shape("a small exponent")))
            .collect::<Result<Vec<u32>, _>>()?;
        let c = rational_from_value(t.get("coeff").ok_or_else(|| shape("term coeff"))?)?;
        out.push((exps, c));
    }
    MultiPoly::from_terms(ctx, out).map_err(|e| CodecError::Shape(e.to_string()))
}

pub fn ratfunc_to_json(r: &RationalFunction) -> Value {
    json!({"numerator": poly_to_json(r.numer()), "denominator": poly_to_json(r.denom())})
}

pub fn ratfunc_from_json(ctx: &Arc<VariableContext>, v: &Value) -> Result<RationalFunction, CodecError> {
    let part = |k: &str| poly_from_json(ctx, v.get(k).ok_or_else(|| shape(k))?);
    RationalFunction::new(part("numerator")?, part("denominator")?).map_err(|e| CodecError::Shape(e.to_string()))
}

pub fn monic_to_json<F: JsonScalar>(p: &MonicPoly<F>) -> Value {
    json!({"degree": p.degree(), "coeffs": p.coeffs().iter().map(JsonScalar::to_json).collect::<Vec<_>>()})
}

pub fn monic_from_json<F: JsonScalar>(v: &Value) -> Result<MonicPoly<F>, CodecError> {
    let coeffs = scalar_list::<F>(v.get("coeffs").ok_or_else(|| shape("\"coeffs\""))?)?;
    if let Some(d) = v.get("degree") {
        if d.as_u64() != Some(coeffs.len() as u64) {
            return Err(shape("\"degree\" equal to the number of coefficients"));
        }
    }
    Ok(MonicPoly::from_coeffs(coeffs))
}

fn scalar_list<F: JsonScalar>(v: &Value) -> Result<Vec<F>, CodecError> {
    v.as_array().ok_or_else(|| shape("a list of scalars"))?.iter().map(F::from_json).collect()
}

pub fn xparams_to_json<F: JsonScalar>(p: &XParams<F>) -> Value {
    let mut m = Map::new();
    for (i, x) in p.values().iter().enumerate() {
        m.insert(format!("x{}", i + 1), x.to_json());
    }
    Value::Object(m)
}

pub fn xparams_from_json<F: JsonScalar>(v: &Value) -> Result<XParams<F>, CodecError> {
    let vals = (1..=NUM_PARAMS)
        .map(|i| F::from_json(v.get(format!("x{i}")).ok_or_else(|| CodecError::Shape(format!("\"x{i}\"")))?))
        .collect::<Result<Vec<F>, _>>()?;
    XParams::new(vals).map_err(|e| CodecError::Shape(e.to_string()))
}

pub fn pattern_to_json(p: &ZeroPattern) -> Value {
    json!({"n": p.n(), "support": p.one_based().iter().map(|&(r, c)| json!([r, c])).collect::<Vec<_>>()})
}

fn index_pair(v: &Value) -> Result<(usize, usize), CodecError> {
    let a = v.as_array().filter(|a| a.len() >= 2).ok_or_else(|| shape("a [row, col] pair"))?;
    let idx = |x: &Value| x.as_u64().filter(|&x| x >= 1).map(|x| x as usize).ok_or_else(|| shape("a 1-based index"));
    Ok((idx(&a[0])?, idx(&a[1])?))
}

fn dimension(v: &Value) -> Result<usize, CodecError> {
    v.get("n").and_then(Value::as_u64).map(|n| n as usize).ok_or_else(|| shape("\"n\""))
}

pub fn pattern_from_json(v: &Value) -> Result<ZeroPattern, CodecError> {
    let n = dimension(v)?;
    let support = v
        .get("support")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("\"support\""))?
        .iter()
        .map(index_pair)
        .collect::<Result<Vec<_>, _>>()?;
    ZeroPattern::from_one_based(n, support).map_err(|e| CodecError::Shape(e.to_string()))
}

/// Sparse matrix encoding `{"n": n, "entries": [[row, col, scalar], ..]}`
/// listing the nonzero entries in row-major order.
pub fn matrix_to_json<F: JsonScalar>(m: &SquareMatrix<F>) -> Value {
    let entries: Vec<Value> = m
        .nonzero_positions()
        .into_iter()
        .map(|(r, c)| json!([r + 1, c + 1, m.get(r, c).to_json()]))
        .collect();
    json!({"n": m.n(), "entries": entries})
}

pub fn matrix_from_json<F: JsonScalar>(v: &Value) -> Result<SquareMatrix<F>, CodecError> {
    let n = dimension(v)?;
    let mut m = SquareMatrix::<F>::zeros(n);
    for e in v.get("entries").and_then(Value::as_array).ok_or_else(|| shape("\"entries\""))? {
        let (r, c) = index_pair(e)?;
        if r > n || c > n {
            return Err(CodecError::Shape(format!("entry ({r},{c}) inside a {n}x{n} matrix")));
        }
        let x = F::from_json(e.get(2).ok_or_else(|| shape("an entry value"))?)?;
        m.set(r - 1, c - 1, x);
    }
    Ok(m)
}

pub fn spectrum_to_json<F: JsonScalar>(values: &[F]) -> Value {
    json!({"values": values.iter().map(JsonScalar::to_json).collect::<Vec<_>>()})
}

/// The raw scalar list of a spectrum file.
pub fn spectrum_values(v: &Value) -> Result<&[Value], CodecError> {
    v.get("values").and_then(Value::as_array).map(Vec::as_slice).ok_or_else(|| shape("\"values\""))
}

pub fn spectrum_from_json<F: JsonScalar>(v: &Value) -> Result<Vec<F>, CodecError> {
    spectrum_values(v)?.iter().map(F::from_json).collect()
}

/// True when some exact scalar in the tree has a nonzero imaginary part, so
/// Gaussian rationals are needed.
pub fn needs_gaussian(v: &Value) -> bool {
    match v {
        Value::Object(m) if m.contains_key("im") => {
            m.get("im").is_some_and(|im| rational_from_value(im).map_or(true, |q| q != BigRational::from_integer(0.into())))
        }
        Value::Object(m) => m.values().any(needs_gaussian),
        Value::Array(a) => a.iter().any(needs_gaussian),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};
    use crate::pattern_s::witness_all_ones_spectrum;
    use proptest::prelude::*;

    #[test]
    fn rational_strings() {
        assert_eq!(int(5).to_json(), json!("5"));
        assert_eq!(rat(-3, 4).to_json(), json!("-3/4"));
        assert_eq!(parse_rational(" 6/-4 ").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(BigRational::from_json(&json!(7)).unwrap(), int(7));
    }

    #[test]
    fn gaussian_detection() {
        assert!(needs_gaussian(&json!({"values": ["1", {"re": "0", "im": "1"}]})));
        assert!(!needs_gaussian(&json!({"values": ["1", {"re": "2", "im": "0"}]})));
    }

    #[test]
    fn params_pattern_matrix_round_trip() {
        let p = witness_all_ones_spectrum();
        assert_eq!(xparams_from_json::<BigRational>(&xparams_to_json(&p)).unwrap(), p);
        let s = ZeroPattern::s();
        assert_eq!(pattern_from_json(&pattern_to_json(&s)).unwrap(), s);
        let m = p.matrix();
        assert_eq!(matrix_from_json::<BigRational>(&matrix_to_json(&m)).unwrap(), m);
        let c = MonicPoly::from_roots(&[int(1), rat(2, 3)]);
        assert_eq!(monic_from_json::<BigRational>(&monic_to_json(&c)).unwrap(), c);
    }

    proptest! {
        #[test]
        fn gaussian_round_trip(a in -99i64..99, b in 1i64..50, c in -99i64..99, d in 1i64..50) {
            let g = GaussianRational::new(rat(a, b), rat(c, d));
            prop_assert_eq!(GaussianRational::from_json(&g.to_json()).unwrap(), g);
        }

        #[test]
        fn poly_round_trip(terms in proptest::collection::vec((0u32..4, 0u32..4, -20i64..20, 1i64..9), 0..6)) {
            let ctx = VariableContext::numbered("y", 1, 2);
            let p = MultiPoly::from_terms(&ctx, terms.iter().map(|&(e1, e2, n, d)| (vec![e1, e2], rat(n, d)))).unwrap();
            prop_assert_eq!(poly_from_json(&ctx, &poly_to_json(&p)).unwrap(), p);
        }

        #[test]
        fn float_round_trip(re in -1e6f64..1e6, im in -1e6f64..1e6) {
            let z = Complex64::new(re, im);
            let text = to_text(&z.to_json());
            prop_assert_eq!(Complex64::from_json(&parse_json(&text).unwrap()).unwrap(), z);
        }
    }

    fn to_text(v: &Value) -> String {
        serde_json::to_string(v).unwrap()
    }
}
