//! Text formats: factor files, TN parameter files, matrices and vectors.
//!
//! Factor file:
//! `{"n": 3, "factors": [{"orientation": "upper", "diag": [...], "off": [...], "inverted": false}],
//! "scale": {"position": 0, "diag": [...]}}`, `scale` optional. Values are written as
//! shortest round-trip decimal strings (`"p/q"` for exact rationals); on input both JSON
//! numbers and strings are accepted.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize};

use crate::bidiagonal::{Bidiagonal, Orientation};
use crate::chain::{DiagonalScale, Factor, FactorChain};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};
use crate::tn::TNFactorization;

/// A scalar with a textual form that round-trips.
pub trait TextScalar: Scalar {
    fn to_text(&self) -> String;
    fn parse_text(s: &str) -> Result<Self>;
}

impl TextScalar for f64 {
    fn to_text(&self) -> String {
        // Both forms print the shortest digit string that round-trips.
        let a = self.abs();
        if a != 0.0 && !(1e-4..1e16).contains(&a) {
            format!("{self:e}")
        } else {
            format!("{self}")
        }
    }

    fn parse_text(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.contains('/') {
            return Ok(Rational::parse_text(t)?.to_f64());
        }
        t.parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| Error::Parse(format!("not a finite number: {s:?}")))
    }
}

impl TextScalar for Rational {
    fn to_text(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    /// Integers, `p/q`, or decimals with optional exponent, all read exactly.
    fn parse_text(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("not an exact number: {s:?}"));
        if let Some((p, q)) = t.split_once('/') {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            return Ok(Rational::new(p, q));
        }
        parse_decimal(t).ok_or_else(bad)
    }
}

fn parse_decimal(t: &str) -> Option<Rational> {
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(k) => (&t[..k], t[k + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = BigInt::from_str(&format!("{int}{frac}0")).ok()? / BigInt::from(10);
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut r = Rational::from_integer(digits);
    if scale >= 0 {
        r *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        r /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if neg { -r } else { r })
}

/// A number as read from JSON: a string or a plain JSON number, kept as text.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct NumText(pub String);

impl<'de> Deserialize<'de> for NumText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            S(String),
            N(serde_json::Number),
        }
        match Raw::deserialize(d).map_err(|_| de::Error::custom("expected a number or numeric string"))? {
            Raw::S(s) => Ok(NumText(s)),
            Raw::N(n) => Ok(NumText(n.to_string())),
        }
    }
}

impl NumText {
    pub fn from_value<T: TextScalar>(x: &T) -> Self {
        NumText(x.to_text())
    }

    pub fn value<T: TextScalar>(&self) -> Result<T> {
        T::parse_text(&self.0)
    }
}

fn values<T: TextScalar>(v: &[NumText]) -> Result<Vec<T>> {
    v.iter().map(NumText::value).collect()
}

fn texts<T: TextScalar>(v: &[T]) -> Vec<NumText> {
    v.iter().map(NumText::from_value).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorEntry {
    pub orientation: Orientation,
    pub diag: Vec<NumText>,
    pub off: Vec<NumText>,
    #[serde(default)]
    pub inverted: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaleEntry {
    pub position: usize,
    pub diag: Vec<NumText>,
}

/// Serialized [`FactorChain`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorFile {
    pub n: usize,
    pub factors: Vec<FactorEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<ScaleEntry>,
}

impl FactorFile {
    pub fn from_chain<T: TextScalar>(c: &FactorChain<T>) -> Self {
        FactorFile {
            n: c.n(),
            factors: c
                .factors()
                .iter()
                .map(|f| FactorEntry {
                    orientation: f.matrix.orientation(),
                    diag: texts(f.matrix.diag()),
                    off: texts(f.matrix.off()),
                    inverted: f.inverted,
                })
                .collect(),
            scale: c.scale().map(|s| ScaleEntry { position: s.position, diag: texts(&s.diag) }),
        }
    }

    pub fn to_chain<T: TextScalar>(&self) -> Result<FactorChain<T>> {
        let factors = self
            .factors
            .iter()
            .map(|e| {
                let b = Bidiagonal::new(e.orientation, values(&e.diag)?, values(&e.off)?)?;
                Ok(Factor { matrix: b, inverted: e.inverted })
            })
            .collect::<Result<Vec<_>>>()?;
        let scale = match &self.scale {
            Some(s) => Some(DiagonalScale { position: s.position, diag: values(&s.diag)? }),
            None => None,
        };
        FactorChain::new(self.n, factors, scale)
    }
}

pub fn parse_factor_file<T: TextScalar>(text: &str) -> Result<FactorChain<T>> {
    let f: FactorFile = serde_json::from_str(text).map_err(json_error)?;
    f.to_chain()
}

pub fn write_factor_file<T: TextScalar>(c: &FactorChain<T>) -> String {
    serde_json::to_string_pretty(&FactorFile::from_chain(c)).expect("factor files always serialize")
}

/// Serialized [`TNFactorization`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TnFile {
    pub n: usize,
    pub params: Vec<Vec<NumText>>,
}

pub fn parse_tn_file<T: TextScalar>(text: &str) -> Result<TNFactorization<T>> {
    let f: TnFile = serde_json::from_str(text).map_err(json_error)?;
    let p = matrix_from_texts(&f.params)?;
    if p.rows() != f.n {
        return Err(Error::DimensionMismatch { expected: f.n, found: p.rows() });
    }
    TNFactorization::new(p)
}

pub fn write_tn_file<T: TextScalar>(f: &TNFactorization<T>) -> String {
    let params = f.params().to_rows().iter().map(|r| texts(r)).collect();
    serde_json::to_string_pretty(&TnFile { n: f.n(), params }).expect("TN files always serialize")
}

fn matrix_from_texts<T: TextScalar>(rows: &[Vec<NumText>]) -> Result<Matrix<T>> {
    Matrix::from_rows(rows.iter().map(|r| values(r)).collect::<Result<Vec<_>>>()?)
}

/// A matrix given as a JSON array of rows.
pub fn parse_matrix_json<T: TextScalar>(text: &str) -> Result<Matrix<T>> {
    let rows: Vec<Vec<NumText>> = serde_json::from_str(text).map_err(json_error)?;
    matrix_from_texts(&rows)
}

/// One row per line, comma separated.
pub fn matrix_to_csv(a: &Matrix<f64>) -> String {
    let mut out = String::new();
    for i in 0..a.rows() {
        let row: Vec<String> = a.row(i).iter().map(TextScalar::to_text).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// A vector given either as a JSON array or as text with one value per line
/// (blank lines and lines starting with `#` are skipped).
pub fn parse_vector<T: TextScalar>(text: &str) -> Result<Vec<T>> {
    let t = text.trim_start();
    if t.starts_with('[') {
        let v: Vec<NumText> = serde_json::from_str(text).map_err(json_error)?;
        return values(&v);
    }
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let l = line.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        out.push(T::parse_text(l).map_err(|_| Error::Parse(format!("line {}: not a number: {l:?}", k + 1)))?);
    }
    Ok(out)
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("{e}"))
}
