//! Ordered products of bidiagonal factors, each optionally inverted.

use serde::Serialize;

use crate::bidiagonal::{Bidiagonal, Orientation};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};

/// One factor of a chain: `matrix` or `matrix^{-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Factor<T> {
    pub matrix: Bidiagonal<T>,
    pub inverted: bool,
}

impl<T: Scalar> Factor<T> {
    pub fn plain(matrix: Bidiagonal<T>) -> Self {
        Self { matrix, inverted: false }
    }

    pub fn inverse_of(matrix: Bidiagonal<T>) -> Self {
        Self { matrix, inverted: true }
    }

    /// `F x`.
    pub fn apply(&self, x: &[T]) -> Result<Vec<T>> {
        if self.inverted {
            self.matrix.solve(x)
        } else {
            self.matrix.apply(x)
        }
    }

    /// `F^{-1} b`.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        if self.inverted {
            self.matrix.apply(b)
        } else {
            self.matrix.solve(b)
        }
    }

    /// `|F| x`, using `|B^{-1}| = M(B)^{-1}` for inverted factors.
    pub fn abs_apply(&self, x: &[T]) -> Result<Vec<T>> {
        if self.inverted {
            self.matrix.comparison().solve(x)
        } else {
            self.matrix.abs().apply(x)
        }
    }

    /// Whether `F = ±|F|`.
    pub fn is_sign_definite(&self) -> bool {
        if self.inverted {
            // A bidiagonal inverse has a fixed sign exactly when B itself alternates.
            self.matrix.is_checkerboard()
        } else {
            self.matrix.is_sign_definite()
        }
    }

    /// Whether `F = ±Σ|F|Σ`.
    pub fn is_checkerboard(&self) -> bool {
        if self.inverted {
            self.matrix.is_sign_definite()
        } else {
            self.matrix.is_checkerboard()
        }
    }

    pub fn inverse(&self) -> Self {
        Self { matrix: self.matrix.clone(), inverted: !self.inverted }
    }

    pub fn transpose(&self) -> Self {
        Self { matrix: self.matrix.transpose(), inverted: self.inverted }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Factor<U> {
        Factor { matrix: self.matrix.map(f), inverted: self.inverted }
    }
}

/// Positive diagonal factor inserted before the stored factor at `position`
/// (so `position == k` puts it last).
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalScale<T> {
    pub position: usize,
    pub diag: Vec<T>,
}

/// Sign structure of a whole chain, governing which norms are computable without cancellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainPattern {
    /// Every factor is `±` a nonnegative matrix.
    SignDefinite,
    /// Every factor has a checkerboard sign pattern.
    Checkerboard,
    General,
}

/// `A = F_1 F_2 ... F_k`, with an optional positive diagonal scale.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorChain<T> {
    n: usize,
    factors: Vec<Factor<T>>,
    scale: Option<DiagonalScale<T>>,
}

impl<T: Scalar> FactorChain<T> {
    pub fn new(n: usize, factors: Vec<Factor<T>>, scale: Option<DiagonalScale<T>>) -> Result<Self> {
        if n < 1 {
            return Err(Error::Dimension("factor chain needs n >= 1".into()));
        }
        for f in &factors {
            if f.matrix.n() != n {
                return Err(Error::DimensionMismatch { expected: n, found: f.matrix.n() });
            }
        }
        if let Some(s) = &scale {
            if s.diag.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: s.diag.len() });
            }
            if s.position > factors.len() {
                return Err(Error::Index { index: s.position, lo: 0, hi: factors.len() });
            }
            if let Some(i) = s.diag.iter().position(|d| !d.gt_zero()) {
                return Err(Error::Domain(format!("scale entry {i} is not positive")));
            }
        }
        Ok(Self { n, factors, scale })
    }

    /// Chain of non-inverted factors. `factors` must be nonempty.
    pub fn from_factors(factors: Vec<Bidiagonal<T>>) -> Result<Self> {
        let n = factors.first().map(Bidiagonal::n).ok_or_else(|| Error::Dimension("empty factor list".into()))?;
        Self::new(n, factors.into_iter().map(Factor::plain).collect(), None)
    }

    /// The empty product, `I_n`.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, Vec::new(), None)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored factors, not counting the scale.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty() && self.scale.is_none()
    }

    pub fn factors(&self) -> &[Factor<T>] {
        &self.factors
    }

    pub fn scale(&self) -> Option<&DiagonalScale<T>> {
        self.scale.as_ref()
    }

    pub fn has_inverted(&self) -> bool {
        self.factors.iter().any(|f| f.inverted)
    }

    /// The factor sequence with the scale materialized as a diagonal factor.
    pub fn effective_factors(&self) -> Vec<Factor<T>> {
        let mut out = self.factors.clone();
        if let Some(s) = &self.scale {
            let d = Bidiagonal::diagonal(s.diag.clone()).expect("scale length checked at construction");
            out.insert(s.position, Factor::plain(d));
        }
        out
    }

    /// Maps an index into [`effective_factors`](Self::effective_factors) back to a stored index.
    fn stored_index(&self, effective: usize) -> usize {
        match &self.scale {
            Some(s) if effective > s.position => effective - 1,
            _ => effective,
        }
    }

    /// `A x`, factors applied right to left; `O(kn)`.
    pub fn apply(&self, x: &[T]) -> Result<Vec<T>> {
        self.check_len(x.len())?;
        let mut v = x.to_vec();
        for (i, f) in self.effective_factors().iter().enumerate().rev() {
            v = f.apply(&v).map_err(|e| e.in_factor(self.stored_index(i)))?;
        }
        Ok(v)
    }

    /// `A^{-1} b`, factors processed left to right; `O(kn)`.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        self.check_len(b.len())?;
        let mut v = b.to_vec();
        for (i, f) in self.effective_factors().iter().enumerate() {
            v = f.solve(&v).map_err(|e| e.in_factor(self.stored_index(i)))?;
        }
        Ok(v)
    }

    /// `|F_1| |F_2| ... |F_k| x`. Equals `|A| x` when [`pattern`](Self::pattern) is not `General`.
    pub fn abs_apply(&self, x: &[T]) -> Result<Vec<T>> {
        self.check_len(x.len())?;
        let mut v = x.to_vec();
        for (i, f) in self.effective_factors().iter().enumerate().rev() {
            v = f.abs_apply(&v).map_err(|e| e.in_factor(self.stored_index(i)))?;
        }
        Ok(v)
    }

    /// Explicit product, built column by column; `O(kn^2)`.
    pub fn dense(&self) -> Result<Matrix<T>> {
        self.columns(|e| self.apply(e))
    }

    /// Explicit product of the factor moduli `|F_1| ... |F_k|`.
    pub fn abs_dense(&self) -> Result<Matrix<T>> {
        self.columns(|e| self.abs_apply(e))
    }

    fn columns(&self, op: impl Fn(&[T]) -> Result<Vec<T>>) -> Result<Matrix<T>> {
        let n = self.n;
        let mut out = Matrix::zeros(n, n);
        for j in 0..n {
            let mut e = vec![T::zero(); n];
            e[j] = T::one();
            for (i, v) in op(&e)?.into_iter().enumerate() {
                out[(i, j)] = v;
            }
        }
        Ok(out)
    }

    /// Chain for `A^{-1}`: factors reversed with flags flipped.
    pub fn inverse(&self) -> Self {
        let factors = self.effective_factors().iter().rev().map(Factor::inverse).collect();
        Self { n: self.n, factors, scale: None }
    }

    /// Chain for `A^T`.
    pub fn transpose(&self) -> Self {
        let k = self.factors.len();
        let factors = self.factors.iter().rev().map(Factor::transpose).collect();
        let scale = self
            .scale
            .as_ref()
            .map(|s| DiagonalScale { position: k - s.position, diag: s.diag.clone() });
        Self { n: self.n, factors, scale }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> FactorChain<U> {
        FactorChain {
            n: self.n,
            factors: self.factors.iter().map(|x| x.map(&f)).collect(),
            scale: self
                .scale
                .as_ref()
                .map(|s| DiagonalScale { position: s.position, diag: s.diag.iter().map(&f).collect() }),
        }
    }

    pub fn to_f64(&self) -> FactorChain<f64> {
        self.map(Scalar::to_f64)
    }

    /// Joint sign structure of the effective factors.
    pub fn pattern(&self) -> ChainPattern {
        let eff = self.effective_factors();
        if eff.iter().all(Factor::is_sign_definite) {
            ChainPattern::SignDefinite
        } else if eff.iter().all(Factor::is_checkerboard) {
            ChainPattern::Checkerboard
        } else {
            ChainPattern::General
        }
    }

    /// Errors with the first stored factor that breaks every supported pattern.
    pub fn require_supported(&self) -> Result<ChainPattern> {
        let p = self.pattern();
        if p != ChainPattern::General {
            return Ok(p);
        }
        let eff = self.effective_factors();
        let (mut sd, mut cb) = (true, true);
        for (i, f) in eff.iter().enumerate() {
            sd &= f.is_sign_definite();
            cb &= f.is_checkerboard();
            if !sd && !cb {
                return Err(Error::UnsupportedPattern { factor: self.stored_index(i) });
            }
        }
        unreachable!("a General pattern always has an offending prefix")
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: len });
        }
        Ok(())
    }
}

impl FactorChain<f64> {
    pub fn to_exact(&self) -> FactorChain<Rational> {
        self.map(|&x| Rational::from_f64(x))
    }
}

/// `T_n(θ)` wrapped as a one-factor chain; convenient in tests and examples.
pub fn single<T: Scalar>(b: Bidiagonal<T>, inverted: bool) -> FactorChain<T> {
    let n = b.n();
    FactorChain::new(n, vec![Factor { matrix: b, inverted }], None).expect("single factor is always valid")
}

/// Upper or lower unit bidiagonal with the given off-diagonal.
pub fn unit_bidiagonal<T: Scalar>(orientation: Orientation, off: Vec<T>) -> Result<Bidiagonal<T>> {
    let n = off.len() + 1;
    Bidiagonal::new(orientation, vec![T::one(); n], off)
}
