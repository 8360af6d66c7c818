//! Bidiagonal factors: construction, explicit inverses, comparison matrices and
//! sign classification.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Upper,
    Lower,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Upper => Orientation::Lower,
            Orientation::Lower => Orientation::Upper,
        }
    }
}

/// Sign structure of a matrix, as far as cancellation-free products are concerned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignClass {
    /// Every entry is `>= 0`.
    Nonnegative,
    /// `A = ±Σ|A|Σ` with `Σ = diag(1, -1, 1, ...)`; zero entries match either sign.
    Checkerboard,
    General,
}

impl SignClass {
    /// Classifies an arbitrary dense matrix. `Nonnegative` takes precedence.
    pub fn of_matrix<T: Scalar>(a: &Matrix<T>) -> Self {
        let entries = (0..a.rows()).flat_map(|i| (0..a.cols()).map(move |j| (i, j)));
        classify_entries(entries.map(|(i, j)| (i + j, &a[(i, j)])))
    }
}

/// Classifies `(i + j, value)` pairs.
fn classify_entries<'a, T: Scalar>(entries: impl Iterator<Item = (usize, &'a T)> + Clone) -> SignClass {
    if entries.clone().all(|(_, v)| !v.lt_zero()) {
        return SignClass::Nonnegative;
    }
    // Checkerboard with global sign s: sign(a_ij) in {0, s * (-1)^(i+j)}.
    let fits = |s: bool| {
        entries.clone().all(|(parity, v)| {
            if v.is_zero() {
                return true;
            }
            let want_positive = (parity % 2 == 0) == s;
            v.gt_zero() == want_positive
        })
    };
    if fits(true) || fits(false) {
        SignClass::Checkerboard
    } else {
        SignClass::General
    }
}

/// An `n x n` upper or lower bidiagonal matrix stored as its two diagonals.
///
/// `off[i]` holds `b(i, i+1)` for an upper factor and `b(i+1, i)` for a lower one
/// (zero-based).
#[derive(Debug, Clone, PartialEq)]
pub struct Bidiagonal<T> {
    orientation: Orientation,
    diag: Vec<T>,
    off: Vec<T>,
}

impl<T: Scalar> Bidiagonal<T> {
    pub fn new(orientation: Orientation, diag: Vec<T>, off: Vec<T>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Dimension("bidiagonal matrix needs n >= 1".into()));
        }
        if off.len() + 1 != diag.len() {
            return Err(Error::DimensionMismatch { expected: diag.len() - 1, found: off.len() });
        }
        Ok(Self { orientation, diag, off })
    }

    pub fn identity(n: usize, orientation: Orientation) -> Result<Self> {
        Self::new(orientation, vec![T::one(); n], vec![T::zero(); n.saturating_sub(1)])
    }

    /// Diagonal matrix (zero off-diagonal), stored as an upper factor.
    pub fn diagonal(diag: Vec<T>) -> Result<Self> {
        let m = diag.len().saturating_sub(1);
        Self::new(Orientation::Upper, diag, vec![T::zero(); m])
    }

    /// `T_n(θ)`: unit upper bidiagonal with every superdiagonal entry equal to `theta`.
    pub fn one_parameter(n: usize, theta: T) -> Result<Self> {
        if n < 1 {
            return Err(Error::Dimension("T_n(theta) needs n >= 1".into()));
        }
        Self::new(Orientation::Upper, vec![T::one(); n], vec![theta; n - 1])
    }

    /// Elementary lower bidiagonal `L_k(ell) = I + ell e_{k+1} e_k^T`.
    ///
    /// `k` is the one-based label, `1 <= k <= n - 1`; the nonzero sits at zero-based
    /// position `(k, k - 1)`.
    pub fn elementary_lower(n: usize, k: usize, ell: T) -> Result<Self> {
        if n < 2 || k < 1 || k > n - 1 {
            return Err(Error::Index { index: k, lo: 1, hi: n.saturating_sub(1) });
        }
        let mut off = vec![T::zero(); n - 1];
        off[k - 1] = ell;
        Self::new(Orientation::Lower, vec![T::one(); n], off)
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    pub fn off(&self) -> &[T] {
        &self.off
    }

    /// All stored entries, diagonal first.
    pub fn entries(&self) -> impl Iterator<Item = &T> + Clone {
        self.diag.iter().chain(self.off.iter())
    }

    pub fn is_nonsingular(&self) -> bool {
        self.diag.iter().all(|d| !d.is_zero())
    }

    pub fn is_unit_diagonal(&self) -> bool {
        self.diag.iter().all(|d| d.is_one())
    }

    pub fn is_diagonal(&self) -> bool {
        self.off.iter().all(|o| o.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_unit_diagonal() && self.is_diagonal()
    }

    /// Entry `(i, j)` of the dense matrix (zero-based).
    pub fn get(&self, i: usize, j: usize) -> T {
        if i == j {
            return self.diag[i].clone();
        }
        match self.orientation {
            Orientation::Upper if j == i + 1 => self.off[i].clone(),
            Orientation::Lower if i == j + 1 => self.off[j].clone(),
            _ => T::zero(),
        }
    }

    pub fn to_dense(&self) -> Matrix<T> {
        let n = self.n();
        Matrix::from_fn(n, n, |i, j| self.get(i, j))
    }

    /// `B^T`: same diagonals, opposite orientation.
    pub fn transpose(&self) -> Self {
        Self { orientation: self.orientation.flip(), diag: self.diag.clone(), off: self.off.clone() }
    }

    pub fn abs(&self) -> Self {
        self.map(|x| x.abs())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Bidiagonal<U> {
        Bidiagonal {
            orientation: self.orientation,
            diag: self.diag.iter().map(&f).collect(),
            off: self.off.iter().map(&f).collect(),
        }
    }

    pub fn to_f64(&self) -> Bidiagonal<f64> {
        self.map(Scalar::to_f64)
    }

    /// Comparison matrix `M(B)`: `|b_ii|` on the diagonal, `-|b_ij|` off it.
    pub fn comparison(&self) -> Self {
        Self {
            orientation: self.orientation,
            diag: self.diag.iter().map(|d| d.abs()).collect(),
            off: self.off.iter().map(|o| -o.abs()).collect(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries().all(|x| !x.lt_zero())
    }

    /// All entries share one sign (zeros allowed), i.e. `B = ±|B|`.
    pub fn is_sign_definite(&self) -> bool {
        self.is_nonnegative() || self.entries().all(|x| !x.gt_zero())
    }

    /// Diagonal entries of one sign and off-diagonal entries of the other.
    pub fn is_checkerboard(&self) -> bool {
        let d_nonneg = self.diag.iter().all(|x| !x.lt_zero()) && self.off.iter().all(|x| !x.gt_zero());
        let d_nonpos = self.diag.iter().all(|x| !x.gt_zero()) && self.off.iter().all(|x| !x.lt_zero());
        d_nonneg || d_nonpos
    }

    pub fn classify_sign(&self) -> SignClass {
        if self.is_nonnegative() {
            SignClass::Nonnegative
        } else if self.is_checkerboard() {
            SignClass::Checkerboard
        } else {
            SignClass::General
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: len });
        }
        Ok(())
    }

    fn check_nonsingular(&self) -> Result<()> {
        match self.diag.iter().position(|d| d.is_zero()) {
            Some(i) => Err(Error::Singular { factor: None, position: i }),
            None => Ok(()),
        }
    }

    /// `B x` in `O(n)`.
    pub fn apply(&self, x: &[T]) -> Result<Vec<T>> {
        self.check_len(x.len())?;
        let n = self.n();
        let y = (0..n)
            .map(|i| {
                let d = self.diag[i].clone() * x[i].clone();
                match self.orientation {
                    Orientation::Upper if i + 1 < n => d + self.off[i].clone() * x[i + 1].clone(),
                    Orientation::Lower if i > 0 => d + self.off[i - 1].clone() * x[i - 1].clone(),
                    _ => d,
                }
            })
            .collect();
        Ok(y)
    }

    /// Solves `B x = b` by substitution in `O(n)`.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        self.check_len(b.len())?;
        self.check_nonsingular()?;
        let n = self.n();
        let mut x = b.to_vec();
        match self.orientation {
            Orientation::Upper => {
                x[n - 1] = x[n - 1].clone() / self.diag[n - 1].clone();
                for i in (0..n - 1).rev() {
                    let r = x[i].clone() - self.off[i].clone() * x[i + 1].clone();
                    x[i] = r / self.diag[i].clone();
                }
            }
            Orientation::Lower => {
                x[0] = x[0].clone() / self.diag[0].clone();
                for i in 1..n {
                    let r = x[i].clone() - self.off[i - 1].clone() * x[i - 1].clone();
                    x[i] = r / self.diag[i].clone();
                }
            }
        }
        Ok(x)
    }

    /// Entry `(i, j)` of `B^{-1}` from the closed form
    /// `(1/b_jj) * prod_{k=i}^{j-1} (-b_{k,k+1} / b_kk)` (upper case; mirrored for lower).
    pub fn inverse_entry(&self, i: usize, j: usize) -> Result<T> {
        let n = self.n();
        for idx in [i, j] {
            if idx >= n {
                return Err(Error::Index { index: idx, lo: 0, hi: n - 1 });
            }
        }
        self.check_nonsingular()?;
        // For a lower factor (B^{-1})_{ij} = ((B^T)^{-1})_{ji}.
        let (r, c) = match self.orientation {
            Orientation::Upper => (i, j),
            Orientation::Lower => (j, i),
        };
        if c < r {
            return Ok(T::zero());
        }
        let mut p = T::one();
        for k in r..c {
            p = p * (-(self.off[k].clone() / self.diag[k].clone()));
        }
        Ok(p / self.diag[c].clone())
    }

    /// Dense triangular inverse in `O(n^2)` via running products outward from the diagonal.
    pub fn inverse_dense(&self) -> Result<Matrix<T>> {
        self.check_nonsingular()?;
        let n = self.n();
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            let mut p = T::one();
            for c in r..n {
                if c > r {
                    p = p * (-(self.off[c - 1].clone() / self.diag[c - 1].clone()));
                }
                let v = p.clone() / self.diag[c].clone();
                match self.orientation {
                    Orientation::Upper => inv[(r, c)] = v,
                    Orientation::Lower => inv[(c, r)] = v,
                }
            }
        }
        Ok(inv)
    }

    /// Draws a random factor with entries uniform in `[lo, hi]`.
    pub fn random<R: Rng + ?Sized>(n: usize, orientation: Orientation, lo: f64, hi: f64, rng: &mut R) -> Result<Self> {
        let mut draw = |m: usize| (0..m).map(|_| T::from_f64(rng.random_range(lo..=hi))).collect::<Vec<_>>();
        let diag = draw(n);
        let off = draw(n.saturating_sub(1));
        Self::new(orientation, diag, off)
    }
}

impl Bidiagonal<f64> {
    pub fn to_exact(&self) -> Bidiagonal<Rational> {
        self.map(|&x| Rational::from_f64(x))
    }
}
