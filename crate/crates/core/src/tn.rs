//! Bidiagonal factorization of nonsingular totally nonnegative matrices,
//! `A = L_{n-1} ... L_1 D U_1 ... U_{n-1}`, and the `O(n^2)` condition number that it
//! makes possible.

use rand::Rng;

use crate::bidiagonal::{Bidiagonal, Orientation};
use crate::chain::{Factor, FactorChain};
use crate::condnum::{chain_inf_norm, chain_inv_inf_norm};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};

/// The `n^2` parameters of a TN bidiagonal factorization.
///
/// Zero-based layout: `params[(a, b)]` with `a > b` is the multiplier at position
/// `(a, a-1)` of the unit lower bidiagonal `L_{a-b}`; `params[(b, a)]` sits at
/// `(a-1, a)` of the unit upper bidiagonal `U_{a-b}`; the diagonal holds `D`. Hence the
/// first `k-1` off-diagonal entries of `L_k` and `U_k` are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct TNFactorization<T> {
    params: Matrix<T>,
}

impl<T: Scalar> TNFactorization<T> {
    pub fn new(params: Matrix<T>) -> Result<Self> {
        if !params.is_square() || params.rows() == 0 {
            return Err(Error::Dimension(format!("parameter matrix must be square and nonempty, got {}x{}", params.rows(), params.cols())));
        }
        let n = params.rows();
        for i in 0..n {
            for j in 0..n {
                let p = &params[(i, j)];
                if i == j && !p.gt_zero() {
                    return Err(Error::Domain(format!("D entry {i} must be positive")));
                }
                if i != j && p.lt_zero() {
                    return Err(Error::Domain(format!("parameter ({i}, {j}) must be nonnegative")));
                }
            }
        }
        Ok(Self { params })
    }

    pub fn n(&self) -> usize {
        self.params.rows()
    }

    pub fn params(&self) -> &Matrix<T> {
        &self.params
    }

    pub fn d(&self) -> Vec<T> {
        (0..self.n()).map(|i| self.params[(i, i)].clone()).collect()
    }

    /// `L_k`, `1 <= k <= n-1`.
    pub fn lower(&self, k: usize) -> Bidiagonal<T> {
        let n = self.n();
        let off = (1..n).map(|a| if a >= k { self.params[(a, a - k)].clone() } else { T::zero() }).collect();
        Bidiagonal::new(Orientation::Lower, vec![T::one(); n], off).expect("lengths match")
    }

    /// `U_k`, `1 <= k <= n-1`.
    pub fn upper(&self, k: usize) -> Bidiagonal<T> {
        let n = self.n();
        let off = (1..n).map(|a| if a >= k { self.params[(a - k, a)].clone() } else { T::zero() }).collect();
        Bidiagonal::new(Orientation::Upper, vec![T::one(); n], off).expect("lengths match")
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> TNFactorization<U> {
        TNFactorization { params: self.params.map(f) }
    }

    pub fn to_f64(&self) -> TNFactorization<f64> {
        self.map(Scalar::to_f64)
    }
}

/// Expands to the `2n-1` factor chain `L_{n-1}, ..., L_1, D, U_1, ..., U_{n-1}`; every
/// factor is nonnegative.
pub fn tn_expand<T: Scalar>(f: &TNFactorization<T>) -> Result<FactorChain<T>> {
    let n = f.n();
    let d = f.d();
    if let Some(i) = d.iter().position(|x| !x.gt_zero()) {
        return Err(Error::Domain(format!("D entry {i} must be positive")));
    }
    let mut factors: Vec<Factor<T>> = (1..n).rev().map(|k| Factor::plain(f.lower(k))).collect();
    factors.push(Factor::plain(Bidiagonal::diagonal(d)?));
    factors.extend((1..n).map(|k| Factor::plain(f.upper(k))));
    FactorChain::new(n, factors, None)
}

/// `kappa_inf(A) = alpha * beta` with `alpha = ||A||_inf` (from `a_known` if
/// given, otherwise through the factors) and `beta = ||A^{-1}||_inf` by substitutions with
/// the comparison matrices of the factors. `O(n^2)` and free of subtraction.
pub fn tn_kinf<T: Scalar>(f: &TNFactorization<T>, a_known: Option<&Matrix<T>>) -> Result<T> {
    let chain = tn_expand(f)?;
    let alpha = match a_known {
        Some(a) => {
            if a.rows() != f.n() || !a.is_square() {
                return Err(Error::DimensionMismatch { expected: f.n(), found: a.rows() });
            }
            a.inf_norm()
        }
        None => chain_inf_norm(&chain)?,
    };
    Ok(alpha * chain_inv_inf_norm(&chain)?)
}

/// Random TN parameters: `D` uniform in `(0.5, 1.5)`, off-diagonal parameters uniform in `[0, 1]`.
pub fn random_tn<T: Scalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<TNFactorization<T>> {
    if n < 1 {
        return Err(Error::Dimension("random_tn needs n >= 1".into()));
    }
    let params = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            loop {
                let v: f64 = rng.random_range(0.5..1.5);
                if v > 0.5 {
                    break T::from_f64(v);
                }
            }
        } else {
            T::from_f64(rng.random_range(0.0..=1.0))
        }
    });
    TNFactorization::new(params)
}

/// Neville elimination of the lower part: returns the multipliers `m[(i, j)]`, `i > j`, and
/// the upper triangular remainder.
fn neville_lower<T: Scalar>(a: &Matrix<T>) -> Result<(Matrix<T>, Matrix<T>)> {
    let n = a.rows();
    let mut w = a.clone();
    let mut m = Matrix::zeros(n, n);
    for j in 0..n {
        // Bottom-up, so each row is reduced by the still-unmodified row above it.
        for i in (j + 1..n).rev() {
            let below = w[(i, j)].clone();
            if below.is_zero() {
                continue;
            }
            let pivot = w[(i - 1, j)].clone();
            if pivot.is_zero() {
                return Err(Error::NotTnFactorizable { row: i, col: j });
            }
            let mult = below / pivot;
            if mult.lt_zero() {
                return Err(Error::NotTnFactorizable { row: i, col: j });
            }
            for c in j..n {
                let v = w[(i, c)].clone() - mult.clone() * w[(i - 1, c)].clone();
                w[(i, c)] = v;
            }
            w[(i, j)] = T::zero();
            m[(i, j)] = mult;
        }
    }
    Ok((m, w))
}

/// TN parameters of a nonsingular TN matrix by Neville elimination (exact for rationals).
pub fn neville_bd<T: Scalar>(a: &Matrix<T>) -> Result<TNFactorization<T>> {
    if !a.is_square() || a.rows() == 0 {
        return Err(Error::Dimension("neville_bd needs a nonempty square matrix".into()));
    }
    let n = a.rows();
    let (lower, u) = neville_lower(a)?;
    let d: Vec<T> = (0..n).map(|i| u[(i, i)].clone()).collect();
    if let Some(i) = d.iter().position(|x| !x.gt_zero()) {
        return Err(Error::NotTnFactorizable { row: i, col: i });
    }
    // Unit upper part, transposed, eliminated the same way.
    let ut = Matrix::from_fn(n, n, |i, j| if i >= j { u[(j, i)].clone() / d[j].clone() } else { T::zero() });
    let (upper, _) = neville_lower(&ut)?;
    let params = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Greater => lower[(i, j)].clone(),
        std::cmp::Ordering::Less => upper[(j, i)].clone(),
        std::cmp::Ordering::Equal => d[i].clone(),
    });
    TNFactorization::new(params)
}

impl TNFactorization<f64> {
    pub fn to_exact(&self) -> TNFactorization<Rational> {
        self.map(|&x| Rational::from_f64(x))
    }
}
