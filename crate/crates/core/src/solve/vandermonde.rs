//! Björck-Pereyra: `V^{-1}` for `V = (x_j^{i-1})` as `2n-2` bidiagonal factors.
//!
//! With `S_k` the lower bidiagonal divided-difference stage
//! (`c_i <- (c_i - c_{i-1}) / (x_i - x_{i-k})` for `i > k`) and `U_k` the unit upper
//! bidiagonal Horner stage (`a_i <- a_i - x_k a_{i+1}` for `i >= k`),
//! `V^{-T} = U_1 ... U_{n-1} S_{n-1} ... S_1`, so
//! `V^{-1} = S_1^T ... S_{n-1}^T U_{n-1}^T ... U_1^T`.
//! For `0 <= x_1 < ... < x_n` every factor has positive diagonal and nonpositive
//! off-diagonal, hence a checkerboard sign pattern.

use crate::bidiagonal::{Bidiagonal, Orientation};
use crate::chain::{Factor, FactorChain};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{powi, Scalar};

/// `V = (x_j^{i-1})`: row `i` holds the `(i-1)`-th powers of the points.
pub fn vandermonde_matrix<T: Scalar>(points: &[T]) -> Matrix<T> {
    let n = points.len();
    Matrix::from_fn(n, n, |i, j| powi(&points[j], i))
}

fn check_distinct<T: Scalar>(points: &[T]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::Dimension("at least one point is required".into()));
    }
    for i in 0..points.len() {
        for j in 0..i {
            if points[i] == points[j] {
                return Err(Error::Domain(format!("points {j} and {i} coincide")));
            }
        }
    }
    Ok(())
}

/// Divided-difference stage `S_k` (1-based `k`).
fn stage_s<T: Scalar>(points: &[T], k: usize) -> Bidiagonal<T> {
    let n = points.len();
    let mut diag = vec![T::one(); n];
    let mut off = vec![T::zero(); n - 1];
    for i in k..n {
        let r = T::one() / (points[i].clone() - points[i - k].clone());
        off[i - 1] = -r.clone();
        diag[i] = r;
    }
    Bidiagonal::new(Orientation::Lower, diag, off).expect("sizes agree")
}

/// Horner stage `U_k` (1-based `k`).
fn stage_u<T: Scalar>(points: &[T], k: usize) -> Bidiagonal<T> {
    let n = points.len();
    let mut off = vec![T::zero(); n - 1];
    for o in off.iter_mut().skip(k - 1) {
        *o = -points[k - 1].clone();
    }
    Bidiagonal::new(Orientation::Upper, vec![T::one(); n], off).expect("sizes agree")
}

/// The `2n-2` factor chain equal to `V^{-1}`; empty for a single point.
pub fn vandermonde_inverse_chain<T: Scalar>(points: &[T]) -> Result<FactorChain<T>> {
    check_distinct(points)?;
    let n = points.len();
    let mut factors = Vec::with_capacity(2 * n - 2);
    for k in 1..n {
        factors.push(Factor::plain(stage_s(points, k).transpose()));
    }
    for k in (1..n).rev() {
        factors.push(Factor::plain(stage_u(points, k).transpose()));
    }
    FactorChain::new(n, factors, None)
}

/// `y = V^{-1} b` in `O(n^2)` without forming `V`.
pub fn bp_solve<T: Scalar>(points: &[T], b: &[T]) -> Result<Vec<T>> {
    vandermonde_inverse_chain(points)?.apply(b)
}

/// Coefficients `a` of the polynomial `p(x) = sum a_i x^{i-1}` with `p(x_j) = f_j`,
/// i.e. `a = V^{-T} f`.
pub fn bp_interpolate<T: Scalar>(points: &[T], f: &[T]) -> Result<Vec<T>> {
    vandermonde_inverse_chain(points)?.transpose().apply(f)
}
