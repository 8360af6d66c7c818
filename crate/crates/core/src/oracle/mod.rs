//! Exact rational reference computations.
//!
//! Dense linear algebra here runs on integer matrices obtained by clearing the
//! denominators of each row, using fraction-free (Bareiss) elimination so that
//! every intermediate quotient is exact.

pub mod interval;
pub mod poly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::chain::FactorChain;
use crate::error::{Error, Result};
use crate::matrix::{ExactMatrix, Matrix};
use crate::scalar::{Rational, Scalar};

pub use interval::{Interval, IntervalMatrix};

/// Default size guard for minor enumeration.
pub const TN_MAX_N: usize = 7;

/// Multiplies each row of `[A | B]` by the lcm of its denominators.
fn clear_denominators(a: &ExactMatrix, b: &ExactMatrix) -> Vec<Vec<BigInt>> {
    (0..a.rows())
        .map(|i| {
            let row: Vec<&Rational> = a.row(i).iter().chain(b.row(i).iter()).collect();
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

/// Fraction-free Gauss-Jordan: returns `X` with `A X = B`.
///
/// After step `k` every entry is a `k+1`-order minor of the scaled system, so the
/// division by the previous pivot is exact.
pub fn exact_solve_matrix(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    let n = a.rows();
    if !a.is_square() {
        return Err(Error::Dimension(format!("expected a square matrix, got {}x{}", a.rows(), a.cols())));
    }
    if b.rows() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.rows() });
    }
    let m = b.cols();
    let mut w = clear_denominators(a, b);
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&r| !w[r][k].is_zero()).ok_or(Error::Singular { factor: None, position: k })?;
        w.swap(k, p);
        let pivot = w[k][k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = w[i][k].clone();
            for j in 0..n + m {
                if j == k {
                    continue;
                }
                let v = (&pivot * &w[i][j] - &f * &w[k][j]) / &prev;
                w[i][j] = v;
            }
            w[i][k] = BigInt::zero();
        }
        prev = pivot;
    }
    let d = Rational::from_integer(prev);
    Ok(Matrix::from_fn(n, m, |i, j| Rational::from_integer(w[i][n + j].clone()) / d.clone()))
}

pub fn exact_inverse(a: &ExactMatrix) -> Result<ExactMatrix> {
    exact_solve_matrix(a, &Matrix::identity(a.rows()))
}

pub fn exact_solve(a: &ExactMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    Ok(exact_solve_matrix(a, &Matrix::column(b))?.col(0))
}

/// Determinant by Bareiss elimination.
pub fn exact_det(a: &ExactMatrix) -> Result<Rational> {
    let n = a.rows();
    if !a.is_square() {
        return Err(Error::Dimension(format!("expected a square matrix, got {}x{}", a.rows(), a.cols())));
    }
    let mut scale = Rational::one();
    let mut w: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let l = a.row(i).iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            scale = scale.clone() * Rational::from_integer(l.clone());
            a.row(i).iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    Ok(Rational::from_integer(bareiss_det(&mut w)) / scale)
}

/// In-place Bareiss determinant of an integer matrix.
fn bareiss_det(w: &mut [Vec<BigInt>]) -> BigInt {
    let n = w.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !w[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            w.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&w[k][k] * &w[i][j] - &w[i][k] * &w[k][j]) / &prev;
                w[i][j] = v;
            }
        }
        prev = w[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &w[n - 1][n - 1]
}

pub fn exact_inf_norm(a: &ExactMatrix) -> Rational {
    a.inf_norm()
}

/// `||A||_inf ||A^{-1}||_inf` exactly.
pub fn exact_kinf(a: &ExactMatrix) -> Result<Rational> {
    Ok(a.inf_norm() * exact_inverse(a)?.inf_norm())
}

/// Skeel condition number `|| |A^{-1}| |A| |x| ||_inf / ||x||_inf` exactly.
pub fn exact_skeel(a: &ExactMatrix, x: &[Rational]) -> Result<Rational> {
    let nx = crate::scalar::inf_norm(x);
    if nx.is_zero() {
        return Err(Error::Domain("x must be nonzero".into()));
    }
    let ax = a.abs().matvec(&crate::scalar::abs_vec(x))?;
    let v = exact_inverse(a)?.abs().matvec(&ax)?;
    Ok(crate::scalar::inf_norm(&v) / nx)
}

pub fn exact_chain_dense(c: &FactorChain<Rational>) -> Result<ExactMatrix> {
    c.dense()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// A minor `det A[rows, cols]` (zero-based index sets).
#[derive(Debug, Clone, PartialEq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Rational,
}

/// First negative minor in order of size, then rows, then columns.
pub fn find_negative_minor(a: &ExactMatrix, max_n: usize) -> Result<Option<Minor>> {
    let big = a.rows().max(a.cols());
    if big > max_n {
        return Err(Error::Size { n: big, max: max_n });
    }
    for k in 1..=a.rows().min(a.cols()) {
        for rows in subsets(a.rows(), k) {
            for cols in subsets(a.cols(), k) {
                let d = exact_det(&a.submatrix(&rows, &cols))?;
                if d.lt_zero() {
                    return Ok(Some(Minor { rows, cols, value: d }));
                }
            }
        }
    }
    Ok(None)
}

/// True iff every minor of `A` is nonnegative; enumerates all square submatrices.
pub fn is_totally_nonnegative(a: &ExactMatrix, max_n: usize) -> Result<bool> {
    Ok(find_negative_minor(a, max_n)?.is_none())
}

/// True iff every minor is strictly positive.
pub fn is_totally_positive(a: &ExactMatrix, max_n: usize) -> Result<bool> {
    let big = a.rows().max(a.cols());
    if big > max_n {
        return Err(Error::Size { n: big, max: max_n });
    }
    for k in 1..=a.rows().min(a.cols()) {
        for rows in subsets(a.rows(), k) {
            for cols in subsets(a.cols(), k) {
                if !exact_det(&a.submatrix(&rows, &cols))?.gt_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Relative error `|computed - exact| / |exact|` evaluated exactly, then rounded.
pub fn rel_error(computed: f64, exact: &Rational) -> f64 {
    let c = Rational::from_f64(computed);
    if exact.is_zero() {
        return if c.is_zero() { 0.0 } else { f64::INFINITY };
    }
    Scalar::to_f64(&((c - exact).abs() / exact.abs()))
}

/// `max_i |x_i - y_i| / max_i |y_i|` with exact `y`.
pub fn rel_error_vec(computed: &[f64], exact: &[Rational]) -> f64 {
    let diff: Vec<Rational> = computed.iter().zip(exact).map(|(&c, e)| Rational::from_f64(c) - e).collect();
    let den = crate::scalar::inf_norm(exact);
    if den.is_zero() {
        return if crate::scalar::inf_norm(&diff).is_zero() { 0.0 } else { f64::INFINITY };
    }
    Scalar::to_f64(&(crate::scalar::inf_norm(&diff) / den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(rows: &[&[i64]]) -> ExactMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| ratio(v, 1)).collect()).collect()).unwrap()
    }

    fn hilbert(n: usize) -> ExactMatrix {
        Matrix::from_fn(n, n, |i, j| ratio(1, (i + j + 1) as i64))
    }

    #[test]
    fn hilbert_two_inverse_and_kinf() {
        assert_eq!(exact_inverse(&hilbert(2)).unwrap(), q(&[&[4, -6], &[-6, 12]]));
        assert_eq!(exact_kinf(&hilbert(2)).unwrap(), ratio(27, 1));
        assert_eq!(exact_kinf(&Matrix::identity(3)).unwrap(), ratio(1, 1));
    }

    #[test]
    fn inverse_of_t_minus_one_is_upper_ones() {
        let t = q(&[&[1, -1, 0], &[0, 1, -1], &[0, 0, 1]]);
        assert_eq!(exact_inverse(&t).unwrap(), q(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]));
    }

    #[test]
    fn singular_is_reported() {
        assert!(matches!(exact_inverse(&q(&[&[1, 2], &[2, 4]])), Err(Error::Singular { .. })));
        assert_eq!(exact_det(&q(&[&[1, 2], &[2, 4]])).unwrap(), ratio(0, 1));
    }

    #[test]
    fn random_inverses_are_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut done = 0;
        while done < 100 {
            let n = rng.random_range(1..=8);
            let a = Matrix::from_fn(n, n, |_, _| ratio(rng.random_range(-9..=9), rng.random_range(1..=5)));
            let Ok(inv) = exact_inverse(&a) else { continue };
            assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(n));
            assert_eq!(exact_det(&a).unwrap() * exact_det(&inv).unwrap(), ratio(1, 1));
            done += 1;
        }
    }

    #[test]
    fn determinant_with_row_swaps() {
        assert_eq!(exact_det(&q(&[&[0, 1], &[1, 0]])).unwrap(), ratio(-1, 1));
        assert_eq!(exact_det(&q(&[&[1, 2], &[3, 1]])).unwrap(), ratio(-5, 1));
        assert_eq!(exact_det(&hilbert(3)).unwrap(), ratio(1, 2160));
    }

    #[test]
    fn tn_checks() {
        let p4 = Matrix::from_fn(4, 4, |i, j| {
            let (mut v, mut c) = (1i64, 0);
            // C(i+j, j)
            while c < j {
                v = v * (i + j - c) as i64 / (c + 1) as i64;
                c += 1;
            }
            ratio(v, 1)
        });
        assert!(is_totally_nonnegative(&p4, TN_MAX_N).unwrap());
        assert!(is_totally_positive(&p4, TN_MAX_N).unwrap());
        let bad = q(&[&[1, 2], &[3, 1]]);
        assert!(!is_totally_nonnegative(&bad, TN_MAX_N).unwrap());
        let m = find_negative_minor(&bad, TN_MAX_N).unwrap().unwrap();
        assert_eq!((m.rows, m.cols, m.value), (vec![0, 1], vec![0, 1], ratio(-5, 1)));
        assert!(matches!(is_totally_nonnegative(&Matrix::identity(8), TN_MAX_N), Err(Error::Size { n: 8, max: 7 })));
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
