//! Special matrices together with their bidiagonal factorizations.
//!
//! Exact forms are the source of truth; floating forms are rounded from them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bidiagonal::{Bidiagonal, Orientation};
use crate::chain::{DiagonalScale, Factor, FactorChain};
use crate::error::{Error, Result};
use crate::matrix::{ExactMatrix, Matrix};
use crate::oracle;
use crate::scalar::{Rational, Scalar};
use crate::svals::SymTridiagonal;
use crate::tn::{neville_bd, tn_expand, TNFactorization};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GalleryName {
    Pascal,
    Hilbert,
    Frank,
    MinIJ,
    Kms,
    Creation,
    TriToeplitzExample,
}

impl GalleryName {
    pub const ALL: [GalleryName; 7] = [
        GalleryName::Pascal,
        GalleryName::Hilbert,
        GalleryName::Frank,
        GalleryName::MinIJ,
        GalleryName::Kms,
        GalleryName::Creation,
        GalleryName::TriToeplitzExample,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GalleryName::Pascal => "pascal",
            GalleryName::Hilbert => "hilbert",
            GalleryName::Frank => "frank",
            GalleryName::MinIJ => "minij",
            GalleryName::Kms => "kms",
            GalleryName::Creation => "creation",
            GalleryName::TriToeplitzExample => "tritoeplitz",
        }
    }
}

impl fmt::Display for GalleryName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GalleryName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GalleryName::ALL
            .into_iter()
            .find(|g| g.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown gallery matrix '{s}'")))
    }
}

/// A gallery matrix in every available representation.
#[derive(Debug, Clone)]
pub struct GalleryMatrix {
    pub name: GalleryName,
    pub n: usize,
    pub parameters: Vec<Rational>,
    pub exact: ExactMatrix,
    pub dense: Matrix<f64>,
    pub exact_chain: Option<FactorChain<Rational>>,
    pub chain: Option<FactorChain<f64>>,
    pub tn: Option<TNFactorization<Rational>>,
    /// False when rounding to `f64` changed some entry.
    pub representable: bool,
}

impl GalleryMatrix {
    fn assemble(name: GalleryName, parameters: Vec<Rational>, exact: ExactMatrix, exact_chain: Option<FactorChain<Rational>>, tn: Option<TNFactorization<Rational>>) -> Self {
        let dense = exact.to_f64();
        let representable = dense.to_exact() == exact;
        let chain = exact_chain.as_ref().map(FactorChain::to_f64);
        Self { name, n: exact.rows(), parameters, exact, dense, exact_chain, chain, tn, representable }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::Dimension("gallery matrices need n >= 1".into()));
    }
    Ok(())
}

fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

/// Builds a gallery matrix by name; `params` holds `rho` for KMS and the first row for
/// the triangular Toeplitz example.
pub fn by_name(name: GalleryName, n: usize, params: &[Rational]) -> Result<GalleryMatrix> {
    match name {
        GalleryName::Pascal => pascal(n),
        GalleryName::Hilbert => hilbert(n),
        GalleryName::Frank => frank(n),
        GalleryName::MinIJ => minij(n),
        GalleryName::Kms => {
            let rho = params.first().cloned().ok_or_else(|| Error::Domain("kms needs rho".into()))?;
            kms(n, rho)
        }
        GalleryName::Creation => creation(n),
        GalleryName::TriToeplitzExample => {
            let row: Vec<Rational> = if params.is_empty() {
                (0..n).map(|j| q(j as i64 + 1)).collect()
            } else {
                params.to_vec()
            };
            tri_toeplitz(n, &row)
        }
    }
}

/// Pascal matrix `p_ij = C(i+j-2, j-1)` by the additive recurrence; chain from all-ones TN parameters.
pub fn pascal(n: usize) -> Result<GalleryMatrix> {
    check_n(n)?;
    let mut p = vec![vec![BigInt::from(1); n]; n];
    for i in 1..n {
        for j in 1..n {
            p[i][j] = &p[i - 1][j] + &p[i][j - 1];
        }
    }
    let exact = Matrix::from_fn(n, n, |i, j| Rational::from_integer(p[i][j].clone()));
    let tn = TNFactorization::new(Matrix::from_fn(n, n, |_, _| q(1)))?;
    let chain = tn_expand(&tn)?;
    Ok(GalleryMatrix::assemble(GalleryName::Pascal, vec![], exact, Some(chain), Some(tn)))
}

/// Upper triangular Cholesky factor `R_n` of the Pascal matrix: binomial coefficients down its columns.
pub fn pascal_cholesky(n: usize) -> Result<ExactMatrix> {
    check_n(n)?;
    let mut r = vec![vec![BigInt::from(0); n]; n];
    for j in 0..n {
        r[0][j] = BigInt::from(1);
        for i in 1..=j {
            r[i][j] = &r[i - 1][j - 1] + if i < j { r[i][j - 1].clone() } else { BigInt::from(0) };
        }
    }
    Ok(Matrix::from_fn(n, n, |i, j| Rational::from_integer(r[i][j].clone())))
}

/// `S_n = Σ R_n` with `Σ = diag(1, -1, 1, ...)`.
pub fn pascal_s(n: usize) -> Result<ExactMatrix> {
    let r = pascal_cholesky(n)?;
    Ok(Matrix::from_fn(n, n, |i, j| if i % 2 == 0 { r[(i, j)].clone() } else { -r[(i, j)].clone() }))
}

/// True iff `S_n^2 = I` exactly.
pub fn pascal_involution_check(n: usize) -> Result<bool> {
    let s = pascal_s(n)?;
    Ok(s.mul(&s)? == Matrix::identity(n))
}

/// Hilbert matrix `1/(i+j-1)`; TN parameters by exact Neville elimination, floating chain
/// from the rounded parameters.
pub fn hilbert(n: usize) -> Result<GalleryMatrix> {
    check_n(n)?;
    let exact = Matrix::from_fn(n, n, |i, j| Rational::new(BigInt::from(1), BigInt::from(i + j + 1)));
    let tn = neville_bd(&exact)?;
    let chain = tn_expand(&tn)?;
    Ok(GalleryMatrix::assemble(GalleryName::Hilbert, vec![], exact, Some(chain), Some(tn)))
}

/// Frank matrix `F_n = T_n(-1)^{-1} L`, `L` unit lower bidiagonal with subdiagonal `n-1, ..., 1`.
pub fn frank(n: usize) -> Result<GalleryMatrix> {
    check_n(n)?;
    let exact = Matrix::from_fn(n, n, |i, j| if j + 1 >= i { q((n - i.max(j)) as i64) } else { q(0) });
    let t = Bidiagonal::one_parameter(n, q(-1))?;
    let l = Bidiagonal::new(Orientation::Lower, vec![q(1); n], (1..n).rev().map(|v| q(v as i64)).collect())?;
    let chain = FactorChain::new(n, vec![Factor::inverse_of(t), Factor::plain(l)], None)?;
    Ok(GalleryMatrix::assemble(GalleryName::Frank, vec![], exact, Some(chain), None))
}

/// `A_n = (min(i, j)) = T_n(-1)^{-T} T_n(-1)^{-1}`.
pub fn minij(n: usize) -> Result<GalleryMatrix> {
    check_n(n)?;
    let exact = Matrix::from_fn(n, n, |i, j| q(i.min(j) as i64 + 1));
    let t = Bidiagonal::one_parameter(n, q(-1))?;
    let chain = FactorChain::new(n, vec![Factor::inverse_of(t.transpose()), Factor::inverse_of(t)], None)?;
    let tn = neville_bd(&exact)?;
    Ok(GalleryMatrix::assemble(GalleryName::MinIJ, vec![], exact, Some(chain), Some(tn)))
}

/// `A_n^{-1}`: tridiagonal with diagonal `(2, ..., 2, 1)` and off-diagonal `-1`.
pub fn minij_inverse(n: usize) -> Result<SymTridiagonal> {
    check_n(n)?;
    let mut d = vec![2.0; n];
    d[n - 1] = 1.0;
    SymTridiagonal::new(d, vec![-1.0; n - 1])
}

/// Closed-form eigenvalues of `A_n^{-1}`: `2(1 + cos(2k pi/(2n+1)))`, `k = 1..n`, descending.
pub fn minij_inverse_eigenvalues(n: usize) -> Vec<f64> {
    let mut mu: Vec<f64> = (1..=n)
        .map(|k| 2.0 * (1.0 + (2.0 * k as f64 * std::f64::consts::PI / (2 * n + 1) as f64).cos()))
        .collect();
    mu.sort_by(|a, b| b.total_cmp(a));
    mu
}

/// KMS matrix `rho^{|i-j|}`. For `|rho| < 1` the chain is `L D L^T` with
/// `L = T_n(-rho)^{-T}` and `D = diag(1, 1-rho^2, ...)` held as the chain's scale.
pub fn kms(n: usize, rho: Rational) -> Result<GalleryMatrix> {
    check_n(n)?;
    let pow = |k: usize| crate::scalar::powi(&rho, k);
    let exact = Matrix::from_fn(n, n, |i, j| pow(i.abs_diff(j)));
    let one = q(1);
    let s = one.clone() - rho.clone() * rho.clone();
    let chain = if s.gt_zero() {
        let t = Bidiagonal::one_parameter(n, -rho.clone())?;
        let d = (0..n).map(|i| if i == 0 { one.clone() } else { s.clone() }).collect();
        Some(FactorChain::new(
            n,
            vec![Factor::inverse_of(t.transpose()), Factor::inverse_of(t)],
            Some(DiagonalScale { position: 1, diag: d }),
        )?)
    } else {
        None
    };
    Ok(GalleryMatrix::assemble(GalleryName::Kms, vec![rho], exact, chain, None))
}

/// `A_n(rho)^{-1} = T_n(-rho) D^{-1} T_n(-rho)^T`, exactly.
pub fn kms_inverse(n: usize, rho: &Rational) -> Result<ExactMatrix> {
    check_n(n)?;
    let s = q(1) - rho.clone() * rho.clone();
    if s.is_zero() {
        return Err(Error::Singular { factor: None, position: 1.min(n - 1) });
    }
    let t = Bidiagonal::one_parameter(n, -rho.clone())?.to_dense();
    let dinv = Matrix::diagonal(&(0..n).map(|i| if i == 0 { q(1) } else { q(1) / s.clone() }).collect::<Vec<_>>());
    t.mul(&dinv)?.mul(&t.transpose())
}

/// `det A_n(rho) = (1 - rho^2)^{n-1}`.
pub fn kms_det(n: usize, rho: &Rational) -> Rational {
    crate::scalar::powi(&(q(1) - rho.clone() * rho.clone()), n.saturating_sub(1))
}

/// Creation matrix: upper bidiagonal, zero diagonal, superdiagonal `1, 2, ..., n-1`.
pub fn creation_bidiagonal(n: usize) -> Result<Bidiagonal<Rational>> {
    check_n(n)?;
    Bidiagonal::new(Orientation::Upper, vec![q(0); n], (1..n).map(|v| q(v as i64)).collect())
}

pub fn creation(n: usize) -> Result<GalleryMatrix> {
    let b = creation_bidiagonal(n)?;
    let exact = b.to_dense();
    let chain = FactorChain::new(n, vec![Factor::plain(b)], None)?;
    Ok(GalleryMatrix::assemble(GalleryName::Creation, vec![], exact, Some(chain), None))
}

/// Upper triangular Toeplitz matrix with the given first row (padded with zeros to length `n`).
pub fn tri_toeplitz(n: usize, first_row: &[Rational]) -> Result<GalleryMatrix> {
    check_n(n)?;
    if first_row.len() > n {
        return Err(Error::DimensionMismatch { expected: n, found: first_row.len() });
    }
    let t = |k: usize| first_row.get(k).cloned().unwrap_or_else(|| q(0));
    let exact = Matrix::from_fn(n, n, |i, j| if j >= i { t(j - i) } else { q(0) });
    // Bidiagonal when only t_0 and t_1 can be nonzero.
    let chain = if (2..n).all(|k| t(k).is_zero()) {
        let b = Bidiagonal::new(Orientation::Upper, vec![t(0); n], vec![t(1); n - 1])?;
        Some(FactorChain::new(n, vec![Factor::plain(b)], None)?)
    } else {
        None
    };
    Ok(GalleryMatrix::assemble(GalleryName::TriToeplitzExample, first_row.to_vec(), exact, chain, None))
}

/// Gauss-Seidel iteration matrix `B = -(D+L)^{-1} U` of a tridiagonal `A = D + L + U`,
/// as the chain `[(-D-L)^{-1}, U]`.
///
/// Requires a negative diagonal and nonnegative off-diagonals, under which `B` is TN.
pub fn gauss_seidel_iteration_matrix<T: Scalar>(diag: &[T], sub: &[T], sup: &[T]) -> Result<FactorChain<T>> {
    let n = diag.len();
    check_n(n)?;
    for v in [sub, sup] {
        if v.len() + 1 != n {
            return Err(Error::DimensionMismatch { expected: n - 1, found: v.len() });
        }
    }
    if let Some(i) = diag.iter().position(|d| !d.lt_zero()) {
        return Err(Error::Domain(format!("diagonal entry {i} must be negative")));
    }
    if sub.iter().chain(sup).any(|x| x.lt_zero()) {
        return Err(Error::Domain("off-diagonal entries must be nonnegative".into()));
    }
    let neg_dl = Bidiagonal::new(Orientation::Lower, diag.iter().map(|d| -d.clone()).collect(), sub.iter().map(|s| -s.clone()).collect())?;
    let u = Bidiagonal::new(Orientation::Upper, vec![T::zero(); n], sup.to_vec())?;
    FactorChain::new(n, vec![Factor::inverse_of(neg_dl), Factor::plain(u)], None)
}

/// Reverses row and column order: `J A J`.
pub fn reverse(a: &ExactMatrix) -> ExactMatrix {
    let (r, c) = (a.rows(), a.cols());
    Matrix::from_fn(r, c, |i, j| a[(r - 1 - i, c - 1 - j)].clone())
}

/// Exact `kappa_inf` of a gallery matrix from the oracle.
pub fn exact_kinf(g: &GalleryMatrix) -> Result<Rational> {
    oracle::exact_kinf(&g.exact)
}
