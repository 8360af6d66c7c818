//! Singular values of bidiagonal matrices by Sturm-count bisection on the
//! Golub-Kahan tridiagonal, plus the perturbation experiments built on them.

use serde::Serialize;

use crate::bidiagonal::{Bidiagonal, Orientation};
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Default absolute tolerance, relative to `max(1, sigma_1)`.
pub const DEFAULT_TOL: f64 = 1e-12;

const MAX_BISECTIONS: usize = 2_000;

/// Symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Dimension("tridiagonal matrix needs m >= 1".into()));
        }
        if off.len() + 1 != diag.len() {
            return Err(Error::DimensionMismatch { expected: diag.len() - 1, found: off.len() });
        }
        Ok(Self { diag, off })
    }

    pub fn m(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    /// Number of eigenvalues strictly below `x`: negative pivots of `T - xI = LDL^T`.
    pub fn count_below(&self, x: f64) -> usize {
        let scale = self.off.iter().fold(1.0f64, |m, b| m.max(b * b));
        let pivmin = f64::MIN_POSITIVE * scale;
        let mut count = 0;
        let mut d = self.diag[0] - x;
        for i in 0..self.m() {
            if i > 0 {
                d = self.diag[i] - x - self.off[i - 1] * self.off[i - 1] / d;
            }
            if d.abs() < pivmin {
                d = -pivmin;
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let m = self.m();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..m {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 } + if i + 1 < m { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// The `k`-th smallest eigenvalue (zero-based) to absolute width `width`.
    pub fn kth_eigenvalue(&self, k: usize, width: f64) -> f64 {
        let (mut lo, mut hi) = self.gershgorin();
        let pad = f64::EPSILON * lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
        lo -= pad;
        hi += pad;
        for _ in 0..MAX_BISECTIONS {
            if hi - lo <= width {
                break;
            }
            let mid = lo + (hi - lo) / 2.0;
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        lo + (hi - lo) / 2.0
    }

    /// All eigenvalues, descending, each to within `tol * max(1, ||T||)`.
    pub fn eigenvalues(&self, tol: f64) -> Result<Vec<f64>> {
        check_tol(tol)?;
        let (lo, hi) = self.gershgorin();
        let width = tol * lo.abs().max(hi.abs()).max(1.0);
        Ok((0..self.m()).rev().map(|k| self.kth_eigenvalue(k, width)).collect())
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("tolerance must be positive, got {tol}")))
    }
}

/// `2n x 2n` zero-diagonal tridiagonal with off-diagonal `(b_11, b_12, b_22, ..., b_nn)`;
/// its eigenvalues are `±sigma_i(B)`. Lower factors are transposed first.
pub fn golub_kahan_tridiagonal(b: &Bidiagonal<f64>) -> SymTridiagonal {
    let n = b.n();
    let mut off = Vec::with_capacity(2 * n - 1);
    for i in 0..n {
        off.push(b.diag()[i]);
        if i + 1 < n {
            off.push(b.off()[i]);
        }
    }
    SymTridiagonal { diag: vec![0.0; 2 * n], off }
}

/// Singular values, descending, each within `tol * max(1, sigma_1)`.
pub fn singular_values(b: &Bidiagonal<f64>, tol: f64) -> Result<Vec<f64>> {
    check_tol(tol)?;
    let upper = match b.orientation() {
        Orientation::Upper => b.clone(),
        Orientation::Lower => b.transpose(),
    };
    let t = golub_kahan_tridiagonal(&upper);
    let (_, hi) = t.gershgorin();
    let width = tol * hi.max(1.0);
    let m = t.m();
    Ok((0..b.n()).map(|i| t.kth_eigenvalue(m - 1 - i, width).max(0.0)).collect())
}

/// `mu = prod max(|alpha_i|, 1/|alpha_i|)`.
pub fn sval_perturbation_mu(alphas: &[f64]) -> Result<f64> {
    if let Some(i) = alphas.iter().position(|&a| a == 0.0) {
        return Err(Error::Domain(format!("alpha {i} is zero")));
    }
    Ok(alphas.iter().map(|a| a.abs().max(1.0 / a.abs())).product())
}

/// Multiplies the `2n-1` entries of `B` (diagonal first, then off-diagonal) by `alphas`.
pub fn scale_entries(b: &Bidiagonal<f64>, alphas: &[f64]) -> Result<Bidiagonal<f64>> {
    let n = b.n();
    if alphas.len() != 2 * n - 1 {
        return Err(Error::DimensionMismatch { expected: 2 * n - 1, found: alphas.len() });
    }
    let diag = b.diag().iter().zip(alphas).map(|(x, a)| x * a).collect();
    let off = b.off().iter().zip(&alphas[n..]).map(|(x, a)| x * a).collect();
    Bidiagonal::new(b.orientation(), diag, off)
}

/// Two-factor example: `[[1, x], [0, 1]] [[1, -x], [0, 1]] = I`, perturbed to
/// `[[1, x(1+δ)], [0, 1]] [[1, -x(1-δ)], [0, 1]] = [[1, 2xδ], [0, 1]]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CounterexampleReport {
    pub x: f64,
    pub delta: f64,
    /// The `(1, 2)` entry of the perturbed product, formed exactly then rounded.
    pub product_offdiag: f64,
    pub sigma: [f64; 2],
    pub sigma_hat: [f64; 2],
    pub relative_change: [f64; 2],
    /// `2xδ` and `1/(2xδ)`.
    pub predicted: [f64; 2],
}

pub fn product_sval_counterexample(x: f64, delta: f64) -> Result<CounterexampleReport> {
    if !(x > 0.0) || !(delta >= 0.0) || !x.is_finite() || !delta.is_finite() {
        return Err(Error::Domain("need x > 0 and delta >= 0".into()));
    }
    // delta = 0 leaves the product at I; the regime guard applies to genuine perturbations.
    if delta > 0.0 && x * delta < 10.0 {
        return Err(Error::Domain(format!("x*delta = {} is below 10; the example needs x*delta >> 1", x * delta)));
    }
    let xr = Rational::from_f64(x);
    let dr = Rational::from_f64(delta);
    let one = Rational::from_i64(1);
    let entry = xr.clone() * (one.clone() + dr.clone()) - xr * (one - dr);
    let c = entry.to_f64();
    let hat = Bidiagonal::new(Orientation::Upper, vec![1.0, 1.0], vec![c])?;
    let s = singular_values(&hat, DEFAULT_TOL)?;
    let sigma_hat = [s[0], s[1]];
    let two_xd = 2.0 * x * delta;
    Ok(CounterexampleReport {
        x,
        delta,
        product_offdiag: c,
        sigma: [1.0, 1.0],
        sigma_hat,
        relative_change: [(sigma_hat[0] - 1.0).abs(), (sigma_hat[1] - 1.0).abs()],
        predicted: [two_xd, if delta == 0.0 { 1.0 } else { 1.0 / two_xd }],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn upper(d: &[f64], o: &[f64]) -> Bidiagonal<f64> {
        Bidiagonal::new(Orientation::Upper, d.to_vec(), o.to_vec()).unwrap()
    }

    #[test]
    fn golden_ratio() {
        let s = singular_values(&upper(&[1.0, 1.0], &[1.0]), 1e-12).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((s[0] - phi).abs() < 2e-12);
        assert!((s[1] - 1.0 / phi).abs() < 2e-12);
    }

    #[test]
    fn diagonal_and_scalar_cases() {
        let s = singular_values(&upper(&[1.0, -3.0], &[0.0]), 1e-12).unwrap();
        assert!((s[0] - 3.0).abs() < 1e-11 && (s[1] - 1.0).abs() < 1e-11);
        let gk = golub_kahan_tridiagonal(&upper(&[3.0, 1.0], &[0.0]));
        let ev = gk.eigenvalues(1e-13).unwrap();
        for (got, want) in ev.iter().zip([3.0, 1.0, -1.0, -3.0]) {
            assert!((got - want).abs() < 1e-11);
        }
        let one = singular_values(&upper(&[-2.5], &[]), 1e-12).unwrap();
        assert!((one[0] - 2.5).abs() < 1e-11);
        assert!(singular_values(&upper(&[1.0], &[]), 0.0).is_err());
    }

    #[test]
    fn sturm_count_at_zero_is_n() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=10 {
            let b = Bidiagonal::<f64>::random(n, Orientation::Upper, 0.1, 2.0, &mut rng).unwrap();
            assert_eq!(golub_kahan_tridiagonal(&b).count_below(0.0), n);
        }
    }

    #[test]
    fn lower_factor_matches_transpose() {
        let b = upper(&[2.0, 0.5, 1.5], &[1.0, -3.0]);
        assert_eq!(singular_values(&b, 1e-12).unwrap(), singular_values(&b.transpose(), 1e-12).unwrap());
    }

    #[test]
    fn mu_examples() {
        assert_eq!(sval_perturbation_mu(&[1.0; 5]).unwrap(), 1.0);
        let m = sval_perturbation_mu(&[1.001; 3]).unwrap();
        assert!((m - 1.001f64.powi(3)).abs() < 1e-15);
        assert!((sval_perturbation_mu(&[0.5, 2.0]).unwrap() - 4.0).abs() < 1e-15);
        assert!(sval_perturbation_mu(&[1.0, 0.0]).is_err());
    }

    #[test]
    fn mu_bound_on_random_perturbations() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let b = Bidiagonal::<f64>::random(4, Orientation::Upper, -2.0, 2.0, &mut rng).unwrap();
        let alphas: Vec<f64> = (0..7).map(|_| rng.random_range(0.9..1.1)).collect();
        let mu = sval_perturbation_mu(&alphas).unwrap();
        let s = singular_values(&b, 1e-14).unwrap();
        let t = singular_values(&scale_entries(&b, &alphas).unwrap(), 1e-14).unwrap();
        for (x, y) in s.iter().zip(&t) {
            assert!(*y >= x / mu - 1e-12 && *y <= x * mu + 1e-12);
        }
    }

    #[test]
    fn counterexample() {
        let r = product_sval_counterexample(1e6, 1e-4).unwrap();
        assert!((r.sigma_hat[0] - 200.0).abs() / 200.0 < 0.01);
        assert!(r.relative_change[1] >= 0.99);
        let id = product_sval_counterexample(3.0, 0.0).unwrap();
        assert_eq!(id.product_offdiag, 0.0);
        assert!((id.sigma_hat[0] - 1.0).abs() < 1e-11 && (id.sigma_hat[1] - 1.0).abs() < 1e-11);
        assert!(matches!(product_sval_counterexample(10.0, 0.5), Err(Error::Domain(_))));
    }
}
