//! Rounding-error constants and componentwise perturbation generators.

use rand::Rng;

use crate::bidiagonal::Bidiagonal;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `τ = (2n-1)δ / (1 - (2n-1)δ)`: relative perturbation bound for the inverse of an
/// `n x n` bidiagonal matrix whose entries carry relative errors up to `δ`.
pub fn tau_constant<T: Scalar>(n: usize, delta: &T) -> Result<T> {
    if delta.lt_zero() {
        return Err(Error::Domain("delta must be nonnegative".into()));
    }
    let m = T::from_usize(2 * n.max(1) - 1) * delta.clone();
    if m >= T::one() {
        return Err(Error::Domain(format!("(2n-1)*delta = {:e} must be below 1", m.to_f64())));
    }
    Ok(m.clone() / (T::one() - m))
}

/// `γ_m = m u / (1 - m u)`.
pub fn gamma_constant<T: Scalar>(m: usize, u: &T) -> Result<T> {
    if u.lt_zero() {
        return Err(Error::Domain("unit roundoff must be nonnegative".into()));
    }
    let mu = T::from_usize(m) * u.clone();
    if mu >= T::one() {
        return Err(Error::Domain(format!("m*u = {:e} must be below 1", mu.to_f64())));
    }
    Ok(mu.clone() / (T::one() - mu))
}

/// `γ_m` at the working precision of `T`.
pub fn gamma<T: Scalar>(m: usize) -> T {
    gamma_constant(m, &T::unit_roundoff()).expect("m * u < 1 at desk scale")
}

/// `prod (1 + eps_i) - 1`: the composite relative bound for a product of perturbed terms.
///
/// Accumulated as `p <- p + e + p e`, which never subtracts, so tiny `eps` keep full
/// relative accuracy in floating point.
pub fn product_bound<T: Scalar>(eps: &[T]) -> T {
    eps.iter().fold(T::zero(), |p, e| p.clone() + e.clone() + p * e.clone())
}

/// `(1 + eps)^k - 1`.
pub fn power_bound<T: Scalar>(k: usize, eps: &T) -> T {
    product_bound(&vec![eps.clone(); k])
}

/// Multiplies every entry of `B` by `1 + δ_i`, `δ_i` uniform in `[-delta, delta]`.
///
/// The factors `1 + δ_i` are formed in `f64` and converted exactly, so for rationals
/// `|B' - B| <= delta |B|` holds without rounding.
pub fn perturb_componentwise<T: Scalar, R: Rng + ?Sized>(b: &Bidiagonal<T>, delta: f64, rng: &mut R) -> Result<Bidiagonal<T>> {
    if !(delta >= 0.0) {
        return Err(Error::Domain("delta must be nonnegative".into()));
    }
    let mut draw = |x: &T| {
        if delta == 0.0 || x.is_zero() {
            return x.clone();
        }
        let d = rng.random_range(-delta..=delta);
        x.clone() * (T::one() + T::from_f64(d))
    };
    let diag = b.diag().iter().map(&mut draw).collect();
    let off = b.off().iter().map(&mut draw).collect();
    Bidiagonal::new(b.orientation(), diag, off)
}
