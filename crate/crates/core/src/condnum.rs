//! Infinity-norm condition numbers of factor chains, evaluated without forming `A`.
//!
//! For a chain whose factors are all sign-definite, or all checkerboard,
//! `|A| = |F_1| ... |F_k|` and `|A^{-1}| = |F_k^{-1}| ... |F_1^{-1}|`, so both norms reduce
//! to `k` bidiagonal sweeps applied to the vector of ones. Every term in those sweeps is
//! nonnegative: no subtraction ever occurs.

use crate::chain::FactorChain;
use crate::error::{Error, Result};
use crate::scalar::{abs_vec, inf_norm, Scalar};

/// `||A||_inf = || |F_1| ... |F_k| e ||_inf`.
pub fn chain_inf_norm<T: Scalar>(c: &FactorChain<T>) -> Result<T> {
    c.require_supported()?;
    Ok(inf_norm(&c.abs_apply(&vec![T::one(); c.n()])?))
}

/// `||A^{-1}||_inf`, via comparison-matrix substitutions for the non-inverted factors.
pub fn chain_inv_inf_norm<T: Scalar>(c: &FactorChain<T>) -> Result<T> {
    chain_inf_norm(&c.inverse())
}

/// `kappa_inf(A) = ||A||_inf ||A^{-1}||_inf`.
pub fn chain_kinf<T: Scalar>(c: &FactorChain<T>) -> Result<T> {
    Ok(chain_inf_norm(c)? * chain_inv_inf_norm(c)?)
}

/// Skeel condition number `|| |A^{-1}| |A| |x| ||_inf / ||x||_inf`; `6kn` flops.
pub fn skeel_cond<T: Scalar>(c: &FactorChain<T>, x: &[T]) -> Result<T> {
    c.require_supported()?;
    let nx = inf_norm(x);
    if nx.is_zero() {
        return Err(Error::Domain("x must be nonzero".into()));
    }
    let ax = c.abs_apply(&abs_vec(x))?;
    let v = c.inverse().abs_apply(&ax)?;
    Ok(inf_norm(&v) / nx)
}

/// One-norm condition number through the transposed chain.
pub fn chain_kone<T: Scalar>(c: &FactorChain<T>) -> Result<T> {
    chain_kinf(&c.transpose())
}
