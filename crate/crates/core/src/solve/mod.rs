//! Substitution solvers for factor chains, with componentwise error budgets.
//!
//! A chain `A = F_1 ... F_k` is solved factor by factor: a plain bidiagonal factor by
//! substitution, an inverted one by multiplication. Each step is backward stable with a
//! small componentwise perturbation `|ΔB| <= δ |B|`, and the per-step constants compose
//! into bounds on the residual `|b - A x̂|` and the forward error `|x̂ - x|`.
//! Both bounds are reported as `coefficient * envelope`, with the envelope evaluated
//! through factor moduli in `O(kn)`.

mod lu;
mod vandermonde;

pub use lu::{dense_inverse, dense_kinf, dense_lu_solve, LuFactorization};
pub use vandermonde::{bp_interpolate, bp_solve, vandermonde_inverse_chain, vandermonde_matrix};

use serde::Serialize;

use crate::bounds::{gamma_constant, product_bound, tau_constant};
use crate::chain::{ChainPattern, Factor, FactorChain};
use crate::error::Result;
use crate::scalar::{abs_vec, inf_norm, Scalar};

/// Which quantity a budget bounds and how the chain was evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetKind {
    /// `|b - A x̂|` after substitution through `A`'s factors.
    ResidualBound,
    /// `|x̂ - x|` after substitution through `A`'s factors.
    ForwardBoundCoefficient,
    /// `|x̂ - x|` after multiplying out the factors of `A^{-1}`.
    InverseChainForward,
    /// `|b - A x̂|` after multiplying out the factors of `A^{-1}`.
    InverseChainResidual,
}

/// Entrywise bound `|quantity| <= coefficient * envelope`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorBudget<T> {
    pub kind: BudgetKind,
    /// `prod (1 + ε_i) - 1`, including all higher-order terms.
    pub coefficient: T,
    /// `sum ε_i` to first order in `u`; this is the figure usually quoted.
    pub first_order: T,
    /// `|A| |x̂|` for residual budgets, `|A^{-1}| |b|` for forward budgets.
    pub envelope: Vec<T>,
    /// True when the envelope was obtained from a sign-definite or checkerboard chain, so
    /// it equals the product of moduli exactly. Otherwise it is the larger product
    /// `|F_1| ... |F_k|` applied to the vector and the bound is correspondingly weaker.
    pub tight: bool,
}

impl<T: Scalar> ErrorBudget<T> {
    /// `coefficient * envelope`.
    pub fn bound(&self) -> Vec<T> {
        self.envelope.iter().map(|e| self.coefficient.clone() * e.clone()).collect()
    }

    /// `coefficient * ||envelope||_inf`, a bound on the norm of the quantity.
    pub fn norm_bound(&self) -> T {
        self.coefficient.clone() * inf_norm(&self.envelope)
    }

    /// `first_order * ||envelope||_inf`.
    pub fn first_order_norm_bound(&self) -> T {
        self.first_order.clone() * inf_norm(&self.envelope)
    }

    /// Checks `|q_i| <= (1 + slack) * coefficient * envelope_i` for every `i`.
    pub fn admits(&self, q: &[T], slack: &T) -> bool {
        let f = T::one() + slack.clone();
        q.len() == self.envelope.len()
            && q.iter().zip(self.bound()).all(|(qi, bi)| qi.abs() <= f.clone() * bi)
    }
}

/// Result of a chain solve together with both error budgets.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainSolve<T> {
    pub x: Vec<T>,
    pub residual: ErrorBudget<T>,
    pub forward: ErrorBudget<T>,
}

/// How the solver touches a factor `F` of `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// `F = B` plain: `F^{-1} v` by substitution.
    Substitution,
    /// `F = B^{-1}`: `F^{-1} v = B v` by multiplication.
    Multiplication,
}

impl Step {
    pub fn of<T: Scalar>(f: &Factor<T>) -> Self {
        if f.inverted {
            Step::Multiplication
        } else {
            Step::Substitution
        }
    }
}

/// Componentwise backward-error constant `δ` of one step in precision `u`:
/// the computed result is exact for some `B + ΔB` with `|ΔB| <= δ |B|`.
///
/// Zero for the identity; `γ_1` for a diagonal matrix, and for substitution with a unit
/// diagonal (no division is rounded); `γ_2` otherwise.
pub fn step_delta<T: Scalar>(f: &Factor<T>, u: &T) -> Result<T> {
    let b = &f.matrix;
    let m = if b.is_identity() {
        0
    } else if b.is_diagonal() || (Step::of(f) == Step::Substitution && b.is_unit_diagonal()) {
        1
    } else {
        2
    };
    gamma_constant(m, u)
}

/// Per-step relative bounds `(ε_i, η_i)` from step constants `δ_i`.
///
/// `ε_i` bounds the perturbation of `F_i^{-1}` (forward error), `η_i` that of `F_i`
/// (residual). A substituted factor perturbs `F_i` by `δ_i` and its inverse by `τ(δ_i)`;
/// a multiplied factor the other way round.
pub fn step_constants<T: Scalar>(c: &FactorChain<T>, deltas: &[T]) -> Result<(Vec<T>, Vec<T>)> {
    let eff = c.effective_factors();
    assert_eq!(eff.len(), deltas.len(), "one delta per effective factor");
    let n = c.n();
    let mut eps = Vec::with_capacity(eff.len());
    let mut eta = Vec::with_capacity(eff.len());
    for (f, d) in eff.iter().zip(deltas) {
        let t = tau_constant(n, d)?;
        match Step::of(f) {
            Step::Substitution => {
                eps.push(t);
                eta.push(d.clone());
            }
            Step::Multiplication => {
                eps.push(d.clone());
                eta.push(t);
            }
        }
    }
    Ok((eps, eta))
}

/// Rounding constants `δ_i` for every effective factor of `c` at unit roundoff `u`.
pub fn rounding_deltas<T: Scalar>(c: &FactorChain<T>, u: &T) -> Result<Vec<T>> {
    c.effective_factors().iter().map(|f| step_delta(f, u)).collect()
}

/// First-order expansion of `sum ε_i` with `τ(δ) ≈ (2n-1) δ`.
fn first_order<T: Scalar>(c: &FactorChain<T>, deltas: &[T], residual: bool) -> T {
    let w = T::from_usize(2 * c.n() - 1);
    c.effective_factors()
        .iter()
        .zip(deltas)
        .map(|(f, d)| {
            let amplified = (Step::of(f) == Step::Substitution) != residual;
            if amplified {
                w.clone() * d.clone()
            } else {
                d.clone()
            }
        })
        .fold(T::zero(), |a, b| a + b)
}

/// Budgets for a solve of `A x = b` through `c` when step `i` carries relative
/// perturbation at most `deltas[i]`; `x` is the computed solution.
///
/// Exposed separately so that exact arithmetic can verify the bounds against
/// explicitly perturbed chains.
pub fn budgets_for<T: Scalar>(
    c: &FactorChain<T>,
    b: &[T],
    x: &[T],
    deltas: &[T],
    inverse_form: bool,
) -> Result<(ErrorBudget<T>, ErrorBudget<T>)> {
    let (eps, eta) = step_constants(c, deltas)?;
    let tight = c.pattern() != ChainPattern::General;
    let (rk, fk) = if inverse_form {
        (BudgetKind::InverseChainResidual, BudgetKind::InverseChainForward)
    } else {
        (BudgetKind::ResidualBound, BudgetKind::ForwardBoundCoefficient)
    };
    let residual = ErrorBudget {
        kind: rk,
        coefficient: product_bound(&eta),
        first_order: first_order(c, deltas, true),
        envelope: c.abs_apply(&abs_vec(x))?,
        tight,
    };
    let forward = ErrorBudget {
        kind: fk,
        coefficient: product_bound(&eps),
        first_order: first_order(c, deltas, false),
        envelope: c.inverse().abs_apply(&abs_vec(b))?,
        tight,
    };
    Ok((residual, forward))
}

/// Solves `A x = b` for `A = F_1 ... F_k`: `k` substitutions (multiplications for
/// inverted factors), `O(kn)`.
///
/// With all factors sign-definite or all checkerboard the budgets read
/// `|b - A x̂| <= ((1+γ_2)^k - 1) |A||x̂|` and `|x̂ - x| <= ((1+τ)^k - 1) |A^{-1}||b|`,
/// sharpened factor by factor where fewer roundings occur.
pub fn solve_product_chain<T: Scalar>(c: &FactorChain<T>, b: &[T]) -> Result<ChainSolve<T>> {
    let x = c.solve(b)?;
    let deltas = rounding_deltas(c, &T::unit_roundoff())?;
    let (residual, forward) = budgets_for(c, b, &x, &deltas, false)?;
    Ok(ChainSolve { x, residual, forward })
}

/// Solves `A x = b` given `inv = A^{-1} = B_1 ... B_k`, as `x = B_1 (B_2 (... B_k b))`.
///
/// Forward error `<= ((1+γ_2)^k - 1) |A^{-1}||b|`; residual `<= (2k(2n-1)u + O(u^2)) |A||x̂|`.
pub fn solve_inverse_chain<T: Scalar>(inv: &FactorChain<T>, b: &[T]) -> Result<ChainSolve<T>> {
    let a = inv.inverse();
    let x = a.solve(b)?;
    let deltas = rounding_deltas(&a, &T::unit_roundoff())?;
    let (residual, forward) = budgets_for(&a, b, &x, &deltas, true)?;
    Ok(ChainSolve { x, residual, forward })
}
