//! Matrices represented implicitly as products of bidiagonal factors.
//!
//! A [`FactorChain`] stores `A = F_1 F_2 ... F_k` with each `F_i` a bidiagonal matrix
//! or its inverse. When every factor is sign-definite, or every factor has a
//! checkerboard sign pattern, `|A|` and `|A^{-1}|` are products of factor moduli,
//! so infinity-norm condition numbers come out in `O(kn)` operations with no
//! subtractive cancellation, and substitution-based solves carry small
//! componentwise error bounds.
//!
//! All routines are generic over [`Scalar`], which is implemented for `f64` and for
//! exact rationals; the rational instantiation doubles as the reference oracle.

pub mod bidiagonal;
pub mod bounds;
pub mod chain;
pub mod condnum;
pub mod error;
pub mod experiment;
pub mod funcs;
pub mod gallery;
pub mod io;
pub mod matrix;
pub mod oracle;
pub mod scalar;
pub mod solve;
pub mod svals;
pub mod tn;

pub use bidiagonal::{Bidiagonal, Orientation, SignClass};
pub use chain::{ChainPattern, DiagonalScale, Factor, FactorChain};
pub use error::{Error, Result};
pub use matrix::{ExactMatrix, Matrix};
pub use scalar::{Rational, Scalar, UNIT_ROUNDOFF};
