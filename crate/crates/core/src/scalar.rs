//! Scalar field abstraction shared by the floating-point and exact code paths.
//!
//! Every algorithm in this crate is written once over [`Scalar`] and runs either
//! in IEEE double precision (`f64`) or in arbitrary-precision rationals
//! ([`Rational`]). The rational instantiation is the reference oracle.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};

/// Arbitrary-precision rational number in canonical form.
pub type Rational = BigRational;

/// Unit roundoff of IEEE double precision, `2^-53`.
pub const UNIT_ROUNDOFF: f64 = f64::EPSILON / 2.0;

/// A real field element usable by every routine in the crate.
pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + Send + Sync + 'static {
    /// Converts from `f64`. Exact for rationals; panics on non-finite input there.
    fn from_f64(x: f64) -> Self;

    /// Nearest `f64` (correctly rounded for rationals).
    fn to_f64(&self) -> f64;

    fn from_i64(x: i64) -> Self;

    fn from_usize(x: usize) -> Self {
        Self::from_i64(x as i64)
    }

    /// Unit roundoff of the working precision, expressed in this field.
    fn unit_roundoff() -> Self {
        Self::from_f64(UNIT_ROUNDOFF)
    }

    /// True for fields in which `+ - * /` are exact.
    fn is_exact() -> bool;

    /// Strictly greater than zero. Unlike `Signed::is_positive`, false for `-0.0` and `+0.0` alike.
    fn gt_zero(&self) -> bool {
        *self > Self::zero()
    }

    /// Strictly less than zero.
    fn lt_zero(&self) -> bool {
        *self < Self::zero()
    }
}

impl Scalar for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn from_i64(x: i64) -> Self {
        x as f64
    }

    fn is_exact() -> bool {
        false
    }
}

impl Scalar for Rational {
    fn from_f64(x: f64) -> Self {
        BigRational::from_float(x).expect("non-finite value has no rational representation")
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_i64(x: i64) -> Self {
        BigRational::from_integer(BigInt::from(x))
    }

    fn is_exact() -> bool {
        true
    }
}

/// `p / q` as a rational.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Largest entry of `|x|`, i.e. the vector infinity norm.
pub fn inf_norm<T: Scalar>(x: &[T]) -> T {
    x.iter().fold(T::zero(), |acc, v| {
        let a = v.abs();
        if a > acc {
            a
        } else {
            acc
        }
    })
}

/// Entrywise absolute value.
pub fn abs_vec<T: Scalar>(x: &[T]) -> Vec<T> {
    x.iter().map(Signed::abs).collect()
}

pub fn to_exact(x: &[f64]) -> Vec<Rational> {
    x.iter().map(|&v| Rational::from_f64(v)).collect()
}

pub fn to_f64_vec<T: Scalar>(x: &[T]) -> Vec<f64> {
    x.iter().map(Scalar::to_f64).collect()
}

/// `n!` in the field `T`.
pub fn factorial<T: Scalar>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, k| acc * T::from_usize(k))
}

/// `x^k` by repeated multiplication (exact for rationals).
pub fn powi<T: Scalar>(x: &T, k: usize) -> T {
    let mut out = T::one();
    for _ in 0..k {
        out = out * x.clone();
    }
    out
}
