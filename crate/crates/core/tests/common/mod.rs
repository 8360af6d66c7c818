//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use bidiag::{Bidiagonal, Factor, FactorChain, Orientation, Rational, Scalar};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational `p/q` with `1 <= |p| <= 9`, `1 <= q <= 7`.
pub fn nonzero_q<R: Rng>(rng: &mut R) -> Rational {
    let p = rng.random_range(1..=9) * if rng.random_bool(0.5) { 1 } else { -1 };
    Rational::new(p.into(), rng.random_range(1..=7).into())
}

/// Small positive rational.
pub fn positive_q<R: Rng>(rng: &mut R) -> Rational {
    let v = nonzero_q(rng);
    if v < Rational::zero() {
        -v
    } else {
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Signs {
    Any,
    /// `±` a nonnegative matrix.
    Definite,
    /// `±Σ|B|Σ`.
    Checkerboard,
}

pub fn orientation<R: Rng>(rng: &mut R) -> Orientation {
    if rng.random_bool(0.5) {
        Orientation::Upper
    } else {
        Orientation::Lower
    }
}

/// Nonsingular exact bidiagonal with the requested sign structure; off-diagonal entries
/// are zero with probability 1/5.
pub fn bidiagonal<R: Rng>(rng: &mut R, n: usize, signs: Signs) -> Bidiagonal<Rational> {
    let global = if rng.random_bool(0.5) { Rational::from_i64(1) } else { Rational::from_i64(-1) };
    let diag: Vec<Rational> = (0..n)
        .map(|_| match signs {
            Signs::Any => nonzero_q(rng),
            _ => global.clone() * positive_q(rng),
        })
        .collect();
    let off: Vec<Rational> = (1..n)
        .map(|_| {
            if rng.random_bool(0.2) {
                return Rational::zero();
            }
            match signs {
                Signs::Any => nonzero_q(rng),
                Signs::Definite => global.clone() * positive_q(rng),
                Signs::Checkerboard => -global.clone() * positive_q(rng),
            }
        })
        .collect();
    Bidiagonal::new(orientation(rng), diag, off).unwrap()
}

/// Chain of `k` factors; with `Definite`/`Checkerboard`, every effective factor carries
/// that sign class (inverting swaps the two classes, so inverted factors are drawn
/// from the other one).
pub fn chain<R: Rng>(rng: &mut R, n: usize, k: usize, signs: Signs, allow_inverted: bool) -> FactorChain<Rational> {
    let factors = (0..k)
        .map(|_| {
            let inverted = allow_inverted && rng.random_bool(0.3);
            let s = match (signs, inverted) {
                (Signs::Definite, true) => Signs::Checkerboard,
                (Signs::Checkerboard, true) => Signs::Definite,
                (s, _) => s,
            };
            Factor { matrix: bidiagonal(rng, n, s), inverted }
        })
        .collect();
    FactorChain::new(n, factors, None).unwrap()
}

pub fn supported_signs<R: Rng>(rng: &mut R) -> Signs {
    if rng.random_bool(0.5) {
        Signs::Definite
    } else {
        Signs::Checkerboard
    }
}

/// Small exact vector with entries in `[-9, 9] / 4`.
pub fn vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| Rational::new(rng.random_range(-9..=9).into(), 4.into())).collect()
}

/// `f64` bidiagonal with entries of magnitude in `[0.5, 2]`, signs per `signs`.
pub fn float_bidiagonal<R: Rng>(rng: &mut R, n: usize, signs: Signs) -> Bidiagonal<f64> {
    let global = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
    let mag = |rng: &mut R| rng.random_range(0.5..2.0);
    let diag = (0..n)
        .map(|_| match signs {
            Signs::Any => mag(rng) * if rng.random_bool(0.5) { 1.0 } else { -1.0 },
            _ => global * mag(rng),
        })
        .collect();
    let off = (1..n)
        .map(|_| match signs {
            Signs::Any => mag(rng) * if rng.random_bool(0.5) { 1.0 } else { -1.0 },
            Signs::Definite => global * mag(rng),
            Signs::Checkerboard => -global * mag(rng),
        })
        .collect();
    Bidiagonal::new(orientation(rng), diag, off).unwrap()
}

/// `f64` chain whose effective factors share the sign class `signs`.
pub fn float_chain<R: Rng>(rng: &mut R, n: usize, k: usize, signs: Signs) -> FactorChain<f64> {
    let factors = (0..k)
        .map(|_| {
            let inverted = rng.random_bool(0.3);
            let s = match (signs, inverted) {
                (Signs::Definite, true) => Signs::Checkerboard,
                (Signs::Checkerboard, true) => Signs::Definite,
                (s, _) => s,
            };
            Factor { matrix: float_bidiagonal(rng, n, s), inverted }
        })
        .collect();
    FactorChain::new(n, factors, None).unwrap()
}

/// Multiplies each nonzero entry of `b` by `1 + θ delta`, `θ` drawn from `{-1, -7/8, ..., 1}`;
/// exactly `|ΔB| <= delta |B|`.
pub fn perturb<R: Rng>(rng: &mut R, b: &Bidiagonal<Rational>, delta: &Rational) -> Bidiagonal<Rational> {
    let mut f = |x: &Rational| {
        let theta = Rational::new(rng.random_range(-8..=8).into(), 8.into());
        x.clone() * (Rational::from_i64(1) + theta * delta.clone())
    };
    let diag = b.diag().iter().map(&mut f).collect();
    let off = b.off().iter().map(&mut f).collect();
    Bidiagonal::new(b.orientation(), diag, off).unwrap()
}

/// The chain with effective factor `i` perturbed by at most `deltas[i]` (scale materialized).
pub fn perturb_chain<R: Rng>(rng: &mut R, c: &FactorChain<Rational>, deltas: &[Rational]) -> FactorChain<Rational> {
    let eff = c.effective_factors();
    assert_eq!(eff.len(), deltas.len());
    let factors = eff
        .iter()
        .zip(deltas)
        .map(|(f, d)| Factor { matrix: perturb(rng, &f.matrix, d), inverted: f.inverted })
        .collect();
    FactorChain::new(c.n(), factors, None).unwrap()
}

