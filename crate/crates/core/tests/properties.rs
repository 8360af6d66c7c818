//! Property tests; proptest drives seeds and sizes, ChaCha8 generates the instances.

mod common;

use bidiag::bounds::{perturb_componentwise, power_bound, tau_constant};
use bidiag::condnum::{chain_inf_norm, chain_inv_inf_norm};
use bidiag::funcs::{divided_differences, func_of_bidiagonal, toeplitz_dense, toeplitz_product, Monomial, Polynomial, Reciprocal};
use bidiag::gallery::{self, GalleryName};
use bidiag::oracle::{exact_inf_norm, exact_inverse, exact_kinf, is_totally_nonnegative};
use bidiag::scalar::{ratio, to_exact};
use bidiag::solve::{bp_solve, ErrorBudget, solve_inverse_chain, solve_product_chain, vandermonde_inverse_chain, vandermonde_matrix};
use bidiag::svals::{golub_kahan_tridiagonal, singular_values, DEFAULT_TOL};
use bidiag::tn::{neville_bd, random_tn, tn_expand, tn_kinf};
use bidiag::{ChainPattern, ExactMatrix, FactorChain, Rational, Scalar, UNIT_ROUNDOFF};
use common::Signs;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn entrywise_le(a: &ExactMatrix, b: &ExactMatrix) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

/// `|err| <= bound` with the relative slack pinned for budgets evaluated in `f64`.
fn within(budget: &ErrorBudget<f64>, err: &[Rational]) -> bool {
    budget.bound().iter().zip(err).all(|(b, e)| e.to_f64() <= b * (1.0 + 1e-8))
}

fn exact_chain_inverse(c: &FactorChain<Rational>) -> ExactMatrix {
    c.inverse().dense().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inverse_modulus_is_comparison_inverse(seed in any::<u64>(), n in 1usize..=12) {
        let mut rng = common::rng(seed);
        let b = common::bidiagonal(&mut rng, n, Signs::Any);
        let lhs = b.inverse_dense().unwrap().abs();
        prop_assert_eq!(&lhs, &b.comparison().inverse_dense().unwrap());

        // Floating point: within 4 γ_n relative.
        let bf = b.to_f64();
        let got = bf.inverse_dense().unwrap().abs();
        let want = bf.comparison().inverse_dense().unwrap();
        let tol = 4.0 * bidiag::bounds::gamma::<f64>(n);
        for (x, y) in got.iter().zip(want.iter()) {
            prop_assert!((x - y).abs() <= tol * y.abs());
        }
    }

    #[test]
    fn single_factor_perturbation_bound(seed in any::<u64>(), n in 1usize..=10, e in 5i32..=30) {
        let mut rng = common::rng(seed);
        let b = common::bidiagonal(&mut rng, n, Signs::Any);
        let delta = 2f64.powi(-e);
        let bp = perturb_componentwise(&b, delta, &mut rng).unwrap();
        let tau = tau_constant(n, &Rational::from_f64(delta)).unwrap();
        let diff = bp.inverse_dense().unwrap().sub(&b.inverse_dense().unwrap()).unwrap().abs();
        let bound = b.inverse_dense().unwrap().abs().scale(&tau);
        prop_assert!(entrywise_le(&diff, &bound));
    }

    #[test]
    fn chain_perturbation_bounds(seed in any::<u64>(), n in 1usize..=6, k in 1usize..=5, e in 5i32..=20) {
        let mut rng = common::rng(seed);
        let signs = [Signs::Any, Signs::Definite, Signs::Checkerboard][rng.random_range(0..3)];
        let c = common::chain(&mut rng, n, k, signs, false);
        let delta = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << e));
        let cp = common::perturb_chain(&mut rng, &c, &vec![delta.clone(); k]);
        let coef = power_bound(k, &tau_constant(n, &delta).unwrap());
        let diff = exact_chain_inverse(&cp).sub(&exact_chain_inverse(&c)).unwrap().abs();
        prop_assert!(entrywise_le(&diff, &c.inverse().abs_dense().unwrap().scale(&coef)));
        if signs != Signs::Any {
            prop_assert!(entrywise_le(&diff, &exact_chain_inverse(&c).abs().scale(&coef)));
        }
    }

    #[test]
    fn single_factor_chain_solve_is_bitwise_substitution(seed in any::<u64>(), n in 1usize..=12) {
        let mut rng = common::rng(seed);
        let b = common::float_bidiagonal(&mut rng, n, Signs::Any);
        let rhs: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let via_chain = bidiag::chain::single(b.clone(), false).solve(&rhs).unwrap();
        let direct = b.solve(&rhs).unwrap();
        prop_assert_eq!(
            via_chain.iter().map(|x| x.to_bits()).collect::<Vec<_>>(),
            direct.iter().map(|x| x.to_bits()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn nonnegative_bidiagonal_has_checkerboard_inverse(seed in any::<u64>(), n in 1usize..=10) {
        let mut rng = common::rng(seed);
        let b = common::bidiagonal(&mut rng, n, Signs::Definite).abs();
        prop_assert!(b.is_nonnegative());
        let inv = b.inverse_dense().unwrap();
        let alternating = inv.iter().enumerate().all(|(idx, v)| {
            let (i, j) = (idx / n, idx % n);
            if (i + j) % 2 == 0 { !v.lt_zero() } else { !v.gt_zero() }
        });
        prop_assert!(alternating);
    }

    #[test]
    fn chain_moduli_multiply(seed in any::<u64>(), n in 1usize..=8, k in 1usize..=10) {
        let mut rng = common::rng(seed);
        let signs = common::supported_signs(&mut rng);
        let c = common::chain(&mut rng, n, k, signs, true);
        prop_assert_ne!(c.pattern(), ChainPattern::General);
        prop_assert_eq!(c.dense().unwrap().abs(), c.abs_dense().unwrap());
        let inv = c.inverse();
        prop_assert_eq!(inv.dense().unwrap().abs(), inv.abs_dense().unwrap());
    }

    #[test]
    fn chain_norms_match_oracle(seed in any::<u64>(), n in 1usize..=10, kk in 1usize..=20) {
        let mut rng = common::rng(seed);
        let k = kk.min(2 * n);
        let signs = common::supported_signs(&mut rng);
        let c = common::chain(&mut rng, n, k, signs, true);
        let a = c.dense().unwrap();
        prop_assert_eq!(chain_inf_norm(&c).unwrap(), exact_inf_norm(&a));
        prop_assert_eq!(chain_inv_inf_norm(&c).unwrap(), exact_inf_norm(&exact_inverse(&a).unwrap()));

        let cf = common::float_chain(&mut rng, n, k, signs);
        let exact = cf.to_exact();
        let tol = (n * k) as f64 * UNIT_ROUNDOFF;
        let want = exact_inf_norm(&exact.dense().unwrap()).to_f64();
        prop_assert!((chain_inf_norm(&cf).unwrap() - want).abs() <= tol * want);
    }

    #[test]
    fn tn_round_trip_and_nonnegative_factors(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = common::rng(seed);
        let f = random_tn::<Rational, _>(n, &mut rng).unwrap();
        let c = tn_expand(&f).unwrap();
        prop_assert!(c.effective_factors().iter().all(|x| !x.inverted && x.matrix.is_nonnegative()));
        prop_assert_eq!(&neville_bd(&c.dense().unwrap()).unwrap(), &f);
    }

    #[test]
    fn tn_kinf_is_accurate(seed in any::<u64>(), n in 1usize..=10) {
        let mut rng = common::rng(seed);
        let f = random_tn::<f64, _>(n, &mut rng).unwrap();
        let exact = exact_kinf(&tn_expand(&f.to_exact()).unwrap().dense().unwrap()).unwrap();
        let err = bidiag::oracle::rel_error(tn_kinf(&f, None).unwrap(), &exact);
        prop_assert!(err <= 100.0 * (n * n) as f64 * UNIT_ROUNDOFF, "rel error {err:e}");
    }

    #[test]
    fn float_solves_stay_within_budgets(seed in any::<u64>(), n in 1usize..=12, kk in 1usize..=24) {
        let mut rng = common::rng(seed);
        let k = kk.min(2 * n);
        let signs = common::supported_signs(&mut rng);
        let c = common::float_chain(&mut rng, n, k, signs);
        let b: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let (ce, be) = (c.to_exact(), to_exact(&b));
        let x = ce.solve(&be).unwrap();

        let s = solve_product_chain(&c, &b).unwrap();
        let xh = to_exact(&s.x);
        let fwd: Vec<Rational> = xh.iter().zip(&x).map(|(p, q)| (p - q).abs()).collect();
        prop_assert!(within(&s.forward, &fwd));
        let res: Vec<Rational> = ce.apply(&xh).unwrap().iter().zip(&be).map(|(p, q)| (p - q).abs()).collect();
        prop_assert!(within(&s.residual, &res));

        // The same chain read as A^{-1}.
        let s = solve_inverse_chain(&c, &b).unwrap();
        let y = ce.apply(&be).unwrap();
        let xh = to_exact(&s.x);
        let fwd: Vec<Rational> = xh.iter().zip(&y).map(|(p, q)| (p - q).abs()).collect();
        prop_assert!(within(&s.forward, &fwd));
        let res: Vec<Rational> = ce.solve(&xh).unwrap().iter().zip(&be).map(|(p, q)| (p - q).abs()).collect();
        prop_assert!(within(&s.residual, &res));
    }

    #[test]
    fn bp_solve_recovers_coefficients(seed in any::<u64>(), n in 1usize..=8) {
        let mut rng = common::rng(seed);
        let mut pts: Vec<f64> = Vec::new();
        while pts.len() < n {
            let p = f64::from(rng.random_range(0..64u32)) / 16.0;
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        pts.sort_by(f64::total_cmp);
        let y: Vec<f64> = (0..n).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 } * rng.random_range(0.5..2.0)).collect();
        let v = vandermonde_matrix(&to_exact(&pts));
        // Exact gate: the factorization must invert V before its floating use is judged.
        prop_assert_eq!(vandermonde_inverse_chain(&to_exact(&pts)).unwrap().dense().unwrap().mul(&v).unwrap(), ExactMatrix::identity(n));
        let b_exact = v.matvec(&to_exact(&y)).unwrap();
        let b: Vec<f64> = b_exact.iter().map(Scalar::to_f64).collect();
        let yh = bp_solve(&pts, &b).unwrap();
        let y_exact = exact_inverse(&v).unwrap().matvec(&to_exact(&b)).unwrap();
        let vinv = exact_inverse(&v).unwrap();
        let abs_y: Vec<Rational> = y_exact.iter().map(|x| x.abs()).collect();
        let env = vinv.abs().matvec(&v.abs().matvec(&abs_y).unwrap()).unwrap();
        let coef = Rational::from_f64(2.0 * (2 * n - 2) as f64 * UNIT_ROUNDOFF * (1.0 + 1e-8));
        for i in 0..n {
            let err = (Rational::from_f64(yh[i]) - &y_exact[i]).abs();
            prop_assert!(err <= coef.clone() * env[i].clone(), "component {i}");
        }
    }

    #[test]
    fn divided_differences_are_symmetric(seed in any::<u64>(), n in 1usize..=6, p in 0usize..=8) {
        let mut rng = common::rng(seed);
        let mut pts: Vec<Rational> = Vec::new();
        while pts.len() < n {
            let q = common::nonzero_q(&mut rng);
            if !pts.contains(&q) {
                pts.push(q);
            }
        }
        let top = divided_differences(&Monomial(p), &pts).unwrap().top().clone();
        pts.shuffle(&mut rng);
        let shuffled = divided_differences(&Monomial(p), &pts).unwrap();
        prop_assert_eq!(shuffled.top(), &top);
    }

    #[test]
    fn reciprocal_of_bidiagonal_is_its_inverse(seed in any::<u64>(), n in 1usize..=8) {
        let mut rng = common::rng(seed);
        let b = common::bidiagonal(&mut rng, n, Signs::Any);
        prop_assert_eq!(func_of_bidiagonal(&Reciprocal, &b).unwrap(), b.inverse_dense().unwrap());
    }

    #[test]
    fn polynomial_of_bidiagonal_commutes(seed in any::<u64>(), n in 1usize..=6, deg in 0usize..=4) {
        let mut rng = common::rng(seed);
        let b = common::bidiagonal(&mut rng, n, Signs::Any);
        let p = Polynomial((0..=deg).map(|_| common::nonzero_q(&mut rng)).collect());
        let fb = func_of_bidiagonal(&p, &b).unwrap();
        let bd = b.to_dense();
        prop_assert_eq!(fb.mul(&bd).unwrap(), bd.mul(&fb).unwrap());
        // And agrees with Horner evaluation on the dense matrix.
        let mut h = ExactMatrix::zeros(n, n);
        for c in p.0.iter().rev() {
            h = h.mul(&bd).unwrap().add(&ExactMatrix::identity(n).scale(c)).unwrap();
        }
        prop_assert_eq!(fb, h);
    }

    #[test]
    fn toeplitz_products_stay_toeplitz(seed in any::<u64>(), n in 1usize..=8) {
        let mut rng = common::rng(seed);
        let a = common::vector(&mut rng, n);
        let b = common::vector(&mut rng, n);
        let ab = toeplitz_product(&a, &b).unwrap();
        prop_assert_eq!(toeplitz_dense(&ab), toeplitz_dense(&a).mul(&toeplitz_dense(&b)).unwrap());
    }

    #[test]
    fn singular_values_ignore_signs(seed in any::<u64>(), n in 1usize..=10) {
        let mut rng = common::rng(seed);
        let b = common::float_bidiagonal(&mut rng, n, Signs::Any);
        prop_assert_eq!(golub_kahan_tridiagonal(&b).count_below(0.0), n);
        let s = singular_values(&b, DEFAULT_TOL).unwrap();
        let t = singular_values(&b.abs(), DEFAULT_TOL).unwrap();
        let scale = s[0].max(1.0);
        for (x, y) in s.iter().zip(&t) {
            prop_assert!((x - y).abs() <= 2.0 * DEFAULT_TOL * scale);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn gallery_chains_reproduce_dense(n in 1usize..=8, rho in 1i64..=9) {
        for name in GalleryName::ALL {
            let g = match name {
                GalleryName::Kms => gallery::kms(n, ratio(rho, 10)).unwrap(),
                _ => gallery::by_name(name, n, &[]).unwrap(),
            };
            if let Some(c) = &g.exact_chain {
                prop_assert_eq!(&c.dense().unwrap(), &g.exact, "{}", name);
            }
        }
    }

    #[test]
    fn nonnegative_bidiagonals_and_comparison_inverses_are_tn(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = common::rng(seed);
        let b = common::bidiagonal(&mut rng, n, Signs::Definite).abs();
        prop_assert!(is_totally_nonnegative(&b.to_dense(), 6).unwrap());
        let any = common::bidiagonal(&mut rng, n, Signs::Any);
        prop_assert!(is_totally_nonnegative(&any.comparison().inverse_dense().unwrap(), 6).unwrap());
    }
}

#[test]
fn zero_is_never_a_divided_difference_point_problem() {
    // Equal points must be adjacent; a repeated point split apart is rejected.
    let pts = vec![Rational::zero(), ratio(1, 1), Rational::zero()];
    assert!(divided_differences(&Monomial(2), &pts).is_err());
}
