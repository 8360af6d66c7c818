//! Functions of bidiagonal and upper triangular Toeplitz matrices.
//!
//! For upper bidiagonal `B`, `f(B)` is upper triangular with
//! `f_ij = b_{i,i+1} ... b_{j-1,j} f[b_ii, ..., b_jj]`, so one divided-difference table
//! over the diagonal gives the whole matrix in `O(n^2)`.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::bidiagonal::{Bidiagonal, Orientation};
use crate::error::{Error, Result};
use crate::matrix::{ExactMatrix, Matrix};
use crate::oracle::interval::{exp_enclosure, interval_tn_check, IntervalMatrix, IntervalTnVerdict};
use crate::oracle::{find_negative_minor, Minor, TN_MAX_N};
use crate::scalar::{factorial, powi, ratio, Rational, Scalar};

/// A scalar function together with as many derivatives as it can supply.
pub trait ScalarFunction<T: Scalar> {
    /// `f^{(order)}(x)`.
    fn eval(&self, x: &T, order: usize) -> Result<T>;

    /// Highest derivative order available; `None` when unbounded.
    fn max_order(&self) -> Option<usize> {
        None
    }

    fn name(&self) -> String;
}

fn check_order(needed: usize, max: Option<usize>) -> Result<()> {
    match max {
        Some(m) if needed > m => Err(Error::Capability { needed, available: m }),
        _ => Ok(()),
    }
}

/// `exp`. In exact arithmetic only `x = 0` is representable.
#[derive(Debug, Clone, Copy, Default)]
pub struct Exp;

impl<T: Scalar> ScalarFunction<T> for Exp {
    fn eval(&self, x: &T, _order: usize) -> Result<T> {
        if x.is_zero() {
            return Ok(T::one());
        }
        if T::is_exact() {
            return Err(Error::NotRepresentable(format!("exp({x:?}) is irrational")));
        }
        Ok(T::from_f64(x.to_f64().exp()))
    }

    fn name(&self) -> String {
        "exp".into()
    }
}

/// `1/x`, with `f^{(k)}(x) = (-1)^k k! / x^{k+1}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Reciprocal;

impl<T: Scalar> ScalarFunction<T> for Reciprocal {
    fn eval(&self, x: &T, order: usize) -> Result<T> {
        if x.is_zero() {
            return Err(Error::Domain("1/x at x = 0".into()));
        }
        let v = factorial::<T>(order) / powi(x, order + 1);
        Ok(if order % 2 == 1 { -v } else { v })
    }

    fn name(&self) -> String {
        "inv".into()
    }
}

/// `x^p`.
#[derive(Debug, Clone, Copy)]
pub struct Monomial(pub usize);

impl<T: Scalar> ScalarFunction<T> for Monomial {
    fn eval(&self, x: &T, order: usize) -> Result<T> {
        let p = self.0;
        if order > p {
            return Ok(T::zero());
        }
        let c = (p - order + 1..=p).fold(T::one(), |a, k| a * T::from_usize(k));
        Ok(c * powi(x, p - order))
    }

    fn name(&self) -> String {
        format!("monomial:{}", self.0)
    }
}

/// `sum c_k x^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T>(pub Vec<T>);

impl<T: Scalar> ScalarFunction<T> for Polynomial<T> {
    fn eval(&self, x: &T, order: usize) -> Result<T> {
        // Horner on the differentiated coefficients.
        let mut acc = T::zero();
        for k in (order..self.0.len()).rev() {
            let fall = (k - order + 1..=k).fold(T::one(), |a, j| a * T::from_usize(j));
            acc = acc * x.clone() + fall * self.0[k].clone();
        }
        Ok(acc)
    }

    fn name(&self) -> String {
        format!("polynomial of degree {}", self.0.len().saturating_sub(1))
    }
}

/// Built-in function selected by name: `exp`, `inv`, or `monomial:p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedFunction {
    Exp,
    Inv,
    Monomial(usize),
}

impl FromStr for NamedFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exp" => Ok(Self::Exp),
            "inv" => Ok(Self::Inv),
            _ => match s.strip_prefix("monomial:") {
                Some(p) => p
                    .parse()
                    .map(Self::Monomial)
                    .map_err(|_| Error::Parse(format!("bad monomial power in {s:?}"))),
                None => Err(Error::Parse(format!("unknown function {s:?} (expected exp, inv or monomial:p)"))),
            },
        }
    }
}

impl fmt::Display for NamedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exp => f.write_str("exp"),
            Self::Inv => f.write_str("inv"),
            Self::Monomial(p) => write!(f, "monomial:{p}"),
        }
    }
}

impl<T: Scalar> ScalarFunction<T> for NamedFunction {
    fn eval(&self, x: &T, order: usize) -> Result<T> {
        match *self {
            Self::Exp => Exp.eval(x, order),
            Self::Inv => Reciprocal.eval(x, order),
            Self::Monomial(p) => Monomial(p).eval(x, order),
        }
    }

    fn name(&self) -> String {
        self.to_string()
    }
}

/// Triangular table of `f[x_i, ..., x_j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DividedDifferenceTable<T> {
    points: Vec<T>,
    /// `table[i][j - i] = f[x_i, ..., x_j]`.
    table: Vec<Vec<T>>,
}

impl<T: Scalar> DividedDifferenceTable<T> {
    pub fn points(&self) -> &[T] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// `f[x_i, ..., x_j]`, zero-based, `i <= j`.
    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i <= j && j < self.n(), "need i <= j < n");
        &self.table[i][j - i]
    }

    /// `f[x_0, ..., x_{n-1}]`.
    pub fn top(&self) -> &T {
        self.get(0, self.n() - 1)
    }
}

/// Length of the longest run of equal points; errors if equal points are not contiguous.
fn longest_run<T: Scalar>(points: &[T]) -> Result<usize> {
    let mut best = 0;
    let mut start = 0;
    for i in 0..points.len() {
        if i > 0 && points[i] != points[i - 1] {
            start = i;
            if points[..i].contains(&points[i]) {
                return Err(Error::NonContiguousPoints { index: i });
            }
        }
        best = best.max(i - start + 1);
    }
    Ok(best)
}

/// Full divided-difference table; confluent cells use `f^{(k)}(x) / k!`.
pub fn divided_differences<T: Scalar, F: ScalarFunction<T> + ?Sized>(f: &F, points: &[T]) -> Result<DividedDifferenceTable<T>> {
    let n = points.len();
    if n == 0 {
        return Err(Error::Dimension("divided differences need at least one point".into()));
    }
    check_order(longest_run(points)? - 1, f.max_order())?;
    let mut table: Vec<Vec<T>> = Vec::with_capacity(n);
    for p in points {
        let mut row = Vec::with_capacity(n);
        row.push(f.eval(p, 0)?);
        table.push(row);
    }
    for len in 1..n {
        for i in 0..n - len {
            let j = i + len;
            let v = if points[i] == points[j] {
                // Contiguity makes the whole run equal.
                f.eval(&points[i], len)? / factorial::<T>(len)
            } else {
                (table[i + 1][len - 1].clone() - table[i][len - 1].clone()) / (points[j].clone() - points[i].clone())
            };
            table[i].push(v);
        }
    }
    Ok(DividedDifferenceTable { points: points.to_vec(), table })
}

/// The points reordered so that equal values are adjacent, first occurrences kept in order.
fn group_equal<T: Scalar>(points: &[T]) -> Vec<T> {
    let mut out: Vec<T> = Vec::with_capacity(points.len());
    for p in points {
        match out.iter().rposition(|q| q == p) {
            Some(k) => out.insert(k + 1, p.clone()),
            None => out.push(p.clone()),
        }
    }
    out
}

/// Dense `f(B)`; lower bidiagonal input goes through `f(B) = f(B^T)^T`.
///
/// One divided-difference table when equal diagonal entries are adjacent. Otherwise each
/// entry is computed from its own regrouped point set (divided differences are
/// symmetric), at `O(n^4)` cost.
pub fn func_of_bidiagonal<T: Scalar, F: ScalarFunction<T> + ?Sized>(f: &F, b: &Bidiagonal<T>) -> Result<Matrix<T>> {
    if b.orientation() == Orientation::Lower {
        return Ok(func_of_bidiagonal(f, &b.transpose())?.transpose());
    }
    let n = b.n();
    let diag = b.diag();
    let table = match longest_run(diag) {
        Ok(_) => Some(divided_differences(f, diag)?),
        Err(Error::NonContiguousPoints { .. }) => None,
        Err(e) => return Err(e),
    };
    let dd = |i: usize, j: usize| -> Result<T> {
        match &table {
            Some(t) => Ok(t.get(i, j).clone()),
            None => Ok(divided_differences(f, &group_equal(&diag[i..=j]))?.top().clone()),
        }
    };
    let off = b.off();
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        let mut prod = T::one();
        out[(i, i)] = dd(i, i)?;
        for j in i + 1..n {
            prod = prod * off[j - 1].clone();
            if prod.is_zero() {
                break;
            }
            out[(i, j)] = prod.clone() * dd(i, j)?;
        }
    }
    Ok(out)
}

/// `f[λ_1, ..., λ_n]` read off as the `(1, n)` entry of `f` at the bidiagonal matrix
/// with diagonal `λ` and unit superdiagonal.
pub fn opitz_entry<T: Scalar, F: ScalarFunction<T> + ?Sized>(f: &F, lambdas: &[T]) -> Result<T> {
    let n = lambdas.len();
    if n == 0 {
        return Err(Error::Dimension("need at least one point".into()));
    }
    let b = Bidiagonal::new(Orientation::Upper, lambdas.to_vec(), vec![T::one(); n - 1])?;
    Ok(func_of_bidiagonal(f, &b)?[(0, n - 1)].clone())
}

/// First row of the product of two upper triangular Toeplitz matrices (truncated convolution).
pub fn toeplitz_product<T: Scalar>(a: &[T], b: &[T]) -> Result<Vec<T>> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), found: b.len() });
    }
    let n = a.len();
    Ok((0..n)
        .map(|k| (0..=k).fold(T::zero(), |acc, j| acc + a[j].clone() * b[k - j].clone()))
        .collect())
}

/// Upper triangular Toeplitz matrix with the given first row.
pub fn toeplitz_dense<T: Scalar>(first_row: &[T]) -> Matrix<T> {
    let n = first_row.len();
    Matrix::from_fn(n, n, |i, j| if j >= i { first_row[j - i].clone() } else { T::zero() })
}

/// First row of `f(T)` for upper triangular Toeplitz `T = t_0 I + M`, `M = sum_{j>=1} t_j N^j`:
/// `f(T) = sum_{k<n} f^{(k)}(t_0)/k! M^k` since `M^n = 0`.
pub fn tri_toeplitz_function<T: Scalar, F: ScalarFunction<T> + ?Sized>(f: &F, first_row: &[T]) -> Result<Vec<T>> {
    let n = first_row.len();
    if n == 0 {
        return Err(Error::Dimension("empty first row".into()));
    }
    let mut m = first_row.to_vec();
    m[0] = T::zero();
    let mut out = vec![T::zero(); n];
    out[0] = f.eval(&first_row[0], 0)?;
    // power = M^k, whose first k entries vanish.
    let mut power = m.clone();
    for k in 1..n {
        if power.iter().all(|p| p.is_zero()) {
            break;
        }
        check_order(k, f.max_order())?;
        let c = f.eval(&first_row[0], k)? / factorial::<T>(k);
        for (o, p) in out.iter_mut().zip(&power) {
            *o = o.clone() + c.clone() * p.clone();
        }
        power = toeplitz_product(&power, &m)?;
    }
    Ok(out)
}

/// The upper triangular matrix of ones of order 3, whose exponential is not TN.
pub fn exp_counterexample() -> ExactMatrix {
    Matrix::from_fn(3, 3, |i, j| if j >= i { ratio(1, 1) } else { ratio(0, 1) })
}

/// Enclosure width used when deciding signs of minors of `exp(A)`.
fn exp_tolerance() -> Rational {
    powi(&ratio(1, 10), 40)
}

/// Rigorous TN verdict for `exp(A)`, `A` rational: Taylor enclosure of every entry
/// followed by interval minor enumeration.
pub fn exp_tn_verdict(a: &ExactMatrix) -> Result<IntervalTnVerdict> {
    let e = exp_enclosure(a, &exp_tolerance())?;
    interval_tn_check(&e, TN_MAX_N)
}

/// Outcome of [`exp_bidiagonal_tn_report`].
#[derive(Debug, Clone, PartialEq)]
pub struct ExpTnReport {
    /// `exp(B)` in double precision via divided differences.
    pub exp: Matrix<f64>,
    /// Verdict on `exp(B)` from its rigorous enclosure.
    pub exp_tn: bool,
    pub negative_minor: Option<Minor>,
    /// `(I + B/m)^m` is TN, checked exactly, for every `m = 1..=m_max`.
    pub products_tn: bool,
}

/// Checks that `exp(B)` is TN for a nonnegative bidiagonal `B`, together with the
/// approximants `(I + B/m)^m`, `m = 1..=m_max`, that converge to it.
pub fn exp_bidiagonal_tn_report(b: &Bidiagonal<Rational>, m_max: usize) -> Result<ExpTnReport> {
    if !b.is_nonnegative() {
        return Err(Error::Domain("exp TN check needs a nonnegative bidiagonal matrix".into()));
    }
    let n = b.n();
    if n > TN_MAX_N - 1 {
        return Err(Error::Size { n, max: TN_MAX_N - 1 });
    }
    let exp = func_of_bidiagonal(&Exp, &b.to_f64())?;
    let a = b.to_dense();
    let (exp_tn, negative_minor) = match exp_tn_verdict(&a)? {
        IntervalTnVerdict::TotallyNonnegative => (true, None),
        IntervalTnVerdict::NegativeMinor(m) => (false, Some(m)),
    };
    let mut products_tn = true;
    for m in 1..=m_max {
        let step = Matrix::identity(n)
            .add(&a.scale(&(Rational::one() / Rational::from_usize(m))))?;
        let mut p = step.clone();
        for _ in 1..m {
            p = p.mul(&step)?;
        }
        if find_negative_minor(&p, TN_MAX_N)?.is_some() {
            products_tn = false;
            break;
        }
    }
    Ok(ExpTnReport { exp, exp_tn, negative_minor, products_tn })
}

/// True iff `exp(B)` and every approximant `(I + B/m)^m`, `m <= m_max`, are TN.
pub fn exp_bidiagonal_tn_check(b: &Bidiagonal<Rational>, m_max: usize) -> Result<bool> {
    let r = exp_bidiagonal_tn_report(b, m_max)?;
    Ok(r.exp_tn && r.products_tn)
}

/// The enclosure of `exp` of the counterexample, for inspection.
pub fn exp_counterexample_enclosure() -> Result<IntervalMatrix> {
    exp_enclosure(&exp_counterexample(), &exp_tolerance())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;
    use crate::oracle::interval::e_enclosure;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| ratio(x, 1)).collect()
    }

    #[test]
    fn divided_difference_examples() {
        let t = divided_differences(&Monomial(2), &q(&[0, 1, 2])).unwrap();
        assert_eq!(*t.get(0, 1), ratio(1, 1));
        assert_eq!(*t.get(1, 2), ratio(3, 1));
        assert_eq!(*t.top(), ratio(1, 1));
        let t = divided_differences(&Exp, &q(&[0, 0, 0])).unwrap();
        assert_eq!(*t.top(), ratio(1, 2));
        let l = 0.7f64;
        let t = divided_differences(&Exp, &[l, l]).unwrap();
        assert_eq!(*t.top(), l.exp());
    }

    #[test]
    fn non_contiguous_points_rejected() {
        assert_eq!(
            divided_differences(&Monomial(2), &q(&[1, 2, 1])).unwrap_err(),
            Error::NonContiguousPoints { index: 2 }
        );
    }

    #[test]
    fn scattered_repeats_on_the_diagonal() {
        let b = Bidiagonal::new(Orientation::Upper, q(&[1, 2, 1, 3, 2]), q(&[1, -2, 3, 1])).unwrap();
        assert_eq!(func_of_bidiagonal(&Reciprocal, &b).unwrap(), b.inverse_dense().unwrap());
        let p = Polynomial(q(&[1, 0, 2, -1]));
        let d = b.to_dense();
        let want = Matrix::identity(5).add(&d.mul(&d).unwrap().scale(&ratio(2, 1))).unwrap().sub(&d.mul(&d).unwrap().mul(&d).unwrap()).unwrap();
        assert_eq!(func_of_bidiagonal(&p, &b).unwrap(), want);
    }

    #[test]
    fn capability_is_enforced() {
        struct Once;
        impl ScalarFunction<f64> for Once {
            fn eval(&self, x: &f64, order: usize) -> Result<f64> {
                Ok(if order == 0 { x * x } else { 2.0 * x })
            }
            fn max_order(&self) -> Option<usize> {
                Some(1)
            }
            fn name(&self) -> String {
                "once".into()
            }
        }
        assert!(divided_differences(&Once, &[1.0, 1.0]).is_ok());
        assert_eq!(divided_differences(&Once, &[1.0, 1.0, 1.0]).unwrap_err(), Error::Capability { needed: 2, available: 1 });
    }

    #[test]
    fn reciprocal_reproduces_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=8 {
            for orientation in [Orientation::Upper, Orientation::Lower] {
                // Sorted so that repeated diagonal entries are contiguous.
                let mut diag: Vec<Rational> = (0..n).map(|_| ratio(rng.random_range(1..6), rng.random_range(1..4))).collect();
                diag.sort();
                let off: Vec<Rational> = (1..n).map(|_| ratio(rng.random_range(-5..6), 3)).collect();
                let b = Bidiagonal::new(orientation, diag, off).unwrap();
                let f = func_of_bidiagonal(&Reciprocal, &b).unwrap();
                assert_eq!(f, b.inverse_dense().unwrap());
            }
        }
    }

    #[test]
    fn exp_of_creation_is_pascal_cholesky() {
        for n in 1..=10 {
            let c = gallery::creation_bidiagonal(n).unwrap();
            assert_eq!(func_of_bidiagonal(&Exp, &c).unwrap(), gallery::pascal_cholesky(n).unwrap());
        }
    }

    #[test]
    fn jordan_block_pattern() {
        let (l, m) = (0.3f64, 6);
        let b = Bidiagonal::new(Orientation::Upper, vec![l; m], vec![1.0; m - 1]).unwrap();
        let f = func_of_bidiagonal(&Exp, &b).unwrap();
        for i in 0..m {
            for j in i..m {
                let want = l.exp() / factorial::<f64>(j - i);
                assert!((f[(i, j)] - want).abs() <= 1e-14 * want);
            }
        }
        let two = Bidiagonal::new(Orientation::Upper, vec![1.0; 2], vec![1.0]).unwrap();
        let e = std::f64::consts::E;
        assert_eq!(func_of_bidiagonal(&Exp, &two).unwrap(), Matrix::from_rows(vec![vec![e, e], vec![0.0, e]]).unwrap());
    }

    #[test]
    fn opitz_examples() {
        let e = std::f64::consts::E;
        assert!((opitz_entry(&Exp, &[0.0, 1.0]).unwrap() - (e - 1.0)).abs() < 1e-15);
        assert_eq!(opitz_entry(&Monomial(5), &q(&[2, 2, 2])).unwrap(), ratio(80, 1));
        let l = [0.1, 0.5, 0.9, 1.3];
        let b = Bidiagonal::new(Orientation::Upper, l.to_vec(), vec![1.0; 3]).unwrap();
        assert_eq!(opitz_entry(&Exp, &l).unwrap().to_bits(), func_of_bidiagonal(&Exp, &b).unwrap()[(0, 3)].to_bits());
    }

    #[test]
    fn toeplitz_function_examples() {
        let th = ratio(3, 2);
        let mut row = vec![ratio(0, 1); 5];
        row[0] = ratio(1, 1);
        row[1] = th.clone();
        let inv = tri_toeplitz_function(&Reciprocal, &row).unwrap();
        let want: Vec<Rational> = (0..5).map(|k| powi(&-th.clone(), k)).collect();
        assert_eq!(inv, want);
        let r = q(&[2, -1, 4, 3]);
        assert_eq!(tri_toeplitz_function(&Monomial(1), &r).unwrap(), r);
        // Toeplitz bidiagonal: f(B)_{1j} = c^{j-1} f^{(j-1)}(b)/(j-1)!.
        let (bb, c) = (ratio(2, 1), ratio(3, 1));
        let row = vec![bb.clone(), c.clone(), ratio(0, 1), ratio(0, 1)];
        let got = tri_toeplitz_function(&Monomial(4), &row).unwrap();
        for (j, g) in got.iter().enumerate() {
            let want = powi(&c, j) * Monomial(4).eval(&bb, j).unwrap() / factorial::<Rational>(j);
            assert_eq!(*g, want);
        }
    }

    #[test]
    fn toeplitz_closure_matches_dense() {
        let a = q(&[1, 2, -3, 4, 5]);
        let b = q(&[-2, 0, 1, 7, -1]);
        let p = toeplitz_product(&a, &b).unwrap();
        assert_eq!(toeplitz_dense(&p), toeplitz_dense(&a).mul(&toeplitz_dense(&b)).unwrap());
        let f = tri_toeplitz_function(&Monomial(3), &a).unwrap();
        let t = toeplitz_dense(&a);
        assert_eq!(toeplitz_dense(&f), t.mul(&t).unwrap().mul(&t).unwrap());
    }

    #[test]
    fn polynomial_commutes_with_argument() {
        let p = Polynomial(q(&[1, -2, 0, 3]));
        let b = Bidiagonal::new(Orientation::Upper, q(&[1, 2, 2, -1, 3]), q(&[1, 4, -2, 5])).unwrap();
        let f = func_of_bidiagonal(&p, &b).unwrap();
        let d = b.to_dense();
        assert_eq!(f.mul(&d).unwrap(), d.mul(&f).unwrap());
        let d2 = d.mul(&d).unwrap();
        let want = Matrix::identity(5).add(&d.scale(&ratio(-2, 1))).unwrap().add(&d2.mul(&d).unwrap().scale(&ratio(3, 1))).unwrap();
        assert_eq!(f, want);
    }

    #[test]
    fn exp_tn_for_creation_and_zero() {
        assert!(exp_bidiagonal_tn_check(&gallery::creation_bidiagonal(4).unwrap(), 4).unwrap());
        let z = Bidiagonal::new(Orientation::Lower, q(&[0, 0, 0]), q(&[0, 0])).unwrap();
        assert!(exp_bidiagonal_tn_check(&z, 3).unwrap());
        let neg = Bidiagonal::new(Orientation::Upper, q(&[1, 1]), q(&[-1])).unwrap();
        assert!(matches!(exp_bidiagonal_tn_check(&neg, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn counterexample_has_negative_minor() {
        let enc = exp_counterexample_enclosure().unwrap();
        let e = e_enclosure();
        let three_halves_e = e.mul(&crate::oracle::interval::Interval::point(ratio(3, 2)));
        assert!(enc.get(0, 2).lo() <= three_halves_e.hi() && three_halves_e.lo() <= enc.get(0, 2).hi());
        match exp_tn_verdict(&exp_counterexample()).unwrap() {
            IntervalTnVerdict::NegativeMinor(m) => {
                assert_eq!((m.rows, m.cols), (vec![0, 1], vec![1, 2]));
                assert!(m.value.lt_zero());
            }
            v => panic!("expected a negative minor, got {v:?}"),
        }
    }

    #[test]
    fn named_functions_parse() {
        assert_eq!("exp".parse::<NamedFunction>().unwrap(), NamedFunction::Exp);
        assert_eq!("monomial:3".parse::<NamedFunction>().unwrap(), NamedFunction::Monomial(3));
        assert!("sin".parse::<NamedFunction>().is_err());
        assert_eq!(NamedFunction::Monomial(3).to_string(), "monomial:3");
    }
}
