//! Rational interval arithmetic for sign decisions on transcendental quantities.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::oracle::{subsets, Minor};
use crate::scalar::{Rational, Scalar};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Domain("interval endpoints out of order".into()));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    /// `[x - r, x + r]` for `r >= 0`.
    pub fn around(x: Rational, r: &Rational) -> Self {
        let r = r.abs();
        Self { lo: x.clone() - r.clone(), hi: x + r }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        self.hi.clone() - self.lo.clone()
    }

    pub fn midpoint(&self) -> Rational {
        (self.lo.clone() + self.hi.clone()) / Rational::from_i64(2)
    }

    pub fn is_point_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }

    /// Every element is `< 0`.
    pub fn is_negative(&self) -> bool {
        self.hi.lt_zero()
    }

    /// Every element is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        !self.lo.lt_zero()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { lo: self.lo.clone() + o.lo.clone(), hi: self.hi.clone() + o.hi.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { lo: self.lo.clone() - o.hi.clone(), hi: self.hi.clone() - o.lo.clone() }
    }

    pub fn neg(&self) -> Self {
        Self { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_point_zero() || o.is_point_zero() {
            return Self::zero();
        }
        let c = [
            self.lo.clone() * o.lo.clone(),
            self.lo.clone() * o.hi.clone(),
            self.hi.clone() * o.lo.clone(),
            self.hi.clone() * o.hi.clone(),
        ];
        let lo = c.iter().min().cloned().expect("four candidates");
        let hi = c.iter().max().cloned().expect("four candidates");
        Self { lo, hi }
    }

    /// Widens the endpoints outward onto the grid `2^-bits`, bounding denominator growth.
    pub fn round_outward(&self, bits: u32) -> Self {
        let s = Rational::from_integer(BigInt::one() << bits);
        let lo = (self.lo.clone() * s.clone()).floor() / s.clone();
        let hi = (self.hi.clone() * s.clone()).ceil() / s;
        Self { lo, hi }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo.to_f64(), self.hi.to_f64())
    }
}

/// Dense matrix of intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Interval>,
}

impl IntervalMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Interval) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_exact(a: &ExactMatrix) -> Self {
        Self::from_fn(a.rows(), a.cols(), |i, j| Interval::point(a[(i, j)].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Interval {
        &self.data[i * self.cols + j]
    }

    /// Interval midpoints.
    pub fn midpoints(&self) -> ExactMatrix {
        crate::matrix::Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).midpoint())
    }

    /// Enclosure of `det A[rows, cols]` by cofactor expansion (fine for the small sizes used here).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Interval {
        match rows.len() {
            0 => Interval::point(Rational::one()),
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let mut acc = Interval::zero();
                let r = rows[0];
                for (t, &c) in cols.iter().enumerate() {
                    let a = self.get(r, c);
                    if a.is_point_zero() {
                        continue;
                    }
                    let rest_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = a.mul(&self.minor(&rows[1..], &rest_cols));
                    acc = if t % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                acc
            }
        }
    }
}

/// Outcome of a total-nonnegativity check over interval entries.
#[derive(Debug, Clone, PartialEq)]
pub enum IntervalTnVerdict {
    /// Every minor is certainly `>= 0`.
    TotallyNonnegative,
    /// A minor certainly `< 0`; `value` holds its enclosure's midpoint.
    NegativeMinor(Minor),
}

/// Decides total nonnegativity of every matrix in the enclosure.
///
/// Returns [`Error::Indeterminate`] when some minor's enclosure straddles zero and
/// no certainly-negative minor exists.
pub fn interval_tn_check(a: &IntervalMatrix, max_n: usize) -> Result<IntervalTnVerdict> {
    let big = a.rows().max(a.cols());
    if big > max_n {
        return Err(Error::Size { n: big, max: max_n });
    }
    let mut undecided = None;
    for k in 1..=a.rows().min(a.cols()) {
        for rows in subsets(a.rows(), k) {
            for cols in subsets(a.cols(), k) {
                let d = a.minor(&rows, &cols);
                if d.is_negative() {
                    return Ok(IntervalTnVerdict::NegativeMinor(Minor { rows, cols, value: d.midpoint() }));
                }
                if !d.is_nonnegative() && undecided.is_none() {
                    undecided = Some((rows.clone(), cols.clone(), d));
                }
            }
        }
    }
    match undecided {
        Some((r, c, d)) => Err(Error::Indeterminate(format!("minor rows {r:?} cols {c:?} encloses {d:?}"))),
        None => Ok(IntervalTnVerdict::TotallyNonnegative),
    }
}

/// Enclosure of `e` of width below `10^-30`, from `sum_{k<=K} 1/k!` plus the tail bound `2/(K+1)!`.
pub fn e_enclosure() -> Interval {
    let k_max = 30;
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 1..=k_max {
        term /= Rational::from_usize(k);
        sum += term.clone();
    }
    let tail = term * Rational::from_i64(2) / Rational::from_usize(k_max + 1);
    Interval { lo: sum.clone(), hi: sum + tail }
}

/// Rigorous enclosure of `exp(A)` for a rational matrix.
///
/// Sums the Taylor series exactly until the tail bound
/// `a^{K+1}/(K+1)! * (K+2)/(K+2-a)`, `a = || |A| ||_inf`, drops below `tol`; entries
/// with no path `i -> j` in the sparsity graph of `A` are exactly zero.
pub fn exp_enclosure(a: &ExactMatrix, tol: &Rational) -> Result<IntervalMatrix> {
    if !a.is_square() {
        return Err(Error::Dimension("exp needs a square matrix".into()));
    }
    let n = a.rows();
    let norm = a.abs().inf_norm();
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
        for (j, r) in row.iter_mut().enumerate() {
            *r |= !a[(i, j)].is_zero();
        }
    }
    // Transitive closure.
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }

    let mut sum = ExactMatrix::identity(n);
    let mut term = ExactMatrix::identity(n);
    let mut scalar_term = Rational::one();
    let mut k = 0usize;
    let tail = loop {
        // Invariant: sum = sum_{j<=k} A^j/j!, scalar_term = a^k/k!.
        let next = scalar_term.clone() * norm.clone() / Rational::from_usize(k + 1);
        let denom = Rational::from_usize(k + 2) - norm.clone();
        if denom.gt_zero() {
            let bound = next.clone() * Rational::from_usize(k + 2) / denom;
            if &bound < tol {
                break bound;
            }
        }
        if k > 10_000 {
            return Err(Error::Domain("exponential series did not converge".into()));
        }
        k += 1;
        term = term.mul(a)?.scale(&(Rational::one() / Rational::from_usize(k)));
        sum = add(&sum, &term);
        scalar_term = next;
    };
    Ok(IntervalMatrix::from_fn(n, n, |i, j| {
        if reach[i][j] {
            Interval::around(sum[(i, j)].clone(), &tail).round_outward(192)
        } else {
            Interval::zero()
        }
    }))
}

fn add(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    crate::matrix::Matrix::from_fn(a.rows(), a.cols(), |i, j| a[(i, j)].clone() + b[(i, j)].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::scalar::ratio;

    #[test]
    fn e_is_enclosed_tightly() {
        let e = e_enclosure();
        assert!(e.width() < Rational::from_f64(1e-30));
        assert!(e.lo() > &ratio(27182818284, 10_000_000_000));
        assert!(e.hi() < &ratio(27182818285, 10_000_000_000));
    }

    #[test]
    fn arithmetic_is_inclusive() {
        let a = Interval::new(ratio(-1, 1), ratio(2, 1)).unwrap();
        let b = Interval::new(ratio(3, 1), ratio(4, 1)).unwrap();
        assert_eq!(a.mul(&b), Interval::new(ratio(-4, 1), ratio(8, 1)).unwrap());
        assert_eq!(a.sub(&b), Interval::new(ratio(-5, 1), ratio(-1, 1)).unwrap());
        assert!(Interval::new(ratio(1, 1), ratio(0, 1)).is_err());
    }

    #[test]
    fn exp_of_zero_and_nilpotent() {
        let tol = Rational::from_f64(1e-40);
        let z = exp_enclosure(&Matrix::zeros(3, 3), &tol).unwrap();
        assert_eq!(z.midpoints(), Matrix::identity(3));
        let n = Matrix::from_rows(vec![vec![ratio(0, 1), ratio(1, 1)], vec![ratio(0, 1), ratio(0, 1)]]).unwrap();
        let en = exp_enclosure(&n, &tol).unwrap();
        assert!(en.get(0, 1).contains(&ratio(1, 1)));
        assert!(en.get(1, 0).is_point_zero());
    }

    #[test]
    fn interval_tn_detects_negative_and_indeterminate() {
        let e = e_enclosure();
        let neg = IntervalMatrix::from_fn(2, 2, |i, j| if i == 0 && j == 1 { e.clone() } else if i == j { Interval::point(ratio(1, 1)) } else { e.clone() });
        // det = 1 - e^2 < 0
        match interval_tn_check(&neg, 7).unwrap() {
            IntervalTnVerdict::NegativeMinor(m) => assert_eq!((m.rows, m.cols), (vec![0, 1], vec![0, 1])),
            v => panic!("unexpected {v:?}"),
        }
        let wide = IntervalMatrix::from_fn(1, 1, |_, _| Interval::new(ratio(-1, 10), ratio(1, 10)).unwrap());
        assert!(matches!(interval_tn_check(&wide, 7), Err(Error::Indeterminate(_))));
    }
}
