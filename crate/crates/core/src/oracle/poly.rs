//! Exact polynomials: characteristic polynomials and Sturm root counting.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{ExactMatrix, Matrix};
use crate::scalar::{Rational, Scalar};

/// Polynomial with rational coefficients, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coef: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coef: Vec<Rational>) -> Self {
        while coef.last().is_some_and(Zero::is_zero) {
            coef.pop();
        }
        Self { coef }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coef
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coef.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coef.iter().rev().fold(Rational::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coef.iter().enumerate().skip(1).map(|(k, c)| c.clone() * Rational::from_usize(k)).collect())
    }

    /// Remainder of division by `d`.
    pub fn rem(&self, d: &Self) -> Result<Self> {
        let dd = d.degree().ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lead = d.coef[dd].clone();
        let mut r = self.coef.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let q = r[top].clone() / lead.clone();
            for (i, c) in d.coef.iter().enumerate() {
                let idx = top - dd + i;
                r[idx] = r[idx].clone() - q.clone() * c.clone();
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Ok(Self::new(r))
    }

    /// Strips the factor `x^m` with the largest possible `m`, returning `(m, quotient)`.
    pub fn deflate_zero_roots(&self) -> (usize, Self) {
        let m = self.coef.iter().take_while(|c| c.is_zero()).count();
        (m, Self::new(self.coef[m.min(self.coef.len())..].to_vec()))
    }

    fn sign_at(&self, x: &Rational) -> i8 {
        sign(&self.eval(x))
    }

    fn sign_at_infinity(&self, positive: bool) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = sign(&self.coef[d]);
                if positive || d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }
}

fn sign(x: &Rational) -> i8 {
    if x.gt_zero() {
        1
    } else if x.lt_zero() {
        -1
    } else {
        0
    }
}

/// Characteristic polynomial `det(xI - A)` by the Faddeev-LeVerrier recurrence.
pub fn char_poly(a: &ExactMatrix) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::Dimension("characteristic polynomial needs a square matrix".into()));
    }
    let n = a.rows();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut m: ExactMatrix = Matrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = a.mul(&m)?;
        for i in 0..n {
            next[(i, i)] = next[(i, i)].clone() + c[n - k + 1].clone();
        }
        m = next;
        let am = a.mul(&m)?;
        let tr = (0..n).fold(Rational::zero(), |acc, i| acc + am[(i, i)].clone());
        c[n - k] = -tr / Rational::from_usize(k);
    }
    Ok(Poly::new(c))
}

/// Sturm sequence `p, p', -rem(p, p'), ...`.
pub fn sturm_sequence(p: &Poly) -> Result<Vec<Poly>> {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq.last().expect("nonempty").is_zero() {
        let k = seq.len();
        let r = seq[k - 2].rem(&seq[k - 1])?;
        seq.push(Poly::new(r.coef.into_iter().map(|c| -c).collect()));
    }
    seq.pop();
    Ok(seq)
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let nz: Vec<i8> = signs.filter(|&s| s != 0).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in `(a, b]`; `None` bounds mean infinity.
pub fn count_roots(p: &Poly, a: Option<&Rational>, b: Option<&Rational>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain("the zero polynomial has infinitely many roots".into()));
    }
    let seq = sturm_sequence(p)?;
    let at = |x: Option<&Rational>, pos: bool| -> usize {
        match x {
            Some(x) => variations(seq.iter().map(|q| q.sign_at(x))),
            None => variations(seq.iter().map(|q| q.sign_at_infinity(pos))),
        }
    };
    Ok(at(a, false).saturating_sub(at(b, true)))
}

/// Isolates all distinct real roots to intervals `(lo, hi]` narrower than `width`.
pub fn isolate_roots(p: &Poly, width: &Rational) -> Result<Vec<(Rational, Rational)>> {
    let d = p.degree().ok_or_else(|| Error::Domain("zero polynomial".into()))?;
    if d == 0 {
        return Ok(Vec::new());
    }
    // Cauchy bound on root magnitudes.
    let lead = p.coef[d].clone();
    let bound = Rational::one()
        + p.coef[..d].iter().map(|c| (c.clone() / lead.clone()).abs()).fold(Rational::zero(), |m, c| if c > m { c } else { m });
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let c = count_roots(p, Some(&lo), Some(&hi))?;
        if c == 0 {
            continue;
        }
        if c == 1 && hi.clone() - lo.clone() < *width {
            out.push((lo, hi));
            continue;
        }
        let mid = (lo.clone() + hi.clone()) / Rational::from_i64(2);
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&v| ratio(v, 1)).collect())
    }

    #[test]
    fn char_poly_of_small_matrices() {
        let a = Matrix::from_rows(vec![vec![ratio(2, 1), ratio(1, 1)], vec![ratio(1, 1), ratio(2, 1)]]).unwrap();
        // x^2 - 4x + 3
        assert_eq!(char_poly(&a).unwrap(), p(&[3, -4, 1]));
        assert_eq!(char_poly(&Matrix::zeros(3, 3)).unwrap(), p(&[0, 0, 0, 1]));
    }

    #[test]
    fn sturm_counts() {
        // (x-1)(x-2)(x+3)
        let q = p(&[6, -7, 0, 1]);
        assert_eq!(count_roots(&q, None, None).unwrap(), 3);
        assert_eq!(count_roots(&q, Some(&ratio(0, 1)), None).unwrap(), 2);
        assert_eq!(count_roots(&q, Some(&ratio(1, 1)), Some(&ratio(2, 1))).unwrap(), 1);
        // (x-1)^2 has one distinct root.
        assert_eq!(count_roots(&p(&[1, -2, 1]), None, None).unwrap(), 1);
        // x^2 + 1 has none.
        assert_eq!(count_roots(&p(&[1, 0, 1]), None, None).unwrap(), 0);
    }

    #[test]
    fn isolation_and_deflation() {
        let q = p(&[0, 0, 6, -7, 0, 1]);
        let (m, r) = q.deflate_zero_roots();
        assert_eq!(m, 2);
        let roots = isolate_roots(&r, &ratio(1, 1 << 20)).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots[0].0 < ratio(-3, 1) && ratio(-3, 1) <= roots[0].1);
    }
}
