//! Dense LU with partial pivoting: the structure-blind baseline.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// `P A = L U`, with `L` unit lower and `U` upper stored in one array.
#[derive(Debug, Clone, PartialEq)]
pub struct LuFactorization<T> {
    lu: Matrix<T>,
    perm: Vec<usize>,
}

impl<T: Scalar> LuFactorization<T> {
    pub fn new(a: &Matrix<T>) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Dimension(format!("LU needs a square matrix, got {}x{}", a.rows(), a.cols())));
        }
        let n = a.rows();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&i, &j| lu[(i, k)].abs().partial_cmp(&lu[(j, k)].abs()).expect("finite entries"))
                .expect("nonempty range");
            if lu[(p, k)].is_zero() {
                return Err(Error::Singular { factor: None, position: k });
            }
            if p != k {
                for j in 0..n {
                    let t = lu[(k, j)].clone();
                    lu[(k, j)] = lu[(p, j)].clone();
                    lu[(p, j)] = t;
                }
                perm.swap(k, p);
            }
            let piv = lu[(k, k)].clone();
            for i in k + 1..n {
                let m = lu[(i, k)].clone() / piv.clone();
                for j in k + 1..n {
                    let t = lu[(i, j)].clone() - m.clone() * lu[(k, j)].clone();
                    lu[(i, j)] = t;
                }
                lu[(i, k)] = m;
            }
        }
        Ok(Self { lu, perm })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        let n = self.n();
        if b.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: b.len() });
        }
        let mut x: Vec<T> = self.perm.iter().map(|&p| b[p].clone()).collect();
        for i in 0..n {
            for j in 0..i {
                let t = x[i].clone() - self.lu[(i, j)].clone() * x[j].clone();
                x[i] = t;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let t = x[i].clone() - self.lu[(i, j)].clone() * x[j].clone();
                x[i] = t;
            }
            x[i] = x[i].clone() / self.lu[(i, i)].clone();
        }
        Ok(x)
    }
}

/// `x = A^{-1} b` by LU with partial pivoting.
pub fn dense_lu_solve<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Result<Vec<T>> {
    LuFactorization::new(a)?.solve(b)
}

/// Explicit inverse, one LU solve per column.
pub fn dense_inverse<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    let f = LuFactorization::new(a)?;
    let n = f.n();
    let mut inv = Matrix::zeros(n, n);
    for j in 0..n {
        let mut e = vec![T::zero(); n];
        e[j] = T::one();
        for (i, v) in f.solve(&e)?.into_iter().enumerate() {
            inv[(i, j)] = v;
        }
    }
    Ok(inv)
}

/// `||A||_inf ||inv(A)||_inf` with the inverse formed explicitly.
pub fn dense_kinf<T: Scalar>(a: &Matrix<T>) -> Result<T> {
    Ok(a.inf_norm() * dense_inverse(a)?.inf_norm())
}
