//! Dense Gaussian elimination used as ground truth in tests.
//!
//! O(n³) and deliberately unrelated to the banded recurrences. Floats use
//! partial pivoting; exact rationals take the first nonzero pivot.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{PentaError, Result};
use crate::matrix::{check_len, PentaMatrix};
use crate::scalar::Field;

pub trait OracleScalar: Field {
    /// Preference for a pivot candidate; zero means unusable.
    fn pivot_weight(&self) -> f64;
}

impl OracleScalar for f64 {
    fn pivot_weight(&self) -> f64 {
        self.abs()
    }
}

impl OracleScalar for BigRational {
    fn pivot_weight(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: OracleScalar> DenseMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            check_len(n, row.len())?;
            entries.extend(row);
        }
        Ok(DenseMatrix { n, entries })
    }

    pub fn from_penta(p: &PentaMatrix<T>) -> Self {
        DenseMatrix {
            n: p.order(),
            entries: p.to_dense().into_iter().flatten().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn matvec(&self, x: &[T]) -> Result<Vec<T>> {
        check_len(self.n, x.len())?;
        Ok((0..self.n)
            .map(|i| {
                (0..self.n).fold(T::zero(), |acc, j| acc + self.get(i, j).clone() * x[j].clone())
            })
            .collect())
    }

    /// Reduces `[A | y]` to upper-triangular form. Returns the eliminated
    /// rows, the transformed right-hand side and the permutation parity,
    /// or the index of the first column without a usable pivot.
    fn eliminate(&self, y: &[T]) -> std::result::Result<(Vec<T>, Vec<T>, bool), usize> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut rhs = y.to_vec();
        let mut odd = false;
        for col in 0..n {
            let (best, weight) = (col..n)
                .map(|r| (r, a[r * n + col].pivot_weight()))
                .fold((col, 0.0), |acc, cand| if cand.1 > acc.1 { cand } else { acc });
            if weight == 0.0 {
                return Err(col);
            }
            if best != col {
                for j in 0..n {
                    a.swap(col * n + j, best * n + j);
                }
                rhs.swap(col, best);
                odd = !odd;
            }
            let pivot = a[col * n + col].clone();
            for r in col + 1..n {
                let factor = a[r * n + col].clone() / pivot.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = a[r * n + j].clone() - factor.clone() * a[col * n + j].clone();
                    a[r * n + j] = v;
                }
                rhs[r] = rhs[r].clone() - factor * rhs[col].clone();
            }
        }
        Ok((a, rhs, odd))
    }

    /// Solves `A x = y`.
    pub fn solve(&self, y: &[T]) -> Result<Vec<T>> {
        check_len(self.n, y.len())?;
        let n = self.n;
        let (a, rhs, _) = self.eliminate(y).map_err(|_| PentaError::SingularMatrix)?;
        let mut x = vec![T::zero(); n];
        for i in (0..n).rev() {
            let mut acc = rhs[i].clone();
            for j in i + 1..n {
                acc = acc - a[i * n + j].clone() * x[j].clone();
            }
            x[i] = acc / a[i * n + i].clone();
        }
        Ok(x)
    }

    /// Determinant; zero for singular matrices.
    pub fn det(&self) -> T {
        let zeros = vec![T::zero(); self.n];
        match self.eliminate(&zeros) {
            Err(_) => T::zero(),
            Ok((a, _, odd)) => {
                let prod = (0..self.n).fold(T::one(), |acc, i| acc * a[i * self.n + i].clone());
                if odd {
                    -prod
                } else {
                    prod
                }
            }
        }
    }
}

pub fn dense_solve<T: OracleScalar>(a: &DenseMatrix<T>, y: &[T]) -> Result<Vec<T>> {
    a.solve(y)
}

pub fn dense_det<T: OracleScalar>(a: &DenseMatrix<T>) -> T {
    a.det()
}
