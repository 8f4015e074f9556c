//! Backward (column-reversed) pentadiagonal systems.
//!
//! A backward matrix P̂ has its five bands along the anti-diagonal. It equals
//! `P M` where `P` is an ordinary pentadiagonal matrix and `M` the reversal
//! permutation, so `P̂ v = y` is solved by solving `P x = y` and reversing
//! `x`. Since `det M = (-1)^{n(n-1)/2}`, the determinant follows from the
//! pivots of `P`.

use crate::error::Result;
use crate::matrix::PentaMatrix;
use crate::report::{Algorithm, Pivot, SolveReport};
use crate::scalar::{Field, Scalar};

/// Stored as the bands of its forward companion `P = P̂ M`.
#[derive(Debug, Clone, PartialEq)]
pub struct BackwardPentaMatrix<T> {
    forward: PentaMatrix<T>,
}

impl<T: Field> BackwardPentaMatrix<T> {
    /// The backward matrix `P M`.
    pub fn from_forward(forward: PentaMatrix<T>) -> Self {
        BackwardPentaMatrix { forward }
    }

    pub fn forward(&self) -> &PentaMatrix<T> {
        &self.forward
    }

    pub fn into_forward(self) -> PentaMatrix<T> {
        self.forward
    }

    pub fn order(&self) -> usize {
        self.forward.order()
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> T {
        self.forward.get(row, self.order() - 1 - col)
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let n = self.order();
        (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn matvec(&self, v: &[T]) -> Result<Vec<T>> {
        self.forward.matvec(&reverse_permutation_apply(v))
    }
}

/// Applies the reversal permutation: entry i goes to position n - i + 1.
/// The permutation is its own inverse.
pub fn reverse_permutation_apply<T: Clone>(x: &[T]) -> Vec<T> {
    x.iter().rev().cloned().collect()
}

/// `(-1)^{n(n-1)/2}`, the determinant of the order-`n` reversal permutation.
pub fn reversal_sign(n: usize) -> i32 {
    if (n * n.saturating_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Solves `P̂ v = y` with the chosen algorithm on the forward companion.
///
/// The report's solution is `v` and its determinant is det(P̂).
pub fn solve_backward<T: Scalar>(
    phat: &BackwardPentaMatrix<T>,
    y: &[T],
    algorithm: Algorithm,
) -> Result<SolveReport<T, Pivot<T>>> {
    let mut report = crate::solve(&phat.forward, y, algorithm)?;
    report.solution = reverse_permutation_apply(&report.solution);
    if reversal_sign(phat.order()) < 0 {
        report.determinant = -report.determinant;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::DenseMatrix;
    use crate::scalar::rational;

    #[test]
    fn reversal() {
        assert_eq!(reverse_permutation_apply(&[1, 2, 3, 4]), vec![4, 3, 2, 1]);
        let x = vec![5, -1, 7, 0, 2];
        assert_eq!(reverse_permutation_apply(&reverse_permutation_apply(&x)), x);
        assert_eq!(reverse_permutation_apply(&[9]), vec![9]);
    }

    #[test]
    fn layout_matches_anti_bands() {
        let (p, _) = fixtures::example_4_1();
        let phat = BackwardPentaMatrix::from_forward(p);
        let dense = phat.to_dense();
        // first row ends b1 a1 d1, last row starts d_n c_n e_n
        assert_eq!(dense[0][7..], [1.0, 2.0, 1.0]);
        assert_eq!(dense[1][6..], [5.0, 2.0, 2.0, 3.0]);
        assert_eq!(dense[9][..3], [8.0, 4.0, -1.0]);
        assert_eq!(dense[9][3], 0.0);
    }

    #[test]
    fn example_4_1_backward_solution() {
        let (p, y) = fixtures::example_4_1_exact();
        let phat = BackwardPentaMatrix::from_forward(p);
        let r = solve_backward(&phat, &y, Algorithm::Ptrans1).unwrap();
        assert_eq!(r.solution, (1..=10).rev().map(|k| rational(k, 1)).collect::<Vec<_>>());
        assert_eq!(phat.matvec(&r.solution).unwrap(), y);
        // n = 10: 45 transpositions, odd
        assert_eq!(r.determinant, rational(-1061233, 1));
    }

    #[test]
    fn anti_identity() {
        let phat = BackwardPentaMatrix::from_forward(PentaMatrix::<f64>::identity(5).unwrap());
        let y = vec![1.0, 2.0, 3.0, 4.0, 5.0];
        let r = solve_backward(&phat, &y, Algorithm::Ptrans2).unwrap();
        assert_eq!(r.solution, vec![5.0, 4.0, 3.0, 2.0, 1.0]);
        assert_eq!(r.determinant, 1.0);
    }

    #[test]
    fn example_4_2_backward_determinant() {
        let (p, y) = fixtures::example_4_2_exact();
        let phat = BackwardPentaMatrix::from_forward(p);
        let oracle = DenseMatrix::from_rows(phat.to_dense()).unwrap().det();
        assert_eq!(oracle, rational(126, 1));
        assert_eq!(reversal_sign(4), 1);
        let r = solve_backward(&phat, &y, Algorithm::Sptrans1).unwrap();
        assert_eq!(r.determinant, oracle);
        assert_eq!(r.solution, vec![rational(1, 1); 4]);
        assert_eq!(r.rescued_indices, vec![2]);
    }

    #[test]
    fn sign_classes() {
        let signs: Vec<i32> = (4..=11).map(reversal_sign).collect();
        assert_eq!(signs, [1, 1, -1, -1, 1, 1, -1, -1]);
    }
}
