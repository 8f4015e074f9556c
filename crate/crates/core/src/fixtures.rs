//! Reference systems: the 10×10 and 4×4 worked systems and the scalable
//! biharmonic family whose exact solution is all ones.

use num_rational::BigRational;

use crate::error::{PentaError, Result};
use crate::matrix::PentaMatrix;
use crate::scalar::{rational, Scalar};

/// Smallest order of the biharmonic family; below it the corner rows overlap.
pub const BIHARMONIC_MIN_ORDER: usize = 6;

fn ints<T: Scalar>(values: &[i64]) -> Vec<T> {
    values.iter().map(|&v| T::from_exact(&rational(v, 1))).collect()
}

/// 10×10 system with solution (1, 2, ..., 10).
///
/// The right-hand side is `P (1..10)ᵗ`; rows 6 and 7 give 98 and 99.
pub fn example_4_1_in<T: Scalar>() -> (PentaMatrix<T>, Vec<T>) {
    let p = PentaMatrix::from_bands(
        ints(&[1, 2, 3, -4, 5, 6, 7, -1, 1, 8]),
        ints(&[2, 2, 1, 5, -7, 3, -1, 4, 5]),
        ints(&[1, 5, -2, 1, 5, 2, 4, -3]),
        ints(&[0, 3, 2, 1, 2, 1, 2, 1, -2, 4]),
        ints(&[0, 0, 1, 3, 1, 5, 2, 2, 2, -1]),
    )
    .expect("valid bands");
    (p, ints(&[8, 33, 8, 24, 29, 98, 99, 17, 57, 108]))
}

/// 4×4 system with μ₂ = 0 and solution (1, 1, 1, 1).
pub fn example_4_2_in<T: Scalar>() -> (PentaMatrix<T>, Vec<T>) {
    let p = PentaMatrix::from_bands(
        ints(&[3, -2, -1, 3]),
        ints(&[2, 7, 5]),
        ints(&[1, 1]),
        ints(&[0, -3, 2, 2]),
        ints(&[0, 0, 3, 1]),
    )
    .expect("valid bands");
    (p, ints(&[6, 3, 9, 6]))
}

pub fn example_4_1() -> (PentaMatrix<f64>, Vec<f64>) {
    example_4_1_in()
}

pub fn example_4_1_exact() -> (PentaMatrix<BigRational>, Vec<BigRational>) {
    example_4_1_in()
}

pub fn example_4_2() -> (PentaMatrix<f64>, Vec<f64>) {
    example_4_2_in()
}

pub fn example_4_2_exact() -> (PentaMatrix<BigRational>, Vec<BigRational>) {
    example_4_2_in()
}

/// Biharmonic stencil (1, -4, 6, -4, 1) with modified corner rows:
/// first row (9, -4, 1), row n-1 ending (1, -4, 5, -2), row n ending
/// (1, -2, 1), and right-hand side (6, -1, 0, ..., 0). The exact solution is
/// the ones vector.
pub fn biharmonic_in<T: Scalar>(n: usize) -> Result<(PentaMatrix<T>, Vec<T>)> {
    if n < BIHARMONIC_MIN_ORDER {
        return Err(PentaError::InvalidOrder(n, BIHARMONIC_MIN_ORDER));
    }
    let mut d = vec![6; n];
    let mut a = vec![-4; n - 1];
    let b = vec![1; n - 2];
    let mut c = vec![-4; n - 1];
    let e = vec![1; n - 2];
    d[0] = 9;
    d[n - 2] = 5;
    a[n - 2] = -2;
    d[n - 1] = 1;
    c[n - 2] = -2;
    let mut y = vec![0; n];
    y[0] = 6;
    y[1] = -1;
    let p = PentaMatrix::from_bands(ints(&d), ints(&a), ints(&b), ints(&c), ints(&e))?;
    Ok((p, ints(&y)))
}

pub fn biharmonic(n: usize) -> Result<(PentaMatrix<f64>, Vec<f64>)> {
    biharmonic_in(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn biharmonic_rows_match_stencil() {
        let (p, y) = biharmonic(10).unwrap();
        let dense = p.to_dense();
        assert_eq!(dense[0][..4], [9.0, -4.0, 1.0, 0.0]);
        assert_eq!(dense[1][..5], [-4.0, 6.0, -4.0, 1.0, 0.0]);
        assert_eq!(dense[4][2..7], [1.0, -4.0, 6.0, -4.0, 1.0]);
        assert_eq!(dense[8][5..], [0.0, 1.0, -4.0, 5.0, -2.0]);
        assert_eq!(dense[9][6..], [0.0, 1.0, -2.0, 1.0]);
        assert_eq!(y, [6.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn biharmonic_solution_is_ones() {
        for n in [6, 7, 10, 100] {
            let (p, y) = biharmonic(n).unwrap();
            assert_eq!(p.matvec(&vec![1.0; n]).unwrap(), y);
        }
    }

    #[test]
    fn biharmonic_rejects_small_orders() {
        assert_eq!(biharmonic(5).unwrap_err(), PentaError::InvalidOrder(5, 6));
    }
}
