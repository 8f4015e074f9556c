//! Five-band storage for pentadiagonal matrices.
//!
//! Every band is stored full length `n` so that band index `i - 1` holds the
//! entry with subscript `i`:
//!
//! ```text
//! row i:  e[i] x[i-2] + c[i] x[i-1] + d[i] x[i] + a[i] x[i+1] + b[i] x[i+2]
//! ```
//!
//! The slots that would fall outside the matrix (`a[n]`, `b[n-1]`, `b[n]`,
//! `c[1]`, `e[1]`, `e[2]`) are kept at exactly zero.

use std::fmt;

use num_rational::BigRational;

use crate::error::{PentaError, Result};
use crate::scalar::{Field, Scalar};

/// Smallest order accepted by the solvers.
pub const MIN_ORDER: usize = 4;

/// One of the five diagonals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Band {
    /// Second subdiagonal (offset -2).
    E,
    /// First subdiagonal (offset -1).
    C,
    /// Main diagonal.
    D,
    /// First superdiagonal (offset +1).
    A,
    /// Second superdiagonal (offset +2).
    B,
}

impl Band {
    pub const ALL: [Band; 5] = [Band::D, Band::A, Band::B, Band::C, Band::E];

    /// Column offset relative to the diagonal.
    pub fn offset(self) -> isize {
        match self {
            Band::E => -2,
            Band::C => -1,
            Band::D => 0,
            Band::A => 1,
            Band::B => 2,
        }
    }

    pub fn name(self) -> char {
        match self {
            Band::E => 'e',
            Band::C => 'c',
            Band::D => 'd',
            Band::A => 'a',
            Band::B => 'b',
        }
    }

    /// Number of meaningful entries in a band of an order-`n` matrix.
    pub fn len(self, n: usize) -> usize {
        n - self.offset().unsigned_abs()
    }

    /// Whether 0-based slot `k` is forced to zero.
    pub fn is_padding(self, n: usize, k: usize) -> bool {
        match self.offset() {
            o if o > 0 => k + (o as usize) >= n,
            o => k < o.unsigned_abs(),
        }
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PentaMatrix<T> {
    d: Vec<T>,
    a: Vec<T>,
    b: Vec<T>,
    c: Vec<T>,
    e: Vec<T>,
}

impl<T: Field> PentaMatrix<T> {
    /// Builds a matrix from its bands.
    ///
    /// Each band may be given either full length `n` (padding slots present
    /// and zero) or trimmed to its meaningful entries: `a` as a₁..a_{n-1},
    /// `b` as b₁..b_{n-2}, `c` as c₂..c_n and `e` as e₃..e_n.
    pub fn from_bands(d: Vec<T>, a: Vec<T>, b: Vec<T>, c: Vec<T>, e: Vec<T>) -> Result<Self> {
        let n = d.len();
        if n < MIN_ORDER {
            return Err(PentaError::InvalidOrder(n, MIN_ORDER));
        }
        let a = Self::pad(Band::A, n, a)?;
        let b = Self::pad(Band::B, n, b)?;
        let c = Self::pad(Band::C, n, c)?;
        let e = Self::pad(Band::E, n, e)?;
        Ok(PentaMatrix { d, a, b, c, e })
    }

    fn pad(band: Band, n: usize, mut values: Vec<T>) -> Result<Vec<T>> {
        let short = band.len(n);
        if values.len() == short {
            let zeros = n - short;
            if band.offset() > 0 {
                values.extend(std::iter::repeat_with(T::zero).take(zeros));
            } else {
                let mut padded: Vec<T> = std::iter::repeat_with(T::zero).take(zeros).collect();
                padded.append(&mut values);
                values = padded;
            }
            return Ok(values);
        }
        if values.len() != n {
            return Err(PentaError::DimensionMismatch {
                expected: n,
                found: values.len(),
            });
        }
        if let Some(k) = (0..n).find(|&k| band.is_padding(n, k) && !values[k].is_zero()) {
            return Err(PentaError::InvalidPadding {
                band: band.name(),
                index: k + 1,
            });
        }
        Ok(values)
    }

    /// Matrix with `d` on the diagonal and every other band zero.
    pub fn diagonal(d: Vec<T>) -> Result<Self> {
        let n = d.len();
        let zeros = || vec![T::zero(); n];
        Self::from_bands(d, zeros(), zeros(), zeros(), zeros())
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::diagonal(vec![T::one(); n])
    }

    pub fn order(&self) -> usize {
        self.d.len()
    }

    pub fn band(&self, band: Band) -> &[T] {
        match band {
            Band::E => &self.e,
            Band::C => &self.c,
            Band::D => &self.d,
            Band::A => &self.a,
            Band::B => &self.b,
        }
    }

    pub fn d(&self) -> &[T] {
        &self.d
    }

    pub fn a(&self) -> &[T] {
        &self.a
    }

    pub fn b(&self) -> &[T] {
        &self.b
    }

    pub fn c(&self) -> &[T] {
        &self.c
    }

    pub fn e(&self) -> &[T] {
        &self.e
    }

    /// Overwrites the band entry with 1-based subscript `index`.
    pub fn set(&mut self, band: Band, index: usize, value: T) -> Result<()> {
        let n = self.order();
        if index == 0 || index > n {
            return Err(PentaError::DimensionMismatch {
                expected: n,
                found: index,
            });
        }
        if band.is_padding(n, index - 1) && !value.is_zero() {
            return Err(PentaError::InvalidPadding {
                band: band.name(),
                index,
            });
        }
        let slot = match band {
            Band::E => &mut self.e,
            Band::C => &mut self.c,
            Band::D => &mut self.d,
            Band::A => &mut self.a,
            Band::B => &mut self.b,
        };
        slot[index - 1] = value;
        Ok(())
    }

    /// Entry at 0-based `(row, col)` of the dense expansion.
    pub fn get(&self, row: usize, col: usize) -> T {
        let offset = col as isize - row as isize;
        match offset {
            -2 => self.e[row].clone(),
            -1 => self.c[row].clone(),
            0 => self.d[row].clone(),
            1 => self.a[row].clone(),
            2 => self.b[row].clone(),
            _ => T::zero(),
        }
    }

    /// Row-major dense expansion.
    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let n = self.order();
        (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect()
    }

    /// Computes `P x`.
    pub fn matvec(&self, x: &[T]) -> Result<Vec<T>> {
        let n = self.order();
        check_len(n, x.len())?;
        Ok((0..n)
            .map(|i| {
                let mut acc = self.d[i].clone() * x[i].clone();
                if i >= 2 {
                    acc = acc + self.e[i].clone() * x[i - 2].clone();
                }
                if i >= 1 {
                    acc = acc + self.c[i].clone() * x[i - 1].clone();
                }
                if i + 1 < n {
                    acc = acc + self.a[i].clone() * x[i + 1].clone();
                }
                if i + 2 < n {
                    acc = acc + self.b[i].clone() * x[i + 2].clone();
                }
                acc
            })
            .collect())
    }

    /// Applies `f` to every stored entry. Padding stays zero as long as `f`
    /// maps zero to zero.
    pub fn map<U: Field>(&self, mut f: impl FnMut(&T) -> U) -> PentaMatrix<U> {
        let mut conv = |v: &[T]| v.iter().map(&mut f).collect::<Vec<U>>();
        PentaMatrix {
            d: conv(&self.d),
            a: conv(&self.a),
            b: conv(&self.b),
            c: conv(&self.c),
            e: conv(&self.e),
        }
    }
}

impl<T: Scalar> PentaMatrix<T> {
    /// Exact rational copy of the matrix.
    pub fn to_exact(&self) -> Result<PentaMatrix<BigRational>> {
        let mut err = None;
        let m = self.map(|v| {
            v.to_exact().unwrap_or_else(|e| {
                err.get_or_insert(e);
                BigRational::from_integer(0.into())
            })
        });
        match err {
            Some(e) => Err(e),
            None => Ok(m),
        }
    }

    /// Largest absolute entry over all bands.
    pub fn max_magnitude(&self) -> f64 {
        Band::ALL
            .iter()
            .flat_map(|&b| self.band(b).iter())
            .map(Scalar::magnitude)
            .fold(0.0, f64::max)
    }
}

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(PentaError::DimensionMismatch { expected, found })
    }
}

/// Converts a vector of scalars to exact rationals.
pub fn vec_to_exact<T: Scalar>(v: &[T]) -> Result<Vec<BigRational>> {
    v.iter().map(Scalar::to_exact).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn example_4_1_layout() {
        let (p, _) = fixtures::example_4_1();
        let dense = p.to_dense();
        assert_eq!(dense[0][..3], [1.0, 2.0, 1.0]);
        assert_eq!(dense[5][3..8], [5.0, 1.0, 6.0, 3.0, 2.0]);
        assert_eq!(dense[9][7..], [-1.0, 4.0, 8.0]);
        assert_eq!(dense[9][6], 0.0);
    }

    #[test]
    fn identity_from_zero_bands() {
        let z = vec![0.0; 4];
        let p = PentaMatrix::from_bands(vec![1.0; 4], z.clone(), z.clone(), z.clone(), z).unwrap();
        assert_eq!(p, PentaMatrix::identity(4).unwrap());
        for (i, row) in p.to_dense().iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, if i == j { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn order_below_four_is_rejected() {
        let err = PentaMatrix::<f64>::identity(3).unwrap_err();
        assert_eq!(err, PentaError::InvalidOrder(3, 4));
    }

    #[test]
    fn padding_slots_must_be_zero() {
        let n = 5;
        let mut e = vec![0.0; n];
        e[1] = 2.0;
        let err = PentaMatrix::from_bands(vec![1.0; n], vec![0.0; n], vec![0.0; n], vec![0.0; n], e)
            .unwrap_err();
        assert_eq!(err, PentaError::InvalidPadding { band: 'e', index: 2 });

        let mut b = vec![0.0; n];
        b[3] = 1.0;
        let err = PentaMatrix::from_bands(vec![1.0; n], vec![0.0; n], b, vec![0.0; n], vec![0.0; n])
            .unwrap_err();
        assert_eq!(err, PentaError::InvalidPadding { band: 'b', index: 4 });
    }

    #[test]
    fn band_length_mismatch() {
        let err = PentaMatrix::from_bands(
            vec![1.0; 6],
            vec![0.0; 3],
            vec![0.0; 6],
            vec![0.0; 6],
            vec![0.0; 6],
        )
        .unwrap_err();
        assert_eq!(err, PentaError::DimensionMismatch { expected: 6, found: 3 });
    }

    #[test]
    fn set_rejects_padding_slot() {
        let mut p = PentaMatrix::<f64>::identity(4).unwrap();
        assert!(p.set(Band::C, 1, 1.0).is_err());
        assert!(p.set(Band::A, 4, 0.0).is_ok());
        p.set(Band::B, 2, 7.0).unwrap();
        assert_eq!(p.get(1, 3), 7.0);
    }

    #[test]
    fn matvec_example_4_2_ones() {
        let (p, y) = fixtures::example_4_2();
        assert_eq!(p.matvec(&[1.0; 4]).unwrap(), y);
        assert_eq!(y, vec![6.0, 3.0, 9.0, 6.0]);
    }

    #[test]
    fn matvec_identity() {
        let p = PentaMatrix::<f64>::identity(6).unwrap();
        let x = vec![3.0, -1.0, 2.5, 0.0, 8.0, 1e-3];
        assert_eq!(p.matvec(&x).unwrap(), x);
        assert!(p.matvec(&x[..5]).is_err());
    }

    #[test]
    fn matvec_example_4_1_recovers_prose_rhs() {
        // Dense row-by-row product over the displayed matrix.
        let (p, _) = fixtures::example_4_1();
        let x: Vec<f64> = (1..=10).map(f64::from).collect();
        let dense = p.to_dense();
        let oracle: Vec<f64> = dense
            .iter()
            .map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum())
            .collect();
        assert_eq!(oracle, vec![8.0, 33.0, 8.0, 24.0, 29.0, 98.0, 99.0, 17.0, 57.0, 108.0]);
        assert_eq!(p.matvec(&x).unwrap(), oracle);
    }
}
