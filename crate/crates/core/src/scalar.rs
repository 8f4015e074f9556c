use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{PentaError, Result};

/// Arithmetic needed by the transformation recurrences.
///
/// Implemented by `f64`, `BigRational` and the symbolic `RationalFunction`.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// A concrete matrix entry type: a field element with a size and an exact
/// rational image.
pub trait Scalar: Field {
    /// Absolute value as an `f64`, used for near-breakdown diagnostics.
    fn magnitude(&self) -> f64;

    /// Exact rational value. Floats convert through their binary expansion.
    fn to_exact(&self) -> Result<BigRational>;

    fn from_exact(value: &BigRational) -> Self;
}

impl Scalar for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }

    fn to_exact(&self) -> Result<BigRational> {
        BigRational::from_float(*self).ok_or_else(|| PentaError::NonFinite(self.to_string()))
    }

    fn from_exact(value: &BigRational) -> Self {
        value.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for BigRational {
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    fn to_exact(&self) -> Result<BigRational> {
        Ok(self.clone())
    }

    fn from_exact(value: &BigRational) -> Self {
        value.clone()
    }
}

/// Shorthand for an integer-valued rational.
pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(numer.into(), denom.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_conversion_is_exact_binary_expansion() {
        let tenth = 0.1f64.to_exact().unwrap();
        assert_ne!(tenth, rational(1, 10));
        assert_eq!(f64::from_exact(&tenth), 0.1);
        assert_eq!(3.0f64.to_exact().unwrap(), rational(3, 1));
    }

    #[test]
    fn non_finite_is_rejected() {
        assert!(matches!(f64::NAN.to_exact(), Err(PentaError::NonFinite(_))));
        assert!(f64::INFINITY.to_exact().is_err());
    }
}
