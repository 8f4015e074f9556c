//! Exact zero-pivot rescue.
//!
//! The transformation recurrences are run over rational functions of an
//! indeterminate `p`. A pivot that comes out identically zero is replaced by
//! `p` itself, which amounts to perturbing the matching diagonal entry by
//! `p`. After substitution every solution component is a rational function;
//! evaluating at p = 0 gives the solution of the unperturbed system, or a
//! pole when the system is singular.

mod format;
mod poly;
mod ratfun;

pub use format::format_ratfun;
pub use poly::Poly;
pub use ratfun::{eval_at_zero, ratfun_arith, ArithOp, RationalFunction};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{PentaError, Result};
use crate::matrix::{check_len, vec_to_exact, PentaMatrix};
use crate::ptrans::{backward_sweep, forward_sweep, product, OpCounter};
use crate::report::{Algorithm, SolveReport};
use crate::scalar::Scalar;

/// Largest numerator or denominator degree a pivot may reach.
pub const MAX_DEGREE: usize = 64;

fn lift(p: &PentaMatrix<BigRational>) -> PentaMatrix<RationalFunction> {
    p.map(|v| RationalFunction::constant(v.clone()))
}

fn lift_vec(y: &[BigRational]) -> Vec<RationalFunction> {
    y.iter().cloned().map(RationalFunction::constant).collect()
}

/// Pivot hook: identically zero pivots become `p`.
fn rescue(rescued: &mut Vec<usize>) -> impl FnMut(usize, RationalFunction) -> Result<RationalFunction> + '_ {
    move |index, value| {
        if value.is_zero() {
            rescued.push(index);
            return Ok(RationalFunction::p());
        }
        let degree = value.degree();
        if degree > MAX_DEGREE {
            return Err(PentaError::DegreeOverflow {
                degree,
                limit: MAX_DEGREE,
            });
        }
        Ok(value)
    }
}

fn at_zero(f: &RationalFunction) -> Result<BigRational> {
    f.eval_at_zero().map_err(|_| PentaError::SingularMatrix)
}

fn finish<T: Scalar>(
    x: Vec<RationalFunction>,
    pivots: Vec<RationalFunction>,
    mut rescued_indices: Vec<usize>,
    ops: OpCounter,
    algorithm: Algorithm,
) -> Result<SolveReport<T, RationalFunction>> {
    let det = at_zero(&product(&pivots))?;
    if det.is_zero() {
        return Err(PentaError::SingularMatrix);
    }
    let solution = x
        .iter()
        .map(|xi| at_zero(xi).map(|v| T::from_exact(&v)))
        .collect::<Result<Vec<T>>>()?;
    rescued_indices.sort_unstable();
    Ok(SolveReport {
        solution,
        pivots,
        determinant: T::from_exact(&det),
        op_count: ops.0,
        rescued_indices,
        near_zero_pivots: Vec::new(),
        algorithm,
    })
}

/// Symbolic forward transformation solve.
///
/// Inputs are converted to exact rationals first (floats by their binary
/// expansion). The report's pivots are the μᵢ as rational functions of `p`;
/// the solution and determinant are the values at p = 0.
pub fn sptrans1<T: Scalar>(p: &PentaMatrix<T>, y: &[T]) -> Result<SolveReport<T, RationalFunction>> {
    let (x, fact, rescued, ops) = sptrans1_functions(p, y)?;
    finish(x, fact, rescued, ops, Algorithm::Sptrans1)
}

/// Symbolic backward transformation solve; pivots are the ψᵢ.
pub fn sptrans2<T: Scalar>(p: &PentaMatrix<T>, y: &[T]) -> Result<SolveReport<T, RationalFunction>> {
    let (x, fact, rescued, ops) = sptrans2_functions(p, y)?;
    finish(x, fact, rescued, ops, Algorithm::Sptrans2)
}

type SymbolicRun = (Vec<RationalFunction>, Vec<RationalFunction>, Vec<usize>, OpCounter);

/// Solution components and pivots as functions of `p`, before substitution.
pub fn sptrans1_functions<T: Scalar>(p: &PentaMatrix<T>, y: &[T]) -> Result<SymbolicRun> {
    check_len(p.order(), y.len())?;
    let (pm, yv) = (lift(&p.to_exact()?), lift_vec(&vec_to_exact(y)?));
    let mut ops = OpCounter::default();
    let mut rescued = Vec::new();
    let fact = forward_sweep(&pm, &yv, &mut ops, rescue(&mut rescued))?;
    let x = fact.back_substitute_counted(&mut ops);
    Ok((x, fact.mu, rescued, ops))
}

pub fn sptrans2_functions<T: Scalar>(p: &PentaMatrix<T>, y: &[T]) -> Result<SymbolicRun> {
    check_len(p.order(), y.len())?;
    let (pm, yv) = (lift(&p.to_exact()?), lift_vec(&vec_to_exact(y)?));
    let mut ops = OpCounter::default();
    let mut rescued = Vec::new();
    let fact = backward_sweep(&pm, &yv, &mut ops, rescue(&mut rescued))?;
    let x = fact.forward_substitute_counted(&mut ops);
    Ok((x, fact.psi, rescued, ops))
}

/// Exact det(P) from the rescued forward pivots; `SingularMatrix` when it is
/// zero.
pub fn symbolic_determinant(p: &PentaMatrix<BigRational>) -> Result<BigRational> {
    let zeros = vec![RationalFunction::zero(); p.order()];
    let mut rescued = Vec::new();
    let fact = forward_sweep(&lift(p), &zeros, &mut OpCounter::default(), rescue(&mut rescued))?;
    let det = at_zero(&product(&fact.mu))?;
    if det.is_zero() {
        return Err(PentaError::SingularMatrix);
    }
    Ok(det)
}
