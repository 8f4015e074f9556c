//! The two transformation solvers.
//!
//! `PTRANS-I` eliminates top-down, turning the system into a unit
//! upper-triangular one with superdiagonals α and β, then back-substitutes.
//! `PTRANS-II` eliminates bottom-up into a unit lower-triangular system with
//! subdiagonals σ and φ, then forward-substitutes. Both cost `19n - 29`
//! arithmetic operations when every `+ - * /` is counted once.
//!
//! The recurrences are written once, over any [`Field`], and take a pivot
//! hook. The numeric solvers reject exact zeros through the hook; the
//! symbolic solvers swap them for the indeterminate `p`.

use crate::error::{PentaError, Result};
use crate::matrix::{check_len, PentaMatrix};
use crate::report::{Algorithm, SolveOptions, SolveReport};
use crate::scalar::{Field, Scalar};

/// Vectors of the forward transformation.
///
/// Lengths follow the subscripts: `alpha` holds α₁..α_{n-1}, `beta`
/// β₁..β_{n-2}, `z` z₁..z_n, `gamma` γ₂..γ_n (so `gamma[0]` is γ₂) and `mu`
/// μ₁..μ_n.
#[derive(Debug, Clone, PartialEq)]
pub struct Ptrans1Factorization<T> {
    pub alpha: Vec<T>,
    pub beta: Vec<T>,
    pub z: Vec<T>,
    pub gamma: Vec<T>,
    pub mu: Vec<T>,
}

/// Vectors of the backward transformation.
///
/// `sigma` holds σ₂..σ_n (`sigma[0]` is σ₂), `phi` φ₃..φ_n, `w` w₁..w_n,
/// `rho` ρ₁..ρ_{n-1} and `psi` ψ₁..ψ_n.
#[derive(Debug, Clone, PartialEq)]
pub struct Ptrans2Factorization<T> {
    pub sigma: Vec<T>,
    pub phi: Vec<T>,
    pub w: Vec<T>,
    pub rho: Vec<T>,
    pub psi: Vec<T>,
}

/// Arithmetic operation tally.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounter(pub u64);

impl OpCounter {
    #[inline]
    fn add(&mut self, k: u64) {
        self.0 += k;
    }
}

/// Top-down sweep. `pivot(i, value)` sees each μᵢ (1-based `i`) before it is
/// used as a divisor and returns the value to use in its place.
pub(crate) fn forward_sweep<T: Field>(
    p: &PentaMatrix<T>,
    y: &[T],
    ops: &mut OpCounter,
    mut pivot: impl FnMut(usize, T) -> Result<T>,
) -> Result<Ptrans1Factorization<T>> {
    let n = p.order();
    check_len(n, y.len())?;
    let (d, a, b, c, e) = (p.d(), p.a(), p.b(), p.c(), p.e());

    let mut alpha = vec![T::zero(); n];
    let mut beta = vec![T::zero(); n];
    let mut z = vec![T::zero(); n];
    let mut gamma = vec![T::zero(); n];
    let mut mu = vec![T::zero(); n];

    mu[0] = pivot(1, d[0].clone())?;
    alpha[0] = a[0].clone() / mu[0].clone();
    beta[0] = b[0].clone() / mu[0].clone();
    z[0] = y[0].clone() / mu[0].clone();
    ops.add(3);

    gamma[1] = c[1].clone();
    mu[1] = pivot(2, d[1].clone() - alpha[0].clone() * gamma[1].clone())?;
    alpha[1] = (a[1].clone() - beta[0].clone() * gamma[1].clone()) / mu[1].clone();
    beta[1] = b[1].clone() / mu[1].clone();
    z[1] = (y[1].clone() - z[0].clone() * gamma[1].clone()) / mu[1].clone();
    ops.add(9);

    for i in 2..n {
        gamma[i] = c[i].clone() - alpha[i - 2].clone() * e[i].clone();
        let m = d[i].clone() - beta[i - 2].clone() * e[i].clone() - alpha[i - 1].clone() * gamma[i].clone();
        mu[i] = pivot(i + 1, m)?;
        ops.add(6);
        if i + 1 < n {
            alpha[i] = (a[i].clone() - beta[i - 1].clone() * gamma[i].clone()) / mu[i].clone();
            ops.add(3);
        }
        if i + 2 < n {
            beta[i] = b[i].clone() / mu[i].clone();
            ops.add(1);
        }
        z[i] = (y[i].clone() - z[i - 2].clone() * e[i].clone() - z[i - 1].clone() * gamma[i].clone())
            / mu[i].clone();
        ops.add(5);
    }

    alpha.truncate(n - 1);
    beta.truncate(n - 2);
    gamma.remove(0);
    Ok(Ptrans1Factorization {
        alpha,
        beta,
        z,
        gamma,
        mu,
    })
}

/// Bottom-up sweep; `pivot` sees each ψᵢ in the order ψ_n, ..., ψ₁.
pub(crate) fn backward_sweep<T: Field>(
    p: &PentaMatrix<T>,
    y: &[T],
    ops: &mut OpCounter,
    mut pivot: impl FnMut(usize, T) -> Result<T>,
) -> Result<Ptrans2Factorization<T>> {
    let n = p.order();
    check_len(n, y.len())?;
    let (d, a, b, c, e) = (p.d(), p.a(), p.b(), p.c(), p.e());

    let mut sigma = vec![T::zero(); n];
    let mut phi = vec![T::zero(); n];
    let mut w = vec![T::zero(); n];
    let mut rho = vec![T::zero(); n];
    let mut psi = vec![T::zero(); n];

    let last = n - 1;
    psi[last] = pivot(n, d[last].clone())?;
    sigma[last] = c[last].clone() / psi[last].clone();
    phi[last] = e[last].clone() / psi[last].clone();
    w[last] = y[last].clone() / psi[last].clone();
    ops.add(3);

    let k = n - 2;
    rho[k] = a[k].clone();
    psi[k] = pivot(n - 1, d[k].clone() - sigma[last].clone() * rho[k].clone())?;
    sigma[k] = (c[k].clone() - phi[last].clone() * rho[k].clone()) / psi[k].clone();
    phi[k] = e[k].clone() / psi[k].clone();
    w[k] = (y[k].clone() - w[last].clone() * rho[k].clone()) / psi[k].clone();
    ops.add(9);

    for i in (0..n - 2).rev() {
        rho[i] = a[i].clone() - sigma[i + 2].clone() * b[i].clone();
        let s = d[i].clone() - phi[i + 2].clone() * b[i].clone() - sigma[i + 1].clone() * rho[i].clone();
        psi[i] = pivot(i + 1, s)?;
        ops.add(6);
        if i >= 1 {
            sigma[i] = (c[i].clone() - phi[i + 1].clone() * rho[i].clone()) / psi[i].clone();
            ops.add(3);
        }
        if i >= 2 {
            phi[i] = e[i].clone() / psi[i].clone();
            ops.add(1);
        }
        w[i] = (y[i].clone() - w[i + 2].clone() * b[i].clone() - w[i + 1].clone() * rho[i].clone())
            / psi[i].clone();
        ops.add(5);
    }

    sigma.remove(0);
    phi.drain(..2);
    rho.truncate(n - 1);
    Ok(Ptrans2Factorization {
        sigma,
        phi,
        w,
        rho,
        psi,
    })
}

impl<T: Field> Ptrans1Factorization<T> {
    pub fn order(&self) -> usize {
        self.mu.len()
    }

    /// Solves the unit upper-triangular system by back substitution.
    pub fn back_substitute(&self) -> Vec<T> {
        self.back_substitute_counted(&mut OpCounter::default())
    }

    pub(crate) fn back_substitute_counted(&self, ops: &mut OpCounter) -> Vec<T> {
        let n = self.order();
        let mut x = vec![T::zero(); n];
        x[n - 1] = self.z[n - 1].clone();
        x[n - 2] = self.z[n - 2].clone() - self.alpha[n - 2].clone() * x[n - 1].clone();
        ops.add(2);
        for i in (0..n - 2).rev() {
            x[i] = self.z[i].clone()
                - self.alpha[i].clone() * x[i + 1].clone()
                - self.beta[i].clone() * x[i + 2].clone();
            ops.add(4);
        }
        x
    }

    pub fn pivot_product(&self) -> T {
        product(&self.mu)
    }
}

impl<T: Field> Ptrans2Factorization<T> {
    pub fn order(&self) -> usize {
        self.psi.len()
    }

    /// Solves the unit lower-triangular system by forward substitution.
    pub fn forward_substitute(&self) -> Vec<T> {
        self.forward_substitute_counted(&mut OpCounter::default())
    }

    pub(crate) fn forward_substitute_counted(&self, ops: &mut OpCounter) -> Vec<T> {
        let n = self.order();
        // sigma[k] is σ_{k+2}, phi[k] is φ_{k+3}
        let mut x = vec![T::zero(); n];
        x[0] = self.w[0].clone();
        x[1] = self.w[1].clone() - self.sigma[0].clone() * x[0].clone();
        ops.add(2);
        for i in 2..n {
            x[i] = self.w[i].clone()
                - self.sigma[i - 1].clone() * x[i - 1].clone()
                - self.phi[i - 2].clone() * x[i - 2].clone();
            ops.add(4);
        }
        x
    }

    pub fn pivot_product(&self) -> T {
        product(&self.psi)
    }
}

pub(crate) fn product<T: Field>(values: &[T]) -> T {
    values.iter().fold(T::one(), |acc, v| acc * v.clone())
}

/// Pivot hook for the numeric algorithms: exact zero aborts, tiny values are
/// recorded.
fn numeric_pivot<T: Scalar>(
    threshold: f64,
    near_zero: &mut Vec<usize>,
) -> impl FnMut(usize, T) -> Result<T> + '_ {
    move |index, value| {
        if value.is_zero() {
            return Err(PentaError::ZeroPivot { index });
        }
        if value.magnitude() < threshold {
            near_zero.push(index);
        }
        Ok(value)
    }
}

fn threshold<T: Scalar>(p: &PentaMatrix<T>, opts: &SolveOptions) -> f64 {
    opts.near_zero_tolerance * p.max_magnitude()
}

/// Forward factorization; fails with `ZeroPivot(i)` on the first μᵢ = 0.
pub fn factor_ptrans1<T: Scalar>(p: &PentaMatrix<T>, y: &[T]) -> Result<Ptrans1Factorization<T>> {
    let mut ignored = Vec::new();
    let tol = threshold(p, &SolveOptions::default());
    forward_sweep(p, y, &mut OpCounter::default(), numeric_pivot(tol, &mut ignored))
}

/// Backward factorization; fails with `ZeroPivot(i)` on the first ψᵢ = 0
/// (scanning from i = n down).
pub fn factor_ptrans2<T: Scalar>(p: &PentaMatrix<T>, y: &[T]) -> Result<Ptrans2Factorization<T>> {
    let mut ignored = Vec::new();
    let tol = threshold(p, &SolveOptions::default());
    backward_sweep(p, y, &mut OpCounter::default(), numeric_pivot(tol, &mut ignored))
}

pub fn solve_ptrans1<T: Scalar>(p: &PentaMatrix<T>, y: &[T]) -> Result<SolveReport<T>> {
    solve_ptrans1_with(p, y, &SolveOptions::default())
}

pub fn solve_ptrans1_with<T: Scalar>(
    p: &PentaMatrix<T>,
    y: &[T],
    opts: &SolveOptions,
) -> Result<SolveReport<T>> {
    let mut ops = OpCounter::default();
    let mut near_zero_pivots = Vec::new();
    let tol = threshold(p, opts);
    let fact = forward_sweep(p, y, &mut ops, numeric_pivot(tol, &mut near_zero_pivots))?;
    let solution = fact.back_substitute_counted(&mut ops);
    let determinant = fact.pivot_product();
    Ok(SolveReport {
        solution,
        pivots: fact.mu,
        determinant,
        op_count: ops.0,
        rescued_indices: Vec::new(),
        near_zero_pivots,
        algorithm: Algorithm::Ptrans1,
    })
}

pub fn solve_ptrans2<T: Scalar>(p: &PentaMatrix<T>, y: &[T]) -> Result<SolveReport<T>> {
    solve_ptrans2_with(p, y, &SolveOptions::default())
}

pub fn solve_ptrans2_with<T: Scalar>(
    p: &PentaMatrix<T>,
    y: &[T],
    opts: &SolveOptions,
) -> Result<SolveReport<T>> {
    let mut ops = OpCounter::default();
    let mut near_zero_pivots = Vec::new();
    let tol = threshold(p, opts);
    let fact = backward_sweep(p, y, &mut ops, numeric_pivot(tol, &mut near_zero_pivots))?;
    let solution = fact.forward_substitute_counted(&mut ops);
    let determinant = fact.pivot_product();
    near_zero_pivots.sort_unstable();
    Ok(SolveReport {
        solution,
        pivots: fact.psi,
        determinant,
        op_count: ops.0,
        rescued_indices: Vec::new(),
        near_zero_pivots,
        algorithm: Algorithm::Ptrans2,
    })
}

/// det(P) as a product of pivots.
///
/// Tries ∏μᵢ, then ∏ψᵢ, then the symbolic product evaluated at p = 0 in exact
/// arithmetic. A float product that underflows to zero with all pivots
/// nonzero is returned as is; only an exact zero from the symbolic route
/// yields `SingularMatrix`.
pub fn determinant<T: Scalar>(p: &PentaMatrix<T>) -> Result<T> {
    let zeros = vec![T::zero(); p.order()];
    match factor_ptrans1(p, &zeros) {
        Ok(f) => return Ok(f.pivot_product()),
        Err(PentaError::ZeroPivot { .. }) => {}
        Err(e) => return Err(e),
    }
    match factor_ptrans2(p, &zeros) {
        Ok(f) => return Ok(f.pivot_product()),
        Err(PentaError::ZeroPivot { .. }) => {}
        Err(e) => return Err(e),
    }
    let det = crate::symbolic::symbolic_determinant(&p.to_exact()?)?;
    Ok(T::from_exact(&det))
}
