#![allow(dead_code)]

use num_rational::BigRational;
use penta_core::scalar::rational;
use penta_core::{factor_ptrans1, factor_ptrans2, PentaMatrix};
use rand::Rng;

pub fn q(k: i64) -> BigRational {
    rational(k, 1)
}

pub fn int_vec(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> Vec<BigRational> {
    (0..n).map(|_| q(rng.gen_range(lo..=hi))).collect()
}

/// Random integer pentadiagonal matrix with entries in `lo..=hi`.
pub fn random_int_penta(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> PentaMatrix<BigRational> {
    PentaMatrix::from_bands(
        int_vec(rng, n, lo, hi),
        int_vec(rng, n - 1, lo, hi),
        int_vec(rng, n - 2, lo, hi),
        int_vec(rng, n - 1, lo, hi),
        int_vec(rng, n - 2, lo, hi),
    )
    .unwrap()
}

/// Strictly diagonally dominant float matrix.
pub fn random_dominant_f64(rng: &mut impl Rng, n: usize) -> PentaMatrix<f64> {
    let mut band = |len: usize| (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect::<Vec<f64>>();
    let (a, b, c, e) = (band(n - 1), band(n - 2), band(n - 1), band(n - 2));
    let d = (0..n).map(|_| 5.0 + rng.gen_range(0.0..1.0)).collect();
    PentaMatrix::from_bands(d, a, b, c, e).unwrap()
}

/// Which elimination gets a planted zero pivot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Plant {
    Forward,
    Backward,
}

/// Adjusts `d_k` so that pivot `k` of the chosen elimination is exactly
/// zero. Pivot k depends on d_k with unit coefficient, so subtracting the
/// current pivot zeroes it. Returns `None` when an earlier pivot is already
/// zero.
pub fn plant_zero_pivot(
    p: &PentaMatrix<BigRational>,
    k: usize,
    which: Plant,
) -> Option<PentaMatrix<BigRational>> {
    let n = p.order();
    let zeros = vec![q(0); n];
    let pivot = match which {
        Plant::Forward => factor_ptrans1(p, &zeros).ok()?.mu[k - 1].clone(),
        Plant::Backward => factor_ptrans2(p, &zeros).ok()?.psi[k - 1].clone(),
    };
    let mut out = p.clone();
    let dk = p.d()[k - 1].clone() - pivot;
    out.set(penta_core::Band::D, k, dk).unwrap();
    Some(out)
}
