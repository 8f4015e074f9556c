//! Pentadiagonal linear systems solved by two transformation algorithms,
//! with exact symbolic rescue of zero pivots.
//!
//! * [`ptrans`]: numeric forward (`PTRANS-I`) and backward (`PTRANS-II`)
//!   transformations, generic over `f64` and exact rationals.
//! * [`symbolic`]: rational functions of `p` and the rescuing variants
//!   `SPTRANS-I` / `SPTRANS-II`.
//! * [`backward`]: column-reversed systems.
//! * [`oracle`]: dense Gaussian elimination used as test ground truth.

pub mod backward;
pub mod error;
pub mod fixtures;
pub mod matrix;
pub mod oracle;
pub mod penta_file;
pub mod ptrans;
pub mod report;
pub mod scalar;
pub mod symbolic;

pub use backward::{reverse_permutation_apply, solve_backward, BackwardPentaMatrix};
pub use error::{PentaError, Result};
pub use matrix::{Band, PentaMatrix};
pub use ptrans::{
    determinant, factor_ptrans1, factor_ptrans2, solve_ptrans1, solve_ptrans2,
    Ptrans1Factorization, Ptrans2Factorization,
};
pub use report::{Algorithm, Pivot, SolveOptions, SolveReport};
pub use scalar::{Field, Scalar};
pub use symbolic::{sptrans1, sptrans2, RationalFunction};

/// Runs `algorithm` on `P x = y`.
pub fn solve<T: Scalar>(
    p: &PentaMatrix<T>,
    y: &[T],
    algorithm: Algorithm,
) -> Result<SolveReport<T, Pivot<T>>> {
    Ok(match algorithm {
        Algorithm::Ptrans1 => solve_ptrans1(p, y)?.map_pivots(Pivot::Numeric),
        Algorithm::Ptrans2 => solve_ptrans2(p, y)?.map_pivots(Pivot::Numeric),
        Algorithm::Sptrans1 => sptrans1(p, y)?.map_pivots(Pivot::Symbolic),
        Algorithm::Sptrans2 => sptrans2(p, y)?.map_pivots(Pivot::Symbolic),
    })
}

/// `PTRANS-I`, falling back to `SPTRANS-I` when a pivot vanishes.
pub fn solve_auto<T: Scalar>(p: &PentaMatrix<T>, y: &[T]) -> Result<SolveReport<T, Pivot<T>>> {
    match solve(p, y, Algorithm::Ptrans1) {
        Err(PentaError::ZeroPivot { .. }) => solve(p, y, Algorithm::Sptrans1),
        other => other,
    }
}
