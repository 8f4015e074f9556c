use std::fmt;
use std::str::FromStr;

use crate::symbolic::RationalFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Forward elimination to unit upper-triangular form, back substitution.
    Ptrans1,
    /// Backward elimination to unit lower-triangular form, forward substitution.
    Ptrans2,
    /// `Ptrans1` over rational functions with zero pivots replaced by `p`.
    Sptrans1,
    /// `Ptrans2` over rational functions with zero pivots replaced by `p`.
    Sptrans2,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Ptrans1,
        Algorithm::Ptrans2,
        Algorithm::Sptrans1,
        Algorithm::Sptrans2,
    ];

    pub fn is_symbolic(self) -> bool {
        matches!(self, Algorithm::Sptrans1 | Algorithm::Sptrans2)
    }

    /// Short lowercase name used on the command line.
    pub fn key(self) -> &'static str {
        match self {
            Algorithm::Ptrans1 => "ptrans1",
            Algorithm::Ptrans2 => "ptrans2",
            Algorithm::Sptrans1 => "sptrans1",
            Algorithm::Sptrans2 => "sptrans2",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Ptrans1 => "PTRANS-I",
            Algorithm::Ptrans2 => "PTRANS-II",
            Algorithm::Sptrans1 => "SPTRANS-I",
            Algorithm::Sptrans2 => "SPTRANS-II",
        })
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace(['-', '_'], "");
        match key.as_str() {
            "ptrans1" | "ptransi" => Ok(Algorithm::Ptrans1),
            "ptrans2" | "ptransii" => Ok(Algorithm::Ptrans2),
            "sptrans1" | "sptransi" => Ok(Algorithm::Sptrans1),
            "sptrans2" | "sptransii" => Ok(Algorithm::Sptrans2),
            _ => Err(format!("unknown algorithm `{s}`")),
        }
    }
}

/// Knobs for the numeric solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    /// A pivot is flagged as near zero when `|pivot| < tol * max |entry|`.
    /// Flagged pivots are reported, never rejected.
    pub near_zero_tolerance: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            near_zero_tolerance: 1e-300,
        }
    }
}

/// Result of one solve.
///
/// `P` is the pivot type: the scalar itself for the numeric algorithms and
/// [`RationalFunction`] for the symbolic ones. Indices are 1-based.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport<T, P = T> {
    pub solution: Vec<T>,
    /// μ (forward algorithms) or ψ (backward algorithms) as used.
    pub pivots: Vec<P>,
    pub determinant: T,
    pub op_count: u64,
    /// Pivots that were identically zero and replaced by `p`.
    pub rescued_indices: Vec<usize>,
    /// Nonzero pivots below the near-zero threshold.
    pub near_zero_pivots: Vec<usize>,
    pub algorithm: Algorithm,
}

impl<T, P> SolveReport<T, P> {
    pub fn map_pivots<Q>(self, f: impl FnMut(P) -> Q) -> SolveReport<T, Q> {
        SolveReport {
            solution: self.solution,
            pivots: self.pivots.into_iter().map(f).collect(),
            determinant: self.determinant,
            op_count: self.op_count,
            rescued_indices: self.rescued_indices,
            near_zero_pivots: self.near_zero_pivots,
            algorithm: self.algorithm,
        }
    }

    pub fn was_rescued(&self) -> bool {
        !self.rescued_indices.is_empty()
    }
}

/// Pivot value of a report produced by [`crate::solve`].
#[derive(Debug, Clone, PartialEq)]
pub enum Pivot<T> {
    Numeric(T),
    Symbolic(RationalFunction),
}

impl<T: fmt::Display> fmt::Display for Pivot<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pivot::Numeric(v) => v.fmt(f),
            Pivot::Symbolic(r) => r.fmt(f),
        }
    }
}
