//! Command-line front end: `solve`, `det`, `gen-example3` and `bench`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use penta_core::backward::reversal_sign;
use penta_core::penta_file::{format_float, join_floats, parse_penta, write_penta, PentaFile};
use penta_core::{
    fixtures, solve, solve_backward, Algorithm, BackwardPentaMatrix, PentaError, PentaMatrix,
    Pivot, Scalar, SolveReport,
};

#[derive(Debug, Parser)]
#[command(name = "penta", version, about = "Pentadiagonal linear system solver")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the system stored in a PENTA file.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = AlgChoice::Auto)]
        alg: AlgChoice,
    },
    /// Print the determinant of the matrix stored in a PENTA file.
    Det {
        file: PathBuf,
        /// Use floating point instead of exact rationals.
        #[arg(long)]
        float: bool,
    },
    /// Write the n×n biharmonic test system (solution all ones).
    #[command(name = "gen-example3")]
    GenExample3 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Time the solvers on the biharmonic family.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "ptrans1,ptrans2")]
        algs: Vec<AlgChoice>,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgChoice {
    Ptrans1,
    Ptrans2,
    Sptrans1,
    Sptrans2,
    /// PTRANS-I, switching to SPTRANS-I on a zero pivot.
    Auto,
}

impl AlgChoice {
    fn algorithm(self) -> Option<Algorithm> {
        match self {
            AlgChoice::Ptrans1 => Some(Algorithm::Ptrans1),
            AlgChoice::Ptrans2 => Some(Algorithm::Ptrans2),
            AlgChoice::Sptrans1 => Some(Algorithm::Sptrans1),
            AlgChoice::Sptrans2 => Some(Algorithm::Sptrans2),
            AlgChoice::Auto => None,
        }
    }

    fn label(self) -> String {
        self.algorithm().map_or("auto".into(), |a| a.to_string())
    }
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const SINGULAR: i32 = 3;
    pub const ZERO_PIVOT: i32 = 4;
}

#[derive(Debug)]
pub enum CliError {
    Core(PentaError),
    Io(PathBuf, std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(PentaError::Parse { .. }) => exit::PARSE,
            CliError::Core(PentaError::SingularMatrix) => exit::SINGULAR,
            CliError::Core(PentaError::ZeroPivot { .. }) => exit::ZERO_PIVOT,
            _ => exit::FAILURE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(PentaError::ZeroPivot { index }) => write!(
                f,
                "zero pivot at index {index}; rerun with --alg auto or a symbolic algorithm"
            ),
            CliError::Core(e) => e.fmt(f),
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

impl From<PentaError> for CliError {
    fn from(e: PentaError) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Executes one command and returns what it prints on stdout.
pub fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Solve { file, alg } => cmd_solve(&read_penta(&file)?, alg),
        Command::Det { file, float } => cmd_det(&read_penta(&file)?, float),
        Command::GenExample3 { n, out } => cmd_gen(n, &out),
        Command::Bench {
            sizes,
            algs,
            repeat,
            csv,
        } => {
            let rows = bench(&sizes, &algs, repeat.max(1));
            if let Some(path) = csv {
                std::fs::write(&path, bench_csv(&rows)).map_err(|e| CliError::Io(path, e))?;
            }
            Ok(bench_table(&rows))
        }
    }
}

pub fn read_penta(path: &Path) -> CliResult<PentaFile> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_owned(), e))?;
    Ok(parse_penta(&text)?)
}

fn run_algorithm<T: Scalar>(
    p: &PentaMatrix<T>,
    y: &[T],
    backward: bool,
    alg: Algorithm,
) -> penta_core::Result<SolveReport<T, Pivot<T>>> {
    if backward {
        solve_backward(&BackwardPentaMatrix::from_forward(p.clone()), y, alg)
    } else {
        solve(p, y, alg)
    }
}

fn render_report<T>(report: &SolveReport<T, Pivot<T>>, fmt: impl Fn(&T) -> String) -> String {
    let join = |v: &[T]| v.iter().map(&fmt).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    let _ = writeln!(out, "algorithm: {}", report.algorithm);
    let _ = writeln!(out, "solution: {}", join(&report.solution));
    let _ = writeln!(out, "determinant: {}", fmt(&report.determinant));
    let pivots: Vec<String> = report
        .pivots
        .iter()
        .map(|p| match p {
            Pivot::Numeric(v) => fmt(v),
            Pivot::Symbolic(r) => r.to_string(),
        })
        .collect();
    let _ = writeln!(out, "pivots: {}", pivots.join("  "));
    for &k in &report.rescued_indices {
        let _ = writeln!(out, "rescued: pivot {k} was zero, replaced by p");
    }
    for &k in &report.near_zero_pivots {
        let _ = writeln!(out, "warning: pivot {k} is close to zero");
    }
    out
}

fn render_exact(report: &SolveReport<BigRational, Pivot<BigRational>>) -> String {
    render_report(report, |v| v.to_string())
}

fn cmd_solve(file: &PentaFile, alg: AlgChoice) -> CliResult<String> {
    let PentaFile {
        matrix,
        rhs,
        backward,
    } = file;
    let symbolic = |alg| -> CliResult<String> {
        let p = matrix.to_exact()?;
        let y = penta_core::matrix::vec_to_exact(rhs)?;
        Ok(render_exact(&run_algorithm(&p, &y, *backward, alg)?))
    };
    match alg.algorithm() {
        Some(a) if a.is_symbolic() => symbolic(a),
        Some(a) => Ok(render_report(&run_algorithm(matrix, rhs, *backward, a)?, |v| {
            format_float(*v)
        })),
        None => match run_algorithm(matrix, rhs, *backward, Algorithm::Ptrans1) {
            Err(PentaError::ZeroPivot { index }) => {
                let body = symbolic(Algorithm::Sptrans1)?;
                Ok(format!("note: PTRANS-I hit a zero pivot at index {index}\n{body}"))
            }
            other => Ok(render_report(&other?, |v| format_float(*v))),
        },
    }
}

fn cmd_det(file: &PentaFile, float: bool) -> CliResult<String> {
    let sign = if file.backward { reversal_sign(file.matrix.order()) } else { 1 };
    if float {
        let det = penta_core::determinant(&file.matrix)? * f64::from(sign);
        return Ok(format!("determinant: {}\n", format_float(det)));
    }
    let det = penta_core::determinant(&file.matrix.to_exact()?)? * BigRational::from_integer(sign.into());
    let approx = det.to_f64().unwrap_or(f64::NAN);
    Ok(format!("determinant: {det}\napprox: {}\n", format_float(approx)))
}

fn cmd_gen(n: usize, out: &Path) -> CliResult<String> {
    let (matrix, rhs) = fixtures::biharmonic(n)?;
    let file = PentaFile {
        matrix,
        rhs,
        backward: false,
    };
    let comment = format!("biharmonic test system, n = {n}, exact solution all ones");
    std::fs::write(out, write_penta(&file, &[&comment]))
        .map_err(|e| CliError::Io(out.to_owned(), e))?;
    Ok(format!("wrote {}\n", out.display()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub algorithm: String,
    /// Max-norm distance from the all-ones solution.
    pub max_error: f64,
    /// Best wall time over the repeats.
    pub seconds: f64,
    pub ops: u64,
    /// `None` on success, otherwise why the row failed.
    pub failure: Option<String>,
}

pub fn bench(sizes: &[usize], algs: &[AlgChoice], repeat: usize) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for &n in sizes {
        for &alg in algs {
            let failed = |why: String| BenchRow {
                n,
                algorithm: alg.label(),
                max_error: f64::NAN,
                seconds: f64::NAN,
                ops: 0,
                failure: Some(why),
            };
            let (p, y) = match fixtures::biharmonic(n) {
                Ok(s) => s,
                Err(e) => {
                    rows.push(failed(e.to_string()));
                    continue;
                }
            };
            let mut best = Duration::MAX;
            let mut last = None;
            for _ in 0..repeat {
                let t = Instant::now();
                let r = match alg.algorithm() {
                    Some(a) => solve(&p, &y, a),
                    None => penta_core::solve_auto(&p, &y),
                };
                best = best.min(t.elapsed());
                last = Some(r);
            }
            rows.push(match last.expect("repeat >= 1") {
                Ok(r) => BenchRow {
                    n,
                    algorithm: r.algorithm.to_string(),
                    max_error: r.solution.iter().fold(0.0, |m, v| m.max((v - 1.0).abs())),
                    seconds: best.as_secs_f64(),
                    ops: r.op_count,
                    failure: None,
                },
                Err(e) => failed(e.to_string()),
            });
        }
    }
    rows
}

pub fn bench_table(rows: &[BenchRow]) -> String {
    let mut out = format!("{:>9}  {:<10} {:>12} {:>12} {:>12}\n", "n", "algorithm", "max_error", "seconds", "ops");
    for r in rows {
        match &r.failure {
            None => {
                let _ = writeln!(
                    out,
                    "{:>9}  {:<10} {:>12.4e} {:>12.6} {:>12}",
                    r.n, r.algorithm, r.max_error, r.seconds, r.ops
                );
            }
            Some(why) => {
                let _ = writeln!(out, "{:>9}  {:<10} FAILED: {why}", r.n, r.algorithm);
            }
        }
    }
    out
}

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n,algorithm,max_error,seconds,ops,status\n");
    for r in rows {
        let status = r.failure.as_deref().map_or("ok".to_string(), |w| format!("\"FAILED: {}\"", w.replace('"', "'")));
        let _ = writeln!(
            out,
            "{},{},{},{},{},{status}",
            r.n,
            r.algorithm,
            join_floats(&[r.max_error]),
            join_floats(&[r.seconds]),
            r.ops
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bench_marks_failed_rows_and_continues() {
        let rows = bench(&[5, 64], &[AlgChoice::Ptrans2], 1);
        assert_eq!(rows.len(), 2);
        assert!(rows[0].failure.is_some());
        assert_eq!(rows[1].failure, None);
        assert_eq!(rows[1].ops, 19 * 64 - 29);
        assert!(bench_table(&rows).contains("FAILED"));
        assert!(bench_csv(&rows).lines().nth(2).unwrap().ends_with(",ok"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Core(PentaError::SingularMatrix).exit_code(), exit::SINGULAR);
        assert_eq!(CliError::Core(PentaError::ZeroPivot { index: 2 }).exit_code(), exit::ZERO_PIVOT);
        let parse = PentaError::Parse { line: 1, message: String::new() };
        assert_eq!(CliError::Core(parse).exit_code(), exit::PARSE);
    }
}
