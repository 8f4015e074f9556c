//! The `PENTA v1` text format.
//!
//! ```text
//! # comment lines and trailing comments start with '#'
//! PENTA <n> [BACKWARD]
//! <d_1 ... d_n>
//! <a_1 ... a_n>      a_n = 0
//! <b_1 ... b_n>      b_{n-1} = b_n = 0
//! <c_1 ... c_n>      c_1 = 0
//! <e_1 ... e_n>      e_1 = e_2 = 0
//! <y_1 ... y_n>
//! ```
//!
//! Values are whitespace-separated decimals; every band is written full
//! length with its padding zeros. `BACKWARD` marks a backward system whose
//! bands are those of its forward companion.

use std::fmt::Write as _;

use crate::error::{PentaError, Result};
use crate::matrix::{Band, PentaMatrix};

pub const MAGIC: &str = "PENTA";
pub const BACKWARD_TOKEN: &str = "BACKWARD";

#[derive(Debug, Clone, PartialEq)]
pub struct PentaFile {
    pub matrix: PentaMatrix<f64>,
    pub rhs: Vec<f64>,
    pub backward: bool,
}

const ROW_ORDER: [Band; 5] = [Band::D, Band::A, Band::B, Band::C, Band::E];

fn parse_err(line: usize, message: impl Into<String>) -> PentaError {
    PentaError::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_penta(text: &str) -> Result<PentaFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some(MAGIC) {
        return Err(parse_err(hline, format!("expected `{MAGIC} <n>` header")));
    }
    let n: usize = tokens
        .next()
        .ok_or_else(|| parse_err(hline, "missing matrix order"))?
        .parse()
        .map_err(|e| parse_err(hline, format!("bad matrix order: {e}")))?;
    let backward = match tokens.next() {
        None => false,
        Some(BACKWARD_TOKEN) => true,
        Some(other) => return Err(parse_err(hline, format!("unexpected header token `{other}`"))),
    };
    if let Some(extra) = tokens.next() {
        return Err(parse_err(hline, format!("unexpected header token `{extra}`")));
    }

    let mut rows = Vec::with_capacity(6);
    for what in ["d", "a", "b", "c", "e", "y"] {
        let (lno, line) = lines
            .next()
            .ok_or_else(|| parse_err(hline, format!("missing `{what}` line")))?;
        let values = line
            .split_whitespace()
            .map(|t| {
                t.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| parse_err(lno, format!("`{t}` is not a finite decimal")))
            })
            .collect::<Result<Vec<f64>>>()?;
        if values.len() != n {
            return Err(parse_err(
                lno,
                format!("`{what}` has {} values, expected {n}", values.len()),
            ));
        }
        rows.push((lno, values));
    }
    if let Some((lno, _)) = lines.next() {
        return Err(parse_err(lno, "trailing data after right-hand side"));
    }

    let line_of: Vec<usize> = rows.iter().map(|(l, _)| *l).collect();
    let (_, rhs) = rows.pop().expect("six rows");
    let mut bands = rows.into_iter();
    let mut next = || bands.next().expect("five bands");
    let (_, d) = next();
    let (_, a) = next();
    let (_, b) = next();
    let (_, c) = next();
    let (_, e) = next();
    let matrix = PentaMatrix::from_bands(d, a, b, c, e).map_err(|err| match err {
        PentaError::InvalidPadding { band, index } => {
            let row = ROW_ORDER.iter().position(|b| b.name() == band).unwrap_or(0);
            parse_err(line_of[row], format!("band `{band}` needs 0 in padding slot {index}"))
        }
        other => other,
    })?;
    Ok(PentaFile {
        matrix,
        rhs,
        backward,
    })
}

/// Serializes in the canonical layout, floats at 17 significant digits.
pub fn write_penta(file: &PentaFile, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let n = file.matrix.order();
    let _ = write!(out, "{MAGIC} {n}");
    if file.backward {
        let _ = write!(out, " {BACKWARD_TOKEN}");
    }
    out.push('\n');
    for band in ROW_ORDER {
        out.push_str(&join_floats(file.matrix.band(band)));
        out.push('\n');
    }
    out.push_str(&join_floats(&file.rhs));
    out.push('\n');
    out
}

pub fn join_floats(values: &[f64]) -> String {
    values.iter().map(|&v| format_float(v)).collect::<Vec<_>>().join(" ")
}

/// Formats like C's `%.17g`: 17 significant digits, trailing zeros removed.
pub fn format_float(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if !(-5..17).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    let decimals = (16 - exp).max(0) as usize;
    trim_zeros(&format!("{v:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const EXAMPLE_4_2: &str = "\
# 4x4 system, solution ones
PENTA 4
3 -2 -1 3
2 7 5 0
1 1 0 0
0 -3 2 2   # c_1 padding
0 0 3 1
6 3 9 6
";

    #[test]
    fn parses_example() {
        let f = parse_penta(EXAMPLE_4_2).unwrap();
        let (p, y) = fixtures::example_4_2();
        assert_eq!(f.matrix, p);
        assert_eq!(f.rhs, y);
        assert!(!f.backward);
    }

    #[test]
    fn round_trip_preserves_values() {
        let (matrix, rhs) = fixtures::example_4_1();
        let file = PentaFile {
            matrix,
            rhs,
            backward: true,
        };
        let text = write_penta(&file, &["ten by ten"]);
        assert!(text.starts_with("# ten by ten\nPENTA 10 BACKWARD\n"));
        assert_eq!(parse_penta(&text).unwrap(), file);
    }

    #[test]
    fn rejects_bad_inputs() {
        let bad_header = EXAMPLE_4_2.replace("PENTA 4", "PENTA x");
        assert!(matches!(parse_penta(&bad_header), Err(PentaError::Parse { line: 2, .. })));
        let short = EXAMPLE_4_2.replace("6 3 9 6", "6 3 9");
        assert!(matches!(parse_penta(&short), Err(PentaError::Parse { line: 8, .. })));
        let padding = EXAMPLE_4_2.replace("0 0 3 1", "0 1 3 1");
        assert!(matches!(parse_penta(&padding), Err(PentaError::Parse { line: 7, .. })));
        let word = EXAMPLE_4_2.replace("2 7 5 0", "2 seven 5 0");
        assert!(matches!(parse_penta(&word), Err(PentaError::Parse { line: 4, .. })));
        assert!(parse_penta("").is_err());
        assert!(parse_penta(&format!("{EXAMPLE_4_2}1 2 3 4\n")).is_err());
        let small = "PENTA 3\n1 1 1\n0 0 0\n0 0 0\n0 0 0\n0 0 0\n1 1 1\n";
        assert_eq!(parse_penta(small).unwrap_err(), PentaError::InvalidOrder(3, 4));
    }

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(format_float(1.0), "1");
        assert_eq!(format_float(-126.0), "-126");
        assert_eq!(format_float(0.1), "0.10000000000000001");
        assert_eq!(format_float(7.999999999999993), "7.9999999999999929");
        assert_eq!(format_float(1.5856e-7), "1.5856000000000001e-07");
        assert_eq!(format_float(1e20), "1e+20");
        assert_eq!(format_float(1061233.0), "1061233");
        for v in [0.1, 1.0 / 3.0, -2.5e-300, 6.02e23, 1061233.6614640893] {
            assert_eq!(format_float(v).parse::<f64>().unwrap(), v);
        }
    }
}
