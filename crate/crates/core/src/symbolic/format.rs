//! Text rendering of rational functions.
//!
//! Grammar (stable; fixture tests depend on it):
//!
//! ```text
//! ratfun  := poly | numer "/" denom
//! numer   := poly            (single term)
//!          | "(" poly ")"    (two or more terms)
//! denom   := integer | "p" | "p^" k
//!          | "(" poly ")"    (anything else)
//! poly    := ["-"] term { (" + " | " - ") term }
//! term    := integer | [integer "*"] "p" ["^" k]
//! ```
//!
//! Before rendering, numerator and denominator are multiplied by a common
//! rational so that all coefficients are integers with no common divisor and
//! the denominator's leading coefficient is positive. Terms appear in
//! descending powers, a unit coefficient in front of `p` is omitted, and a
//! denominator equal to 1 is dropped.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ratfun::RationalFunction;

pub fn format_ratfun(f: &RationalFunction) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let (num_content, num) = f.numer().primitive_part();
    let (den_content, den) = f.denom().primitive_part();
    // f = (num_content / den_content) * num / den
    let ratio = num_content / den_content;
    let (rn, rd) = (ratio.numer().clone(), ratio.denom().clone());
    let num: Vec<BigInt> = num.iter().map(|c| c * &rn).collect();
    let den: Vec<BigInt> = den.iter().map(|c| c * &rd).collect();
    debug_assert!(den.last().is_some_and(Signed::is_positive));
    let g = num.iter().chain(&den).fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let num: Vec<BigInt> = num.iter().map(|c| c / &g).collect();
    let den: Vec<BigInt> = den.iter().map(|c| c / &g).collect();

    if den.len() == 1 && den[0].is_one() {
        return render_poly(&num);
    }
    let numer = if term_count(&num) > 1 {
        format!("({})", render_poly(&num))
    } else {
        render_poly(&num)
    };
    let denom = if term_count(&den) > 1 || !(den.len() == 1 || den.last().is_some_and(One::is_one)) {
        format!("({})", render_poly(&den))
    } else {
        render_poly(&den)
    };
    format!("{numer}/{denom}")
}

fn term_count(coeffs: &[BigInt]) -> usize {
    coeffs.iter().filter(|c| !c.is_zero()).count()
}

fn render_poly(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        match k {
            0 => out.push_str(&mag.to_string()),
            _ => {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push('p');
                if k > 1 {
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
