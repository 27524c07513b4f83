//! Serialization of polynomials: JSON (coefficients as decimal strings,
//! ascending), CSV rows, and a LaTeX-style rendering in descending powers
//! with explicit signs. The LaTeX form is parseable and the pair
//! round-trips exactly.

use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::algebra::{ExactInt, IntPolynomial};

use super::{PolyError, PolyFamily};

pub fn poly_to_json(family: PolyFamily, n: usize, poly: &IntPolynomial) -> Value {
    let coefficients: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
    json!({
        "family": family.name(),
        "n": n,
        "coefficients": coefficients,
    })
}

/// Rows `family,n,k,coefficient`, exponent-ascending, zero terms omitted.
pub fn poly_to_csv(family: PolyFamily, n: usize, poly: &IntPolynomial) -> String {
    let mut out = String::from("family,n,k,coefficient\n");
    for (k, c) in poly.terms() {
        let _ = writeln!(out, "{},{},{},{}", family.name(), n, k, c);
    }
    out
}

fn push_power(out: &mut String, exp: usize) {
    if exp == 0 {
        return;
    }
    out.push('x');
    if exp == 1 {
        return;
    }
    if exp < 10 {
        let _ = write!(out, "^{}", exp);
    } else {
        let _ = write!(out, "^{{{}}}", exp);
    }
}

/// Descending powers with explicit signs, e.g.
/// `720 x^6 + 1320 x^4 + 662 x^2 + 61`. Unit coefficients are elided on
/// powers of x; exponents of ten or more are braced.
pub fn poly_to_latex(poly: &IntPolynomial) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let terms: Vec<(usize, &ExactInt)> = poly.terms().collect();
    for (i, (exp, coeff)) in terms.iter().rev().enumerate() {
        let magnitude = coeff.abs();
        if i == 0 {
            if coeff.is_negative() {
                out.push('-');
            }
        } else if coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if *exp == 0 || !magnitude.is_one() {
            let _ = write!(out, "{}", magnitude);
            if *exp > 0 {
                out.push(' ');
            }
        }
        push_power(&mut out, *exp);
    }
    out
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            Some(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
        }
    }

    fn exponent(&mut self) -> Result<usize, PolyError> {
        let braced = self.peek() == Some(b'{');
        if braced {
            self.bump();
        }
        let digits = self
            .digits()
            .ok_or_else(|| PolyError::Parse("exponent digits expected after ^".into()))?;
        let exp: usize = digits
            .parse()
            .map_err(|_| PolyError::Parse(format!("exponent {} out of range", digits)))?;
        if braced && self.bump() != Some(b'}') {
            return Err(PolyError::Parse("unclosed { in exponent".into()));
        }
        Ok(exp)
    }
}

/// Inverse of [`poly_to_latex`]. Accepts any order of terms and repeated
/// exponents (coefficients accumulate), so every rendered polynomial and
/// reasonable hand-written variants parse.
pub fn poly_from_latex(input: &str) -> Result<IntPolynomial, PolyError> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(PolyError::Parse("empty input".into()));
    }
    let mut p = Parser {
        bytes: compact.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(usize, ExactInt)> = Vec::new();
    loop {
        let mut negative = false;
        match p.peek() {
            Some(b'-') => {
                negative = true;
                p.bump();
            }
            Some(b'+') => {
                p.bump();
            }
            _ => {}
        }
        let digits = p.digits();
        let has_x = p.peek() == Some(b'x');
        if has_x {
            p.bump();
        }
        if digits.is_none() && !has_x {
            return Err(PolyError::Parse(format!(
                "expected a term at offset {}",
                p.pos
            )));
        }
        let mut coeff = match digits {
            Some(d) => d
                .parse::<ExactInt>()
                .expect("digit run parses as an integer"),
            None => ExactInt::one(),
        };
        if negative {
            coeff = -coeff;
        }
        let exp = if has_x {
            if p.peek() == Some(b'^') {
                p.bump();
                p.exponent()?
            } else {
                1
            }
        } else {
            0
        };
        terms.push((exp, coeff));
        match p.peek() {
            None => break,
            Some(b'+') | Some(b'-') => {}
            Some(other) => {
                return Err(PolyError::Parse(format!(
                    "unexpected character `{}` at offset {}",
                    other as char, p.pos
                )))
            }
        }
    }
    let max_exp = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
    let mut coeffs = vec![ExactInt::zero(); max_exp + 1];
    for (e, c) in terms {
        coeffs[e] += c;
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}
