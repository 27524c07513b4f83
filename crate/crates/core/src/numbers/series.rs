//! Exact power-series realization of the generating functions behind the
//! triangles: Maclaurin coefficients of tan^k(t) and sec(t)tan^k(t),
//! computed over rationals with no floating shortcut.
//!
//! sin and cos come from their factorial formulas, tan from series
//! division, powers from repeated series multiplication. This route is
//! deliberately independent of the triangle recurrences so that agreement
//! between the two is meaningful evidence.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{factorial, ExactInt, Rational};

/// Which generating-function family a series realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EgfFamily {
    /// tan^k(t), defined for order k >= 1.
    TanPower,
    /// sec(t) tan^k(t), defined for order k >= 0.
    SecTanPower,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumbersError {
    #[error("family {family:?} requires order k >= {min}, got {k}")]
    InvalidOrder {
        family: EgfFamily,
        min: usize,
        k: usize,
    },
    #[error("truncation order {n_max} is below the series order {k} (all kept terms would vanish)")]
    TruncationBelowOrder { k: usize, n_max: usize },
}

/// Maclaurin coefficients of a series; entry n is the coefficient of t^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCoefficients {
    coeffs: Vec<Rational>,
}

impl SeriesCoefficients {
    fn new(coeffs: Vec<Rational>) -> SeriesCoefficients {
        SeriesCoefficients { coeffs }
    }

    /// Number of stored coefficients, n_max + 1.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of t^n.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// n! times the coefficient of t^n, when that value is an integer
    /// (it always is for the families built here); `None` otherwise.
    pub fn factorial_scaled(&self, n: usize) -> Option<ExactInt> {
        let scaled = self.coeffs[n].clone() * Rational::from(factorial(n));
        if scaled.is_integer() {
            Some(scaled.to_integer())
        } else {
            None
        }
    }
}

fn series_one(n_max: usize) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); n_max + 1];
    c[0] = Rational::one();
    c
}

fn sin_series(n_max: usize) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); n_max + 1];
    for n in (1..=n_max).step_by(2) {
        let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
        c[n] = Rational::new(ExactInt::from(sign), factorial(n));
    }
    c
}

fn cos_series(n_max: usize) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); n_max + 1];
    for n in (0..=n_max).step_by(2) {
        let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
        c[n] = Rational::new(ExactInt::from(sign), factorial(n));
    }
    c
}

fn series_mul(a: &[Rational], b: &[Rational], n_max: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n_max + 1];
    for (i, ai) in a.iter().enumerate().take(n_max + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n_max + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Power-series division num/den, requiring den[0] != 0.
fn series_div(num: &[Rational], den: &[Rational], n_max: usize) -> Vec<Rational> {
    assert!(!den[0].is_zero(), "series division by a series with zero constant term");
    let mut q = vec![Rational::zero(); n_max + 1];
    for n in 0..=n_max {
        let mut acc = num.get(n).cloned().unwrap_or_else(Rational::zero);
        for j in 1..=n {
            if !den[j].is_zero() && !q[n - j].is_zero() {
                acc -= &den[j] * &q[n - j];
            }
        }
        q[n] = acc / &den[0];
    }
    q
}

fn tan_series(n_max: usize) -> Vec<Rational> {
    series_div(&sin_series(n_max), &cos_series(n_max), n_max)
}

fn check_preconditions(family: EgfFamily, k: usize, n_max: usize) -> Result<(), NumbersError> {
    if family == EgfFamily::TanPower && k == 0 {
        return Err(NumbersError::InvalidOrder { family, min: 1, k });
    }
    if n_max < k {
        return Err(NumbersError::TruncationBelowOrder { k, n_max });
    }
    Ok(())
}

/// Maclaurin coefficients of tan^k(t) or sec(t)tan^k(t), truncated at
/// t^n_max. n! times entry n reproduces the corresponding triangle entry.
pub fn egf_coefficients(
    family: EgfFamily,
    k: usize,
    n_max: usize,
) -> Result<SeriesCoefficients, NumbersError> {
    check_preconditions(family, k, n_max)?;
    let tan = tan_series(n_max);
    let mut acc = match family {
        EgfFamily::TanPower => series_one(n_max),
        EgfFamily::SecTanPower => series_div(&series_one(n_max), &cos_series(n_max), n_max),
    };
    for _ in 0..k {
        acc = series_mul(&acc, &tan, n_max);
    }
    Ok(SeriesCoefficients::new(acc))
}

/// All series of a family for orders 0..=k_max at once, sharing the
/// incremental tan powers. Entry k of the result is the order-k series
/// (for `TanPower`, entry 0 is the constant series tan^0 = 1).
pub fn egf_table(
    family: EgfFamily,
    k_max: usize,
    n_max: usize,
) -> Result<Vec<SeriesCoefficients>, NumbersError> {
    if n_max < k_max {
        return Err(NumbersError::TruncationBelowOrder { k: k_max, n_max });
    }
    let tan = tan_series(n_max);
    let base = match family {
        EgfFamily::TanPower => series_one(n_max),
        EgfFamily::SecTanPower => series_div(&series_one(n_max), &cos_series(n_max), n_max),
    };
    let mut out = Vec::with_capacity(k_max + 1);
    let mut acc = base;
    out.push(SeriesCoefficients::new(acc.clone()));
    for _ in 1..=k_max {
        acc = series_mul(&acc, &tan, n_max);
        out.push(SeriesCoefficients::new(acc.clone()));
    }
    Ok(out)
}
