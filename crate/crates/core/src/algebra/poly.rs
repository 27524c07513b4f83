//! Dense univariate polynomials with [`ExactInt`] coefficients.
//!
//! Coefficients are stored in ascending order of exponent: `coeffs[i]` is
//! the coefficient of x^i. The representation is canonical: the vector is
//! empty for the zero polynomial and its last element is nonzero otherwise.
//! Dense storage is a deliberate choice: the polynomial families built on
//! top of this type have roughly half their coefficients nonzero.

use num_traits::{One, Zero};

use super::{BigFloat, ExactInt, FloatCtx, Rational};

/// Guard bits carried by floating-point evaluation before the final
/// rounding; bounds Horner roundoff for degrees up to about a thousand.
const EVAL_GUARD_BITS: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<ExactInt>,
}

impl IntPolynomial {
    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial {
            coeffs: vec![ExactInt::one()],
        }
    }

    /// The indeterminate x.
    pub fn x() -> IntPolynomial {
        IntPolynomial {
            coeffs: vec![ExactInt::zero(), ExactInt::one()],
        }
    }

    pub fn constant(c: ExactInt) -> IntPolynomial {
        IntPolynomial::from_coeffs(vec![c])
    }

    /// From coefficients in ascending exponent order; trailing zeros are
    /// stripped to keep the representation canonical.
    pub fn from_coeffs(coeffs: Vec<ExactInt>) -> IntPolynomial {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| ExactInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the last nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> ExactInt {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactInt::zero)
    }

    /// Coefficients in ascending exponent order.
    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&ExactInt> {
        self.coeffs.last()
    }

    /// Nonzero terms as (exponent, coefficient) pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &ExactInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPolynomial::from_coeffs(out)
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &ExactInt) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![ExactInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    /// Formal derivative. Degree drops by exactly one for non-constant
    /// input; constants map to the zero polynomial.
    pub fn derivative(&self) -> IntPolynomial {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * ExactInt::from(i))
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Exact evaluation at a rational point by Horner's rule; the result
    /// is normalized.
    pub fn eval_exact(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from(c.clone());
        }
        acc
    }

    /// Horner evaluation carried at `precision + 32` guard bits, rounded
    /// to `precision` at the end.
    pub fn eval_float(&self, x: &BigFloat, precision: usize) -> BigFloat {
        let wide = FloatCtx::guarded(precision, EVAL_GUARD_BITS);
        let out = FloatCtx::new(precision);
        out.round_to_ctx(&self.eval_float_ctx(x, &wide))
    }

    /// Horner evaluation entirely inside the given context (no final
    /// rounding); used where the caller manages its own guard bits.
    pub fn eval_float_ctx(&self, x: &BigFloat, ctx: &FloatCtx) -> BigFloat {
        let mut acc = ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = ctx.add(&ctx.mul(&acc, x), &ctx.from_bigint(c));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(ExactInt::from(n), ExactInt::from(d))
    }

    /// Independent evaluation oracle: plain term-by-term power summation,
    /// no Horner sharing.
    fn eval_term_by_term(p: &IntPolynomial, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (k, c) in p.terms() {
            acc += Rational::from(c.clone()) * x.pow(k as i32);
        }
        acc
    }

    #[test]
    fn eval_exact_examples() {
        let p = IntPolynomial::from_i64_coeffs(&[1, 0, 1]); // x^2 + 1
        assert_eq!(p.eval_exact(&rat(0, 1)), rat(1, 1));
        assert_eq!(p.eval_exact(&rat(1, 2)), rat(5, 4));
        assert_eq!(eval_term_by_term(&p, &rat(1, 2)), rat(5, 4));

        let q = IntPolynomial::from_i64_coeffs(&[0, 2, 0, 2]); // 2x^3 + 2x
        assert_eq!(q.eval_exact(&rat(-1, 1)), rat(-4, 1));
        assert_eq!(eval_term_by_term(&q, &rat(-1, 1)), rat(-4, 1));
    }

    #[test]
    fn derivative_examples() {
        let p = IntPolynomial::from_i64_coeffs(&[1, 0, 1]);
        assert_eq!(p.derivative(), IntPolynomial::from_i64_coeffs(&[0, 2]));
        assert_eq!(IntPolynomial::constant(ExactInt::from(7)).derivative(), IntPolynomial::zero());
        let q = IntPolynomial::from_i64_coeffs(&[0, 2, 0, 2]);
        assert_eq!(q.derivative(), IntPolynomial::from_i64_coeffs(&[2, 0, 6]));
        // degree drops by exactly one
        assert_eq!(q.derivative().degree(), Some(2));
    }

    #[test]
    fn eval_float_examples() {
        let ctx = FloatCtx::new(64);
        let p = IntPolynomial::from_i64_coeffs(&[1, 0, 1]);
        assert_eq!(p.eval_float(&ctx.from_f64(0.0), 64), ctx.one());
        assert_eq!(p.eval_float(&ctx.from_f64(0.5), 64), ctx.from_f64(1.25));
        let q = IntPolynomial::from_i64_coeffs(&[0, 2, 0, 2]);
        assert_eq!(q.eval_float(&ctx.from_f64(1.0), 64), ctx.from_f64(4.0));
    }

    #[test]
    fn canonical_zero_and_degree() {
        let p = IntPolynomial::from_coeffs(vec![ExactInt::zero(), ExactInt::zero()]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        let q = IntPolynomial::from_i64_coeffs(&[3, 1, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(q.leading_coeff(), Some(&ExactInt::one()));
    }

    #[test]
    fn mul_matches_hand_expansion() {
        // (1+x)(1-x) = 1 - x^2
        let a = IntPolynomial::from_i64_coeffs(&[1, 1]);
        let b = IntPolynomial::from_i64_coeffs(&[1, -1]);
        assert_eq!(a.mul(&b), IntPolynomial::from_i64_coeffs(&[1, 0, -1]));
    }
}
