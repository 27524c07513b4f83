//! Arbitrary-precision binary floating point.
//!
//! [`BigFloat`] wraps a binary float whose mantissa length is chosen per
//! value; every derived value reports the precision it was computed at.
//! [`FloatCtx`] bundles a working precision with a cache of computed
//! constants (pi in particular) and performs all arithmetic at that
//! precision with round-to-even.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use astro_float::{Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_bigint::Sign as IntSign;
use num_traits::Zero;

use super::Rational;

/// Smallest supported working precision in bits.
pub const MIN_PRECISION: usize = 64;

const RM: RoundingMode = RoundingMode::ToEven;

/// An arbitrary-precision binary float value.
///
/// The mantissa bit length is fixed at construction time by the
/// [`FloatCtx`] that produced the value and can be queried with
/// [`BigFloat::precision`]. Values are immutable.
#[derive(Clone, Debug, PartialEq)]
pub struct BigFloat(astro_float::BigFloat);

impl BigFloat {
    /// Precision in bits this value was computed at.
    pub fn precision(&self) -> usize {
        self.0.mantissa_max_bit_len().unwrap_or(0)
    }

    /// Binary exponent e with the mantissa normalized to [0.5, 1),
    /// i.e. |self| in [2^(e-1), 2^e). `None` for NaN/Inf.
    pub fn exponent(&self) -> Option<i32> {
        if self.0.is_nan() || self.0.is_inf() {
            None
        } else {
            self.0.exponent()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }

    pub fn abs(&self) -> BigFloat {
        BigFloat(self.0.abs())
    }

    pub fn neg(&self) -> BigFloat {
        BigFloat(self.0.neg())
    }

    /// Access to the raw backing value.
    pub fn inner(&self) -> &astro_float::BigFloat {
        &self.0
    }

    /// Decimal rendering at full stored precision (scientific form).
    pub fn to_decimal_string(&self) -> String {
        format!("{}", self.0)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

/// Arithmetic context: a working precision plus a constants cache.
///
/// All operations round to the context precision with round-to-even.
/// The cache is interior-mutable, so a context is cheap to share within a
/// thread; build one context per thread for concurrent work.
pub struct FloatCtx {
    precision: usize,
    consts: RefCell<Consts>,
}

impl FloatCtx {
    /// Context at `precision` bits. Precision below [`MIN_PRECISION`] is
    /// rejected.
    pub fn new(precision: usize) -> FloatCtx {
        assert!(
            precision >= MIN_PRECISION,
            "precision must be at least {MIN_PRECISION} bits, got {precision}"
        );
        FloatCtx {
            precision,
            consts: RefCell::new(Consts::new().expect("constants cache allocation")),
        }
    }

    /// Context at `precision` plus `guard` extra bits, for intermediate
    /// work that is rounded down afterwards.
    pub fn guarded(precision: usize, guard: usize) -> FloatCtx {
        FloatCtx::new(precision + guard)
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    // ---- Constructors ----

    pub fn zero(&self) -> BigFloat {
        BigFloat(astro_float::BigFloat::from_u64(0, self.precision))
    }

    pub fn one(&self) -> BigFloat {
        BigFloat(astro_float::BigFloat::from_u64(1, self.precision))
    }

    pub fn from_u64(&self, v: u64) -> BigFloat {
        BigFloat(astro_float::BigFloat::from_u64(v, self.precision))
    }

    pub fn from_i64(&self, v: i64) -> BigFloat {
        BigFloat(astro_float::BigFloat::from_i64(v, self.precision))
    }

    pub fn from_f64(&self, v: f64) -> BigFloat {
        BigFloat(astro_float::BigFloat::from_f64(v, self.precision))
    }

    /// Exact conversion of an [`ExactInt`], then one rounding to the
    /// context precision.
    pub fn from_bigint(&self, v: &BigInt) -> BigFloat {
        let (sign, digits) = v.to_u64_digits();
        if digits.is_empty() {
            return self.zero();
        }
        // Assemble limbs most-significant first; the working precision
        // covers every bit, so each step is exact.
        let full = 64 * (digits.len() + 1);
        let shift = {
            let mut two64 = astro_float::BigFloat::from_u64(1, full);
            two64.set_exponent(65);
            two64
        };
        let mut acc = astro_float::BigFloat::from_u64(0, full);
        for d in digits.iter().rev() {
            acc = acc.mul(&shift, full, RM);
            acc = acc.add(&astro_float::BigFloat::from_u64(*d, full), full, RM);
        }
        if sign == IntSign::Minus {
            acc = acc.neg();
        }
        acc.set_precision(self.precision, RM)
            .expect("rounding to context precision");
        BigFloat(acc)
    }

    /// Rounds `p/q` to the context precision: both parts convert exactly,
    /// then a single division rounds.
    pub fn from_rational(&self, v: &Rational) -> BigFloat {
        if v.numer().is_zero() {
            return self.zero();
        }
        let numer_bits = v.numer().bits() as usize + 64;
        let denom_bits = v.denom().bits() as usize + 64;
        let wide = FloatCtx::new(numer_bits.max(denom_bits).max(self.precision));
        let n = wide.from_bigint(v.numer());
        let d = wide.from_bigint(v.denom());
        BigFloat(n.0.div(&d.0, self.precision, RM))
    }

    /// Parses a decimal literal such as `-1.25e-3`.
    pub fn parse(&self, s: &str) -> Option<BigFloat> {
        let mut cc = self.consts.borrow_mut();
        let v = astro_float::BigFloat::parse(s, Radix::Dec, self.precision, RM, &mut cc);
        if v.is_nan() {
            None
        } else {
            Some(BigFloat(v))
        }
    }

    /// Exact power of two, 2^e.
    pub fn two_pow(&self, e: i32) -> BigFloat {
        let mut v = astro_float::BigFloat::from_u64(1, self.precision);
        v.set_exponent(e + 1);
        BigFloat(v)
    }

    /// One unit in the last place of `x` at this context's precision.
    pub fn ulp(&self, x: &BigFloat) -> BigFloat {
        match x.exponent() {
            Some(e) => self.two_pow(e - self.precision as i32),
            None => self.zero(),
        }
    }

    // ---- Arithmetic ----

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        BigFloat(a.0.add(&b.0, self.precision, RM))
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        BigFloat(a.0.sub(&b.0, self.precision, RM))
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        BigFloat(a.0.mul(&b.0, self.precision, RM))
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        BigFloat(a.0.div(&b.0, self.precision, RM))
    }

    pub fn recip(&self, a: &BigFloat) -> BigFloat {
        BigFloat(a.0.reciprocal(self.precision, RM))
    }

    /// a^n for nonnegative integer n.
    pub fn powi(&self, a: &BigFloat, n: usize) -> BigFloat {
        BigFloat(a.0.powi(n, self.precision, RM))
    }

    // ---- Transcendental functions ----

    pub fn pi(&self) -> BigFloat {
        BigFloat(self.consts.borrow_mut().pi(self.precision, RM))
    }

    pub fn sin(&self, a: &BigFloat) -> BigFloat {
        BigFloat(a.0.sin(self.precision, RM, &mut self.consts.borrow_mut()))
    }

    pub fn cos(&self, a: &BigFloat) -> BigFloat {
        BigFloat(a.0.cos(self.precision, RM, &mut self.consts.borrow_mut()))
    }

    pub fn tan(&self, a: &BigFloat) -> BigFloat {
        BigFloat(a.0.tan(self.precision, RM, &mut self.consts.borrow_mut()))
    }

    pub fn sinh(&self, a: &BigFloat) -> BigFloat {
        BigFloat(a.0.sinh(self.precision, RM, &mut self.consts.borrow_mut()))
    }

    pub fn cosh(&self, a: &BigFloat) -> BigFloat {
        BigFloat(a.0.cosh(self.precision, RM, &mut self.consts.borrow_mut()))
    }

    pub fn tanh(&self, a: &BigFloat) -> BigFloat {
        BigFloat(a.0.tanh(self.precision, RM, &mut self.consts.borrow_mut()))
    }

    /// Re-rounds `x` to this context's precision.
    pub fn round_to_ctx(&self, x: &BigFloat) -> BigFloat {
        let mut v = x.0.clone();
        v.set_precision(self.precision, RM)
            .expect("rounding to context precision");
        BigFloat(v)
    }

    /// |a| < |b|.
    pub fn abs_lt(&self, a: &BigFloat, b: &BigFloat) -> bool {
        matches!(a.0.abs().partial_cmp(&b.0.abs()), Some(Ordering::Less))
    }
}
