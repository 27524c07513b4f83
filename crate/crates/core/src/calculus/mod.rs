//! Closed-form n-th derivatives of tan, sec, cot, csc and their
//! hyperbolic analogs. Every kind reduces to one polynomial family
//! evaluated at a substitution value (tan x, cot x, tanh x or coth x),
//! an optional alternating sign, and a structural prefactor.
//!
//! Two independent cross-checks live alongside the evaluator: a series
//! oracle built from the addition formulas ([`taylor_addition_oracle`])
//! and the Stirling-number closed form for cotangent
//! ([`adamchik_cot_closed_form`]).

mod adamchik;
mod oracle;

pub use adamchik::{adamchik_cot_closed_form, adamchik_cot_closed_form_with};
pub use oracle::taylor_addition_oracle;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{BigFloat, ExactInt, FloatCtx, Rational, MIN_PRECISION};
use crate::polys::{DerivPolyCache, PolyFamily};

/// Guard bits added to the requested precision for numeric evaluation.
pub const NUMERIC_GUARD_BITS: usize = 32;

/// Numeric mode rejects |x| above this power of two; single-step argument
/// reduction does not reach further out.
pub const ARGUMENT_CAP_LOG2: i32 = 20;

/// One of the eight supported functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DerivKind {
    Tan,
    Sec,
    Cot,
    Csc,
    Tanh,
    Sech,
    Coth,
    Csch,
}

impl DerivKind {
    pub const ALL: [DerivKind; 8] = [
        DerivKind::Tan,
        DerivKind::Sec,
        DerivKind::Cot,
        DerivKind::Csc,
        DerivKind::Tanh,
        DerivKind::Sech,
        DerivKind::Coth,
        DerivKind::Csch,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            DerivKind::Tan => "tan",
            DerivKind::Sec => "sec",
            DerivKind::Cot => "cot",
            DerivKind::Csc => "csc",
            DerivKind::Tanh => "tanh",
            DerivKind::Sech => "sech",
            DerivKind::Coth => "coth",
            DerivKind::Csch => "csch",
        }
    }

    /// The polynomial family the n-th derivative evaluates.
    pub fn family(&self) -> PolyFamily {
        match self {
            DerivKind::Tan | DerivKind::Cot => PolyFamily::P,
            DerivKind::Sec | DerivKind::Csc => PolyFamily::Q,
            DerivKind::Tanh | DerivKind::Coth => PolyFamily::HyperP,
            DerivKind::Sech | DerivKind::Csch => PolyFamily::HyperQ,
        }
    }

    /// Cot and csc alternate sign with the derivative order.
    pub fn sign_alternates(&self) -> bool {
        matches!(self, DerivKind::Cot | DerivKind::Csc)
    }

    /// +1 or -1 applied to the n-th derivative.
    pub fn sign(&self, n: usize) -> i64 {
        if self.sign_alternates() && n % 2 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn prefactor(&self) -> Prefactor {
        match self {
            DerivKind::Sec => Prefactor::Sec,
            DerivKind::Csc => Prefactor::Csc,
            DerivKind::Sech => Prefactor::Sech,
            DerivKind::Csch => Prefactor::Csch,
            _ => Prefactor::One,
        }
    }

    pub fn is_trig(&self) -> bool {
        matches!(
            self,
            DerivKind::Tan | DerivKind::Sec | DerivKind::Cot | DerivKind::Csc
        )
    }

    /// Name of the exact substitution variable u.
    pub fn substitution_name(&self) -> &'static str {
        match self {
            DerivKind::Tan | DerivKind::Sec => "tan x",
            DerivKind::Cot | DerivKind::Csc => "cot x",
            DerivKind::Tanh | DerivKind::Sech => "tanh x",
            DerivKind::Coth | DerivKind::Csch => "coth x",
        }
    }

    /// Kinds whose substitution is the reciprocal one (cot-like).
    fn reciprocal_substitution(&self) -> bool {
        matches!(
            self,
            DerivKind::Cot | DerivKind::Csc | DerivKind::Coth | DerivKind::Csch
        )
    }
}

impl fmt::Display for DerivKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DerivKind {
    type Err = String;

    fn from_str(s: &str) -> Result<DerivKind, String> {
        DerivKind::ALL
            .iter()
            .find(|k| k.name() == s.to_ascii_lowercase())
            .copied()
            .ok_or_else(|| format!("unknown function kind `{}`", s))
    }
}

/// Structural factor multiplying the polynomial part of a derivative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prefactor {
    One,
    Sec,
    Csc,
    Sech,
    Csch,
}

impl Prefactor {
    pub fn name(&self) -> &'static str {
        match self {
            Prefactor::One => "1",
            Prefactor::Sec => "sec",
            Prefactor::Csc => "csc",
            Prefactor::Sech => "sech",
            Prefactor::Csch => "csch",
        }
    }
}

impl fmt::Display for Prefactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of exact-mode evaluation: the derivative equals
/// `coefficient` times the prefactor function at the same point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactDerivative {
    pub coefficient: Rational,
    pub prefactor: Prefactor,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CalcError {
    #[error("{kind} is within tolerance of a pole (|{denom}(x)| < 2^-{bits})")]
    Pole {
        kind: DerivKind,
        denom: &'static str,
        bits: u32,
    },
    #[error("|x| exceeds 2^{ARGUMENT_CAP_LOG2}, the numeric-mode argument cap")]
    ArgumentTooLarge { kind: DerivKind },
    #[error(
        "series for {kind} at this point would lose about {lost} bits to cancellation \
         (allowance {cap}); move away from the pole or lower n_max"
    )]
    Divergence {
        kind: DerivKind,
        lost: usize,
        cap: usize,
    },
    #[error("cotangent closed form produced nonzero imaginary part {imag}; this is a bug")]
    NonRealResult { imag: ExactInt },
}

/// n-th derivative at a point where the substitution variable has the
/// exact value `u`. The caller supplies u (for example u = 1 stands for
/// x = pi/4 under tan); poles are the caller's concern here.
pub fn nth_derivative_exact(
    kind: DerivKind,
    n: usize,
    u: &Rational,
    cache: &DerivPolyCache,
) -> ExactDerivative {
    let poly = cache.get(kind.family(), n);
    let mut coefficient = poly.eval_exact(u);
    if kind.sign(n) < 0 {
        coefficient = -coefficient;
    }
    ExactDerivative {
        coefficient,
        prefactor: kind.prefactor(),
    }
}

/// sin/cos of x (trig kinds) or sinh/cosh of x (hyperbolic kinds) at the
/// context's precision, after the argument cap and pole checks. The pole
/// tolerance is 2^-(precision/2) on the denominator the kind divides by.
pub(crate) struct RawParts {
    /// sin x or sinh x.
    pub a: BigFloat,
    /// cos x or cosh x.
    pub b: BigFloat,
}

pub(crate) fn raw_parts(
    kind: DerivKind,
    x: &BigFloat,
    precision: usize,
    work: &FloatCtx,
) -> Result<RawParts, CalcError> {
    let cap = work.two_pow(ARGUMENT_CAP_LOG2);
    if work.abs_lt(&cap, x) {
        return Err(CalcError::ArgumentTooLarge { kind });
    }
    let (a, b) = if kind.is_trig() {
        (work.sin(x), work.cos(x))
    } else {
        (work.sinh(x), work.cosh(x))
    };
    let pole_denom = match kind {
        DerivKind::Tan | DerivKind::Sec => Some((&b, "cos")),
        DerivKind::Cot | DerivKind::Csc => Some((&a, "sin")),
        DerivKind::Coth | DerivKind::Csch => Some((&a, "sinh")),
        DerivKind::Tanh | DerivKind::Sech => None,
    };
    if let Some((denom, name)) = pole_denom {
        let bits = (precision / 2) as u32;
        let tol = work.two_pow(-(bits as i32));
        if work.abs_lt(denom, &tol) {
            return Err(CalcError::Pole {
                kind,
                denom: name,
                bits,
            });
        }
    }
    Ok(RawParts { a, b })
}

/// Numeric evaluation split into its two factors: the signed polynomial
/// value at the substitution point and the prefactor's value at x.
/// `value` is their product, formed at working precision before the final
/// rounding, so it is not bit-identical to the product of the rounded parts.
pub struct NumericParts {
    pub coefficient: BigFloat,
    pub prefactor: BigFloat,
    pub value: BigFloat,
}

/// n-th derivative at the point x, computed with `NUMERIC_GUARD_BITS`
/// extra working bits; all three returned fields are rounded to `precision`.
pub fn nth_derivative_numeric_parts(
    kind: DerivKind,
    n: usize,
    x: &BigFloat,
    precision: usize,
    cache: &DerivPolyCache,
) -> Result<NumericParts, CalcError> {
    assert!(precision >= MIN_PRECISION, "precision below {}", MIN_PRECISION);
    let work = FloatCtx::guarded(precision, NUMERIC_GUARD_BITS);
    let parts = raw_parts(kind, x, precision, &work)?;
    let u = if kind.reciprocal_substitution() {
        work.div(&parts.b, &parts.a)
    } else {
        work.div(&parts.a, &parts.b)
    };
    let poly = cache.get(kind.family(), n);
    let mut coefficient = poly.eval_float_ctx(&u, &work);
    if kind.sign(n) < 0 {
        coefficient = coefficient.neg();
    }
    let prefactor = match kind.prefactor() {
        Prefactor::One => work.one(),
        Prefactor::Sec | Prefactor::Sech => work.recip(&parts.b),
        Prefactor::Csc | Prefactor::Csch => work.recip(&parts.a),
    };
    let value = work.mul(&coefficient, &prefactor);
    let out = FloatCtx::new(precision);
    Ok(NumericParts {
        coefficient: out.round_to_ctx(&coefficient),
        prefactor: out.round_to_ctx(&prefactor),
        value: out.round_to_ctx(&value),
    })
}

/// n-th derivative at the point x, rounded to `precision`.
pub fn nth_derivative_numeric(
    kind: DerivKind,
    n: usize,
    x: &BigFloat,
    precision: usize,
    cache: &DerivPolyCache,
) -> Result<BigFloat, CalcError> {
    nth_derivative_numeric_parts(kind, n, x, precision, cache).map(|p| p.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(ExactInt::from(n), ExactInt::from(d))
    }

    #[test]
    fn exact_mode_examples() {
        let cache = DerivPolyCache::new();
        let d = nth_derivative_exact(DerivKind::Sec, 2, &rat(0, 1), &cache);
        assert_eq!(d.coefficient, rat(1, 1));
        assert_eq!(d.prefactor, Prefactor::Sec);

        let d = nth_derivative_exact(DerivKind::Cot, 1, &rat(1, 1), &cache);
        assert_eq!(d.coefficient, rat(-2, 1));
        assert_eq!(d.prefactor, Prefactor::One);

        let d = nth_derivative_exact(DerivKind::Csch, 0, &rat(5, 1), &cache);
        assert_eq!(d.coefficient, rat(1, 1));
        assert_eq!(d.prefactor, Prefactor::Csch);
    }

    #[test]
    fn cot_is_signed_tan_polynomial() {
        let cache = DerivPolyCache::new();
        for n in 0..=12 {
            for u in [rat(0, 1), rat(1, 1), rat(-3, 2), rat(7, 5)] {
                let tan = nth_derivative_exact(DerivKind::Tan, n, &u, &cache);
                let cot = nth_derivative_exact(DerivKind::Cot, n, &u, &cache);
                let expect = if n % 2 == 1 {
                    -tan.coefficient.clone()
                } else {
                    tan.coefficient.clone()
                };
                assert_eq!(cot.coefficient, expect, "n = {}", n);
            }
        }
    }

    #[test]
    fn numeric_mode_examples() {
        let cache = DerivPolyCache::new();
        let ctx = FloatCtx::new(256);

        let d = nth_derivative_numeric(DerivKind::Tan, 1, &ctx.zero(), 256, &cache).unwrap();
        let err = ctx.sub(&d, &ctx.one());
        assert!(ctx.abs_lt(&err, &ctx.two_pow(-248)));

        let d = nth_derivative_numeric(DerivKind::Tanh, 2, &ctx.zero(), 256, &cache).unwrap();
        assert!(d.is_zero());

        let half_pi = ctx.div(&ctx.pi(), &ctx.from_u64(2));
        let d = nth_derivative_numeric(DerivKind::Cot, 2, &half_pi, 256, &cache).unwrap();
        assert!(ctx.abs_lt(&d, &ctx.two_pow(-248)));
    }

    #[test]
    fn numeric_mode_agrees_with_exact_at_nice_points() {
        // x = pi/4: tan x = 1 exactly.
        let cache = DerivPolyCache::new();
        let ctx = FloatCtx::new(256);
        let quarter_pi = ctx.div(&ctx.pi(), &ctx.from_u64(4));
        for n in 0..=6 {
            let numeric =
                nth_derivative_numeric(DerivKind::Tan, n, &quarter_pi, 256, &cache).unwrap();
            let exact = nth_derivative_exact(DerivKind::Tan, n, &rat(1, 1), &cache);
            let expect = ctx.from_rational(&exact.coefficient);
            let err = ctx.sub(&numeric, &expect);
            let bound = ctx.mul(&ctx.two_pow(-240), &expect.abs());
            assert!(
                ctx.abs_lt(&err, &bound) || err.is_zero(),
                "n = {}: {} vs {}",
                n,
                numeric,
                expect
            );
        }
    }

    #[test]
    fn poles_are_rejected() {
        let cache = DerivPolyCache::new();
        let ctx = FloatCtx::new(256);
        let half_pi = ctx.div(&ctx.pi(), &ctx.from_u64(2));
        let err = nth_derivative_numeric(DerivKind::Tan, 1, &half_pi, 256, &cache).unwrap_err();
        assert!(matches!(err, CalcError::Pole { denom: "cos", .. }));

        let err = nth_derivative_numeric(DerivKind::Coth, 1, &ctx.zero(), 256, &cache).unwrap_err();
        assert!(matches!(err, CalcError::Pole { denom: "sinh", .. }));

        let pi = ctx.pi();
        let err = nth_derivative_numeric(DerivKind::Csc, 3, &pi, 256, &cache).unwrap_err();
        assert!(matches!(err, CalcError::Pole { denom: "sin", .. }));
    }

    #[test]
    fn argument_cap_enforced() {
        let cache = DerivPolyCache::new();
        let ctx = FloatCtx::new(128);
        let big = ctx.two_pow(21);
        let err = nth_derivative_numeric(DerivKind::Tan, 0, &big, 128, &cache).unwrap_err();
        assert!(matches!(err, CalcError::ArgumentTooLarge { .. }));
        // The cap itself is inclusive.
        let edge = ctx.two_pow(20);
        assert!(nth_derivative_numeric(DerivKind::Tanh, 1, &edge, 128, &cache).is_ok());
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in DerivKind::ALL {
            assert_eq!(kind.name().parse::<DerivKind>().unwrap(), kind);
        }
        assert!("arctan".parse::<DerivKind>().is_err());
    }
}
