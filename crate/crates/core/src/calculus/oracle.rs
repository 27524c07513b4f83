//! Series oracle for derivatives, independent of the polynomial
//! machinery: expand f(x + t) as a Maclaurin series in t via the exact
//! addition formulas (sin(x+t) = sin x cos t + cos x sin t and friends),
//! divide the numerator series by the denominator series in
//! high-precision floats, and read the n-th derivative off coefficient n
//! times n!.
//!
//! Nothing here touches the derivative polynomials or the number
//! triangles, so agreement with [`nth_derivative_numeric`] checks the
//! whole closed-form pipeline at once.

use crate::algebra::{factorial, BigFloat, FloatCtx, MIN_PRECISION};

use super::{raw_parts, CalcError, DerivKind, NUMERIC_GUARD_BITS};

/// Correction applied on top of the estimated cancellation loss.
const LOSS_MARGIN_BITS: usize = 16;

/// Coefficients of sin t (odd slots) up to degree n_max.
fn sin_t_series(n_max: usize, ctx: &FloatCtx) -> Vec<BigFloat> {
    let mut c = vec![ctx.zero(); n_max + 1];
    for (j, slot) in c.iter_mut().enumerate().skip(1).step_by(2) {
        let term = ctx.recip(&ctx.from_bigint(&factorial(j)));
        *slot = if (j / 2) % 2 == 0 { term } else { term.neg() };
    }
    c
}

/// Coefficients of cos t (even slots) up to degree n_max.
fn cos_t_series(n_max: usize, ctx: &FloatCtx) -> Vec<BigFloat> {
    let mut c = vec![ctx.zero(); n_max + 1];
    for (j, slot) in c.iter_mut().enumerate().step_by(2) {
        let term = ctx.recip(&ctx.from_bigint(&factorial(j)));
        *slot = if (j / 2) % 2 == 0 { term } else { term.neg() };
    }
    c
}

/// Coefficients of sinh t / cosh t: the unsigned variants.
fn sinh_t_series(n_max: usize, ctx: &FloatCtx) -> Vec<BigFloat> {
    let mut c = vec![ctx.zero(); n_max + 1];
    for (j, slot) in c.iter_mut().enumerate().skip(1).step_by(2) {
        *slot = ctx.recip(&ctx.from_bigint(&factorial(j)));
    }
    c
}

fn cosh_t_series(n_max: usize, ctx: &FloatCtx) -> Vec<BigFloat> {
    let mut c = vec![ctx.zero(); n_max + 1];
    for (j, slot) in c.iter_mut().enumerate().step_by(2) {
        *slot = ctx.recip(&ctx.from_bigint(&factorial(j)));
    }
    c
}

fn unit_series(n_max: usize, ctx: &FloatCtx) -> Vec<BigFloat> {
    let mut c = vec![ctx.zero(); n_max + 1];
    c[0] = ctx.one();
    c
}

/// fa*va[j] + fb*vb[j] termwise.
fn combine(
    fa: &BigFloat,
    va: &[BigFloat],
    fb: &BigFloat,
    vb: &[BigFloat],
    ctx: &FloatCtx,
) -> Vec<BigFloat> {
    va.iter()
        .zip(vb)
        .map(|(x, y)| ctx.add(&ctx.mul(fa, x), &ctx.mul(fb, y)))
        .collect()
}

/// Power-series quotient num/den; den[0] must be far enough from zero,
/// which the caller has already established.
fn series_div(num: &[BigFloat], den: &[BigFloat], ctx: &FloatCtx) -> Vec<BigFloat> {
    let n_max = num.len() - 1;
    let mut q: Vec<BigFloat> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = num[n].clone();
        for j in 1..=n {
            acc = ctx.sub(&acc, &ctx.mul(&den[j], &q[n - j]));
        }
        q.push(ctx.div(&acc, &den[0]));
    }
    q
}

/// Derivatives 0..=n_max of `kind` at x, each rounded to `precision`.
///
/// The division by the shifted denominator series loses roughly
/// -log2|den(x)| bits per coefficient order; the working precision is
/// widened by that estimate, and the call fails with
/// [`CalcError::Divergence`] when the estimate exceeds 64 + 8*n_max bits
/// (the point is too close to a pole for the requested order).
pub fn taylor_addition_oracle(
    kind: DerivKind,
    x: &BigFloat,
    n_max: usize,
    precision: usize,
) -> Result<Vec<BigFloat>, CalcError> {
    assert!(precision >= MIN_PRECISION, "precision below {}", MIN_PRECISION);
    // Cheap probe pass: pole/cap checks plus the magnitude of the
    // denominator constant term, which fixes the working precision.
    let probe = FloatCtx::new(MIN_PRECISION);
    let parts = raw_parts(kind, x, precision, &probe)?;
    let den0 = if kind.reciprocal_substitution() {
        &parts.a
    } else {
        &parts.b
    };
    let per_step = match den0.exponent() {
        Some(e) => 0.max(1 - e as i64) as usize,
        None => usize::MAX / 2,
    };
    let lost = n_max
        .checked_mul(per_step)
        .map(|v| v + LOSS_MARGIN_BITS)
        .unwrap_or(usize::MAX / 2);
    let cap = 64 + 8 * n_max;
    if lost > cap {
        return Err(CalcError::Divergence { kind, lost, cap });
    }

    let work = FloatCtx::new(precision + NUMERIC_GUARD_BITS + lost);
    let parts = raw_parts(kind, x, precision, &work)?;
    let (num, den) = match kind {
        DerivKind::Tan | DerivKind::Cot => {
            let sin_t = sin_t_series(n_max, &work);
            let cos_t = cos_t_series(n_max, &work);
            let shifted_sin = combine(&parts.a, &cos_t, &parts.b, &sin_t, &work);
            let shifted_cos = combine(&parts.b, &cos_t, &parts.a.neg(), &sin_t, &work);
            if kind == DerivKind::Tan {
                (shifted_sin, shifted_cos)
            } else {
                (shifted_cos, shifted_sin)
            }
        }
        DerivKind::Sec | DerivKind::Csc => {
            let sin_t = sin_t_series(n_max, &work);
            let cos_t = cos_t_series(n_max, &work);
            let den = if kind == DerivKind::Sec {
                combine(&parts.b, &cos_t, &parts.a.neg(), &sin_t, &work)
            } else {
                combine(&parts.a, &cos_t, &parts.b, &sin_t, &work)
            };
            (unit_series(n_max, &work), den)
        }
        DerivKind::Tanh | DerivKind::Coth => {
            let sinh_t = sinh_t_series(n_max, &work);
            let cosh_t = cosh_t_series(n_max, &work);
            let shifted_sinh = combine(&parts.a, &cosh_t, &parts.b, &sinh_t, &work);
            let shifted_cosh = combine(&parts.b, &cosh_t, &parts.a, &sinh_t, &work);
            if kind == DerivKind::Tanh {
                (shifted_sinh, shifted_cosh)
            } else {
                (shifted_cosh, shifted_sinh)
            }
        }
        DerivKind::Sech | DerivKind::Csch => {
            let sinh_t = sinh_t_series(n_max, &work);
            let cosh_t = cosh_t_series(n_max, &work);
            let den = if kind == DerivKind::Sech {
                combine(&parts.b, &cosh_t, &parts.a, &sinh_t, &work)
            } else {
                combine(&parts.a, &cosh_t, &parts.b, &sinh_t, &work)
            };
            (unit_series(n_max, &work), den)
        }
    };
    let q = series_div(&num, &den, &work);
    let out = FloatCtx::new(precision);
    let mut result = Vec::with_capacity(n_max + 1);
    for (j, coeff) in q.iter().enumerate() {
        let scaled = work.mul(coeff, &work.from_bigint(&factorial(j)));
        result.push(out.round_to_ctx(&scaled));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polys::DerivPolyCache;

    fn assert_close(ctx: &FloatCtx, got: &BigFloat, want: &BigFloat, tol_log2: i32) {
        let err = ctx.sub(got, want);
        let scale = if ctx.abs_lt(&ctx.one(), want) {
            want.abs()
        } else {
            ctx.one()
        };
        let bound = ctx.mul(&ctx.two_pow(tol_log2), &scale);
        assert!(
            ctx.abs_lt(&err, &bound),
            "got {} want {} (err {})",
            got,
            want,
            err
        );
    }

    #[test]
    fn tan_at_zero_reproduces_maclaurin() {
        let ctx = FloatCtx::new(256);
        let d = taylor_addition_oracle(DerivKind::Tan, &ctx.zero(), 3, 256).unwrap();
        assert_close(&ctx, &d[0], &ctx.zero(), -240);
        assert_close(&ctx, &d[1], &ctx.one(), -240);
        assert_close(&ctx, &d[2], &ctx.zero(), -240);
        assert_close(&ctx, &d[3], &ctx.from_u64(2), -240);
    }

    #[test]
    fn sec_at_zero_reproduces_maclaurin() {
        let ctx = FloatCtx::new(256);
        let d = taylor_addition_oracle(DerivKind::Sec, &ctx.zero(), 2, 256).unwrap();
        assert_close(&ctx, &d[0], &ctx.one(), -240);
        assert_close(&ctx, &d[1], &ctx.zero(), -240);
        assert_close(&ctx, &d[2], &ctx.one(), -240);
    }

    #[test]
    fn cot_first_derivative_at_quarter_pi() {
        let ctx = FloatCtx::new(256);
        let x = ctx.div(&ctx.pi(), &ctx.from_u64(4));
        let d = taylor_addition_oracle(DerivKind::Cot, &x, 1, 256).unwrap();
        assert_close(&ctx, &d[1], &ctx.from_i64(-2), -240);
    }

    #[test]
    fn oracle_matches_closed_form_on_sample_points() {
        let cache = DerivPolyCache::new();
        let ctx = FloatCtx::new(256);
        for kind in DerivKind::ALL {
            let x = ctx.from_f64(0.7);
            let d = taylor_addition_oracle(kind, &x, 8, 256).unwrap();
            for (n, oracle_value) in d.iter().enumerate() {
                let closed =
                    super::super::nth_derivative_numeric(kind, n, &x, 256, &cache).unwrap();
                assert_close(&ctx, &closed, oracle_value, -200);
            }
        }
    }

    #[test]
    fn near_pole_requests_diverge() {
        // 64-bit pi is ~2^-62 away from the sin zero; fine for the pole
        // tolerance at 256-bit precision, hopeless for a 20-term series.
        let coarse_pi = FloatCtx::new(64).pi();
        let err = taylor_addition_oracle(DerivKind::Cot, &coarse_pi, 20, 256).unwrap_err();
        assert!(matches!(err, CalcError::Divergence { .. }));
    }
}
