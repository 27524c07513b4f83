//! Stirling-number closed form for the n-th derivative of cotangent,
//! evaluated in exact Gaussian integer arithmetic.
//!
//! Writing z = e^(2ix) and w = 1/(z - 1), cot x = i + 2iw and
//! d/dx = 2iz d/dz, so the n-th derivative expands through the operator
//! identity (z d/dz)^n = sum_k {n,k} z^k (d/dz)^k into
//!
//!   d^n/dx^n cot x = (2i)^n (cot x - i) sum_{k=1}^{n} (k!/2^k) {n,k} (i cot x - 1)^k.
//!
//! With u = cot x = p/q the whole sum clears to a single Gaussian integer
//! divided by q^(n+1); the imaginary part must cancel to exactly zero,
//! and any other outcome aborts. This route shares nothing with the
//! derivative polynomials, making exact agreement a strong check.

use num_traits::{One, Pow, Zero};

use crate::algebra::{ExactInt, GaussianInt, Rational};
use crate::numbers::{build_stirling_subset_triangle, NumberTriangle, TriangleKind};

use super::CalcError;

/// n-th derivative of cot at a point with cot x = u, n >= 1.
/// Builds the Stirling triangle on the fly; use the `_with` variant to
/// amortize the triangle across calls.
pub fn adamchik_cot_closed_form(n: usize, u: &Rational) -> Result<Rational, CalcError> {
    let stirling = build_stirling_subset_triangle(n);
    adamchik_cot_closed_form_with(n, u, &stirling)
}

/// [`adamchik_cot_closed_form`] with a caller-provided Stirling triangle
/// of depth at least n.
pub fn adamchik_cot_closed_form_with(
    n: usize,
    u: &Rational,
    stirling: &NumberTriangle,
) -> Result<Rational, CalcError> {
    assert!(n >= 1, "derivative order must be at least 1");
    assert_eq!(stirling.kind(), TriangleKind::StirlingSubset);
    assert!(stirling.max_n() >= n, "Stirling triangle too shallow");

    let p = u.numer().clone();
    let q = u.denom().clone();
    // base = i*p - q; scaled so that (i*u - 1)^k = base^k / q^k.
    let base = GaussianInt::new(-q.clone(), p.clone());
    let two_q = ExactInt::from(2) * &q;

    // (2q)^j for j = 0..n-1 balances the k!/2^k weights to integers.
    let mut two_q_pows = Vec::with_capacity(n);
    two_q_pows.push(ExactInt::one());
    for _ in 1..n {
        let last = two_q_pows.last().unwrap() * &two_q;
        two_q_pows.push(last);
    }

    let mut acc = GaussianInt::zero();
    let mut pow_base = base.clone();
    let mut k_factorial = ExactInt::one();
    for k in 1..=n {
        k_factorial *= ExactInt::from(k);
        let weight = &k_factorial * stirling.value(n, k) * &two_q_pows[n - k];
        acc = &acc + &pow_base.scale(&weight);
        if k < n {
            pow_base = &pow_base * &base;
        }
    }

    // front = i^n (p - i q); the full value is front*acc / q^(n+1).
    let front = &GaussianInt::i_pow(n) * &GaussianInt::new(p, -q.clone());
    let g = &front * &acc;
    if !g.im.is_zero() {
        return Err(CalcError::NonRealResult { imag: g.im });
    }
    Ok(Rational::new(g.re, Pow::pow(&q, n + 1)))
}
