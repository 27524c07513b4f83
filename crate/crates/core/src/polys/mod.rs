//! The four derivative-polynomial families, built by two independent
//! routes: closed forms over the number triangles, and the first-order
//! recurrences driven by the chain rule. Equality of the two routes is the
//! central correctness check of the crate.
//!
//! Families: `P` and `Q` serve tan/cot and sec/csc; `HyperP` and `HyperQ`
//! serve tanh/coth and sech/csch. Index n gives the polynomial appearing
//! in the n-th derivative.

mod render;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{ExactInt, IntPolynomial};
use crate::numbers::{NumberTriangle, TriangleKind};

pub use render::{poly_from_latex, poly_to_csv, poly_to_json, poly_to_latex};

/// Identifies one of the four polynomial families.
///
/// `P`/`HyperP` have degree n+1 at index n; `Q`/`HyperQ` have degree n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolyFamily {
    P,
    Q,
    HyperP,
    HyperQ,
}

impl PolyFamily {
    pub const ALL: [PolyFamily; 4] = [
        PolyFamily::P,
        PolyFamily::Q,
        PolyFamily::HyperP,
        PolyFamily::HyperQ,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            PolyFamily::P => "P",
            PolyFamily::Q => "Q",
            PolyFamily::HyperP => "HyperP",
            PolyFamily::HyperQ => "HyperQ",
        }
    }

    /// The trigonometric family carrying the same coefficient magnitudes.
    pub fn trig_base(&self) -> PolyFamily {
        match self {
            PolyFamily::P | PolyFamily::HyperP => PolyFamily::P,
            PolyFamily::Q | PolyFamily::HyperQ => PolyFamily::Q,
        }
    }

    pub fn is_hyperbolic(&self) -> bool {
        matches!(self, PolyFamily::HyperP | PolyFamily::HyperQ)
    }

    /// Degree of the index-n member.
    pub fn degree_at(&self, n: usize) -> usize {
        match self.trig_base() {
            PolyFamily::P => n + 1,
            _ => n,
        }
    }

    /// Parity of the exponents carrying nonzero coefficients at index n.
    pub fn exponent_parity(&self, n: usize) -> usize {
        match self.trig_base() {
            PolyFamily::P => (n + 1) % 2,
            _ => n % 2,
        }
    }

    fn triangle_kind(&self) -> TriangleKind {
        match self.trig_base() {
            PolyFamily::P => TriangleKind::TangentOrderK,
            _ => TriangleKind::SecantOrderK,
        }
    }

    /// Triangle depth the closed form consumes at index n.
    pub fn triangle_depth(&self, n: usize) -> usize {
        match self.trig_base() {
            PolyFamily::P => n + 1,
            _ => n,
        }
    }
}

impl fmt::Display for PolyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolyFamily {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<PolyFamily, PolyError> {
        match s.to_ascii_lowercase().as_str() {
            "p" => Ok(PolyFamily::P),
            "q" => Ok(PolyFamily::Q),
            "hyperp" => Ok(PolyFamily::HyperP),
            "hyperq" => Ok(PolyFamily::HyperQ),
            other => Err(PolyError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("triangle entry at row {n}, order {k} is {value}, not divisible by {k}")]
    DivisibilityFailure { n: usize, k: usize, value: ExactInt },
    #[error("nonzero coefficient at degree {degree} of index {n} reached a half-integer sign exponent")]
    ParityViolation { n: usize, degree: usize },
    #[error("family {family} needs the {expected} triangle, got {got}")]
    KindMismatch {
        family: PolyFamily,
        expected: &'static str,
        got: &'static str,
    },
    #[error("triangle holds rows up to {depth}, index {n} needs depth {need}")]
    TriangleTooShallow { n: usize, depth: usize, need: usize },
    #[error("unknown polynomial family `{0}`")]
    UnknownFamily(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

fn seed(family: PolyFamily) -> IntPolynomial {
    match family.trig_base() {
        PolyFamily::P => IntPolynomial::x(),
        _ => IntPolynomial::one(),
    }
}

fn recurrence_step(family: PolyFamily, prev: &IntPolynomial) -> IntPolynomial {
    let d = prev.derivative();
    let x = IntPolynomial::x();
    match family {
        PolyFamily::P => IntPolynomial::from_i64_coeffs(&[1, 0, 1]).mul(&d),
        PolyFamily::Q => IntPolynomial::from_i64_coeffs(&[1, 0, 1])
            .mul(&d)
            .add(&x.mul(prev)),
        PolyFamily::HyperP => IntPolynomial::from_i64_coeffs(&[1, 0, -1]).mul(&d),
        PolyFamily::HyperQ => IntPolynomial::from_i64_coeffs(&[1, 0, -1])
            .mul(&d)
            .add(&x.mul(prev).neg()),
    }
}

/// Index-n member built by iterating the first-order recurrence from the
/// family seed. Costs O(n) polynomial multiplications; use
/// [`DerivPolyCache`] when many indices are needed.
pub fn derivative_polynomial_recurrence(family: PolyFamily, n: usize) -> IntPolynomial {
    let mut p = seed(family);
    for _ in 0..n {
        p = recurrence_step(family, &p);
    }
    p
}

/// Sign (-1)^(m/2) for even m; half-integer exponent on a nonzero term is
/// a parity bug upstream.
fn half_power_sign(m: i64) -> Option<i64> {
    if m.rem_euclid(2) != 0 {
        return None;
    }
    if (m.div_euclid(2)).rem_euclid(2) == 0 {
        Some(1)
    } else {
        Some(-1)
    }
}

fn transport_signs(
    poly: IntPolynomial,
    n: usize,
    offset: i64,
) -> Result<IntPolynomial, PolyError> {
    let mut coeffs = poly.coeffs().to_vec();
    for (k, c) in coeffs.iter_mut().enumerate() {
        if c.is_zero() {
            continue;
        }
        let m = n as i64 + k as i64 + offset;
        match half_power_sign(m) {
            Some(1) => {}
            Some(_) => *c = -(c.clone()),
            None => return Err(PolyError::ParityViolation { n, degree: k }),
        }
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// Index-n member built from triangle entries: the constant plus the
/// order-weighted column for the P side, the plain row for the Q side,
/// with the alternating half-power signs layered on for the hyperbolic
/// families. Exact division by the order k is asserted; a remainder means
/// the triangle itself is corrupt.
pub fn derivative_polynomial_closed(
    family: PolyFamily,
    n: usize,
    triangle: &NumberTriangle,
) -> Result<IntPolynomial, PolyError> {
    let expected = family.triangle_kind();
    if triangle.kind() != expected {
        return Err(PolyError::KindMismatch {
            family,
            expected: expected.name(),
            got: triangle.kind().name(),
        });
    }
    let need = family.triangle_depth(n);
    if triangle.max_n() < need {
        return Err(PolyError::TriangleTooShallow {
            n,
            depth: triangle.max_n(),
            need,
        });
    }
    let trig = match family.trig_base() {
        PolyFamily::P => {
            let mut coeffs = vec![ExactInt::zero(); n + 2];
            coeffs[0] = triangle.value(n, 1);
            for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
                let t = triangle.value(n + 1, k);
                if t.is_zero() {
                    continue;
                }
                let (q, r) = t.div_rem(&ExactInt::from(k));
                if !r.is_zero() {
                    return Err(PolyError::DivisibilityFailure { n: n + 1, k, value: t });
                }
                *c = q;
            }
            IntPolynomial::from_coeffs(coeffs)
        }
        _ => {
            let coeffs = (0..=n).map(|k| triangle.value(n, k)).collect();
            IntPolynomial::from_coeffs(coeffs)
        }
    };
    match family {
        PolyFamily::P | PolyFamily::Q => Ok(trig),
        PolyFamily::HyperP => transport_signs(trig, n, -1),
        PolyFamily::HyperQ => transport_signs(trig, n, 0),
    }
}

/// Nonzero terms of one polynomial, exponent-ascending. The exponents
/// share one parity (the constant term aside), which the constructor
/// asserts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityForm {
    family: PolyFamily,
    n: usize,
    terms: Vec<(usize, ExactInt)>,
}

impl ParityForm {
    pub fn from_polynomial(family: PolyFamily, n: usize, poly: &IntPolynomial) -> ParityForm {
        let terms: Vec<(usize, ExactInt)> =
            poly.terms().map(|(k, c)| (k, c.clone())).collect();
        let parities: Vec<usize> = terms
            .iter()
            .filter(|(k, _)| *k > 0)
            .map(|(k, _)| k % 2)
            .collect();
        assert!(
            parities.windows(2).all(|w| w[0] == w[1]),
            "mixed exponent parity in {} at index {}",
            family,
            n
        );
        ParityForm { family, n, terms }
    }

    pub fn family(&self) -> PolyFamily {
        self.family
    }

    pub fn index(&self) -> usize {
        self.n
    }

    /// (exponent, coefficient) pairs, ascending, nonzero only.
    pub fn terms(&self) -> &[(usize, ExactInt)] {
        &self.terms
    }
}

/// Parity-compressed form of the index-n member, via the recurrence route.
pub fn parity_form(family: PolyFamily, n: usize) -> ParityForm {
    ParityForm::from_polynomial(family, n, &derivative_polynomial_recurrence(family, n))
}

/// Coefficient k vanishes whenever k disagrees with the family's exponent
/// parity at index n.
pub fn symmetry_holds(family: PolyFamily, n: usize, poly: &IntPolynomial) -> bool {
    let parity = family.exponent_parity(n);
    poly.terms().all(|(k, _)| k % 2 == parity)
}

/// Exact integer statement of the rotation between a trig polynomial and
/// its hyperbolic counterpart: coefficient k of the hyperbolic member is
/// i^(n-1+k) (P side) or i^(n+k) (Q side) times coefficient k of the trig
/// member, and that power of i lands on the real axis wherever the
/// coefficient survives.
pub fn transport_holds(
    hyper_family: PolyFamily,
    n: usize,
    trig: &IntPolynomial,
    hyper: &IntPolynomial,
) -> bool {
    use crate::algebra::GaussianInt;
    let offset = match hyper_family {
        PolyFamily::HyperP => 3,
        PolyFamily::HyperQ => 0,
        _ => return false,
    };
    let len = trig.coeffs().len().max(hyper.coeffs().len());
    for k in 0..len {
        let c = trig.coeff(k);
        let h = hyper.coeff(k);
        if c.is_zero() {
            if !h.is_zero() {
                return false;
            }
            continue;
        }
        let rot = GaussianInt::i_pow(n + k + offset);
        if !rot.im.is_zero() || h != rot.re * c {
            return false;
        }
    }
    true
}

/// Memo of recurrence-built polynomials keyed by (family, index).
/// Readers proceed concurrently; a miss takes the write lock and extends
/// the family's column one index at a time, each entry from its
/// predecessor.
pub struct DerivPolyCache {
    families: RwLock<HashMap<PolyFamily, Vec<Arc<IntPolynomial>>>>,
}

impl DerivPolyCache {
    pub fn new() -> DerivPolyCache {
        DerivPolyCache {
            families: RwLock::new(HashMap::new()),
        }
    }

    pub fn get(&self, family: PolyFamily, n: usize) -> Arc<IntPolynomial> {
        if let Some(p) = self
            .families
            .read()
            .unwrap()
            .get(&family)
            .and_then(|column| column.get(n))
        {
            return Arc::clone(p);
        }
        let mut map = self.families.write().unwrap();
        let column = map.entry(family).or_default();
        while column.len() <= n {
            let next = match column.last() {
                None => seed(family),
                Some(prev) => recurrence_step(family, prev),
            };
            column.push(Arc::new(next));
        }
        Arc::clone(&column[n])
    }
}

impl Default for DerivPolyCache {
    fn default() -> DerivPolyCache {
        DerivPolyCache::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{build_secant_triangle, build_tangent_triangle};

    fn closed(family: PolyFamily, n: usize) -> IntPolynomial {
        let triangle = match family.trig_base() {
            PolyFamily::P => build_tangent_triangle(n + 1),
            _ => build_secant_triangle(n),
        };
        derivative_polynomial_closed(family, n, &triangle).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            closed(PolyFamily::P, 3),
            IntPolynomial::from_i64_coeffs(&[2, 0, 8, 0, 6])
        );
        assert_eq!(
            closed(PolyFamily::HyperQ, 4),
            IntPolynomial::from_i64_coeffs(&[5, 0, -28, 0, 24])
        );
        assert_eq!(closed(PolyFamily::Q, 0), IntPolynomial::one());
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(
            derivative_polynomial_recurrence(PolyFamily::P, 2),
            IntPolynomial::from_i64_coeffs(&[0, 2, 0, 2])
        );
        assert_eq!(
            derivative_polynomial_recurrence(PolyFamily::HyperP, 1),
            IntPolynomial::from_i64_coeffs(&[1, 0, -1])
        );
        assert_eq!(
            derivative_polynomial_recurrence(PolyFamily::Q, 5),
            IntPolynomial::from_i64_coeffs(&[0, 61, 0, 180, 0, 120])
        );
    }

    #[test]
    fn dual_routes_agree_small() {
        for family in PolyFamily::ALL {
            for n in 0..=12 {
                assert_eq!(
                    closed(family, n),
                    derivative_polynomial_recurrence(family, n),
                    "{} at {}",
                    family,
                    n
                );
            }
        }
    }

    #[test]
    fn parity_form_examples() {
        let f = parity_form(PolyFamily::P, 2);
        assert_eq!(
            f.terms(),
            &[(1, ExactInt::from(2)), (3, ExactInt::from(2))]
        );
        let f = parity_form(PolyFamily::P, 3);
        assert_eq!(
            f.terms(),
            &[
                (0, ExactInt::from(2)),
                (2, ExactInt::from(8)),
                (4, ExactInt::from(6))
            ]
        );
        let f = parity_form(PolyFamily::Q, 1);
        assert_eq!(f.terms(), &[(1, ExactInt::from(1))]);
    }

    #[test]
    fn symmetry_and_transport_small() {
        for n in 0..=10 {
            let p = derivative_polynomial_recurrence(PolyFamily::P, n);
            let q = derivative_polynomial_recurrence(PolyFamily::Q, n);
            let hp = derivative_polynomial_recurrence(PolyFamily::HyperP, n);
            let hq = derivative_polynomial_recurrence(PolyFamily::HyperQ, n);
            assert!(symmetry_holds(PolyFamily::P, n, &p));
            assert!(symmetry_holds(PolyFamily::Q, n, &q));
            assert!(symmetry_holds(PolyFamily::HyperP, n, &hp));
            assert!(symmetry_holds(PolyFamily::HyperQ, n, &hq));
            assert!(transport_holds(PolyFamily::HyperP, n, &p, &hp));
            assert!(transport_holds(PolyFamily::HyperQ, n, &q, &hq));
        }
    }

    #[test]
    fn degree_and_leading() {
        use crate::algebra::factorial;
        for n in 0..=10 {
            let p = derivative_polynomial_recurrence(PolyFamily::P, n);
            assert_eq!(p.degree(), Some(n + 1));
            assert_eq!(p.leading_coeff().unwrap(), &factorial(n));
            let q = derivative_polynomial_recurrence(PolyFamily::Q, n);
            assert_eq!(q.degree(), Some(n));
            assert_eq!(q.leading_coeff().unwrap(), &factorial(n));
            let hp = derivative_polynomial_recurrence(PolyFamily::HyperP, n);
            assert_eq!(hp.degree(), Some(n + 1));
            assert_eq!(hp.leading_coeff().unwrap().magnitude(), factorial(n).magnitude());
        }
    }

    #[test]
    fn cache_matches_recurrence_and_shares() {
        let cache = DerivPolyCache::new();
        let a = cache.get(PolyFamily::Q, 6);
        assert_eq!(*a, derivative_polynomial_recurrence(PolyFamily::Q, 6));
        let b = cache.get(PolyFamily::Q, 6);
        assert!(Arc::ptr_eq(&a, &b));
        let low = cache.get(PolyFamily::Q, 3);
        assert_eq!(*low, derivative_polynomial_recurrence(PolyFamily::Q, 3));
    }

    #[test]
    fn shallow_triangle_rejected() {
        let t = build_tangent_triangle(3);
        let err = derivative_polynomial_closed(PolyFamily::P, 3, &t).unwrap_err();
        assert!(matches!(err, PolyError::TriangleTooShallow { need: 4, .. }));
    }

    #[test]
    fn triangle_kind_checked() {
        let t = build_secant_triangle(5);
        let err = derivative_polynomial_closed(PolyFamily::P, 2, &t).unwrap_err();
        assert!(matches!(err, PolyError::KindMismatch { .. }));
    }

    #[test]
    fn family_names_round_trip() {
        for family in PolyFamily::ALL {
            assert_eq!(family.name().parse::<PolyFamily>().unwrap(), family);
        }
        assert!("R".parse::<PolyFamily>().is_err());
    }
}
