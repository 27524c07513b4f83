//! Scalar and polynomial arithmetic substrate.
//!
//! Everything downstream works over four exact scalar types plus one
//! floating type:
//!
//! - [`ExactInt`]: sign-magnitude arbitrary-precision integer,
//! - [`Rational`]: normalized fraction of two [`ExactInt`]s (positive
//!   denominator, reduced to lowest terms on construction),
//! - [`GaussianInt`]: complex number with [`ExactInt`] components,
//! - [`IntPolynomial`]: dense univariate polynomial with [`ExactInt`]
//!   coefficients,
//! - [`BigFloat`]: arbitrary-precision binary float carrying the precision
//!   it was computed at.
//!
//! All values are immutable after construction; no operation mutates its
//! inputs.

mod float;
mod gaussian;
mod poly;

pub use float::{BigFloat, FloatCtx, MIN_PRECISION};
pub use gaussian::GaussianInt;
pub use poly::IntPolynomial;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Sign-magnitude arbitrary-precision integer. Safe at any magnitude the
/// triangles and polynomial coefficients reach (they grow like n!).
pub type ExactInt = BigInt;

/// Exact fraction of two [`ExactInt`]s. `BigRational` normalizes eagerly:
/// the denominator is kept positive and the fraction reduced on every
/// construction through [`Rational::new`].
pub type Rational = BigRational;

/// n! as an [`ExactInt`].
pub fn factorial(n: usize) -> ExactInt {
    let mut acc = ExactInt::one();
    for i in 2..=n {
        acc *= ExactInt::from(i);
    }
    acc
}
