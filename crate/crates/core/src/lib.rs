//! Exact computation of higher-order tangent and secant number triangles,
//! the four derivative-polynomial families for tan/sec and tanh/sech, and
//! closed-form n-th derivatives of eight trigonometric and hyperbolic
//! functions, cross-validated against independent oracles.
//!
//! The crate is layered bottom-up:
//!
//! - [`algebra`]: big integers, rationals, Gaussian integers, dense integer
//!   polynomials, arbitrary-precision floats.
//! - [`numbers`]: the integer triangles and an exact power-series oracle
//!   for their exponential generating functions.
//! - [`polys`]: the polynomial families built by two independent routes
//!   (triangle closed forms and first-order recurrences).
//! - [`calculus`]: exact and numeric n-th derivatives of tan, sec, cot,
//!   csc, tanh, sech, coth, csch, plus a Taylor addition-formula oracle
//!   and a Stirling-number cross-check for the cotangent.
//! - [`zeta`]: arbitrary-precision Hurwitz zeta and the reflection
//!   identity linking it to the cotangent derivative closed form.

pub mod algebra;
pub mod calculus;
pub mod numbers;
pub mod polys;
pub mod zeta;

pub use algebra::{BigFloat, ExactInt, FloatCtx, GaussianInt, IntPolynomial, Rational};
pub use calculus::{DerivKind, ExactDerivative, Prefactor};
pub use numbers::{NumberTriangle, SeriesCoefficients, TriangleKind};
pub use polys::{DerivPolyCache, ParityForm, PolyFamily};
