//! Exact arithmetic kernel: rationals, cyclotomic numbers, sparse polynomials
//! and small polynomial matrices.
//!
//! Contents:
//! - [`Rational`] — arbitrary-precision rational numbers (always reduced,
//!   positive denominator), re-exported from `num-rational`;
//! - [`Cyclotomic`] — elements of the cyclotomic field `Q(zeta_m)` in the
//!   power basis, with exact reduction modulo the cyclotomic polynomial;
//! - [`cyclotomic_polynomial`] — the m-th cyclotomic polynomial itself;
//! - [`BivarPoly`] — sparse bivariate polynomials in `x, y` over a coefficient
//!   ring;
//! - [`PolyMatrix`] / [`matrix_mul`] — dense matrices of bivariate polynomials;
//! - [`MultiPoly`] — sparse multivariate (Laurent) polynomials over named
//!   variables with rational coefficients, used by the moduli charts.

pub mod bivar;
pub mod cyclotomic;
pub mod matrix;
pub mod multipoly;

pub use bivar::{BivarPoly, CoeffRing};
pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use matrix::{matrix_mul, MatrixShapeError, PolyMatrix};
pub use multipoly::{Monomial, MultiPoly};

/// Arbitrary-precision rational number.
///
/// `num-rational` keeps the value reduced with a positive denominator, so
/// `0/1` and `1/1` are the unique representations of zero and one.
pub type Rational = num_rational::BigRational;

use num_bigint::BigInt;

/// Shorthand for an integer rational.
#[inline]
pub fn rat(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Shorthand for the reduced fraction `num/den`.
///
/// # Panics
/// Panics if `den == 0`.
#[inline]
pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "rational denominator must be nonzero");
    Rational::new(BigInt::from(num), BigInt::from(den))
}
