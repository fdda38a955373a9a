//! Sparse bivariate polynomials in the fixed variables `x`, `y`.
//!
//! [`BivarPoly`] stores a map from exponent pairs `(i, j)` (for `x^i y^j`) to
//! nonzero coefficients in a commutative coefficient ring `C`. Rational
//! coefficients cover the arrow representatives; cyclotomic coefficients
//! appear when a group element acts on a polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{Cyclotomic, Rational};

/// Minimal commutative-ring interface for [`BivarPoly`] coefficients.
///
/// Deliberately object: no `zero()`/`one()` constructors — [`Cyclotomic`]
/// cannot produce either without knowing the field order, and the polynomial
/// type never needs them (absence of a term *is* zero).
pub trait CoeffRing: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl CoeffRing for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl CoeffRing for Cyclotomic {
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Cyclotomic::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Cyclotomic::mul(self, other)
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
}

/// Sparse polynomial in `x` and `y` over the coefficient ring `C`.
///
/// Invariant: the term map never stores a zero coefficient, so the zero
/// polynomial is the empty map and equality is map equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarPoly<C: CoeffRing> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: CoeffRing> Default for BivarPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: CoeffRing> BivarPoly<C> {
    /// The zero polynomial.
    pub fn zero() -> Self {
        BivarPoly { terms: BTreeMap::new() }
    }

    /// The single term `c * x^i * y^j`.
    pub fn monomial(c: C, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BivarPoly { terms }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterator over `((i, j), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &C)> {
        self.terms.iter()
    }

    /// Coefficient of `x^i y^j`, if present.
    pub fn coeff(&self, i: u32, j: u32) -> Option<&C> {
        self.terms.get(&(i, j))
    }

    /// Total degree (maximum of `i + j`), or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    fn insert_term(&mut self, key: (u32, u32), c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_term(*k, c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        BivarPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((ia, ja), ca) in &self.terms {
            for ((ib, jb), cb) in &other.terms {
                out.insert_term((ia + ib, ja + jb), ca.mul(cb));
            }
        }
        out
    }

    /// Product by a scalar from the coefficient ring.
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.insert_term(*k, v.mul(c));
        }
        out
    }

    /// `self` raised to a positive power.
    ///
    /// # Panics
    /// Panics if `exp == 0`: a bare coefficient ring has no global one to
    /// represent `p^0` with. Rational polynomials get the usual convention
    /// through [`BivarPoly::pow0`].
    pub fn pow(&self, exp: u32) -> Self {
        assert!(exp >= 1, "pow(0) needs a multiplicative identity; use pow0");
        let mut result = self.clone();
        for _ in 1..exp {
            result = result.mul(self);
        }
        result
    }

    /// Swaps the roles of `x` and `y` (`x^i y^j -> x^j y^i`).
    pub fn swap_xy(&self) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every coefficient (dropping any that map to zero).
    pub fn map_coeffs<D: CoeffRing>(&self, mut f: impl FnMut(&C) -> D) -> BivarPoly<D> {
        let mut out = BivarPoly::zero();
        for (k, c) in &self.terms {
            out.insert_term(*k, f(c));
        }
        out
    }
}

impl BivarPoly<Rational> {
    /// Convenience constructor: integer multiple of `x^i y^j`.
    pub fn int_monomial(c: i64, i: u32, j: u32) -> Self {
        Self::monomial(super::rat(c), i, j)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::int_monomial(1, 1, 0)
    }

    /// The polynomial `y`.
    pub fn y() -> Self {
        Self::int_monomial(1, 0, 1)
    }

    /// The constant 1.
    pub fn one() -> Self {
        Self::int_monomial(1, 0, 0)
    }

    /// Raises to a power with the usual `p^0 = 1` convention.
    pub fn pow0(&self, exp: u32) -> Self {
        if exp == 0 {
            Self::one()
        } else {
            self.pow(exp)
        }
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..i {
                term *= x;
            }
            for _ in 0..j {
                term *= y;
            }
            acc += term;
        }
        acc
    }
}

impl<C: CoeffRing + fmt::Display> fmt::Display for BivarPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest total degree first, then x-degree descending.
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (idx, key) in keys.iter().enumerate() {
            let c = &self.terms[key];
            if idx > 0 {
                write!(f, " + ")?;
            }
            let (i, j) = **key;
            if i == 0 && j == 0 {
                write!(f, "({c})")?;
                continue;
            }
            write!(f, "({c})")?;
            if i == 1 {
                write!(f, "*x")?;
            } else if i > 1 {
                write!(f, "*x^{i}")?;
            }
            if j == 1 {
                write!(f, "*y")?;
            } else if j > 1 {
                write!(f, "*y^{j}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    type P = BivarPoly<Rational>;

    #[test]
    fn no_zero_coefficients_survive() {
        let p = P::x().add(&P::x().neg());
        assert!(p.is_zero());
        let q = P::x().sub(&P::y()).mul(&P::x().add(&P::y()));
        assert_eq!(q.coeff(1, 1), None);
        assert_eq!(q.num_terms(), 2);
    }

    #[test]
    fn product_matches_hand_expansion() {
        // (x + y)^2 = x^2 + 2xy + y^2
        let p = P::x().add(&P::y()).pow(2);
        assert_eq!(p.coeff(2, 0), Some(&rat(1)));
        assert_eq!(p.coeff(1, 1), Some(&rat(2)));
        assert_eq!(p.coeff(0, 2), Some(&rat(1)));
    }

    #[test]
    fn swap_xy_is_an_involution() {
        let p = P::int_monomial(3, 5, 2).add(&P::int_monomial(-1, 0, 7));
        assert_eq!(p.swap_xy().swap_xy(), p);
        assert_eq!(p.swap_xy().coeff(2, 5), Some(&rat(3)));
    }

    #[test]
    fn eval_at_points() {
        let p = P::x().mul(&P::y()); // xy
        assert_eq!(p.eval(&rat(2), &rat(3)), rat(6));
        assert!(CoeffRing::is_zero(&P::x().sub(&P::y()).eval(&rat(5), &rat(5))));
    }

    #[test]
    fn cyclotomic_coefficients_work() {
        let i = Cyclotomic::zeta(4);
        let p: BivarPoly<Cyclotomic> = BivarPoly::monomial(i.clone(), 1, 0);
        let sq = p.mul(&p);
        // (i x)^2 = -x^2
        assert_eq!(
            sq.coeff(2, 0),
            Some(&Cyclotomic::from_rational(4, rat(-1)))
        );
    }
}
