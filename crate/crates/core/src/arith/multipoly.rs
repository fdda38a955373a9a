//! Sparse multivariate Laurent polynomials over named variables with rational
//! coefficients.
//!
//! [`MultiPoly`] is the workhorse of the moduli-chart machinery: chart
//! equations are plain polynomials in arrow-entry variables, while glue maps
//! substitute Laurent monomials (negative powers of a single coordinate), so
//! exponents are signed. Invariants:
//!
//! - no zero coefficients are stored;
//! - monomials store no zero exponents (the empty monomial is the constant);
//! - variables are identified by name, so polynomials created independently
//!   combine without any shared context.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rat, Rational};

/// A monomial: finitely many variables with nonzero signed exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<String, i64>);

impl Monomial {
    /// The empty (constant) monomial.
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    /// Builds a monomial from `(variable, exponent)` pairs; zero exponents are dropped.
    pub fn from_pairs(pairs: &[(&str, i64)]) -> Self {
        let mut map = BTreeMap::new();
        for &(v, e) in pairs {
            if e != 0 {
                *map.entry(v.to_string()).or_insert(0) += e;
            }
        }
        map.retain(|_, e| *e != 0);
        Monomial(map)
    }

    /// Exponent of `var` (zero if absent).
    pub fn exponent(&self, var: &str) -> i64 {
        self.0.get(var).copied().unwrap_or(0)
    }

    /// Sum of all exponents.
    pub fn total_degree(&self) -> i64 {
        self.0.values().sum()
    }

    /// True if every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.0.values().all(|&e| e >= 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut map = self.0.clone();
        for (v, e) in &other.0 {
            let entry = map.entry(v.clone()).or_insert(0);
            *entry += e;
        }
        map.retain(|_, e| *e != 0);
        Monomial(map)
    }

    /// `self / other` if the quotient has no negative exponents.
    fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut map = self.0.clone();
        for (v, e) in &other.0 {
            let entry = map.entry(v.clone()).or_insert(0);
            *entry -= e;
            if *entry < 0 {
                return None;
            }
        }
        map.retain(|_, e| *e != 0);
        Some(Monomial(map))
    }

    /// Degree-lexicographic comparison (total degree first, then variable-wise
    /// exponents in name order, missing variables counting as zero).
    pub fn cmp_deglex(&self, other: &Monomial) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let names: BTreeSet<&String> = self.0.keys().chain(other.0.keys()).collect();
        for name in names {
            match self.exponent(name).cmp(&other.exponent(name)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate Laurent polynomial with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms }
    }

    /// The variable `name`.
    pub fn var(name: &str) -> Self {
        Self::var_pow(name, 1)
    }

    /// The Laurent monomial `name^exp` (negative exponents allowed).
    pub fn var_pow(name: &str, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::from_pairs(&[(name, exp)]), rat(1));
        MultiPoly { terms }
    }

    /// A single term `coeff * monomial`.
    pub fn term(coeff: Rational, pairs: &[(&str, i64)]) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(Monomial::from_pairs(pairs), coeff);
        }
        MultiPoly { terms }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterator over `(monomial, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The set of variables that actually occur.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for v in m.0.keys() {
                out.insert(v.clone());
            }
        }
        out
    }

    /// True if no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    fn insert_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    /// Difference of two polynomials.
    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Product by a rational scalar.
    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// `self` raised to a nonnegative power.
    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Replaces variables by polynomials; variables not in the map stay as
    /// themselves. Substituted values may be Laurent, but `self` must have
    /// nonnegative exponents.
    ///
    /// # Panics
    /// Panics if `self` contains a negative exponent.
    pub fn substitute(&self, map: &BTreeMap<String, MultiPoly>) -> MultiPoly {
        assert!(
            self.is_polynomial(),
            "substitution target must be an ordinary polynomial"
        );
        let mut out = MultiPoly::zero();
        for (mono, coeff) in &self.terms {
            let mut term = MultiPoly::constant(coeff.clone());
            for (v, &e) in &mono.0 {
                let factor = match map.get(v) {
                    Some(p) => p.pow(e as u32),
                    None => MultiPoly::var_pow(v, e),
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }

    /// Minimal exponent of each variable across all terms (only negatives are
    /// interesting; variables with nonnegative minimum are omitted).
    fn negative_depths(&self) -> BTreeMap<String, i64> {
        let mut mins: BTreeMap<String, i64> = BTreeMap::new();
        for mono in self.terms.keys() {
            for (v, &e) in &mono.0 {
                if e < 0 {
                    let slot = mins.entry(v.clone()).or_insert(0);
                    if e < *slot {
                        *slot = e;
                    }
                }
            }
        }
        mins
    }

    /// Multiplies by the minimal monomial making every exponent nonnegative.
    /// Returns the cleared polynomial together with the clearing monomial.
    pub fn clear_denominators(&self) -> (MultiPoly, Monomial) {
        let depths = self.negative_depths();
        let pairs: Vec<(&str, i64)> = depths.iter().map(|(v, e)| (v.as_str(), -e)).collect();
        let clearing = Monomial::from_pairs(&pairs);
        let mut factor = MultiPoly::zero();
        factor.insert_term(clearing.clone(), rat(1));
        (self.mul(&factor), clearing)
    }

    /// Leading `(monomial, coefficient)` under degree-lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| a.0.cmp_deglex(b.0))
    }

    /// If the polynomial is a single term, returns it.
    pub fn as_single_term(&self) -> Option<(Rational, Monomial)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), m.clone()))
        } else {
            None
        }
    }

    /// Exact division: `Some(q)` with `self == q * divisor`, or `None`.
    ///
    /// Ordinary multivariate division by the single divisor under deglex
    /// order; for one divisor the remainder vanishes exactly when the divisor
    /// divides `self`. Both polynomials must have nonnegative exponents.
    ///
    /// # Panics
    /// Panics if `divisor` is zero or either side has negative exponents.
    pub fn divide_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        assert!(
            self.is_polynomial() && divisor.is_polynomial(),
            "exact division requires ordinary polynomials"
        );
        let (lead_m, lead_c) = divisor.leading_term().expect("nonzero divisor");
        let lead_m = lead_m.clone();
        let lead_c = lead_c.clone();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading_term().expect("nonzero remainder");
                (m.clone(), c.clone())
            };
            let factor_m = rm.try_div(&lead_m)?;
            let factor_c = rc / &lead_c;
            let mut step = MultiPoly::zero();
            step.insert_term(factor_m, factor_c);
            rem = rem.sub(&step.mul(divisor));
            quot = quot.add(&step);
        }
        Some(quot)
    }

    /// Positive gcd of all coefficients (`0` for the zero polynomial).
    pub fn content(&self) -> Rational {
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            Rational::zero()
        } else {
            Rational::new(num.abs(), den)
        }
    }

    /// Canonical scalar multiple: content 1 and positive leading coefficient
    /// under deglex. The zero polynomial is its own canonical form.
    pub fn canonicalized(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let content = self.content();
        let mut out = self.scale(&content.recip());
        let negative = out
            .leading_term()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false);
        if negative {
            out = out.neg();
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.cmp_deglex(a.0));
        for (idx, (mono, coeff)) in terms.iter().enumerate() {
            let positive = !coeff.is_negative();
            let abs = if positive { (*coeff).clone() } else { -(*coeff).clone() };
            if idx == 0 {
                if !positive {
                    write!(f, "-")?;
                }
            } else if positive {
                write!(f, " + ")?;
            } else {
                write!(f, " - ")?;
            }
            let is_const = mono.0.is_empty();
            if is_const {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}
