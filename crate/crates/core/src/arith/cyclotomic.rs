//! Exact arithmetic in cyclotomic fields `Q(zeta_m)`.
//!
//! [`Cyclotomic`] represents an element in the power basis
//! `1, zeta, ..., zeta^(phi(m)-1)` as a dense vector of rationals of length
//! exactly `phi(m)`; products are reduced modulo the m-th cyclotomic
//! polynomial, so equality of elements is equality of coefficient vectors.
//!
//! Reduction tables, the powers `zeta^k` for `0 <= k < m`, and the inverse
//! lookup (discrete log of roots of unity) are computed once per `m` and
//! cached process-wide; group enumeration leans on these tables heavily.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use super::{rat, MultiPoly, Rational};

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    assert!(m >= 1, "euler_phi requires m >= 1");
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Dense little-endian product of rational polynomials.
fn dense_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    out
}

/// Dense exact division; panics if the division is not exact (internal use:
/// products of cyclotomic polynomials always divide `x^m - 1` exactly).
fn dense_div_exact(num: &[Rational], den: &[Rational]) -> Vec<Rational> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(dn >= dd, "degree of numerator below degree of divisor");
    let lead = den[dd].clone();
    let mut rem: Vec<Rational> = num.to_vec();
    let mut quot = vec![Rational::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = &rem[k + dd] / &lead;
        quot[k] = c.clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            let val = &rem[k + j] - &(dj * &c);
            rem[k + j] = val;
        }
    }
    assert!(
        rem.iter().all(Rational::is_zero),
        "dense polynomial division was not exact"
    );
    quot
}

/// Coefficients of the m-th cyclotomic polynomial, little-endian, length
/// `phi(m) + 1`, computed by exact division of `x^m - 1` by the product of
/// the cyclotomic polynomials of the proper divisors of `m`.
fn cyclotomic_coeffs(m: u64) -> Vec<Rational> {
    static MEMO: Lazy<Mutex<HashMap<u64, Arc<Vec<Rational>>>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(hit) = MEMO.lock().unwrap().get(&m) {
        return hit.as_ref().clone();
    }
    let coeffs = if m == 1 {
        vec![rat(-1), rat(1)]
    } else {
        let mut xm_minus_1 = vec![Rational::zero(); (m + 1) as usize];
        xm_minus_1[0] = rat(-1);
        xm_minus_1[m as usize] = rat(1);
        let mut divisor = vec![rat(1)];
        for d in 1..m {
            if m.is_multiple_of(d) {
                divisor = dense_mul(&divisor, &cyclotomic_coeffs(d));
            }
        }
        dense_div_exact(&xm_minus_1, &divisor)
    };
    MEMO.lock()
        .unwrap()
        .insert(m, Arc::new(coeffs.clone()));
    coeffs
}

/// The m-th cyclotomic polynomial as a [`MultiPoly`] in the variable `x`.
///
/// It is monic of degree `phi(m)` and divides `x^m - 1` exactly.
pub fn cyclotomic_polynomial(m: u64) -> MultiPoly {
    assert!(m >= 1, "cyclotomic polynomial requires m >= 1");
    let mut out = MultiPoly::zero();
    for (k, c) in cyclotomic_coeffs(m).into_iter().enumerate() {
        out = out.add(&MultiPoly::term(c, &[("x", k as i64)]));
    }
    out
}

/// Cached per-order data: power basis reduction rows and root-of-unity tables.
struct Table {
    phi: usize,
    /// `x^t` reduced modulo the cyclotomic polynomial, for
    /// `0 <= t < max(m, 2*phi - 1)`; each row has length `phi`.
    power_rows: Vec<Vec<Rational>>,
    /// Coefficient vector of `zeta^k` -> `k`, for `0 <= k < m`.
    dlog: HashMap<Vec<Rational>, u64>,
}

static TABLES: Lazy<Mutex<HashMap<u64, Arc<Table>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

fn table(m: u64) -> Arc<Table> {
    let mut guard = TABLES.lock().unwrap();
    if let Some(hit) = guard.get(&m) {
        return Arc::clone(hit);
    }
    let phi = euler_phi(m) as usize;
    let coeffs = cyclotomic_coeffs(m);
    // x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1})  (the polynomial is monic)
    let fold: Vec<Rational> = coeffs[..phi].iter().map(|c| -c).collect();
    let rows_needed = std::cmp::max(m as usize, 2 * phi - 1);
    let mut power_rows: Vec<Vec<Rational>> = Vec::with_capacity(rows_needed);
    for t in 0..rows_needed {
        if t < phi {
            let mut row = vec![Rational::zero(); phi];
            row[t] = rat(1);
            power_rows.push(row);
        } else {
            let prev = &power_rows[t - 1];
            let mut row = vec![Rational::zero(); phi];
            // multiply by x: shift up, then fold the overflowing x^phi term
            let overflow = prev[phi - 1].clone();
            for i in (1..phi).rev() {
                row[i] = prev[i - 1].clone();
            }
            if !overflow.is_zero() {
                for i in 0..phi {
                    row[i] += &overflow * &fold[i];
                }
            }
            power_rows.push(row);
        }
    }
    let mut dlog = HashMap::new();
    for (k, row) in power_rows.iter().enumerate().take(m as usize) {
        dlog.insert(row.clone(), k as u64);
    }
    let entry = Arc::new(Table {
        phi,
        power_rows,
        dlog,
    });
    guard.insert(m, Arc::clone(&entry));
    entry
}

/// An element of `Q(zeta_m)` in the power basis.
///
/// Invariants: the coefficient vector has length exactly `phi(m)`, and two
/// elements are equal iff their orders and coefficient vectors agree.
/// Arithmetic between different orders is a caller bug and panics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    m: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Zero in `Q(zeta_m)`.
    pub fn zero(m: u64) -> Self {
        let phi = euler_phi(m) as usize;
        Cyclotomic {
            m,
            coeffs: vec![Rational::zero(); phi],
        }
    }

    /// One in `Q(zeta_m)`.
    pub fn one(m: u64) -> Self {
        Self::from_rational(m, rat(1))
    }

    /// The rational `r` viewed in `Q(zeta_m)`.
    pub fn from_rational(m: u64, r: Rational) -> Self {
        let mut out = Self::zero(m);
        out.coeffs[0] = r;
        out
    }

    /// The primitive root `zeta_m`.
    pub fn zeta(m: u64) -> Self {
        Self::root_of_unity(m, 1)
    }

    /// `zeta_m^k` (table lookup, `k` taken modulo `m`).
    pub fn root_of_unity(m: u64, k: u64) -> Self {
        let t = table(m);
        Cyclotomic {
            m,
            coeffs: t.power_rows[(k % m) as usize].clone(),
        }
    }

    /// The order `m` of the ambient field.
    pub fn order(&self) -> u64 {
        self.m
    }

    /// Coefficients in the power basis (length `phi(m)`).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// True for the identity element.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(
            self.m, other.m,
            "cyclotomic arithmetic requires matching orders"
        );
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        Cyclotomic {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Cyclotomic {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Product, reduced modulo the cyclotomic polynomial.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let t = table(self.m);
        let phi = t.phi;
        let conv = dense_mul(&self.coeffs, &other.coeffs);
        let mut out = vec![Rational::zero(); phi];
        for (k, c) in conv.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < phi {
                out[k] += c;
            } else {
                for (i, slot) in out.iter_mut().enumerate() {
                    *slot += &c * &t.power_rows[k][i];
                }
            }
        }
        Cyclotomic {
            m: self.m,
            coeffs: out,
        }
    }

    /// Product by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// `self` raised to a nonnegative power.
    pub fn pow(&self, exp: u64) -> Self {
        // Roots of unity get the table shortcut.
        if let Some(k) = self.as_root_of_unity() {
            return Self::root_of_unity(self.m, (k as u128 * exp as u128 % self.m as u128) as u64);
        }
        let mut result = Self::one(self.m);
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

    /// If `self == zeta_m^k`, returns `k` (the unique exponent in `0..m`).
    pub fn as_root_of_unity(&self) -> Option<u64> {
        table(self.m).dlog.get(&self.coeffs).copied()
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        Ok(())
    }
}
