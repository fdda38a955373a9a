//! Jung–Hirzebruch continued fractions and parameter classification.
//!
//! For coprime `n > q >= 1` the expansion `n/q = [a_1, ..., a_N]` uses
//! ceiling division: `a = ceil(n/q)`, then recurse on `q / (a*q - n)`.
//! The *dual* expansion is that of `n/(n-q)`, indexed from 2 (its length
//! plus two is the invariant `e`).
//!
//! The dihedral group `D(n,q)` treated by this crate requires `n < 2q`,
//! which is exactly the condition that the expansion of `n/q` starts with a 2.
//! [`classify`] encodes this as a value ([`CaseTag::OutOfScope`]), not an
//! error: callers that need in-scope parameters reject it themselves.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Which shape the algebra takes.
///
/// With `nu` = number of leading 2s of the expansion of `n/q` (capped at
/// `N - 1`):
///
/// - [`CaseTag::A`]: `0 < nu < N - 1` — the chain has a non-2 entry strictly
///   between position `nu + 1` and the end;
/// - [`CaseTag::B`]: `nu = N - 1` — only the last entry may exceed 2;
/// - [`CaseTag::OutOfScope`]: `nu = 0`, equivalently `n > 2q` (or `n = 2q`,
///   only possible as `(2,1)`), the cyclic-type range this crate does not cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    A,
    B,
    OutOfScope,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CaseTag::A => write!(f, "case A"),
            CaseTag::B => write!(f, "case B"),
            CaseTag::OutOfScope => write!(f, "out of scope (n >= 2q)"),
        }
    }
}

/// Validated parameters of `D(n, q)` plus derived classification data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupParams {
    pub n: u64,
    pub q: u64,
    /// `m = n - q`, the exponent that drives the horn representatives.
    pub m: u64,
    /// Number of leading 2s of `[a_1, ..., a_N]`, capped at `N - 1`.
    pub nu: usize,
    pub case: CaseTag,
}

/// The expansion `n/q = [a_1, ..., a_N]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JhExpansion {
    /// Entries `a_1, ..., a_N`; every entry is `>= 2`.
    pub alphas: Vec<u64>,
}

impl JhExpansion {
    /// Length `N` of the expansion.
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    /// True only for the (unreachable) empty expansion.
    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    /// `a_t` with the 1-based indexing of the formulas.
    pub fn alpha(&self, t: usize) -> u64 {
        assert!(
            (1..=self.len()).contains(&t),
            "alpha index {t} out of range 1..={}",
            self.len()
        );
        self.alphas[t - 1]
    }
}

/// The dual expansion `n/(n-q) = [a_2, ..., a_(e-1)]`, indexed from 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualExpansion {
    /// Entries `a_2, ..., a_(e-1)` in order.
    pub entries: Vec<u64>,
    /// `e` = number of entries plus 2.
    pub e: usize,
}

impl DualExpansion {
    /// `a_j` for `2 <= j <= e - 1`.
    pub fn a(&self, j: usize) -> u64 {
        assert!(
            (2..=self.e - 1).contains(&j),
            "dual entry index {j} out of range 2..={}",
            self.e - 1
        );
        self.entries[j - 2]
    }
}

fn validate(n: u64, q: u64) -> Result<()> {
    if q < 1 || q >= n {
        return Err(Error::ParameterRange { n, q });
    }
    let g = n.gcd(&q);
    if g != 1 {
        return Err(Error::NotCoprime { n, q, gcd: g });
    }
    Ok(())
}

fn expand(mut n: u64, mut q: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while q > 0 {
        let a = n.div_ceil(q); // ceiling division
        out.push(a);
        let next = a * q - n;
        n = q;
        q = next;
    }
    out
}

/// Jung–Hirzebruch expansion of `n/q` by ceiling division.
///
/// ```
/// # use recon_d::contfrac::jh_expand;
/// assert_eq!(jh_expand(13, 8).unwrap().alphas, vec![2, 3, 3]);
/// assert_eq!(jh_expand(73, 56).unwrap().alphas, vec![2, 2, 2, 5, 2, 3]);
/// ```
pub fn jh_expand(n: u64, q: u64) -> Result<JhExpansion> {
    validate(n, q)?;
    Ok(JhExpansion { alphas: expand(n, q) })
}

/// Dual expansion: the Jung–Hirzebruch expansion of `n/(n-q)`, indexed from 2.
///
/// ```
/// # use recon_d::contfrac::dual_expand;
/// let d = dual_expand(13, 8).unwrap(); // 13/5 = [3, 3, 2]
/// assert_eq!(d.entries, vec![3, 3, 2]);
/// assert_eq!(d.e, 5);
/// ```
pub fn dual_expand(n: u64, q: u64) -> Result<DualExpansion> {
    validate(n, q)?;
    let entries = expand(n, n - q);
    let e = entries.len() + 2;
    Ok(DualExpansion { entries, e })
}

/// Validates `(n, q)` and classifies the parameters.
///
/// `nu >= 1` holds exactly when `n < 2q`; otherwise the result carries
/// [`CaseTag::OutOfScope`] (still an `Ok` value — scope rejection is the
/// business of the builders that need in-scope data).
pub fn classify(n: u64, q: u64) -> Result<GroupParams> {
    let jh = jh_expand(n, q)?;
    let big_n = jh.len();
    let leading_twos = jh.alphas.iter().take_while(|&&a| a == 2).count();
    let nu = leading_twos.min(big_n.saturating_sub(1));
    let case = if nu == 0 {
        CaseTag::OutOfScope
    } else if nu == big_n - 1 {
        CaseTag::B
    } else {
        CaseTag::A
    };
    Ok(GroupParams {
        n,
        q,
        m: n - q,
        nu,
        case,
    })
}

/// Convenience: classify and reject out-of-scope parameters.
pub fn classify_in_scope(n: u64, q: u64) -> Result<GroupParams> {
    let params = classify(n, q)?;
    if params.case == CaseTag::OutOfScope {
        return Err(Error::OutOfScope { n, q });
    }
    Ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rational};
    use num_traits::Zero;

    /// Rebuilds the fraction from its expansion: `[a_1, ..., a_N]` means
    /// `a_1 - 1/(a_2 - 1/(...))`. Entries are >= 2, so every partial value
    /// exceeds 1 and the reciprocals are always defined.
    fn rebuild(alphas: &[u64]) -> Rational {
        let mut acc = Rational::zero();
        for &a in alphas.iter().rev() {
            acc = if acc.is_zero() {
                rat(a as i64)
            } else {
                rat(a as i64) - acc.recip()
            };
        }
        acc
    }

    #[test]
    fn worked_expansions() {
        assert_eq!(jh_expand(13, 8).unwrap().alphas, vec![2, 3, 3]);
        assert_eq!(jh_expand(73, 56).unwrap().alphas, vec![2, 2, 2, 5, 2, 3]);
        assert_eq!(jh_expand(7, 4).unwrap().alphas, vec![2, 4]);
        assert_eq!(jh_expand(7, 5).unwrap().alphas, vec![2, 2, 3]);
    }

    #[test]
    fn worked_dual_expansions() {
        let d = dual_expand(13, 8).unwrap();
        assert_eq!((d.entries.clone(), d.e), (vec![3, 3, 2], 5));
        assert_eq!(d.a(2), 3);
        assert_eq!(d.a(4), 2);
        let d = dual_expand(7, 4).unwrap(); // 7/3 = [3, 2, 2]
        assert_eq!((d.entries.clone(), d.e), (vec![3, 2, 2], 5));
        let d = dual_expand(7, 5).unwrap(); // 7/2 = [4, 2]
        assert_eq!((d.entries.clone(), d.e), (vec![4, 2], 4));
        for n in 3..=12 {
            let d = dual_expand(n, n - 1).unwrap(); // n/1 = [n]
            assert_eq!((d.entries.clone(), d.e), (vec![n], 3));
        }
    }

    #[test]
    fn classification_of_worked_examples() {
        let p = classify(13, 8).unwrap();
        assert_eq!((p.nu, p.case, p.m), (1, CaseTag::A, 5));
        let p = classify(73, 56).unwrap();
        assert_eq!((p.nu, p.case), (3, CaseTag::A));
        let p = classify(7, 5).unwrap();
        assert_eq!((p.nu, p.case), (2, CaseTag::B));
        let p = classify(7, 4).unwrap();
        assert_eq!((p.nu, p.case), (1, CaseTag::B));
        for n in 3..=12 {
            let p = classify(n, n - 1).unwrap();
            assert_eq!(p.case, CaseTag::B);
            assert_eq!(p.nu, (n - 2) as usize);
            let jh = jh_expand(n, n - 1).unwrap();
            assert_eq!(jh.alpha(jh.len()), 2);
        }
        assert_eq!(classify(11, 4).unwrap().case, CaseTag::OutOfScope);
        assert!(matches!(
            classify_in_scope(11, 4),
            Err(Error::OutOfScope { n: 11, q: 4 })
        ));
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(matches!(jh_expand(6, 4), Err(Error::NotCoprime { .. })));
        assert!(matches!(jh_expand(4, 4), Err(Error::ParameterRange { .. })));
        assert!(matches!(jh_expand(4, 0), Err(Error::ParameterRange { .. })));
        assert!(matches!(jh_expand(4, 5), Err(Error::ParameterRange { .. })));
    }

    #[test]
    fn round_trip_all_coprime_pairs_up_to_120() {
        for n in 2..=120u64 {
            for q in 1..n {
                if n.gcd(&q) != 1 {
                    continue;
                }
                let jh = jh_expand(n, q).unwrap();
                assert!(jh.alphas.iter().all(|&a| a >= 2), "({n},{q}) entry < 2");
                assert_eq!(
                    rebuild(&jh.alphas),
                    Rational::new((n as i64).into(), (q as i64).into()),
                    "round trip failed for ({n},{q})"
                );
                let dual = dual_expand(n, q).unwrap();
                assert_eq!(
                    rebuild(&dual.entries),
                    Rational::new((n as i64).into(), ((n - q) as i64).into()),
                    "dual round trip failed for ({n},{q})"
                );
                // nu >= 1 exactly characterizes n < 2q.
                let params = classify(n, q).unwrap();
                assert_eq!(params.nu >= 1, n < 2 * q, "nu criterion failed for ({n},{q})");
            }
        }
    }
}
