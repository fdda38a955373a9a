//! The eight integer series derived from the two continued-fraction
//! expansions. Every exponent in the arrow representatives and every index in
//! the relation schema comes from this table.
//!
//! With `n/q = [alpha_1, ..., alpha_N]` and `n/(n-q) = [a_2, ..., a_(e-1)]`:
//!
//! - `c_j, d_j, r_j` for `2 <= j <= e`: three linear recurrences driven by
//!   the dual entries (`c`/`d` become the exponents of the two degree-2q
//!   invariants, `r` the exponent of `xy`);
//! - `i_t` for `0 <= t <= N+1`: the ideal-generator degrees along the chain
//!   (`i_0 = n`, `i_1 = q`, strictly decreasing to `i_(N+1) = 0`);
//! - `l_t` for `1 <= t <= N`: `2 + sum_(p<=t) (alpha_p - 2)`;
//! - `b_t` for `0 <= t <= l_N - 1`: which chain vertex the t-th extra arrow
//!   leaves (`b_0 = 1`, `b_(l_N - 1) = N`, otherwise the first vertex whose
//!   alpha-surplus reaches `t`);
//! - `Delta_k, Gamma_k` for `nu+1 <= k <= N+1`: partial sums of `c_(l_t)`,
//!   `d_(l_t)`.
//!
//! [`check_series_identities`] re-verifies the compatibility identities that
//! tie the series together; the relation builder relies on them.

use crate::contfrac::{CaseTag, DualExpansion, GroupParams, JhExpansion};
use crate::error::{Error, Result};

/// All eight series for one parameter pair, with range-checked accessors
/// using the 1-based indexing of the formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable {
    c: Vec<i64>,
    d: Vec<i64>,
    r: Vec<i64>,
    i: Vec<i64>,
    l: Vec<i64>,
    b: Vec<i64>,
    delta: Vec<i64>,
    gamma: Vec<i64>,
    nu: usize,
    e: usize,
    n_len: usize,
}

impl SeriesTable {
    /// `c_j` for `2 <= j <= e`.
    pub fn c(&self, j: usize) -> i64 {
        assert!((2..=self.e).contains(&j), "c index {j} outside 2..={}", self.e);
        self.c[j - 2]
    }

    /// `d_j` for `2 <= j <= e`.
    pub fn d(&self, j: usize) -> i64 {
        assert!((2..=self.e).contains(&j), "d index {j} outside 2..={}", self.e);
        self.d[j - 2]
    }

    /// `r_j` for `2 <= j <= e`.
    pub fn r(&self, j: usize) -> i64 {
        assert!((2..=self.e).contains(&j), "r index {j} outside 2..={}", self.e);
        self.r[j - 2]
    }

    /// `i_t` for `0 <= t <= N+1`.
    pub fn i(&self, t: usize) -> i64 {
        assert!(t <= self.n_len + 1, "i index {t} outside 0..={}", self.n_len + 1);
        self.i[t]
    }

    /// `l_t` for `1 <= t <= N`.
    pub fn l(&self, t: usize) -> i64 {
        assert!((1..=self.n_len).contains(&t), "l index {t} outside 1..={}", self.n_len);
        self.l[t - 1]
    }

    /// `b_t` for `0 <= t <= l_N - 1`.
    pub fn b(&self, t: usize) -> i64 {
        let top = (self.l(self.n_len) - 1) as usize;
        assert!(t <= top, "b index {t} outside 0..={top}");
        self.b[t]
    }

    /// `Delta_k` for `nu+1 <= k <= N+1`.
    pub fn delta(&self, k: usize) -> i64 {
        assert!(
            (self.nu + 1..=self.n_len + 1).contains(&k),
            "Delta index {k} outside {}..={}",
            self.nu + 1,
            self.n_len + 1
        );
        self.delta[k - self.nu - 1]
    }

    /// `Gamma_k` for `nu+1 <= k <= N+1`.
    pub fn gamma(&self, k: usize) -> i64 {
        assert!(
            (self.nu + 1..=self.n_len + 1).contains(&k),
            "Gamma index {k} outside {}..={}",
            self.nu + 1,
            self.n_len + 1
        );
        self.gamma[k - self.nu - 1]
    }

    /// The invariant `e` (dual length plus two).
    pub fn e(&self) -> usize {
        self.e
    }

    /// The chain length `N`.
    pub fn chain_len(&self) -> usize {
        self.n_len
    }
}

/// Computes the full series table. Rejects out-of-scope parameters: the
/// `Delta`/`Gamma` ranges need `nu >= 1`.
pub fn compute_series(
    params: &GroupParams,
    jh: &JhExpansion,
    dual: &DualExpansion,
) -> Result<SeriesTable> {
    if params.case == CaseTag::OutOfScope {
        return Err(Error::OutOfScope {
            n: params.n,
            q: params.q,
        });
    }
    let e = dual.e;
    let n_len = jh.len();
    let nu = params.nu;
    let nq = (params.n - params.q) as i64;
    let a = |j: usize| dual.a(j) as i64;
    let alpha = |t: usize| jh.alpha(t) as i64;

    // c, d, r over indices 2..=e (e >= 3 always).
    let mut c = vec![1, 0];
    let mut d = vec![0, 1];
    let mut r = vec![a(2) * nq - params.q as i64];
    r.push(r[0] - nq);
    if e >= 4 {
        c.push(1);
        d.push(a(3) - 1);
        r.push((a(3) + 1) * r[1] - r[0]);
    }
    for j in 5..=e {
        c.push(a(j - 1) * c[j - 3] - c[j - 4]);
        d.push(a(j - 1) * d[j - 3] - d[j - 4]);
        r.push(a(j - 1) * r[j - 3] - r[j - 4]);
    }

    // i over 0..=N+1.
    let mut i = vec![params.n as i64, params.q as i64];
    for t in 2..=n_len + 1 {
        i.push(alpha(t - 1) * i[t - 1] - i[t - 2]);
    }

    // l over 1..=N (partial alpha-surplus plus 2).
    let mut l = Vec::with_capacity(n_len);
    let mut surplus = 0;
    for t in 1..=n_len {
        surplus += alpha(t) - 2;
        l.push(2 + surplus);
    }
    let l_n = l[n_len - 1];

    // b over 0..=l_N - 1.
    let mut b = vec![1i64];
    for t in 1..=(l_n - 2).max(0) {
        let mut acc = 0;
        let mut chosen = None;
        for p in 1..=n_len {
            acc += alpha(p) - 2;
            if t <= acc {
                chosen = Some(p as i64);
                break;
            }
        }
        b.push(chosen.expect("alpha surplus must reach every extra-arrow index"));
    }
    if l_n >= 2 {
        b.push(n_len as i64);
    }
    debug_assert_eq!(b.len() as i64, l_n);

    // Delta, Gamma over nu+1..=N+1.
    let mut delta = Vec::new();
    let mut gamma = Vec::new();
    for k in nu + 1..=n_len + 1 {
        let mut dsum = 1;
        let mut gsum = 0;
        for t in nu + 1..k {
            let lt = l[t - 1] as usize;
            dsum += c[lt - 2];
            gsum += d[lt - 2];
        }
        delta.push(dsum);
        gamma.push(gsum);
    }

    Ok(SeriesTable {
        c,
        d,
        r,
        i,
        l,
        b,
        delta,
        gamma,
        nu,
        e,
        n_len,
    })
}

/// Re-verifies the identities coupling the series (empty result = all hold):
///
/// - `l_N = e - 1` and `i_(N+1) = 0`, with `i` strictly decreasing;
/// - `r_(t+1) = r_(t+2) + i_(b_t)`, `c_(t+2) = c_(t+1) + Delta_(b_t)` and
///   `d_(t+2) = d_(t+1) + Gamma_(b_t)` for `2 <= t <= e-2`;
/// - `r_(l_t) = i_t - i_(t+1)` for `nu+1 <= t <= N`;
/// - in case B additionally `c_t = t - 3` and `d_t = 1` for `3 <= t <= e`;
/// - `r_j >= 0` throughout (every `xy`-exponent is an honest power).
pub fn check_series_identities(
    params: &GroupParams,
    table: &SeriesTable,
) -> Vec<String> {
    let mut violations = Vec::new();
    let e = table.e;
    let n_len = table.n_len;
    let nu = params.nu;
    let tag = format!("({}, {})", params.n, params.q);

    if table.l(n_len) != (e - 1) as i64 {
        violations.push(format!("{tag}: l_N = {} != e - 1 = {}", table.l(n_len), e - 1));
    }
    if table.i(n_len + 1) != 0 {
        violations.push(format!("{tag}: i_(N+1) = {} != 0", table.i(n_len + 1)));
    }
    for t in 0..=n_len {
        if table.i(t) <= table.i(t + 1) {
            violations.push(format!(
                "{tag}: i_{t} = {} not greater than i_{} = {}",
                table.i(t),
                t + 1,
                table.i(t + 1)
            ));
        }
    }
    for t in 2..=e.saturating_sub(2) {
        let bt = table.b(t) as usize;
        if table.r(t + 1) != table.r(t + 2) + table.i(bt) {
            violations.push(format!(
                "{tag}: r_{} = {} != r_{} + i_(b_{t}) = {} + {}",
                t + 1,
                table.r(t + 1),
                t + 2,
                table.r(t + 2),
                table.i(bt)
            ));
        }
        if table.c(t + 2) != table.c(t + 1) + table.delta(bt) {
            violations.push(format!(
                "{tag}: c_{} = {} != c_{} + Delta_(b_{t}) = {} + {}",
                t + 2,
                table.c(t + 2),
                t + 1,
                table.c(t + 1),
                table.delta(bt)
            ));
        }
        if table.d(t + 2) != table.d(t + 1) + table.gamma(bt) {
            violations.push(format!(
                "{tag}: d_{} = {} != d_{} + Gamma_(b_{t}) = {} + {}",
                t + 2,
                table.d(t + 2),
                t + 1,
                table.d(t + 1),
                table.gamma(bt)
            ));
        }
    }
    for t in nu + 1..=n_len {
        let lt = table.l(t) as usize;
        if table.r(lt) != table.i(t) - table.i(t + 1) {
            violations.push(format!(
                "{tag}: r_(l_{t}) = {} != i_{t} - i_{} = {}",
                table.r(lt),
                t + 1,
                table.i(t) - table.i(t + 1)
            ));
        }
    }
    if params.case == CaseTag::B {
        for t in 3..=e {
            if table.c(t) != (t as i64) - 3 {
                violations.push(format!("{tag}: case B c_{t} = {} != {}", table.c(t), t as i64 - 3));
            }
            if table.d(t) != 1 {
                violations.push(format!("{tag}: case B d_{t} = {} != 1", table.d(t)));
            }
        }
    }
    for j in 2..=e {
        if table.r(j) < 0 {
            violations.push(format!("{tag}: r_{j} = {} is negative", table.r(j)));
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::{classify, dual_expand, jh_expand};
    use num_integer::Integer;

    fn table_for(n: u64, q: u64) -> (GroupParams, SeriesTable) {
        let params = classify(n, q).unwrap();
        let jh = jh_expand(n, q).unwrap();
        let dual = dual_expand(n, q).unwrap();
        let table = compute_series(&params, &jh, &dual).unwrap();
        (params, table)
    }

    #[test]
    fn worked_table_for_13_8() {
        let (_, t) = table_for(13, 8);
        assert_eq!((0..=4).map(|k| t.i(k)).collect::<Vec<_>>(), vec![13, 8, 3, 1, 0]);
        assert_eq!((2..=5).map(|j| t.r(j)).collect::<Vec<_>>(), vec![7, 2, 1, 0]);
        assert_eq!(t.c(5), 2);
        assert_eq!(t.d(5), 3);
        assert_eq!((1..=3).map(|k| t.l(k)).collect::<Vec<_>>(), vec![2, 3, 4]);
        assert_eq!((0..=3).map(|k| t.b(k)).collect::<Vec<_>>(), vec![1, 2, 3, 3]);
        assert_eq!((t.delta(3), t.gamma(3)), (1, 1));
        assert_eq!((t.delta(4), t.gamma(4)), (2, 3));
    }

    #[test]
    fn worked_table_for_73_56() {
        let (_, t) = table_for(73, 56);
        assert_eq!(
            (2..=7).map(|j| t.r(j)).collect::<Vec<_>>(),
            vec![29, 12, 7, 2, 1, 0]
        );
        assert_eq!(
            (2..=7).map(|j| t.c(j)).collect::<Vec<_>>(),
            vec![1, 0, 1, 2, 7, 12]
        );
        assert_eq!(
            (2..=7).map(|j| t.d(j)).collect::<Vec<_>>(),
            vec![0, 1, 1, 1, 3, 5]
        );
        assert_eq!(
            (0..=7).map(|k| t.i(k)).collect::<Vec<_>>(),
            vec![73, 56, 39, 22, 5, 3, 1, 0]
        );
        assert_eq!((1..=6).map(|k| t.l(k)).collect::<Vec<_>>(), vec![2, 2, 2, 5, 5, 6]);
        assert_eq!((0..=5).map(|k| t.b(k)).collect::<Vec<_>>(), vec![1, 4, 4, 4, 6, 6]);
    }

    #[test]
    fn worked_tables_for_the_small_examples() {
        let (_, t) = table_for(7, 4);
        assert_eq!((2..=5).map(|j| t.r(j)).collect::<Vec<_>>(), vec![5, 2, 1, 0]);
        assert_eq!((0..=3).map(|k| t.i(k)).collect::<Vec<_>>(), vec![7, 4, 1, 0]);
        assert_eq!((1..=2).map(|k| t.l(k)).collect::<Vec<_>>(), vec![2, 4]);
        assert_eq!((0..=3).map(|k| t.b(k)).collect::<Vec<_>>(), vec![1, 2, 2, 2]);

        // Case B identities hold over the defined range 3..=e only.
        let (p, t) = table_for(7, 5);
        assert_eq!(p.case, CaseTag::B);
        assert_eq!(t.e(), 4);
        assert_eq!((t.c(3), t.c(4)), (0, 1));
        assert_eq!((t.d(3), t.d(4)), (1, 1));
        assert_eq!((2..=4).map(|j| t.r(j)).collect::<Vec<_>>(), vec![3, 1, 0]);
    }

    #[test]
    fn degenerate_tables() {
        for n in 3..=12 {
            let (_, t) = table_for(n, n - 1);
            assert_eq!(t.e(), 3);
            assert_eq!((t.r(2), t.r(3)), (1, 0));
            assert_eq!((t.c(2), t.c(3)), (1, 0));
            assert_eq!((t.d(2), t.d(3)), (0, 1));
        }
    }

    #[test]
    fn series_identities_hold_up_to_120() {
        let mut checked = 0;
        for n in 3..=120u64 {
            for q in (n / 2 + 1)..n {
                if n.gcd(&q) != 1 {
                    continue;
                }
                let (params, table) = table_for(n, q);
                let violations = check_series_identities(&params, &table);
                assert!(
                    violations.is_empty(),
                    "series identities failed: {violations:?}"
                );
                checked += 1;
            }
        }
        assert!(checked > 1000, "sweep covered only {checked} pairs");
    }
}
