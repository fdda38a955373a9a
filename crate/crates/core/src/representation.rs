//! Matrix representatives of the arrows and machine verification of the
//! relations.
//!
//! Every arrow is assigned a small matrix over `Q[x, y]` (shape
//! `rank(source) x rank(target)`, composing left to right), built from:
//!
//! - the horn/chain exponent `m = n - q`;
//! - the star-adjacent exponent (an entry of the `i`-series in the generic
//!   case, `1` in the boundary case) and the twist `(xy)^{r_3}`;
//! - powers of the invariant polynomials on the clockwise and extra arrows,
//!   with exponents read off the `r`/`c`/`d` series.
//!
//! The moduli presentation uses the factored invariant pair `w_2, w_3`, the
//! symmetric presentation the binomial pair `v_2, v_3`.
//!
//! [`verify_relations`] evaluates every defining relation on the assignment
//! and reports any nonzero residue; [`point_representation`] and
//! [`star_generated`] specialize a degenerate-parameter assignment at a
//! point of the plane and test that the star generates it.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::arith::{rat, BivarPoly, PolyMatrix, Rational};
use crate::contfrac::CaseTag;
use crate::error::{Error, Result};
use crate::quiver::{PathSum, PathWord, Presentation, Quiver, VertexTag};
use crate::relations::relations;
use crate::series::SeriesTable;

type P = BivarPoly<Rational>;
type M = PolyMatrix<Rational>;

/// The invariant polynomials of the group action, in both the factored
/// (`w`) and binomial (`v`) forms.
#[derive(Clone, Debug)]
pub struct InvariantPolys {
    pub q: u64,
    /// Leading entry of the dual expansion; its parity fixes the signs.
    pub a2: u64,
    /// `x * y`.
    pub w1: P,
    /// `(x^q + y^q) * (x^q + (-1)^a2 * y^q)`.
    pub w2: P,
    /// `(x^q - y^q) * (x^q + (-1)^a2 * y^q)`.
    pub w3: P,
    /// `x^2q + (-1)^a2 * y^2q`.
    pub v2: P,
    /// `x^2q + (-1)^(a2-1) * y^2q`.
    pub v3: P,
}

impl InvariantPolys {
    pub fn new(q: u64, a2: u64) -> Self {
        let q32 = u32::try_from(q).expect("q fits in matrix exponents");
        let sign: i64 = if a2.is_multiple_of(2) { 1 } else { -1 };
        let xq = P::int_monomial(1, q32, 0);
        let plus = xq.add(&P::int_monomial(1, 0, q32));
        let minus = xq.sub(&P::int_monomial(1, 0, q32));
        let signed = xq.add(&P::int_monomial(sign, 0, q32));
        InvariantPolys {
            q,
            a2,
            w1: P::x().mul(&P::y()),
            w2: plus.mul(&signed),
            w3: minus.mul(&signed),
            v2: P::int_monomial(1, 2 * q32, 0).add(&P::int_monomial(sign, 0, 2 * q32)),
            v3: P::int_monomial(1, 2 * q32, 0).add(&P::int_monomial(-sign, 0, 2 * q32)),
        }
    }

    /// The factored or binomial pair, as the presentation demands.
    pub fn pair(&self, presentation: Presentation) -> (&P, &P) {
        match presentation {
            Presentation::Moduli => (&self.w2, &self.w3),
            Presentation::Symmetric => (&self.v2, &self.v3),
        }
    }
}

fn exp(v: i64) -> u32 {
    u32::try_from(v).expect("series exponents are nonnegative")
}

fn diag(a: P, b: P) -> M {
    M::new(2, 2, vec![a, P::zero(), P::zero(), b])
}

/// Assigns a matrix to every arrow of the quiver.
pub fn representatives(
    quiver: &Quiver,
    series: &SeriesTable,
    inv: &InvariantPolys,
    presentation: Presentation,
) -> BTreeMap<String, M> {
    let params = &quiver.params;
    let n_len = quiver.chain_len();
    let split = match params.case {
        CaseTag::A => params.nu,
        _ => n_len - 1,
    };
    let m = u32::try_from(params.m).expect("m fits in matrix exponents");
    let star_exp = match params.case {
        CaseTag::A => exp(series.i(params.nu + 1)),
        _ => 1,
    };

    let xm = P::int_monomial(1, m, 0);
    let ym = P::int_monomial(1, 0, m);
    let xd = P::int_monomial(1, star_exp, 0);
    let yd = P::int_monomial(1, 0, star_exp);
    let xy = P::x().mul(&P::y());
    let twist = xy.pow0(exp(series.r(3)));
    let (w2, w3) = inv.pair(presentation);

    let mut reps = BTreeMap::new();
    reps.insert("g_{+,1}".to_string(), M::row(vec![ym.neg(), xm.clone()]));
    reps.insert("f_{1,+}".to_string(), M::col(vec![xm.clone(), ym.clone()]));
    reps.insert("g_{-,1}".to_string(), M::row(vec![ym.clone(), xm.clone()]));
    reps.insert("f_{1,-}".to_string(), M::col(vec![xm.clone(), ym.neg()]));
    for t in 1..split {
        reps.insert(
            format!("f_{{{t},{}}}", t + 1),
            diag(ym.neg(), xm.clone()),
        );
        reps.insert(
            format!("g_{{{},{t}}}", t + 1),
            diag(xm.clone(), ym.clone()),
        );
    }
    reps.insert(
        format!("g_{{{split},0}}"),
        M::col(vec![yd.neg(), xd.clone()]).scale_poly(&twist),
    );
    reps.insert(format!("f_{{0,{split}}}"), M::row(vec![xd.clone(), yd.clone()]));
    reps.insert(
        format!("g_{{{split},{}}}", split + 1),
        M::col(vec![yd.clone(), xd.clone()]),
    );
    reps.insert(
        format!("f_{{{},{split}}}", split + 1),
        M::row(vec![xd, yd.neg()]).scale_poly(&twist),
    );

    match params.case {
        CaseTag::A => {
            let nu = params.nu;
            for t in nu + 1..n_len {
                let drop = exp(series.i(t) - series.i(t + 1));
                reps.insert(
                    format!("a_{{{},{t}}}", t + 1),
                    M::from_poly(xy.pow(drop)),
                );
            }
            reps.insert(format!("a_{{0,{n_len}}}"), M::from_poly(xy.clone()));
            for t in nu + 1..=n_len {
                let name = if t < n_len {
                    format!("c_{{{t},{}}}", t + 1)
                } else {
                    format!("c_{{{n_len},0}}")
                };
                let l_t = series.l(t) as usize;
                let poly = w2
                    .pow0(exp(series.c(l_t)))
                    .mul(&w3.pow0(exp(series.d(l_t))));
                reps.insert(name, M::from_poly(poly));
            }
            let l_n = series.l(n_len) as usize;
            for j in 2..=l_n.saturating_sub(2) {
                let poly = xy
                    .pow0(exp(series.r(j + 2)))
                    .mul(&w2.pow0(exp(series.c(j + 1))))
                    .mul(&w3.pow0(exp(series.d(j + 1))));
                reps.insert(format!("k_{j}"), M::from_poly(poly));
            }
        }
        _ => {
            let extras = quiver
                .arrows()
                .iter()
                .filter(|a| matches!(a.kind, crate::quiver::ArrowKind::K(_)))
                .count();
            for t in 1..=extras {
                let poly = xy
                    .pow0(exp(series.r(t + 3)))
                    .mul(&w2.pow0(exp(series.c(t + 2))))
                    .mul(&w3.pow0(exp(series.d(t + 2))));
                reps.insert(format!("k_{t}"), M::from_poly(poly));
            }
        }
    }
    reps
}

/// Checks every representative has shape `rank(source) x rank(target)` and
/// every arrow has a representative.
pub fn check_shapes(quiver: &Quiver, reps: &BTreeMap<String, M>) -> Result<()> {
    for arrow in quiver.arrows() {
        let rep = reps.get(&arrow.name).ok_or_else(|| Error::UnknownArrow {
            name: arrow.name.clone(),
        })?;
        let want = (quiver.rank(arrow.source), quiver.rank(arrow.target));
        if rep.shape() != want {
            return Err(Error::AssignmentShape {
                arrow: arrow.name.clone(),
                got_rows: rep.rows(),
                got_cols: rep.cols(),
                want_rows: want.0,
                want_cols: want.1,
            });
        }
    }
    Ok(())
}

/// Evaluates a path word as a matrix product (identity for trivial paths).
pub fn evaluate_path(
    quiver: &Quiver,
    reps: &BTreeMap<String, M>,
    word: &PathWord,
) -> Result<M> {
    let mut acc = M::identity(quiver.rank(word.source));
    for name in &word.arrows {
        let rep = reps
            .get(name)
            .ok_or_else(|| Error::UnknownArrow { name: name.clone() })?;
        acc = acc.mul(rep)?;
    }
    Ok(acc)
}

/// Evaluates a formal sum of parallel paths.
pub fn evaluate_sum(
    quiver: &Quiver,
    reps: &BTreeMap<String, M>,
    sum: &PathSum,
) -> Result<M> {
    let first = sum.first().expect("path sums are nonempty");
    let mut acc = M::zero(
        quiver.rank(first.1.source),
        quiver.rank(first.1.target),
    );
    for (coeff, word) in sum {
        acc = acc.add(&evaluate_path(quiver, reps, word)?.scale(coeff));
    }
    Ok(acc)
}

/// Evaluates every defining relation on the standard assignment and
/// returns the labels (with shapes) of any nonzero residues.
pub fn verify_relations(
    quiver: &Quiver,
    series: &SeriesTable,
    inv: &InvariantPolys,
    presentation: Presentation,
) -> Result<Vec<String>> {
    let reps = representatives(quiver, series, inv, presentation);
    check_shapes(quiver, &reps)?;
    let mut violations = Vec::new();
    for relation in relations(quiver, presentation)? {
        let residue = evaluate_sum(quiver, &reps, &relation.terms)?;
        if !residue.is_zero() {
            violations.push(format!(
                "{} ({} -> {}): nonzero residue {}",
                relation.label, relation.source, relation.target, residue
            ));
        }
    }
    Ok(violations)
}

/// A representative specialized at a point: plain rational matrices.
pub type PointMatrix = Vec<Vec<Rational>>;

/// Specializes the matrix assignment of a degenerate parameter pair
/// (`q = n - 1`) at a nonzero point of the plane.
pub fn point_representation(
    quiver: &Quiver,
    reps: &BTreeMap<String, M>,
    x: &Rational,
    y: &Rational,
) -> Result<BTreeMap<String, PointMatrix>> {
    let params = &quiver.params;
    if params.q != params.n - 1 {
        return Err(Error::NotDegenerate {
            n: params.n,
            q: params.q,
        });
    }
    if x.is_zero() && y.is_zero() {
        return Err(Error::ZeroPoint);
    }
    let mut out = BTreeMap::new();
    for (name, rep) in reps {
        let (rows, cols) = rep.shape();
        let matrix = (0..rows)
            .map(|i| (0..cols).map(|j| rep.entry(i, j).eval(x, y)).collect())
            .collect();
        out.insert(name.clone(), matrix);
    }
    Ok(out)
}

/// Inserts a vector into a reduced row basis; returns true if the span grew.
fn rref_insert(basis: &mut Vec<Vec<Rational>>, mut v: Vec<Rational>) -> bool {
    for row in basis.iter() {
        let pivot = row
            .iter()
            .position(|c| !c.is_zero())
            .expect("basis rows are nonzero");
        if !v[pivot].is_zero() {
            let factor = v[pivot].clone();
            for (vk, rk) in v.iter_mut().zip(row) {
                *vk -= &factor * rk;
            }
        }
    }
    let Some(pivot) = v.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    let lead = v[pivot].clone();
    for vk in &mut v {
        *vk /= &lead;
    }
    for row in basis.iter_mut() {
        if !row[pivot].is_zero() {
            let factor = row[pivot].clone();
            for (rk, vk) in row.iter_mut().zip(&v) {
                *rk -= &factor * vk;
            }
        }
    }
    basis.push(v);
    true
}

/// True when the row space at the star propagates along the arrows to the
/// full space at every vertex.
pub fn star_generated(quiver: &Quiver, point_reps: &BTreeMap<String, PointMatrix>) -> bool {
    let mut spans: BTreeMap<VertexTag, Vec<Vec<Rational>>> = quiver
        .vertices()
        .iter()
        .map(|v| (v.tag, Vec::new()))
        .collect();
    rref_insert(spans.get_mut(&VertexTag::Star).unwrap(), vec![rat(1)]);

    loop {
        let mut changed = false;
        for arrow in quiver.arrows() {
            let matrix = &point_reps[&arrow.name];
            let source_rows = spans[&arrow.source].clone();
            let cols = quiver.rank(arrow.target);
            for row in source_rows {
                let image: Vec<Rational> = (0..cols)
                    .map(|j| {
                        row.iter()
                            .zip(matrix)
                            .map(|(ri, mrow)| ri * &mrow[j])
                            .sum()
                    })
                    .collect();
                changed |= rref_insert(spans.get_mut(&arrow.target).unwrap(), image);
            }
        }
        if !changed {
            break;
        }
    }
    quiver
        .vertices()
        .iter()
        .all(|v| spans[&v.tag].len() == v.rank)
}
