//! Affine charts on the moduli space of stable quiver representations for
//! the two built-in parameter pairs `(3, 2)` and `(5, 3)`.
//!
//! At dimension vector `(1; 1, 2, 1; 1)` with weight `+1` on every
//! non-star vertex, the moduli space is covered by five charts. Each chart
//! is described by pinning two arrows to standard basis vectors and
//! normalizing three paths to `1`; the remaining matrix entries become
//! coordinates. Imposing the algebra relations and eliminating every
//! variable that occurs as a bare linear term cuts each chart down to one
//! hypersurface equation in three coordinates.
//!
//! The birational glue maps between overlapping charts are stored as
//! substitutions with Laurent-monomial entries; [`verify_glue`] checks
//! that the pulled-back target equation is a unit multiple of the source
//! equation after clearing denominators.

use std::collections::{BTreeMap, BTreeSet};

use crate::arith::{rat, Monomial, MultiPoly, Rational};
use crate::contfrac::{classify, dual_expand, jh_expand};
use crate::error::{Error, Result};
use crate::quiver::{build_quiver, Presentation, Quiver, VertexTag};
use crate::relations::relations;
use crate::series::compute_series;

/// Dimension vector and stability weight for the chart construction: the
/// dimensions are the vertex ranks, the weight is `+1` away from the star
/// and minus the total non-star dimension on the star, so the pairing with
/// the dimension vector vanishes.
#[derive(Clone, Debug)]
pub struct StabilityData {
    pub dims: BTreeMap<VertexTag, usize>,
    pub theta: BTreeMap<VertexTag, i64>,
}

impl StabilityData {
    /// The pairing `theta . dim`; zero for every quiver.
    pub fn pairing(&self) -> i64 {
        self.dims
            .iter()
            .map(|(v, d)| self.theta[v] * *d as i64)
            .sum()
    }
}

/// Reads the dimension vector off the quiver and balances the weight.
pub fn stability_data(quiver: &Quiver) -> StabilityData {
    let dims: BTreeMap<VertexTag, usize> = quiver
        .vertices()
        .iter()
        .map(|v| (v.tag, v.rank))
        .collect();
    let non_star: i64 = dims
        .iter()
        .filter(|(v, _)| **v != VertexTag::Star)
        .map(|(_, d)| *d as i64)
        .sum();
    let theta = dims
        .keys()
        .map(|v| {
            let w = if *v == VertexTag::Star { -non_star } else { 1 };
            (*v, w)
        })
        .collect();
    StabilityData { dims, theta }
}

/// Recipe for one chart: which arrows are pinned to which standard basis
/// vector, which paths are normalized to `1`, and which variables the
/// final description keeps as coordinates.
#[derive(Clone, Debug)]
pub struct ChartSpec {
    pub name: String,
    /// `(letter, index)`: the arrow named by `letter` is pinned to the
    /// standard basis vector with a `1` in slot `index` (0-based).
    pub pinned: Vec<(char, usize)>,
    /// Scalar paths, written as strings of arrow letters, set equal to `1`.
    pub unit_paths: Vec<String>,
    /// Coordinates the eliminated description keeps, in display order.
    pub preferred: Vec<String>,
}

/// Single-letter names for the arrows of the two built-in quivers;
/// lowercase letters point into the doubled vertex, uppercase out of it.
fn arrow_for_letter(letter: char) -> Option<&'static str> {
    Some(match letter {
        'a' => "f_{0,1}",
        'A' => "g_{1,0}",
        'b' => "g_{+,1}",
        'B' => "f_{1,+}",
        'c' => "g_{-,1}",
        'C' => "f_{1,-}",
        'd' => "f_{2,1}",
        'D' => "g_{1,2}",
        'k' => "k_1",
        _ => return None,
    })
}

fn letter_for_arrow(name: &str) -> Option<char> {
    "aAbBcCdDk"
        .chars()
        .find(|&l| arrow_for_letter(l) == Some(name))
}

fn spec(name: &str, pinned: &[(char, usize)], paths: &[&str], preferred: &[&str]) -> ChartSpec {
    ChartSpec {
        name: name.to_string(),
        pinned: pinned.to_vec(),
        unit_paths: paths.iter().map(|p| p.to_string()).collect(),
        preferred: preferred.iter().map(|v| v.to_string()).collect(),
    }
}

/// The five chart recipes for a supported parameter pair.
pub fn builtin_chart_specs(n: u64, q: u64) -> Result<Vec<ChartSpec>> {
    let first_chart_vars: &[&str] = match (n, q) {
        (3, 2) => &["d_1", "D_1", "C_2"],
        (5, 3) => &["k_1", "D_1", "C_2"],
        _ => return Err(Error::UnsupportedChartParams { n, q }),
    };
    let a0 = ('a', 0);
    let b1 = ('b', 1);
    let d1 = ('d', 1);
    Ok(vec![
        spec("U_0", &[a0, b1], &["aB", "aC", "aBbD"], first_chart_vars),
        spec("U_1", &[a0, b1], &["aB", "aC", "aD"], &["d_2", "D_2", "C_2"]),
        spec("U_2", &[a0, d1], &["aB", "aC", "aD"], &["b_2", "B_2", "C_2"]),
        spec("U_+", &[a0, d1], &["aB", "aDdC", "aD"], &["c_1", "C_1", "B_2"]),
        spec("U_-", &[a0, d1], &["aDdB", "aC", "aD"], &["b_1", "B_1", "C_2"]),
    ])
}

/// One affine chart after elimination.
#[derive(Clone, Debug)]
pub struct Chart {
    pub name: String,
    /// The surviving coordinates, in the order the chart spec prefers them.
    pub variables: Vec<String>,
    /// Every eliminated variable, expressed in the surviving coordinates.
    pub bindings: BTreeMap<String, MultiPoly>,
    /// Defining equations in the surviving coordinates, canonicalized.
    pub equations: Vec<MultiPoly>,
}

type SymMatrix = Vec<Vec<MultiPoly>>;

fn sym_mul(a: &SymMatrix, b: &SymMatrix) -> SymMatrix {
    let (rows, inner, cols) = (a.len(), b.len(), b[0].len());
    assert_eq!(a[0].len(), inner, "path factors must be composable");
    let mut out = vec![vec![MultiPoly::zero(); cols]; rows];
    for (r, out_row) in out.iter_mut().enumerate() {
        for (c, slot) in out_row.iter_mut().enumerate() {
            for (k, b_row) in b.iter().enumerate() {
                *slot = slot.add(&a[r][k].mul(&b_row[c]));
            }
        }
    }
    out
}

fn sym_identity(size: usize) -> SymMatrix {
    let mut out = vec![vec![MultiPoly::zero(); size]; size];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = MultiPoly::one();
    }
    out
}

/// Assigns a symbolic matrix to every arrow: pinned arrows become constant
/// basis vectors, the extra arrow becomes the single slot `2 * k_1` (its
/// chart coordinate is half the arrow), and everything else gets one fresh
/// variable per entry, named `letter_index` with 1-based indices.
fn instantiate_arrows(quiver: &Quiver, chart: &ChartSpec) -> Result<BTreeMap<String, SymMatrix>> {
    let pinned: BTreeMap<char, usize> = chart.pinned.iter().copied().collect();
    let mut table = BTreeMap::new();
    for arrow in quiver.arrows() {
        let letter = letter_for_arrow(&arrow.name).ok_or_else(|| Error::UnknownArrow {
            name: arrow.name.clone(),
        })?;
        let rows = quiver.rank(arrow.source);
        let cols = quiver.rank(arrow.target);
        let mut matrix = vec![vec![MultiPoly::zero(); cols]; rows];
        if let Some(&slot) = pinned.get(&letter) {
            let (r, c) = if rows == 1 { (0, slot) } else { (slot, 0) };
            matrix[r][c] = MultiPoly::one();
        } else if letter == 'k' {
            matrix[0][0] = MultiPoly::term(rat(2), &[("k_1", 1)]);
        } else {
            for (r, row) in matrix.iter_mut().enumerate() {
                for (c, slot) in row.iter_mut().enumerate() {
                    let index = r * cols + c + 1;
                    *slot = MultiPoly::var(&format!("{letter}_{index}"));
                }
            }
        }
        table.insert(arrow.name.clone(), matrix);
    }
    Ok(table)
}

fn evaluate_letters(
    quiver: &Quiver,
    table: &BTreeMap<String, SymMatrix>,
    word: &str,
) -> Result<MultiPoly> {
    let mut value: Option<SymMatrix> = None;
    for letter in word.chars() {
        let name = arrow_for_letter(letter).ok_or_else(|| Error::UnknownArrow {
            name: letter.to_string(),
        })?;
        quiver.arrow(name)?;
        let factor = &table[name];
        value = Some(match value {
            None => factor.clone(),
            Some(acc) => sym_mul(&acc, factor),
        });
    }
    let value = value.expect("unit paths are nonempty");
    assert_eq!((value.len(), value[0].len()), (1, 1), "unit paths are scalar");
    Ok(value[0][0].clone())
}

/// A variable is solvable in an equation when it occurs in exactly one
/// term and that term is the bare variable with a constant coefficient.
fn solvable(eq: &MultiPoly, var: &str) -> bool {
    let mut touching = eq.terms().filter(|(m, _)| m.exponent(var) != 0);
    let bare = touching
        .next()
        .is_some_and(|(m, _)| m.total_degree() == 1 && m.exponent(var) == 1);
    bare && touching.next().is_none()
}

/// Rewrites `eq = 0` as `var = expr` for a solvable variable.
fn solve_for(eq: &MultiPoly, var: &str) -> MultiPoly {
    let coeff = eq
        .terms()
        .find(|(m, _)| m.exponent(var) != 0)
        .map(|(_, c)| c.clone())
        .expect("solvable variable occurs");
    let rest = eq.sub(&MultiPoly::term(coeff.clone(), &[(var, 1)]));
    rest.scale(&(-coeff.recip()))
}

/// Builds one chart: instantiates the arrows, collects the normalization
/// and relation equations, eliminates bare linear variables (preferring to
/// keep the chart spec's coordinates), and tidies the remainder.
pub fn build_chart(quiver: &Quiver, chart: &ChartSpec) -> Result<Chart> {
    let params = &quiver.params;
    if !matches!((params.n, params.q), (3, 2) | (5, 3)) {
        return Err(Error::UnsupportedChartParams {
            n: params.n,
            q: params.q,
        });
    }
    let table = instantiate_arrows(quiver, chart)?;

    let mut equations: Vec<MultiPoly> = Vec::new();
    for path in &chart.unit_paths {
        let value = evaluate_letters(quiver, &table, path)?;
        equations.push(value.sub(&MultiPoly::one()));
    }
    for relation in relations(quiver, Presentation::Moduli)? {
        let rows = quiver.rank(relation.source);
        let cols = quiver.rank(relation.target);
        let mut value = vec![vec![MultiPoly::zero(); cols]; rows];
        for (coeff, word) in &relation.terms {
            let mut factor = sym_identity(quiver.rank(word.source));
            for arrow in &word.arrows {
                factor = sym_mul(&factor, &table[arrow]);
            }
            for (r, row) in factor.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    value[r][c] = value[r][c].add(&entry.scale(coeff));
                }
            }
        }
        for row in value {
            equations.extend(row);
        }
    }

    let preferred: BTreeSet<&str> = chart.preferred.iter().map(|v| v.as_str()).collect();
    let mut bindings: Vec<(String, MultiPoly)> = Vec::new();
    loop {
        let pick = |allow: &dyn Fn(&str) -> bool| {
            equations.iter().enumerate().find_map(|(idx, eq)| {
                eq.vars()
                    .into_iter()
                    .find(|v| allow(v) && solvable(eq, v))
                    .map(|v| (idx, v))
            })
        };
        let found = pick(&|v| !preferred.contains(v)).or_else(|| pick(&|_| true));
        let Some((idx, var)) = found else { break };
        let eq = equations.remove(idx);
        let expr = solve_for(&eq, &var);
        let map = BTreeMap::from([(var.clone(), expr.clone())]);
        for e in &mut equations {
            *e = e.substitute(&map);
        }
        for (_, b) in &mut bindings {
            *b = b.substitute(&map);
        }
        bindings.push((var, expr));
    }

    let mut kept: Vec<MultiPoly> = Vec::new();
    for eq in &equations {
        if eq.is_zero() {
            continue;
        }
        if eq.vars().is_empty() {
            return Err(Error::ChartEmpty {
                chart: chart.name.clone(),
            });
        }
        let canon = eq.canonicalized();
        if kept.iter().any(|k| canon.divide_exact(k).is_some()) {
            continue;
        }
        kept.push(canon);
    }

    let live: BTreeSet<String> = table
        .values()
        .flat_map(|m| m.iter().flat_map(|row| row.iter().flat_map(|e| e.vars())))
        .filter(|v| !bindings.iter().any(|(b, _)| b == v))
        .collect();
    let wanted: BTreeSet<String> = chart.preferred.iter().cloned().collect();
    if live != wanted {
        let stray: Vec<String> = live.symmetric_difference(&wanted).cloned().collect();
        return Err(Error::EliminationStalled {
            chart: chart.name.clone(),
            variables: stray,
        });
    }

    Ok(Chart {
        name: chart.name.clone(),
        variables: chart.preferred.clone(),
        bindings: bindings.into_iter().collect(),
        equations: kept,
    })
}

/// Builds the quiver for `(n, q)` and runs every built-in chart recipe.
pub fn build_charts(n: u64, q: u64) -> Result<Vec<Chart>> {
    let specs = builtin_chart_specs(n, q)?;
    let params = classify(n, q)?;
    let jh = jh_expand(n, q)?;
    let dual = dual_expand(n, q)?;
    let series = compute_series(&params, &jh, &dual)?;
    let quiver = build_quiver(&params, &jh, &series)?;
    specs.iter().map(|s| build_chart(&quiver, s)).collect()
}

/// A birational glue between two charts: each target coordinate is a
/// Laurent expression in source-chart variables (bound source variables
/// are allowed in polynomial entries). `unit` is the expected constant
/// relating the pulled-back target equation to the source equation once
/// both are in canonical form.
#[derive(Clone, Debug)]
pub struct GlueMap {
    pub from: String,
    pub to: String,
    pub forward: BTreeMap<String, MultiPoly>,
    pub unit: Rational,
}

fn glue(from: &str, to: &str, forward: &[(&str, MultiPoly)], unit: i64) -> GlueMap {
    GlueMap {
        from: from.to_string(),
        to: to.to_string(),
        forward: forward
            .iter()
            .map(|(v, p)| (v.to_string(), p.clone()))
            .collect(),
        unit: rat(unit),
    }
}

/// The glue maps between neighbouring built-in charts. Only the first one
/// differs between the two parameter pairs.
pub fn builtin_glue_maps(n: u64, q: u64) -> Result<Vec<GlueMap>> {
    let first = match (n, q) {
        (3, 2) => glue(
            "U_0",
            "U_1",
            &[
                ("d_2", MultiPoly::term(rat(-1), &[("d_1", 1), ("D_1", 2)])),
                ("D_2", MultiPoly::var_pow("D_1", -1)),
                ("C_2", MultiPoly::var("C_2")),
            ],
            -1,
        ),
        (5, 3) => glue(
            "U_0",
            "U_1",
            &[
                ("d_2", MultiPoly::term(rat(-1), &[("k_1", 1), ("D_1", 3)])),
                ("D_2", MultiPoly::var_pow("D_1", -1)),
                ("C_2", MultiPoly::var("C_2")),
            ],
            -1,
        ),
        _ => return Err(Error::UnsupportedChartParams { n, q }),
    };
    Ok(vec![
        first,
        glue(
            "U_1",
            "U_2",
            &[
                ("b_2", MultiPoly::var_pow("d_2", -1)),
                ("B_2", MultiPoly::term(rat(-1), &[("d_2", 1), ("D_2", 1)])),
                ("C_2", MultiPoly::var("C_2").neg()),
            ],
            1,
        ),
        glue(
            "U_2",
            "U_+",
            &[
                ("c_1", MultiPoly::term(rat(-1), &[("c_2", 1), ("C_2", 2)])),
                ("C_1", MultiPoly::var_pow("C_2", -1)),
                ("B_2", MultiPoly::var("B_2")),
            ],
            -1,
        ),
        glue(
            "U_2",
            "U_-",
            &[
                ("b_1", MultiPoly::term(rat(-1), &[("b_2", 1), ("B_2", 2)])),
                ("B_1", MultiPoly::var_pow("B_2", -1)),
                ("C_2", MultiPoly::var("C_2")),
            ],
            1,
        ),
    ])
}

/// Checks a glue map as an exact Laurent identity: pulls the target
/// equation back along the substitution, rewrites bound source variables,
/// clears denominators, and divides by the source equation. Succeeds when
/// the quotient is the expected unit; returns that quotient.
pub fn verify_glue(source: &Chart, target: &Chart, map: &GlueMap) -> Result<MultiPoly> {
    let fail = |reason: String| Error::GlueFailed {
        from: map.from.clone(),
        to: map.to.clone(),
        reason,
    };
    for var in &target.variables {
        if !map.forward.contains_key(var) {
            return Err(fail(format!("target coordinate {var} has no image")));
        }
    }
    // Rewrite bound source variables inside the substitution first; Laurent
    // entries must already be in chart coordinates.
    let mut composed = BTreeMap::new();
    for (var, expr) in &map.forward {
        let resolved = if expr.is_polynomial() {
            expr.substitute(&source.bindings)
        } else {
            if expr.vars().iter().any(|v| source.bindings.contains_key(v)) {
                return Err(fail(format!(
                    "Laurent image of {var} uses an eliminated source variable"
                )));
            }
            expr.clone()
        };
        composed.insert(var.clone(), resolved);
    }

    let [target_eq] = target.equations.as_slice() else {
        return Err(fail("target chart is not a hypersurface".to_string()));
    };
    let [source_eq] = source.equations.as_slice() else {
        return Err(fail("source chart is not a hypersurface".to_string()));
    };
    let (cleared, _) = target_eq.substitute(&composed).clear_denominators();
    if cleared.is_zero() {
        return Err(fail("target equation pulls back to zero".to_string()));
    }
    let quotient = cleared
        .divide_exact(source_eq)
        .ok_or_else(|| fail("pullback is not a multiple of the source equation".to_string()))?;
    match quotient.as_single_term() {
        Some((c, m)) if m == Monomial::one() && c == map.unit => Ok(quotient),
        _ => Err(fail(format!(
            "pullback is {quotient} times the source equation, expected {}",
            map.unit
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(c: i64, pairs: &[(&str, i64)]) -> MultiPoly {
        MultiPoly::term(rat(c), pairs)
    }

    fn published_3_2(name: &str) -> MultiPoly {
        let poly = match name {
            // d_1 D_1 = (d_1 D_1^2 - 1) C_2
            "U_0" => t(1, &[("d_1", 1), ("D_1", 1)])
                .sub(&t(1, &[("d_1", 1), ("D_1", 2), ("C_2", 1)]))
                .add(&t(1, &[("C_2", 1)])),
            // (1 + d_2) C_2 = d_2 D_2
            "U_1" => t(1, &[("C_2", 1)])
                .add(&t(1, &[("d_2", 1), ("C_2", 1)]))
                .sub(&t(1, &[("d_2", 1), ("D_2", 1)])),
            // (1 + b_2) C_2 = b_2 B_2
            "U_2" => t(1, &[("C_2", 1)])
                .add(&t(1, &[("b_2", 1), ("C_2", 1)]))
                .sub(&t(1, &[("b_2", 1), ("B_2", 1)])),
            // (1 + c_1 C_1^2) B_2 = c_1 C_1
            "U_+" => t(1, &[("B_2", 1)])
                .add(&t(1, &[("c_1", 1), ("C_1", 2), ("B_2", 1)]))
                .sub(&t(1, &[("c_1", 1), ("C_1", 1)])),
            // (b_1 B_1^2 - 1) C_2 = b_1 B_1
            "U_-" => t(1, &[("b_1", 1), ("B_1", 2), ("C_2", 1)])
                .sub(&t(1, &[("C_2", 1)]))
                .sub(&t(1, &[("b_1", 1), ("B_1", 1)])),
            _ => unreachable!(),
        };
        poly.canonicalized()
    }

    // k_1 D_1^2 = (k_1 D_1^3 - 1) C_2
    fn published_5_3_first() -> MultiPoly {
        t(1, &[("k_1", 1), ("D_1", 2)])
            .sub(&t(1, &[("k_1", 1), ("D_1", 3), ("C_2", 1)]))
            .add(&t(1, &[("C_2", 1)]))
            .canonicalized()
    }

    #[test]
    fn stability_weight_balances_the_dimension_vector() {
        for (n, q) in [(3, 2), (5, 3)] {
            let params = classify(n, q).unwrap();
            let jh = jh_expand(n, q).unwrap();
            let dual = dual_expand(n, q).unwrap();
            let series = compute_series(&params, &jh, &dual).unwrap();
            let quiver = build_quiver(&params, &jh, &series).unwrap();
            let stab = stability_data(&quiver);
            assert_eq!(stab.pairing(), 0);
            assert_eq!(stab.theta[&VertexTag::Star], -5);
            assert_eq!(stab.dims[&VertexTag::Chain(1)], 2);
            let positives = stab.theta.values().filter(|w| **w == 1).count();
            assert_eq!(positives, 4);
        }
    }

    #[test]
    fn charts_for_3_2_match_the_published_equations() {
        let charts = build_charts(3, 2).unwrap();
        assert_eq!(charts.len(), 5);
        for chart in &charts {
            assert_eq!(chart.equations.len(), 1, "{}", chart.name);
            assert_eq!(chart.equations[0], published_3_2(&chart.name), "{}", chart.name);
        }
        assert_eq!(charts[0].variables, ["d_1", "D_1", "C_2"]);
        assert_eq!(charts[3].variables, ["c_1", "C_1", "B_2"]);
    }

    #[test]
    fn charts_for_5_3_change_only_the_first_equation() {
        let charts = build_charts(5, 3).unwrap();
        assert_eq!(charts.len(), 5);
        assert_eq!(charts[0].variables, ["k_1", "D_1", "C_2"]);
        assert_eq!(charts[0].equations, [published_5_3_first()]);
        for chart in &charts[1..] {
            assert_eq!(chart.equations.len(), 1, "{}", chart.name);
            assert_eq!(chart.equations[0], published_3_2(&chart.name), "{}", chart.name);
        }
    }

    #[test]
    fn eliminated_variables_carry_their_published_bindings() {
        let charts = build_charts(5, 3).unwrap();
        // In the first chart the second-to-star slot becomes k_1 D_1.
        assert_eq!(
            charts[0].bindings["d_1"],
            t(1, &[("k_1", 1), ("D_1", 1)]),
        );
        // Away from the first chart the extra arrow is no extra variable.
        assert!(charts[1].bindings.contains_key("k_1"));
        // The alternate parameterization of the third chart.
        let charts32 = build_charts(3, 2).unwrap();
        assert_eq!(
            charts32[2].bindings["c_2"],
            MultiPoly::one().add(&MultiPoly::var("b_2")),
        );
    }

    #[test]
    fn glue_maps_verify_as_exact_laurent_identities() {
        for (n, q) in [(3, 2), (5, 3)] {
            let charts = build_charts(n, q).unwrap();
            let by_name: BTreeMap<String, &Chart> =
                charts.iter().map(|c| (c.name.clone(), c)).collect();
            let glues = builtin_glue_maps(n, q).unwrap();
            assert_eq!(glues.len(), 4);
            for map in &glues {
                let quotient =
                    verify_glue(by_name[&map.from], by_name[&map.to], map).unwrap();
                assert_eq!(quotient, MultiPoly::constant(map.unit.clone()));
            }
        }
    }

    #[test]
    fn glue_units_differ_between_the_two_parameter_pairs() {
        let g32 = builtin_glue_maps(3, 2).unwrap();
        let g53 = builtin_glue_maps(5, 3).unwrap();
        assert_ne!(g32[0].forward["d_2"], g53[0].forward["d_2"]);
        for (a, b) in g32.iter().zip(&g53).skip(1) {
            assert_eq!(a.forward, b.forward);
        }
    }

    #[test]
    fn unsupported_parameters_are_rejected() {
        for (n, q) in [(7, 4), (13, 8), (7, 5)] {
            assert!(matches!(
                build_charts(n, q),
                Err(Error::UnsupportedChartParams { .. })
            ));
            assert!(matches!(
                builtin_glue_maps(n, q),
                Err(Error::UnsupportedChartParams { .. })
            ));
        }
    }

    #[test]
    fn mismatched_glue_unit_is_reported() {
        let charts = build_charts(3, 2).unwrap();
        let by_name: BTreeMap<String, &Chart> =
            charts.iter().map(|c| (c.name.clone(), c)).collect();
        let mut map = builtin_glue_maps(3, 2).unwrap().remove(0);
        map.unit = -map.unit.clone();
        assert!(matches!(
            verify_glue(by_name["U_0"], by_name["U_1"], &map),
            Err(Error::GlueFailed { .. })
        ));
    }
}
