//! The small group attached to `(n, q)`, its plane action, and invariance
//! checks for the generator families.
//!
//! The group sits inside `GL(2, C)` and is generated by diagonal and
//! antidiagonal matrices whose entries are roots of unity, so every element
//! is stored as a shape plus two exponents of one fixed ambient root. That
//! makes multiplication pure modular arithmetic and lets the invariance
//! check run on exponents alone; the exact cyclotomic action is kept
//! alongside as a cross-check.
//!
//! The group has order `4 * (n - q) * q`. Its ring of invariants is
//! generated by the family returned from [`invariant_family`]: a power of
//! `xy` together with one product of invariant-polynomial powers per column
//! of the series table.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::arith::{BivarPoly, Cyclotomic, Rational};
use crate::contfrac::GroupParams;
use crate::error::{Error, Result};
use crate::quiver::Presentation;
use crate::representation::InvariantPolys;
use crate::series::SeriesTable;

/// Whether an element is a diagonal or an antidiagonal matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ElementShape {
    Diagonal,
    AntiDiagonal,
}

/// A group element: `diag(z^a, z^b)` or `antidiag(z^a, z^b)` (top-right
/// entry first) for the ambient root of unity `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupElement {
    pub shape: ElementShape,
    pub a: u64,
    pub b: u64,
}

/// The enumerated group together with its presentation data.
#[derive(Clone, Debug)]
pub struct GroupData {
    /// Order of the ambient root of unity the exponents refer to.
    pub ambient: u64,
    /// The dihedral order `4 * (n - q) * q`.
    pub expected_order: usize,
    pub generators: Vec<GroupElement>,
    /// All elements, sorted; closure of the generators.
    pub elements: Vec<GroupElement>,
}

fn lcm3(a: u64, b: u64, c: u64) -> u64 {
    a.lcm(&b).lcm(&c)
}

/// Ambient root order and generators for the parameter pair.
///
/// With `m = n - q`: for odd `m` the generators are `psi_2q`, `tau`, and
/// `phi_2m`; for even `m` the last two merge into the single generator
/// `tau * phi_4m`.
pub fn group_presentation(params: &GroupParams) -> (u64, Vec<GroupElement>) {
    let q = params.q;
    let m = params.m;
    let ambient = if m % 2 == 1 {
        lcm3(2 * q, 4, 2 * m)
    } else {
        lcm3(2 * q, 4 * m, 4)
    };
    let eps = |k: u64| ambient / k;
    let psi = GroupElement {
        shape: ElementShape::Diagonal,
        a: eps(2 * q),
        b: ambient - eps(2 * q),
    };
    let generators = if m % 2 == 1 {
        let tau = GroupElement {
            shape: ElementShape::AntiDiagonal,
            a: eps(4),
            b: eps(4),
        };
        let phi = GroupElement {
            shape: ElementShape::Diagonal,
            a: eps(2 * m),
            b: eps(2 * m),
        };
        vec![psi, tau, phi]
    } else {
        let e = (eps(4) + eps(4 * m)) % ambient;
        let tau_phi = GroupElement {
            shape: ElementShape::AntiDiagonal,
            a: e,
            b: e,
        };
        vec![psi, tau_phi]
    };
    (ambient, generators)
}

/// Product of two elements (matrix product, exponents mod `ambient`).
pub fn group_mul(ambient: u64, g: &GroupElement, h: &GroupElement) -> GroupElement {
    use ElementShape::*;
    let (shape, a, b) = match (g.shape, h.shape) {
        (Diagonal, Diagonal) => (Diagonal, g.a + h.a, g.b + h.b),
        (Diagonal, AntiDiagonal) => (AntiDiagonal, g.a + h.a, g.b + h.b),
        (AntiDiagonal, Diagonal) => (AntiDiagonal, g.a + h.b, g.b + h.a),
        (AntiDiagonal, AntiDiagonal) => (Diagonal, g.a + h.b, g.b + h.a),
    };
    GroupElement {
        shape,
        a: a % ambient,
        b: b % ambient,
    }
}

/// Enumerates the group by closing the generators under multiplication,
/// guarded at twice the dihedral order.
pub fn enumerate_group(params: &GroupParams) -> Result<GroupData> {
    let (ambient, generators) = group_presentation(params);
    let expected = usize::try_from(4 * params.m * params.q).expect("group order fits usize");
    let limit = 2 * expected;
    let identity = GroupElement {
        shape: ElementShape::Diagonal,
        a: 0,
        b: 0,
    };
    let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
    seen.insert(identity);
    let mut frontier = vec![identity];
    while let Some(g) = frontier.pop() {
        for h in &generators {
            let product = group_mul(ambient, &g, h);
            if seen.insert(product) {
                if seen.len() > limit {
                    return Err(Error::GroupClosureExceeded { limit, expected });
                }
                frontier.push(product);
            }
        }
    }
    Ok(GroupData {
        ambient,
        expected_order: expected,
        generators,
        elements: seen.into_iter().collect(),
    })
}

/// Views a rational polynomial inside the cyclotomic field.
pub fn embed(ambient: u64, poly: &BivarPoly<Rational>) -> BivarPoly<Cyclotomic> {
    poly.map_coeffs(|c| Cyclotomic::from_rational(ambient, c.clone()))
}

/// Applies an element to a polynomial by substitution: a diagonal element
/// scales `x` and `y`, an antidiagonal one swaps them with scales. Acting
/// by a product applies the left factor first.
pub fn act(ambient: u64, elem: &GroupElement, poly: &BivarPoly<Rational>) -> BivarPoly<Cyclotomic> {
    let mut out = BivarPoly::zero();
    for (&(i, j), c) in poly.terms() {
        let k = (elem.a * u64::from(i) + elem.b * u64::from(j)) % ambient;
        let coeff = Cyclotomic::root_of_unity(ambient, k).scale(c);
        let (ti, tj) = match elem.shape {
            ElementShape::Diagonal => (i, j),
            ElementShape::AntiDiagonal => (j, i),
        };
        out = out.add(&BivarPoly::monomial(coeff, ti, tj));
    }
    out
}

/// Exponent-only invariance check, equivalent to `act(g, p) == p` for
/// rational `p`: a diagonal element fixes each term exactly when its root
/// exponent vanishes; an antidiagonal element pairs terms across the
/// diagonal with a rational root of unity (`+1` or `-1`) between them.
pub fn is_invariant(ambient: u64, elem: &GroupElement, poly: &BivarPoly<Rational>) -> bool {
    poly.terms().all(|(&(i, j), c)| {
        let k = (elem.a * u64::from(i) + elem.b * u64::from(j)) % ambient;
        match elem.shape {
            ElementShape::Diagonal => k == 0,
            ElementShape::AntiDiagonal => {
                let mirrored = poly.coeff(j, i);
                if k == 0 {
                    mirrored == Some(c)
                } else if 2 * k == ambient {
                    mirrored.is_some_and(|m| *m == -c)
                } else {
                    false
                }
            }
        }
    })
}

fn exp(v: i64) -> u32 {
    u32::try_from(v).expect("series exponents are nonnegative")
}

/// The generating family of the invariant ring: `(xy)^(2(n-q))` together
/// with one product per series column, in the factored (`w`) or binomial
/// (`v`) form of the presentation.
pub fn invariant_family(
    params: &GroupParams,
    series: &SeriesTable,
    inv: &InvariantPolys,
    presentation: Presentation,
) -> Vec<(String, BivarPoly<Rational>)> {
    let (p2, p3) = inv.pair(presentation);
    let tag = match presentation {
        Presentation::Moduli => "w",
        Presentation::Symmetric => "v",
    };
    let lead_exp = u32::try_from(2 * params.m).expect("exponent fits");
    let mut family = vec![(format!("w1^{}", 2 * params.m), inv.w1.pow(lead_exp))];
    for t in 2..=series.e() {
        let (r, c, d) = (series.r(t), series.c(t), series.d(t));
        let poly = inv
            .w1
            .pow0(exp(r))
            .mul(&p2.pow0(exp(c)))
            .mul(&p3.pow0(exp(d)));
        family.push((format!("w1^{r}*{tag}2^{c}*{tag}3^{d}"), poly));
    }
    family
}

/// Outcome of the full invariance check for one parameter pair.
#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub order: usize,
    pub expected_order: usize,
    /// Names of family members that move under some element, or an order
    /// mismatch; empty means everything checks out.
    pub violations: Vec<String>,
}

/// Enumerates the group, checks its order, and checks both generator
/// families for invariance under every element.
///
/// Uses the exponent-only check, which is exact for rational polynomials
/// (see [`is_invariant`]); the dense cyclotomic action would allocate a
/// coefficient vector of length `phi(ambient)` per term and is kept to the
/// tests, where the parameters stay small.
pub fn check_generating_invariants(
    params: &GroupParams,
    series: &SeriesTable,
    inv: &InvariantPolys,
) -> Result<InvarianceReport> {
    let group = enumerate_group(params)?;
    let mut violations = Vec::new();
    if group.elements.len() != group.expected_order {
        violations.push(format!(
            "group order {} differs from 4(n-q)q = {}",
            group.elements.len(),
            group.expected_order
        ));
    }
    for presentation in [Presentation::Moduli, Presentation::Symmetric] {
        for (name, poly) in invariant_family(params, series, inv, presentation) {
            if let Some(g) = group
                .elements
                .iter()
                .find(|g| !is_invariant(group.ambient, g, &poly))
            {
                violations.push(format!("{name} moves under {g:?}"));
            }
        }
    }
    Ok(InvarianceReport {
        order: group.elements.len(),
        expected_order: group.expected_order,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::{classify, dual_expand, jh_expand};
    use crate::series::compute_series;
    use proptest::prelude::*;

    type P = BivarPoly<Rational>;

    fn setup(n: u64, q: u64) -> (GroupParams, SeriesTable, InvariantPolys) {
        let params = classify(n, q).unwrap();
        let jh = jh_expand(n, q).unwrap();
        let dual = dual_expand(n, q).unwrap();
        let series = compute_series(&params, &jh, &dual).unwrap();
        let inv = InvariantPolys::new(q, dual.a(2));
        (params, series, inv)
    }

    #[test]
    fn group_orders_for_worked_examples() {
        for (n, q, order) in [(13, 8, 160), (7, 4, 48), (3, 2, 8), (7, 5, 40), (73, 56, 3808)] {
            let (params, _, _) = setup(n, q);
            let group = enumerate_group(&params).unwrap();
            assert_eq!(group.elements.len(), order, "({n},{q})");
            assert_eq!(group.expected_order, order, "({n},{q})");
        }
    }

    #[test]
    fn the_antidiagonal_quarter_turn_negates_xy() {
        let (params, _, _) = setup(7, 4);
        let (ambient, generators) = group_presentation(&params);
        let tau = generators[1];
        assert_eq!(tau.shape, ElementShape::AntiDiagonal);
        let xy = P::x().mul(&P::y());
        assert_eq!(act(ambient, &tau, &xy), embed(ambient, &xy.neg()));
        assert!(!is_invariant(ambient, &tau, &xy));
        assert!(is_invariant(ambient, &tau, &xy.pow(2)));
    }

    #[test]
    fn families_are_invariant_for_the_worked_examples() {
        for (n, q) in [(13, 8), (73, 56), (7, 4), (7, 5), (3, 2), (5, 3), (8, 5)] {
            let (params, series, inv) = setup(n, q);
            let report = check_generating_invariants(&params, &series, &inv).unwrap();
            assert!(report.violations.is_empty(), "({n},{q}): {:?}", report.violations);
        }
    }

    #[test]
    fn exact_action_fixes_the_families_for_small_parameters() {
        for (n, q) in [(3, 2), (5, 3), (7, 4), (7, 5)] {
            let (params, series, inv) = setup(n, q);
            let group = enumerate_group(&params).unwrap();
            for presentation in [Presentation::Moduli, Presentation::Symmetric] {
                for (name, poly) in invariant_family(&params, &series, &inv, presentation) {
                    let embedded = embed(group.ambient, &poly);
                    for g in &group.generators {
                        assert_eq!(
                            act(group.ambient, g, &poly),
                            embedded,
                            "({n},{q}): {name} moves under generator {g:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn non_invariants_are_caught() {
        let (params, _, _) = setup(7, 4);
        let group = enumerate_group(&params).unwrap();
        let poly = P::x().add(&P::y());
        assert!(group
            .elements
            .iter()
            .any(|g| !is_invariant(group.ambient, g, &poly)));
    }

    #[test]
    fn group_is_closed_and_has_inverses() {
        let (params, _, _) = setup(13, 8);
        let group = enumerate_group(&params).unwrap();
        let set: BTreeSet<_> = group.elements.iter().copied().collect();
        for g in &group.elements {
            for h in &group.generators {
                assert!(set.contains(&group_mul(group.ambient, g, h)));
            }
            // Finite closure implies inverses exist; spot-check via powers.
            let mut p = *g;
            let mut steps = 0;
            while !(p.shape == ElementShape::Diagonal && p.a == 0 && p.b == 0) {
                p = group_mul(group.ambient, &p, g);
                steps += 1;
                assert!(steps <= 2 * group.expected_order, "element has no finite order");
            }
        }
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        proptest::collection::vec((0u32..7, 0u32..7, -4i64..=4), 0..6).prop_map(|terms| {
            let mut p = P::zero();
            for (i, j, c) in terms {
                p = p.add(&P::int_monomial(c, i, j));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn exponent_invariance_agrees_with_the_exact_action(
            poly in arb_poly(),
            index in 0usize..48,
        ) {
            let (params, _, _) = setup(7, 4);
            let group = enumerate_group(&params).unwrap();
            let g = group.elements[index % group.elements.len()];
            let fast = is_invariant(group.ambient, &g, &poly);
            let exact = act(group.ambient, &g, &poly) == embed(group.ambient, &poly);
            prop_assert_eq!(fast, exact);
        }
    }

    fn act_cyc(
        ambient: u64,
        elem: &GroupElement,
        poly: &BivarPoly<Cyclotomic>,
    ) -> BivarPoly<Cyclotomic> {
        let mut out = BivarPoly::zero();
        for (&(i, j), c) in poly.terms() {
            let k = (elem.a * u64::from(i) + elem.b * u64::from(j)) % ambient;
            let coeff = Cyclotomic::root_of_unity(ambient, k).mul(c);
            let (ti, tj) = match elem.shape {
                ElementShape::Diagonal => (i, j),
                ElementShape::AntiDiagonal => (j, i),
            };
            out = out.add(&BivarPoly::monomial(coeff, ti, tj));
        }
        out
    }

    #[test]
    fn action_composes_as_a_right_action() {
        let (params, _, _) = setup(7, 5);
        let group = enumerate_group(&params).unwrap();
        let poly = P::x().pow(3).add(&P::y().pow(2)).add(&P::int_monomial(2, 1, 1));
        let ident = GroupElement { shape: ElementShape::Diagonal, a: 0, b: 0 };
        assert_eq!(act(group.ambient, &ident, &poly), embed(group.ambient, &poly));
        for g in group.elements.iter().step_by(5) {
            for h in group.elements.iter().step_by(7) {
                let gh = group_mul(group.ambient, g, h);
                let composed = act_cyc(group.ambient, h, &act(group.ambient, g, &poly));
                assert_eq!(act(group.ambient, &gh, &poly), composed, "{g:?} * {h:?}");
            }
        }
    }

    #[test]
    fn invariance_sweep_up_to_20() {
        for n in 3..=20u64 {
            for q in (n / 2 + 1)..n {
                if n.gcd(&q) != 1 {
                    continue;
                }
                let (params, series, inv) = setup(n, q);
                let report = check_generating_invariants(&params, &series, &inv).unwrap();
                assert!(report.violations.is_empty(), "({n},{q}): {:?}", report.violations);
            }
        }
    }
}
