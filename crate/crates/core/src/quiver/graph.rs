//! Dual graph of the minimal resolution and its distinguished cycles.
//!
//! The dual graph is a type-D tree: two `(-2)` horns attached to the first
//! chain vertex, then a chain whose self-intersections are
//! `-alpha_1, ..., -alpha_N`. Two rational cycles drive the quiver shape:
//!
//! - the fundamental cycle `Z_f`, computed by Laufer's algorithm (start from
//!   the all-ones cycle, repeatedly bump any vertex with positive pairing);
//! - the canonical cycle `Z_K`, the solution of the adjunction equations
//!   `Z_K . E_t = E_t . E_t + 2`.
//!
//! The number of arrows from vertex `t` to the extended vertex equals
//! `-Z_f . E_t`, which is what ties this module to the quiver builder.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{rat, Rational};
use crate::contfrac::JhExpansion;
use crate::error::{Error, Result};
use num_traits::{One, Zero};

/// A vertex of the quiver / dual graph. `Star` is the extended vertex (only
/// in the quiver, never in the dual graph); `Chain(t)` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexTag {
    Star,
    Plus,
    Minus,
    Chain(usize),
}

impl fmt::Display for VertexTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexTag::Star => write!(f, "0"),
            VertexTag::Plus => write!(f, "+"),
            VertexTag::Minus => write!(f, "-"),
            VertexTag::Chain(t) => write!(f, "{t}"),
        }
    }
}

/// The dual graph: curve vertices with self-intersection numbers and the
/// type-D tree adjacency.
#[derive(Clone, Debug)]
pub struct DualGraph {
    vertices: Vec<VertexTag>,
    self_int: BTreeMap<VertexTag, i64>,
    chain_len: usize,
}

impl DualGraph {
    /// Curve vertices in display order: `+`, `-`, then the chain.
    pub fn vertices(&self) -> &[VertexTag] {
        &self.vertices
    }

    /// Self-intersection `E_t . E_t` (always `<= -2`).
    pub fn self_intersection(&self, t: VertexTag) -> i64 {
        self.self_int[&t]
    }

    /// Intersection pairing `E_s . E_t` of two curves.
    pub fn pairing(&self, s: VertexTag, t: VertexTag) -> i64 {
        if s == t {
            return self.self_int[&t];
        }
        let adjacent = match (s, t) {
            (VertexTag::Plus, VertexTag::Chain(1)) | (VertexTag::Chain(1), VertexTag::Plus) => true,
            (VertexTag::Minus, VertexTag::Chain(1)) | (VertexTag::Chain(1), VertexTag::Minus) => {
                true
            }
            (VertexTag::Chain(a), VertexTag::Chain(b)) => a.abs_diff(b) == 1,
            _ => false,
        };
        i64::from(adjacent)
    }

    /// Number of chain vertices `N`.
    pub fn chain_len(&self) -> usize {
        self.chain_len
    }
}

/// A rational cycle supported on the curve vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    coeffs: BTreeMap<VertexTag, Rational>,
}

impl Cycle {
    /// Coefficient of the cycle at a curve vertex.
    pub fn coeff(&self, t: VertexTag) -> Rational {
        self.coeffs.get(&t).cloned().unwrap_or_else(Rational::zero)
    }

    /// Pairing of the whole cycle with a single curve `E_t`.
    pub fn dot_curve(&self, graph: &DualGraph, t: VertexTag) -> Rational {
        let mut acc = Rational::zero();
        for (v, z) in &self.coeffs {
            acc += z * rat(graph.pairing(*v, t));
        }
        acc
    }

    /// Difference of two cycles on the same graph.
    pub fn sub(&self, other: &Cycle) -> Cycle {
        let mut coeffs = self.coeffs.clone();
        for (v, z) in &other.coeffs {
            let entry = coeffs.entry(*v).or_insert_with(Rational::zero);
            *entry -= z;
        }
        Cycle { coeffs }
    }
}

/// Builds the dual graph for an in-scope expansion: `(-2)` horns plus the
/// `-alpha_t` chain.
pub fn build_dual_graph(jh: &JhExpansion) -> DualGraph {
    let n_len = jh.len();
    let mut vertices = vec![VertexTag::Plus, VertexTag::Minus];
    let mut self_int = BTreeMap::new();
    self_int.insert(VertexTag::Plus, -2);
    self_int.insert(VertexTag::Minus, -2);
    for t in 1..=n_len {
        vertices.push(VertexTag::Chain(t));
        self_int.insert(VertexTag::Chain(t), -(jh.alpha(t) as i64));
    }
    DualGraph {
        vertices,
        self_int,
        chain_len: n_len,
    }
}

/// Laufer's algorithm for the fundamental cycle: start with all ones and
/// repeatedly increment any vertex pairing positively with the cycle. The
/// iteration bound `2 * #vertices` is far above the worst case here (the
/// maximal coefficient of any curve in `Z_f` is two).
pub fn fundamental_cycle(graph: &DualGraph) -> Result<Cycle> {
    let limit = 2 * graph.vertices.len();
    let mut coeffs: BTreeMap<VertexTag, Rational> = graph
        .vertices
        .iter()
        .map(|v| (*v, Rational::one()))
        .collect();
    let mut cycle = Cycle { coeffs: coeffs.clone() };
    for _ in 0..=limit {
        let bump = graph
            .vertices
            .iter()
            .find(|v| cycle.dot_curve(graph, **v) > Rational::zero());
        match bump {
            Some(v) => {
                *coeffs.get_mut(v).expect("vertex present") += Rational::one();
                cycle = Cycle { coeffs: coeffs.clone() };
            }
            None => return Ok(cycle),
        }
    }
    Err(Error::CycleGuardExceeded {
        limit,
        vertices: graph.vertices.len(),
    })
}

/// Canonical cycle from the adjunction equations `Z_K . E_t = E_t^2 + 2`,
/// solved exactly by Gaussian elimination. The intersection form of a
/// resolution graph is negative definite, so a singular system indicates a
/// malformed graph.
pub fn canonical_cycle(graph: &DualGraph) -> Result<Cycle> {
    let verts = &graph.vertices;
    let dim = verts.len();
    // Augmented matrix rows: pairing matrix | right-hand side.
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(dim);
    for s in verts {
        let mut row: Vec<Rational> = verts
            .iter()
            .map(|t| rat(graph.pairing(*s, *t)))
            .collect();
        row.push(rat(graph.self_intersection(*s) + 2));
        rows.push(row);
    }
    for col in 0..dim {
        let pivot = (col..dim)
            .find(|r| !rows[*r][col].is_zero())
            .ok_or(Error::SingularIntersectionForm)?;
        rows.swap(col, pivot);
        let lead = rows[col][col].clone();
        for x in rows[col].iter_mut() {
            *x /= &lead;
        }
        for r in 0..dim {
            if r != col && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let pivot_row = rows[col].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot_row) {
                    *x -= &factor * p;
                }
            }
        }
    }
    let coeffs = verts
        .iter()
        .enumerate()
        .map(|(idx, v)| (*v, rows[idx][dim].clone()))
        .collect();
    Ok(Cycle { coeffs })
}
