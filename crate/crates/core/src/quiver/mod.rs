//! The quiver of the reconstruction algebra.
//!
//! Built from the dual graph by doubling the type-D tree, attaching the
//! extended vertex `0` to the chain, and adding the extra arrows prescribed
//! by the fundamental cycle:
//!
//! - vertices carry ranks (`2` on the doubled part of the chain, `1`
//!   elsewhere), matching the fundamental-cycle coefficients;
//! - in the generic case the chain splits at `nu` (the number of leading 2s
//!   in the expansion of `n/q`): the star hangs off vertex `nu`, the tail
//!   `nu+1..N` carries clockwise/anticlockwise arrow pairs, and `alpha`
//!   surpluses contribute extra arrows `k_2, ..., k_(l_N - 2)` back to the
//!   star;
//! - in the boundary case `nu = N - 1` the star hangs off `N-1` and vertex
//!   `N` carries `alpha_N - 2` extra arrows `k_1, ..., k_(alpha_N - 2)`.
//!
//! [`ExtraArrowTables`] precomputes the bookkeeping the relation generator
//! needs for the extra arrows (which vertex each leaves, the first/last
//! index at each vertex, and the nearest extra arrow to the left).

pub mod graph;
pub mod paths;

use std::collections::BTreeMap;
use std::fmt;

use crate::contfrac::{CaseTag, GroupParams, JhExpansion};
use crate::error::{Error, Result};
use crate::series::SeriesTable;

pub use graph::{build_dual_graph, canonical_cycle, fundamental_cycle, Cycle, DualGraph, VertexTag};
pub use paths::{composite_paths, CompositePaths, PathSum, PathWord, Presentation};

/// A quiver vertex with the rank of its attached module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub tag: VertexTag,
    pub rank: usize,
}

/// Which family an arrow belongs to; `K(t)` is the t-th extra arrow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrowKind {
    F,
    G,
    A,
    C,
    K(usize),
}

/// A named arrow of the quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub kind: ArrowKind,
    pub source: VertexTag,
    pub target: VertexTag,
}

/// Bookkeeping for the extra arrows in the generic case, indexed over the
/// alias range `1..=l_N - 1` where `k_1` doubles the arrow `g` from `nu` to
/// the star and `k_(l_N - 1)` doubles the clockwise arrow from `N`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtraArrowTables {
    butt: BTreeMap<usize, usize>,
    last_k_at: BTreeMap<usize, usize>,
    first_k_at: BTreeMap<usize, usize>,
    left_vertex_with_k: BTreeMap<usize, usize>,
    last_k_left_of: BTreeMap<usize, usize>,
}

impl ExtraArrowTables {
    /// The chain vertex the alias `k_r` leaves (`r` in `1..=l_N - 1`).
    pub fn butt(&self, r: usize) -> usize {
        self.butt[&r]
    }

    /// Largest alias index leaving vertex `i`, counting the doubled arrow at
    /// `nu` as index 1. `None` when nothing leaves `i`.
    pub fn last_k_at(&self, i: usize) -> Option<usize> {
        self.last_k_at.get(&i).copied()
    }

    /// Smallest alias index in `2..=l_N - 1` leaving vertex `i`.
    pub fn first_k_at(&self, i: usize) -> Option<usize> {
        self.first_k_at.get(&i).copied()
    }

    /// Nearest vertex strictly left of `i` with an extra arrow, defaulting
    /// to `nu` (defined for `nu+1 <= i <= N`).
    pub fn left_vertex_with_k(&self, i: usize) -> usize {
        self.left_vertex_with_k[&i]
    }

    /// Largest alias index leaving [`Self::left_vertex_with_k`]`(i)`.
    pub fn last_k_left_of(&self, i: usize) -> usize {
        self.last_k_left_of[&i]
    }
}

/// The quiver together with its parameters and extra-arrow bookkeeping.
#[derive(Clone, Debug)]
pub struct Quiver {
    pub params: GroupParams,
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    by_name: BTreeMap<String, usize>,
    k_aliases: BTreeMap<usize, String>,
    tables: ExtraArrowTables,
    chain_len: usize,
}

fn arrow(kind: ArrowKind, letter: char, source: VertexTag, target: VertexTag) -> Arrow {
    Arrow {
        name: format!("{letter}_{{{source},{target}}}"),
        kind,
        source,
        target,
    }
}

impl Quiver {
    /// Vertices in display order: star, `+`, `-`, chain.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Arrows in the deterministic construction order.
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Looks an arrow up by its display name.
    pub fn arrow(&self, name: &str) -> Result<&Arrow> {
        self.by_name
            .get(name)
            .map(|idx| &self.arrows[*idx])
            .ok_or_else(|| Error::UnknownArrow {
                name: name.to_string(),
            })
    }

    /// Rank of the module at a vertex.
    pub fn rank(&self, tag: VertexTag) -> usize {
        self.vertices
            .iter()
            .find(|v| v.tag == tag)
            .map(|v| v.rank)
            .expect("vertex belongs to the quiver")
    }

    /// Display name of the alias `k_r`; in the generic case `k_1` and the
    /// top index name ordinary arrows, in between they are the honest extra
    /// arrows.
    pub fn k_alias(&self, r: usize) -> &str {
        &self.k_aliases[&r]
    }

    /// Extra-arrow bookkeeping (generic case only; empty otherwise).
    pub fn tables(&self) -> &ExtraArrowTables {
        &self.tables
    }

    /// Number of chain vertices.
    pub fn chain_len(&self) -> usize {
        self.chain_len
    }

    /// Number of arrows from `source` to `target`.
    pub fn arrow_count(&self, source: VertexTag, target: VertexTag) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.source == source && a.target == target)
            .count()
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices (rank):")?;
        for v in &self.vertices {
            writeln!(f, "  {} ({})", v.tag, v.rank)?;
        }
        writeln!(f, "arrows:")?;
        for a in &self.arrows {
            writeln!(f, "  {}: {} -> {}", a.name, a.source, a.target)?;
        }
        Ok(())
    }
}

/// Builds the quiver for an in-scope parameter pair.
pub fn build_quiver(
    params: &GroupParams,
    jh: &JhExpansion,
    series: &SeriesTable,
) -> Result<Quiver> {
    match params.case {
        CaseTag::A => Ok(build_case_a(params, series)),
        CaseTag::B => Ok(build_case_b(params, jh)),
        CaseTag::OutOfScope => Err(Error::OutOfScope {
            n: params.n,
            q: params.q,
        }),
    }
}

fn horn_arrows(arrows: &mut Vec<Arrow>) {
    let one = VertexTag::Chain(1);
    arrows.push(arrow(ArrowKind::G, 'g', VertexTag::Plus, one));
    arrows.push(arrow(ArrowKind::F, 'f', one, VertexTag::Plus));
    arrows.push(arrow(ArrowKind::G, 'g', VertexTag::Minus, one));
    arrows.push(arrow(ArrowKind::F, 'f', one, VertexTag::Minus));
}

fn doubled_chain_arrows(arrows: &mut Vec<Arrow>, top: usize) {
    // f runs up the chain and g runs back down, between vertices 1..=top.
    for t in 1..top {
        let here = VertexTag::Chain(t);
        let next = VertexTag::Chain(t + 1);
        arrows.push(arrow(ArrowKind::F, 'f', here, next));
        arrows.push(arrow(ArrowKind::G, 'g', next, here));
    }
}

fn star_split_arrows(arrows: &mut Vec<Arrow>, split: usize) {
    // The star and the vertex after the split both attach to `split` with a
    // g leaving it and an f coming back.
    let star = VertexTag::Star;
    let here = VertexTag::Chain(split);
    let next = VertexTag::Chain(split + 1);
    arrows.push(arrow(ArrowKind::G, 'g', here, star));
    arrows.push(arrow(ArrowKind::F, 'f', star, here));
    arrows.push(arrow(ArrowKind::G, 'g', here, next));
    arrows.push(arrow(ArrowKind::F, 'f', next, here));
}

fn build_case_a(params: &GroupParams, series: &SeriesTable) -> Quiver {
    let nu = params.nu;
    let n_len = series.chain_len();
    let l_n = series.l(n_len) as usize;

    let mut vertices = vec![
        Vertex { tag: VertexTag::Star, rank: 1 },
        Vertex { tag: VertexTag::Plus, rank: 1 },
        Vertex { tag: VertexTag::Minus, rank: 1 },
    ];
    for t in 1..=n_len {
        vertices.push(Vertex {
            tag: VertexTag::Chain(t),
            rank: if t <= nu { 2 } else { 1 },
        });
    }

    let mut arrows = Vec::new();
    horn_arrows(&mut arrows);
    doubled_chain_arrows(&mut arrows, nu);
    star_split_arrows(&mut arrows, nu);
    // Clockwise / anticlockwise pairs along the tail, then the closing pair
    // through the star.
    for t in nu + 1..n_len {
        let here = VertexTag::Chain(t);
        let next = VertexTag::Chain(t + 1);
        arrows.push(arrow(ArrowKind::C, 'c', here, next));
        arrows.push(arrow(ArrowKind::A, 'a', next, here));
    }
    arrows.push(arrow(
        ArrowKind::C,
        'c',
        VertexTag::Chain(n_len),
        VertexTag::Star,
    ));
    arrows.push(arrow(
        ArrowKind::A,
        'a',
        VertexTag::Star,
        VertexTag::Chain(n_len),
    ));
    // Extra arrows k_2..k_(l_N - 2), leaving the vertex recorded in the
    // b-series.
    for j in 2..=l_n.saturating_sub(2) {
        let source = VertexTag::Chain(series.b(j) as usize);
        arrows.push(Arrow {
            name: format!("k_{j}"),
            kind: ArrowKind::K(j),
            source,
            target: VertexTag::Star,
        });
    }

    let mut k_aliases = BTreeMap::new();
    k_aliases.insert(1, format!("g_{{{},{}}}", VertexTag::Chain(nu), VertexTag::Star));
    for j in 2..=l_n.saturating_sub(2) {
        k_aliases.insert(j, format!("k_{j}"));
    }
    k_aliases.insert(
        l_n - 1,
        format!("c_{{{},{}}}", VertexTag::Chain(n_len), VertexTag::Star),
    );

    // Alias bookkeeping over 1..=l_N - 1.
    let mut butt = BTreeMap::new();
    butt.insert(1, nu);
    for r in 2..=l_n - 1 {
        butt.insert(r, series.b(r) as usize);
    }
    let mut last_k_at = BTreeMap::new();
    let mut first_k_at = BTreeMap::new();
    for r in 2..=l_n - 1 {
        let i = butt[&r];
        last_k_at
            .entry(i)
            .and_modify(|m: &mut usize| *m = (*m).max(r))
            .or_insert(r);
        first_k_at
            .entry(i)
            .and_modify(|m: &mut usize| *m = (*m).min(r))
            .or_insert(r);
    }
    last_k_at.insert(nu, 1);
    let mut left_vertex_with_k = BTreeMap::new();
    let mut last_k_left_of = BTreeMap::new();
    for i in nu + 1..=n_len {
        // Nearest vertex strictly left of i with an extra arrow leaving it;
        // the doubled arrow at nu guarantees a fallback. Only honest extra
        // arrows count (aliases 2..=l_N - 2), not the closing clockwise
        // arrow at N.
        let left = (nu + 1..i)
            .rev()
            .find(|j| first_k_at.get(j).is_some_and(|first| *first <= l_n - 2))
            .unwrap_or(nu);
        left_vertex_with_k.insert(i, left);
        last_k_left_of.insert(i, last_k_at[&left]);
    }

    let tables = ExtraArrowTables {
        butt,
        last_k_at,
        first_k_at,
        left_vertex_with_k,
        last_k_left_of,
    };

    let by_name = arrows
        .iter()
        .enumerate()
        .map(|(idx, a)| (a.name.clone(), idx))
        .collect();
    Quiver {
        params: params.clone(),
        vertices,
        arrows,
        by_name,
        k_aliases,
        tables,
        chain_len: n_len,
    }
}

fn build_case_b(params: &GroupParams, jh: &JhExpansion) -> Quiver {
    let n_len = jh.len();
    let alpha_n = jh.alpha(n_len) as usize;

    let mut vertices = vec![
        Vertex { tag: VertexTag::Star, rank: 1 },
        Vertex { tag: VertexTag::Plus, rank: 1 },
        Vertex { tag: VertexTag::Minus, rank: 1 },
    ];
    for t in 1..=n_len {
        vertices.push(Vertex {
            tag: VertexTag::Chain(t),
            rank: if t < n_len { 2 } else { 1 },
        });
    }

    let mut arrows = Vec::new();
    horn_arrows(&mut arrows);
    doubled_chain_arrows(&mut arrows, n_len - 1);
    star_split_arrows(&mut arrows, n_len - 1);
    let mut k_aliases = BTreeMap::new();
    for t in 1..=alpha_n - 2 {
        let name = format!("k_{t}");
        k_aliases.insert(t, name.clone());
        arrows.push(Arrow {
            name,
            kind: ArrowKind::K(t),
            source: VertexTag::Chain(n_len),
            target: VertexTag::Star,
        });
    }

    let by_name = arrows
        .iter()
        .enumerate()
        .map(|(idx, a)| (a.name.clone(), idx))
        .collect();
    Quiver {
        params: params.clone(),
        vertices,
        arrows,
        by_name,
        k_aliases,
        tables: ExtraArrowTables::default(),
        chain_len: n_len,
    }
}

/// Checks the quiver against the dual graph: for every curve vertex the
/// number of arrows into the star must be `-Z_f . E_t`, and the doubled part
/// must match the rank-two locus of the fundamental cycle. Returns the list
/// of violations.
pub fn check_against_cycle(quiver: &Quiver, graph: &DualGraph, z_f: &Cycle) -> Vec<String> {
    use crate::arith::rat;
    let mut violations = Vec::new();
    for v in graph.vertices() {
        let expected = -z_f.dot_curve(graph, *v);
        let got = rat(quiver.arrow_count(*v, VertexTag::Star) as i64);
        if expected != got {
            violations.push(format!(
                "vertex {v}: {got} arrows to the star, fundamental cycle predicts {expected}"
            ));
        }
        let rank = rat(quiver.rank(*v) as i64);
        if rank != z_f.coeff(*v) {
            violations.push(format!(
                "vertex {v}: rank {rank} differs from fundamental-cycle coefficient {}",
                z_f.coeff(*v)
            ));
        }
    }
    violations
}
