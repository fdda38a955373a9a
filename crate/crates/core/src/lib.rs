//! Exact symbolic toolkit for reconstruction algebras of dihedral quotient
//! surface singularities `D(n,q)` with `n < 2q`.
//!
//! The crate builds, from the pair `(n, q)` alone:
//!
//! - the Jung–Hirzebruch continued-fraction data of `n/q` and of the dual
//!   fraction `n/(n-q)` ([`contfrac`]);
//! - the eight integer series driving every later formula ([`series`]);
//! - the dual graph of the minimal resolution, its fundamental and canonical
//!   cycles, and the quiver of the reconstruction algebra ([`quiver`]);
//! - the relation set of the algebra in two presentations ([`relations`]);
//! - explicit polynomial-matrix representatives for every arrow, and machine
//!   verification that the relations annihilate them ([`representation`]);
//! - the binary dihedral group itself as exact cyclotomic matrices, with an
//!   invariance check for the two classical generator families ([`group`]);
//! - affine charts and transition maps of the rank-one representation moduli
//!   for the two built-in degenerate examples ([`moduli`]).
//!
//! All arithmetic is exact: rationals, cyclotomic integers and sparse
//! polynomials, never floats ([`arith`]).

pub mod arith;
pub mod contfrac;
pub mod error;
pub mod group;
pub mod moduli;
pub mod quiver;
pub mod relations;
pub mod representation;
pub mod series;

pub use arith::{BivarPoly, Cyclotomic, MultiPoly, PolyMatrix, Rational};
pub use contfrac::{classify, dual_expand, jh_expand, CaseTag, DualExpansion, GroupParams, JhExpansion};
pub use error::{Error, Result};
pub use group::{
    act, check_generating_invariants, enumerate_group, group_mul, group_presentation,
    invariant_family, is_invariant, ElementShape, GroupData, GroupElement, InvarianceReport,
};
pub use moduli::{
    build_chart, build_charts, builtin_chart_specs, builtin_glue_maps, stability_data,
    verify_glue, Chart, ChartSpec, GlueMap, StabilityData,
};
pub use quiver::{
    build_dual_graph, build_quiver, canonical_cycle, check_against_cycle, composite_paths,
    fundamental_cycle, Arrow, ArrowKind, CompositePaths, Cycle, DualGraph, PathSum, PathWord,
    Presentation, Quiver, Vertex, VertexTag,
};
pub use relations::{relations, Relation};
pub use representation::{
    evaluate_path, evaluate_sum, point_representation, representatives, star_generated,
    verify_relations, InvariantPolys, PointMatrix,
};
pub use series::{check_series_identities, compute_series, SeriesTable};
