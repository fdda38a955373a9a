//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or checking the algebra.
///
/// Mathematical *findings* (a relation with nonzero residue, a non-invariant
/// polynomial) are not errors: they are reported through the relevant report
/// structs. `Error` covers invalid input and structural inconsistencies.
#[derive(Debug, Error)]
pub enum Error {
    /// `n` and `q` must be coprime for `D(n,q)` to be defined.
    #[error("n and q must be coprime; gcd({n}, {q}) = {gcd}")]
    NotCoprime { n: u64, q: u64, gcd: u64 },

    /// Parameters outside `1 <= q < n`.
    #[error("parameters must satisfy 1 <= q < n; got n = {n}, q = {q}")]
    ParameterRange { n: u64, q: u64 },

    /// `n >= 2q` is the cyclic-type parameter range, not covered here.
    #[error(
        "parameters (n, q) = ({n}, {q}) have n >= 2q; this toolkit covers the \
         dihedral range n < 2q only (n >= 2q belongs to the companion cyclic-type \
         construction)"
    )]
    OutOfScope { n: u64, q: u64 },

    /// Matrix product with mismatched inner dimensions.
    #[error(transparent)]
    MatrixShape(#[from] crate::arith::MatrixShapeError),

    /// Laufer's algorithm failed to terminate within its guard bound.
    #[error("fundamental-cycle computation exceeded {limit} increments on {vertices} vertices")]
    CycleGuardExceeded { limit: usize, vertices: usize },

    /// The intersection form was singular when solving for the canonical cycle.
    #[error("intersection form is singular; cannot solve for the canonical cycle")]
    SingularIntersectionForm,

    /// A path word refers to an arrow the quiver does not have.
    #[error("path refers to unknown arrow '{name}'")]
    UnknownArrow { name: String },

    /// A path word is not composable in the quiver.
    #[error("path is not composable: arrow '{name}' starts at {found}, expected {expected}")]
    PathNotComposable {
        name: String,
        expected: String,
        found: String,
    },

    /// An arrow matrix has the wrong shape for the quiver's vertex ranks.
    #[error(
        "matrix assigned to arrow '{arrow}' has shape {got_rows}x{got_cols}; \
         vertex ranks require {want_rows}x{want_cols}"
    )]
    AssignmentShape {
        arrow: String,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },

    /// Group closure produced more elements than the dihedral order allows.
    #[error(
        "group closure exceeded {limit} elements (expected order {expected}); \
         generator data is inconsistent"
    )]
    GroupClosureExceeded { limit: usize, expected: usize },

    /// Point representations only exist in the degenerate (pure preprojective) case.
    #[error(
        "point representations require the degenerate case q = n - 1 \
         (pure doubled quiver); D({n}, {q}) has extra arrows"
    )]
    NotDegenerate { n: u64, q: u64 },

    /// The zero point never gives a representation of the right shape.
    #[error("point representation requires a nonzero point; got (0, 0)")]
    ZeroPoint,

    /// Chart data is only built in for the two worked examples.
    #[error("no built-in chart data for D({n}, {q}); supported: D(3, 2) and D(5, 3)")]
    UnsupportedChartParams { n: u64, q: u64 },

    /// A chart's normalization conditions are contradictory.
    #[error("chart '{chart}' is empty: its conditions force 1 = 0")]
    ChartEmpty { chart: String },

    /// Variable elimination could not finish; reported rather than hidden.
    #[error(
        "chart '{chart}' elimination stalled; residual equations still mention \
         non-coordinate variables {variables:?}"
    )]
    EliminationStalled { chart: String, variables: Vec<String> },

    /// A glue map does not carry the target equation to a multiple of the source one.
    #[error("glue map {from} -> {to} failed: {reason}")]
    GlueFailed {
        from: String,
        to: String,
        reason: String,
    },
}
