//! Dense matrices of bivariate polynomials.
//!
//! Arrow representatives are tiny matrices (at most 2x2 here) whose entries
//! live in `C[x, y]`; paths multiply left to right, so `path a then b`
//! evaluates to `M_a * M_b`. Shape mismatches are structural errors that name
//! both shapes.

use std::fmt;

use thiserror::Error;

use super::bivar::{BivarPoly, CoeffRing};
use super::Rational;

/// Attempted product of incompatible shapes.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error(
    "cannot multiply a {left_rows}x{left_cols} matrix by a {right_rows}x{right_cols} matrix: \
     inner dimensions {left_cols} and {right_rows} differ"
)]
pub struct MatrixShapeError {
    pub left_rows: usize,
    pub left_cols: usize,
    pub right_rows: usize,
    pub right_cols: usize,
}

/// Dense `rows x cols` matrix over `C[x, y]`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<C: CoeffRing> {
    rows: usize,
    cols: usize,
    entries: Vec<BivarPoly<C>>,
}

impl<C: CoeffRing> PolyMatrix<C> {
    /// Builds a matrix from row-major entries.
    ///
    /// # Panics
    /// Panics if `entries.len() != rows * cols` or either dimension is zero.
    pub fn new(rows: usize, cols: usize, entries: Vec<BivarPoly<C>>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(
            entries.len(),
            rows * cols,
            "matrix needs {} entries for shape {}x{}",
            rows * cols,
            rows,
            cols
        );
        PolyMatrix { rows, cols, entries }
    }

    /// The zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![BivarPoly::zero(); rows * cols])
    }

    /// A 1x1 matrix holding one polynomial.
    pub fn from_poly(p: BivarPoly<C>) -> Self {
        Self::new(1, 1, vec![p])
    }

    /// A single-row matrix.
    pub fn row(entries: Vec<BivarPoly<C>>) -> Self {
        let cols = entries.len();
        Self::new(1, cols, entries)
    }

    /// A single-column matrix.
    pub fn col(entries: Vec<BivarPoly<C>>) -> Self {
        let rows = entries.len();
        Self::new(rows, 1, entries)
    }

    /// Shape as `(rows, cols)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The entry at `(row, col)` (zero-based).
    pub fn entry(&self, row: usize, col: usize) -> &BivarPoly<C> {
        assert!(row < self.rows && col < self.cols, "matrix index out of range");
        &self.entries[row * self.cols + col]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[BivarPoly<C>] {
        &self.entries
    }

    /// The inner polynomial for 1x1 matrices.
    pub fn as_poly(&self) -> Option<&BivarPoly<C>> {
        if self.rows == 1 && self.cols == 1 {
            Some(&self.entries[0])
        } else {
            None
        }
    }

    /// True if every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BivarPoly::is_zero)
    }

    /// Entrywise sum.
    ///
    /// # Panics
    /// Panics on mismatched shapes (relations only ever combine parallel paths).
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix sum requires equal shapes"
        );
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Self::new(self.rows, self.cols, entries)
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Entrywise negation.
    pub fn neg(&self) -> Self {
        Self::new(
            self.rows,
            self.cols,
            self.entries.iter().map(BivarPoly::neg).collect(),
        )
    }

    /// Multiplies every entry by a coefficient-ring scalar.
    pub fn scale_coeff(&self, c: &C) -> Self {
        Self::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| e.scale(c)).collect(),
        )
    }

    /// Multiplies every entry by a polynomial.
    pub fn scale_poly(&self, p: &BivarPoly<C>) -> Self {
        Self::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| e.mul(p)).collect(),
        )
    }

    /// Matrix product; see [`matrix_mul`].
    pub fn mul(&self, other: &Self) -> Result<Self, MatrixShapeError> {
        matrix_mul(self, other)
    }
}

impl PolyMatrix<Rational> {
    /// The `k x k` identity matrix over `Q[x, y]`.
    pub fn identity(k: usize) -> Self {
        let mut m = Self::zero(k, k);
        for d in 0..k {
            m.entries[d * k + d] = BivarPoly::one();
        }
        m
    }

    /// Multiplies every entry by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        self.scale_coeff(r)
    }
}

/// Product of two polynomial matrices.
///
/// Returns a structural error naming both shapes when the inner dimensions
/// disagree; this is the composability check for quiver paths.
pub fn matrix_mul<C: CoeffRing>(
    a: &PolyMatrix<C>,
    b: &PolyMatrix<C>,
) -> Result<PolyMatrix<C>, MatrixShapeError> {
    if a.cols != b.rows {
        return Err(MatrixShapeError {
            left_rows: a.rows,
            left_cols: a.cols,
            right_rows: b.rows,
            right_cols: b.cols,
        });
    }
    let mut out = PolyMatrix::zero(a.rows, b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = BivarPoly::zero();
            for k in 0..a.cols {
                acc = acc.add(&a.entry(i, k).mul(b.entry(k, j)));
            }
            out.entries[i * b.cols + j] = acc;
        }
    }
    Ok(out)
}

impl<C: CoeffRing + fmt::Display> fmt::Display for PolyMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[ ")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " | ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}
