//! Neutrosophic soft matrices.
//!
//! An `m x n` matrix is the grid form of a soft set: row `i` is object
//! `u_i`, column `j` is parameter `x_j`, and cell `(i, j)` holds the value
//! of `u_i` under `x_j`. Union and intersection are the fixed max/min
//! lattice operations; complement is `(T, I, F) -> (F, 1 - I, T)`.

use crate::error::{Error, Result};
use crate::labels::{ParameterSet, Universe};
use crate::norm::NormPair;
use crate::soft_set::NsSoftSet;
use crate::value::NsValue;

#[derive(Debug, Clone, PartialEq)]
pub struct NsMatrix {
    row_labels: Universe,
    col_labels: ParameterSet,
    // row-major
    cells: Vec<NsValue>,
}

/// Structural properties of a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ShapeReport {
    pub is_row: bool,
    pub is_column: bool,
    pub is_square: bool,
    pub is_diagonal: bool,
    pub is_symmetric: bool,
    pub is_zero: bool,
    pub is_universal: bool,
}

impl NsMatrix {
    /// `rows[i][j]` is the cell for object `i` and parameter `j`.
    pub fn new(
        row_labels: Universe,
        col_labels: ParameterSet,
        rows: Vec<Vec<NsValue>>,
    ) -> Result<Self> {
        if rows.len() != row_labels.len() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} rows", row_labels.len()),
                found: format!("{} rows", rows.len()),
            });
        }
        let n = col_labels.len();
        let mut cells = Vec::with_capacity(rows.len() * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: format!("{n} cells in row `{}`", &row_labels[i]),
                    found: format!("{}", row.len()),
                });
            }
            cells.extend(row);
        }
        Ok(NsMatrix {
            row_labels,
            col_labels,
            cells,
        })
    }

    pub fn from_fn(
        row_labels: Universe,
        col_labels: ParameterSet,
        mut f: impl FnMut(usize, usize) -> NsValue,
    ) -> Self {
        let n = col_labels.len();
        let cells = (0..row_labels.len() * n).map(|k| f(k / n, k % n)).collect();
        NsMatrix {
            row_labels,
            col_labels,
            cells,
        }
    }

    /// Every cell `(0, 1, 1)`.
    pub fn zero(row_labels: Universe, col_labels: ParameterSet) -> Self {
        Self::from_fn(row_labels, col_labels, |_, _| NsValue::ZERO)
    }

    /// Every cell `(1, 0, 0)`.
    pub fn universal(row_labels: Universe, col_labels: ParameterSet) -> Self {
        Self::from_fn(row_labels, col_labels, |_, _| NsValue::UNIVERSAL)
    }

    /// `a_ij = (T, I, F)` of object `u_i` under parameter `x_j`.
    pub fn from_soft_set(set: &NsSoftSet) -> Self {
        Self::from_fn(set.universe().clone(), set.parameters().clone(), |i, j| {
            set.value(j, i)
        })
    }

    pub fn to_soft_set(&self) -> NsSoftSet {
        NsSoftSet::from_fn(self.row_labels.clone(), self.col_labels.clone(), |j, i| {
            self.get(i, j)
        })
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &Universe {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &ParameterSet {
        &self.col_labels
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> NsValue {
        self.cells[row * self.cols() + col]
    }

    pub fn row(&self, row: usize) -> &[NsValue] {
        let n = self.cols();
        &self.cells[row * n..(row + 1) * n]
    }

    pub fn cells(&self) -> &[NsValue] {
        &self.cells
    }

    /// Same matrix with its rows reordered so that new row `k` is old row
    /// `order[k]`.
    pub fn permute_rows(&self, order: &[usize]) -> Result<Self> {
        let row_labels = self.row_labels.permuted(order)?;
        Ok(Self::from_fn(row_labels, self.col_labels.clone(), |i, j| {
            self.get(order[i], j)
        }))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.col_labels.clone(), self.row_labels.clone(), |i, j| {
            self.get(j, i)
        })
    }

    pub fn classify(&self) -> ShapeReport {
        let (m, n) = (self.rows(), self.cols());
        let is_square = m == n;
        let indices = || (0..m).flat_map(move |i| (0..n).map(move |j| (i, j)));
        ShapeReport {
            is_row: m == 1,
            is_column: n == 1,
            is_square,
            is_diagonal: is_square
                && indices()
                    .filter(|(i, j)| i != j)
                    .all(|(i, j)| self.get(i, j).is_zero()),
            is_symmetric: is_square && indices().all(|(i, j)| self.get(i, j) == self.get(j, i)),
            is_zero: self.cells.iter().all(NsValue::is_zero),
            is_universal: self.cells.iter().all(|v| *v == NsValue::UNIVERSAL),
        }
    }

    /// Cellwise `(max T, min I, min F)`.
    pub fn union(&self, other: &NsMatrix) -> Result<NsMatrix> {
        let minmax = NormPair::default();
        self.zip_with(other, |a, b| a.union(b, &minmax))
    }

    /// Cellwise `(min T, max I, max F)`.
    pub fn intersection(&self, other: &NsMatrix) -> Result<NsMatrix> {
        let minmax = NormPair::default();
        self.zip_with(other, |a, b| a.intersection(b, &minmax))
    }

    /// Cellwise `(F, 1 - I, T)`.
    pub fn complement(&self) -> NsMatrix {
        NsMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            cells: self.cells.iter().map(NsValue::complement).collect(),
        }
    }

    /// Submatrix order: `T^a <= T^b`, `I^a >= I^b`, `F^a >= F^b` everywhere.
    pub fn is_subset(&self, other: &NsMatrix) -> Result<bool> {
        self.check_shape(other)?;
        Ok(self
            .cells
            .iter()
            .zip(&other.cells)
            .all(|(a, b)| a.is_below(b)))
    }

    /// Subset and not equal.
    pub fn is_proper_subset(&self, other: &NsMatrix) -> Result<bool> {
        Ok(self.is_subset(other)? && self.cells != other.cells)
    }

    /// The intersection is the zero matrix.
    pub fn is_disjoint(&self, other: &NsMatrix) -> Result<bool> {
        Ok(self.intersection(other)?.classify().is_zero)
    }

    /// Largest componentwise deviation between two equally shaped matrices.
    pub fn max_deviation(&self, other: &NsMatrix) -> Result<f64> {
        self.check_shape(other)?;
        Ok(self
            .cells
            .iter()
            .zip(&other.cells)
            .map(|(a, b)| a.max_deviation(b))
            .fold(0.0, f64::max))
    }

    pub(crate) fn zip_with(
        &self,
        other: &NsMatrix,
        f: impl Fn(&NsValue, &NsValue) -> NsValue,
    ) -> Result<NsMatrix> {
        self.check_shape(other)?;
        Ok(NsMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            cells: self
                .cells
                .iter()
                .zip(&other.cells)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub(crate) fn check_shape(&self, other: &NsMatrix) -> Result<()> {
        if (self.rows(), self.cols()) != (other.rows(), other.cols()) {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows(),
                self.cols(),
                other.rows(),
                other.cols()
            )));
        }
        if self.row_labels != other.row_labels {
            return Err(Error::ShapeMismatch("row labels differ".into()));
        }
        if self.col_labels != other.col_labels {
            return Err(Error::ShapeMismatch("column labels differ".into()));
        }
        Ok(())
    }
}

impl From<&NsSoftSet> for NsMatrix {
    fn from(set: &NsSoftSet) -> Self {
        NsMatrix::from_soft_set(set)
    }
}

impl From<&NsMatrix> for NsSoftSet {
    fn from(matrix: &NsMatrix) -> Self {
        matrix.to_soft_set()
    }
}
