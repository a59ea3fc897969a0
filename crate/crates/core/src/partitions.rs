//! Partitions, skew shapes and vertical strips.
//!
//! A partition is stored as its weakly decreasing sequence of positive
//! parts; trailing zeros are never kept. Cells of Young diagrams are
//! 1-based `(row, col)` pairs in matrix orientation (row 1 on top).

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A cell of a Young diagram, 1-based, matrix orientation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// An integer partition `λ = (λ_1 ≥ λ_2 ≥ … ≥ λ_ℓ > 0)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from a part sequence, dropping trailing zeros.
    ///
    /// Fails if the sequence is not weakly decreasing.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self, Error> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {:?}",
                parts
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The positive parts, weakly decreasing.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of positive parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells, `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_{i+1}` with 0-based `i`; zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The largest part, `λ_1` (zero for the empty partition).
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Whether `inner ⊆ self` as Young diagrams.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().enumerate().all(|(i, &p)| p <= self.part(i))
    }

    /// Whether the cell lies in the diagram.
    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row - 1)
    }

    /// Column heights `(col_1(λ), …, col_{λ_1}(λ))`, i.e. the conjugate
    /// partition: `col_j(λ) = #{i : λ_i ≥ j}`.
    pub fn col_heights(&self) -> Vec<usize> {
        let mut heights = vec![0usize; self.first()];
        for &p in &self.parts {
            for h in heights.iter_mut().take(p) {
                *h += 1;
            }
        }
        heights
    }

    /// Whether every column height is even.
    pub fn has_even_columns(&self) -> bool {
        self.col_heights().iter().all(|h| h % 2 == 0)
    }

    /// The shape left after deleting the first column:
    /// `(λ_1 − 1, …, λ_ℓ − 1)` with zero parts dropped.
    pub fn remove_first_column(&self) -> Partition {
        let parts: Vec<usize> = self
            .parts
            .iter()
            .map(|&p| p - 1)
            .filter(|&p| p > 0)
            .collect();
        Partition { parts }
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push(Cell::new(i + 1, j));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// A skew shape `λ/μ` with `μ ⊆ λ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    /// Builds `outer/inner`; fails unless `inner ⊆ outer`.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!(
                "inner {} not contained in outer {}",
                inner, outer
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of cells `|λ/μ|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Whether the cell lies in the skew diagram.
    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Column range of row `row` (1-based): columns
    /// `inner_row + 1 ..= outer_row`, returned as a half-open range of
    /// 1-based column indices.
    pub fn row_cols(&self, row: usize) -> std::ops::Range<usize> {
        let lo = self.inner.part(row - 1) + 1;
        let hi = self.outer.part(row - 1) + 1;
        lo..hi
    }

    /// The cells of the skew diagram in row-major order
    /// (top to bottom, left to right).
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for row in 1..=self.outer.len() {
            for col in self.row_cols(row) {
                out.push(Cell::new(row, col));
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_straight() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Whether `outer/inner` is a vertical strip: `inner ⊆ outer` and no row
/// gains more than one cell (`inner_i ≥ outer_i − 1` for every row).
pub fn is_vertical_strip(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner)
        && (0..outer.len()).all(|i| inner.part(i) + 1 >= outer.part(i))
}

/// All partitions `μ ⊆ container` with `ℓ(μ) ≤ max_length`, in
/// lexicographically decreasing order of their part sequences.
/// Includes the empty partition (last).
pub fn enumerate_partitions(max_length: usize, container: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend_contained(&mut prefix, max_length, container, &mut out);
    out
}

fn descend_contained(
    prefix: &mut Vec<usize>,
    max_length: usize,
    container: &Partition,
    out: &mut Vec<Partition>,
) {
    if prefix.len() < max_length {
        let prev = prefix.last().copied().unwrap_or(usize::MAX);
        let hi = prev.min(container.part(prefix.len()));
        for v in (1..=hi).rev() {
            prefix.push(v);
            descend_contained(prefix, max_length, container, out);
            prefix.pop();
        }
    }
    out.push(Partition {
        parts: prefix.clone(),
    });
}

/// All partitions with `|μ| ≤ max_size` and `ℓ(μ) ≤ max_length`, in
/// lexicographically decreasing order. Used by the verification grids.
pub fn enumerate_partitions_sized(max_size: usize, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend_sized(&mut prefix, max_size, max_length, &mut out);
    out
}

fn descend_sized(
    prefix: &mut Vec<usize>,
    budget: usize,
    max_length: usize,
    out: &mut Vec<Partition>,
) {
    if prefix.len() < max_length {
        let prev = prefix.last().copied().unwrap_or(usize::MAX);
        let hi = prev.min(budget);
        for v in (1..=hi).rev() {
            prefix.push(v);
            descend_sized(prefix, budget - v, max_length, out);
            prefix.pop();
        }
    }
    out.push(Partition {
        parts: prefix.clone(),
    });
}

/// Row-major cells of a skew shape. Thin wrapper kept for symmetry with the
/// free functions above.
pub fn skew_cells(shape: &SkewShape) -> Vec<Cell> {
    shape.cells()
}
