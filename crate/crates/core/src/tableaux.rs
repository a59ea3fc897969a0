//! Semistandard and symplectic tableaux on (possibly skew) Young diagrams.
//!
//! A filling is stored as one `Vec<u32>` per row holding only the cells of
//! the skew diagram, so row `i` of `λ/μ` holds the entries of columns
//! `μ_i + 1 ..= λ_i`. Entries are positive integers; the alphabet bound
//! (`m`, usually `2n`) is passed to the operations that need it rather than
//! being stored in the tableau.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::partitions::{Cell, Partition, SkewShape};

/// A strictly increasing column of positive integers, i.e. a semistandard
/// tableau of single-column shape.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Column {
    values: Vec<u32>,
}

impl Column {
    /// Builds a column; fails unless the values are strictly increasing
    /// positive integers.
    pub fn new(values: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let values = values.into();
        if values.first().is_some_and(|&v| v == 0) {
            return Err(Error::InvalidColumn(format!(
                "values must be positive: {:?}",
                values
            )));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidColumn(format!(
                "values not strictly increasing: {:?}",
                values
            )));
        }
        Ok(Column { values })
    }

    pub fn empty() -> Self {
        Column { values: Vec::new() }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.values.binary_search(&v).is_ok()
    }

    /// The single-column tableau with these entries.
    pub fn to_tableau(&self) -> Tableau {
        let outer = Partition::new(vec![1; self.len()]).expect("column shape");
        let rows = self.values.iter().map(|&v| vec![v]).collect();
        Tableau::new(SkewShape::straight(outer), rows).expect("column tableau")
    }

    /// The largest value (None when empty).
    pub fn max(&self) -> Option<u32> {
        self.values.last().copied()
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, ")")
    }
}

impl Serialize for Column {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Column {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let values = Vec::<u32>::deserialize(deserializer)?;
        Column::new(values).map_err(D::Error::custom)
    }
}

/// A filling of a skew Young diagram with positive integers.
///
/// Nothing about the filling is constrained at construction beyond
/// positivity and fitting the shape; semistandardness and the symplectic
/// condition are separate predicates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Builds a tableau over `shape`; `rows[i]` must hold exactly the
    /// entries of the skew cells of row `i + 1`, left to right.
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        if rows.len() != shape.outer().len() {
            return Err(Error::InvalidTableau(format!(
                "shape {} has {} rows but {} row vectors were given",
                shape,
                shape.outer().len(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let want = shape.outer().part(i) - shape.inner().part(i);
            if row.len() != want {
                return Err(Error::InvalidTableau(format!(
                    "row {} of shape {} has width {} but {} entries were given",
                    i + 1,
                    shape,
                    want,
                    row.len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau(format!(
                    "row {} contains a zero entry",
                    i + 1
                )));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// Builds a straight-shape tableau from its rows; the row lengths must
    /// be weakly decreasing.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        let lengths: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        let outer = Partition::new(lengths)
            .map_err(|_| Error::InvalidTableau("row lengths are not weakly decreasing".into()))?;
        let rows = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Tableau::new(SkewShape::straight(outer), rows)
    }

    /// The empty tableau (shape `∅`).
    pub fn empty() -> Self {
        Tableau {
            shape: SkewShape::straight(Partition::empty()),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn outer(&self) -> &Partition {
        self.shape.outer()
    }

    pub fn inner(&self) -> &Partition {
        self.shape.inner()
    }

    pub fn is_straight(&self) -> bool {
        self.shape.is_straight()
    }

    /// Number of filled cells.
    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// The raw rows (skew cells only).
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at a 1-based `(row, col)`; `None` outside the skew diagram.
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        if !self.shape.contains_cell(Cell::new(row, col)) {
            return None;
        }
        let offset = col - 1 - self.shape.inner().part(row - 1);
        Some(self.rows[row - 1][offset])
    }

    /// All `(cell, entry)` pairs in row-major order.
    pub fn cells(&self) -> Vec<(Cell, u32)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, row) in self.rows.iter().enumerate() {
            let lo = self.shape.inner().part(i);
            for (k, &v) in row.iter().enumerate() {
                out.push((Cell::new(i + 1, lo + k + 1), v));
            }
        }
        out
    }

    /// The largest entry (0 when empty).
    pub fn max_entry(&self) -> u32 {
        self.rows
            .iter()
            .flat_map(|r| r.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// The values of column `col` (1-based), top to bottom.
    pub fn column(&self, col: usize) -> Vec<u32> {
        let mut out = Vec::new();
        for row in 1..=self.outer().len() {
            if let Some(v) = self.get(row, col) {
                out.push(v);
            }
        }
        out
    }

    /// Whether rows weakly increase left to right, columns strictly
    /// increase top to bottom, and all entries lie in `[1, m]`.
    /// Comparisons involving cells outside the diagram are vacuous.
    pub fn is_semistandard(&self, m: u32) -> bool {
        self.check_semistandard(m).is_ok()
    }

    /// Like [`Tableau::is_semistandard`] but reports the first violation,
    /// scanning cells in row-major order.
    pub fn check_semistandard(&self, m: u32) -> Result<(), Error> {
        for (cell, v) in self.cells() {
            if v > m {
                return Err(Error::EntryOutOfRange {
                    what: "alphabet bound",
                    where_: cell.to_string(),
                    entry: v,
                    bound: m,
                });
            }
            if let Some(left) = self.get(cell.row, cell.col.wrapping_sub(1)) {
                if left > v {
                    return Err(Error::NotSemistandard(format!(
                        "row not weakly increasing at {}: {} > {}",
                        cell, left, v
                    )));
                }
            }
            if cell.row >= 2 {
                if let Some(above) = self.get(cell.row - 1, cell.col) {
                    if above >= v {
                        return Err(Error::NotSemistandard(format!(
                            "column not strictly increasing at {}: {} ≥ {}",
                            cell, above, v
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The column word: columns left to right, each read bottom to top.
    pub fn column_word(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.size());
        for col in 1..=self.outer().first() {
            let column = self.column(col);
            out.extend(column.into_iter().rev());
        }
        out
    }

    /// The row-reading word: rows top to bottom, each left to right.
    /// Used only to fix deterministic enumeration orders.
    pub fn row_word(&self) -> Vec<u32> {
        self.rows.iter().flat_map(|r| r.iter().copied()).collect()
    }

    /// Occurrence counts `(T[1], …, T[m])`. Fails if an entry exceeds `m`.
    pub fn weight(&self, m: u32) -> Result<Vec<usize>, Error> {
        let mut counts = vec![0usize; m as usize];
        for (cell, v) in self.cells() {
            if v > m {
                return Err(Error::EntryOutOfRange {
                    what: "alphabet bound",
                    where_: cell.to_string(),
                    entry: v,
                    bound: m,
                });
            }
            counts[(v - 1) as usize] += 1;
        }
        Ok(counts)
    }

    /// The symplectic weight `(T[1] − T[2], T[3] − T[4], …, T[2n−1] − T[2n])`.
    pub fn sp_weight(&self, n: u32) -> Result<Vec<i64>, Error> {
        let w = self.weight(2 * n)?;
        Ok((0..n as usize)
            .map(|i| w[2 * i] as i64 - w[2 * i + 1] as i64)
            .collect())
    }

    /// Whether a straight-shape tableau satisfies the symplectic
    /// (King) condition `T(k, 1) ≥ 2k − 1` for every row `k`.
    ///
    /// The input must be straight and use entries in `[1, 2n]`; the caller
    /// is responsible for semistandardness.
    pub fn is_symplectic(&self, n: u32) -> Result<bool, Error> {
        if !self.is_straight() {
            return Err(Error::SkewNotAllowed(format!(
                "symplectic condition is defined on straight shapes, got {}",
                self.shape
            )));
        }
        if self.max_entry() > 2 * n {
            return Err(Error::EntryOutOfRange {
                what: "alphabet bound",
                where_: "first violation by value".into(),
                entry: self.max_entry(),
                bound: 2 * n,
            });
        }
        for k in 1..=self.outer().len() {
            let v = self.get(k, 1).expect("straight shape has a first column");
            if (v as usize) < 2 * k - 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Renders the tableau as a Young diagram drawn with box characters.
    /// Inner (skipped) cells are left blank. Deterministic; used for the
    /// CLI's pretty output. The empty tableau renders as `(empty)`.
    pub fn render(&self) -> String {
        if self.size() == 0 {
            return "(empty)".into();
        }
        let rmax = self.outer().len();
        let cmax = self.outer().first();
        let digits = self.cells().iter().map(|(_, v)| v.to_string().len()).max().unwrap_or(1);
        let width = digits + 2;
        let present = |i: usize, j: usize| {
            i >= 1 && j >= 1 && self.shape.contains_cell(Cell::new(i, j))
        };
        // Edge predicates on the (rmax+1) × (cmax+1) grid of junction
        // points: a border segment is drawn iff a cell on either side of it
        // is present.
        let vedge = |i: usize, bj: usize| present(i, bj) || present(i, bj + 1);
        let hedge = |bi: usize, j: usize| present(bi, j) || present(bi + 1, j);
        let mut lines = Vec::new();
        for bi in 0..=rmax {
            let mut border = String::new();
            for bj in 0..=cmax {
                let up = bi >= 1 && vedge(bi, bj);
                let down = bi < rmax && vedge(bi + 1, bj);
                let left = bj >= 1 && hedge(bi, bj);
                let right = bj < cmax && hedge(bi, bj + 1);
                border.push_str(junction(up, down, left, right));
                if bj < cmax {
                    let seg = if hedge(bi, bj + 1) { "─" } else { " " };
                    border.push_str(&seg.repeat(width));
                }
            }
            lines.push(border.trim_end().to_string());
            if bi < rmax {
                let i = bi + 1;
                let mut content = String::new();
                for bj in 0..=cmax {
                    content.push(if vedge(i, bj) { '│' } else { ' ' });
                    if bj < cmax {
                        match self.get(i, bj + 1) {
                            Some(v) => {
                                let s = v.to_string();
                                let pad = width - s.len();
                                let left_pad = pad / 2;
                                content.push_str(&" ".repeat(left_pad));
                                content.push_str(&s);
                                content.push_str(&" ".repeat(pad - left_pad));
                            }
                            None => content.push_str(&" ".repeat(width)),
                        }
                    }
                }
                lines.push(content.trim_end().to_string());
            }
        }
        lines.join("\n")
    }

    /// Parses the simple text-grid format: one line per row, entries
    /// separated by whitespace, a `.` for each skipped inner cell (inner
    /// cells must come first in a line). Blank lines are ignored.
    pub fn from_text_grid(text: &str) -> Result<Tableau, Error> {
        let mut inner_parts = Vec::new();
        let mut outer_parts = Vec::new();
        let mut rows = Vec::new();
        for line in text.lines() {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            let mut dots = 0usize;
            let mut values = Vec::new();
            for tok in tokens {
                if tok == "." {
                    if !values.is_empty() {
                        return Err(Error::Parse(
                            "'.' placeholders must precede all entries in a row".into(),
                        ));
                    }
                    dots += 1;
                } else {
                    let v: u32 = tok
                        .parse()
                        .map_err(|_| Error::Parse(format!("invalid entry {:?}", tok)))?;
                    if v == 0 {
                        return Err(Error::Parse("entries must be positive".into()));
                    }
                    values.push(v);
                }
            }
            inner_parts.push(dots);
            outer_parts.push(dots + values.len());
            rows.push(values);
        }
        let outer = Partition::new(outer_parts)
            .map_err(|e| Error::Parse(format!("outer shape: {}", e)))?;
        let inner = Partition::new(inner_parts)
            .map_err(|e| Error::Parse(format!("inner shape: {}", e)))?;
        rows.truncate(outer.len());
        Tableau::new(SkewShape::new(outer, inner)?, rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn junction(up: bool, down: bool, left: bool, right: bool) -> &'static str {
    match (up, down, left, right) {
        (true, true, true, true) => "┼",
        (true, true, true, false) => "┤",
        (true, true, false, true) => "├",
        (true, false, true, true) => "┴",
        (false, true, true, true) => "┬",
        (true, true, false, false) => "│",
        (false, false, true, true) => "─",
        (true, false, true, false) => "┘",
        (true, false, false, true) => "└",
        (false, true, true, false) => "┐",
        (false, true, false, true) => "┌",
        (true, false, false, false) | (false, true, false, false) => "│",
        (false, false, true, false) | (false, false, false, true) => "─",
        (false, false, false, false) => " ",
    }
}

#[derive(Serialize, Deserialize)]
struct TableauWire {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<u32>>,
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TableauWire {
            outer: self.outer().clone(),
            inner: self.inner().clone(),
            rows: self.rows.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = TableauWire::deserialize(deserializer)?;
        let shape = SkewShape::new(wire.outer, wire.inner).map_err(D::Error::custom)?;
        Tableau::new(shape, wire.rows).map_err(D::Error::custom)
    }
}

/// All semistandard fillings of a skew shape with entries in `[1, m]`,
/// in lexicographic order of their row-reading words.
pub fn enumerate_skew_sst(shape: &SkewShape, m: u32) -> Vec<Tableau> {
    let cells = shape.cells();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = (0..shape.outer().len())
        .map(|i| Vec::with_capacity(shape.outer().part(i) - shape.inner().part(i)))
        .collect();
    fill(shape, &cells, 0, m, &mut rows, &mut out);
    out
}

fn fill(
    shape: &SkewShape,
    cells: &[Cell],
    idx: usize,
    m: u32,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Tableau>,
) {
    if idx == cells.len() {
        out.push(Tableau::new(shape.clone(), rows.clone()).expect("valid partial fill"));
        return;
    }
    let cell = cells[idx];
    let inner = shape.inner().part(cell.row - 1);
    // Weakly increasing along the row.
    let left = if cell.col > inner + 1 {
        rows[cell.row - 1][cell.col - 2 - inner]
    } else {
        1
    };
    // Strictly increasing down the column.
    let above = if cell.row >= 2 && shape.contains_cell(Cell::new(cell.row - 1, cell.col)) {
        let inner_above = shape.inner().part(cell.row - 2);
        rows[cell.row - 2][cell.col - 1 - inner_above] + 1
    } else {
        1
    };
    let lo = left.max(above);
    for v in lo..=m {
        rows[cell.row - 1].push(v);
        fill(shape, cells, idx + 1, m, rows, out);
        rows[cell.row - 1].pop();
    }
}

/// All semistandard tableaux of straight shape `λ` with entries in `[1, m]`.
/// Empty when `ℓ(λ) > m` (the first column cannot be filled).
pub fn enumerate_sst(lambda: &Partition, m: u32) -> Vec<Tableau> {
    if lambda.len() > m as usize {
        return Vec::new();
    }
    enumerate_skew_sst(&SkewShape::straight(lambda.clone()), m)
}

/// All symplectic tableaux of shape `ν` with entries in `[1, 2n]`:
/// semistandard with `T(k, 1) ≥ 2k − 1`. Empty when `ℓ(ν) > n`.
pub fn enumerate_spt(nu: &Partition, n: u32) -> Vec<Tableau> {
    if nu.len() > n as usize {
        return Vec::new();
    }
    enumerate_sst(nu, 2 * n)
        .into_iter()
        .filter(|t| t.is_symplectic(n).expect("straight bounded tableau"))
        .collect()
}
