//! The successor map, the Littlewood–Richardson map with its recording
//! tableau, the recording axioms (R1)–(R5), and exhaustive helpers for
//! inverting the map at small scale.
//!
//! The successor map `suc` splits off the first column of a tableau,
//! reduces it ([`reduce`]), and multiplies it back in the plactic monoid.
//! Iterating `suc` to its fixpoint and logging at which step each cell of
//! the original shape disappeared yields the pair `(P, Q)`: a symplectic
//! tableau `P` of some shape `ν` with `ℓ(ν) ≤ n`, and a recording tableau
//! `Q` of shape `λ/ν`. This is a bijection
//! `SST_{2n}(λ) → ⨆_ν SpT_{2n}(ν) × Rec_{2n}(λ/ν)`,
//! and `Rec_{2n}(λ/ν)` is exactly the set of fillings satisfying
//! (R1)–(R5) below.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partitions::{is_vertical_strip, Cell, Partition, SkewShape};
use crate::plactic::{split_first_column, star};
use crate::reduction::reduce;
use crate::tableaux::{enumerate_sst, Tableau};

/// The output of the Littlewood–Richardson map: the fixpoint tableau `p`,
/// the recording tableau `q`, and the full shape trajectory
/// `ν^0 = λ ⊃ ν^1 ⊃ … ⊃ ν^{k0}` with `steps = k0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrResult {
    pub p: Tableau,
    pub q: Tableau,
    pub trajectory: Vec<Partition>,
    pub steps: usize,
}

fn require_straight_bounded(t: &Tableau, n: u32, what: &str) -> Result<(), Error> {
    if !t.is_straight() {
        return Err(Error::SkewNotAllowed(format!(
            "{} is defined on straight shapes",
            what
        )));
    }
    let max = t.max_entry();
    if max > 2 * n {
        return Err(Error::EntryOutOfRange {
            what: "tableau alphabet bound",
            where_: what.to_string(),
            entry: max,
            bound: 2 * n,
        });
    }
    Ok(())
}

/// One step of the branching algorithm: `suc = * ∘ (red, id) ∘ d`.
///
/// Splits off the first column, reduces it, and multiplies the reduced
/// column back onto the remainder. Fixed points are exactly the
/// symplectic tableaux (for semistandard input); the shape of the result
/// is obtained from the input shape by removing a vertical strip.
///
/// Semistandardness of the input is *not* required: the map is defined
/// whenever every column is strictly increasing, which is all the
/// representation [`Tableau`] can hold and exactly what [`reduce`] and
/// column insertion need.
pub fn successor(t: &Tableau, n: u32) -> Result<Tableau, Error> {
    require_straight_bounded(t, n, "the successor map")?;
    if t.is_empty() {
        return Ok(t.clone());
    }
    let (first, rest) = split_first_column(t)?;
    let reduced = reduce(&first, n)?;
    let result = star(&reduced.to_tableau(), &rest)?;
    debug_assert!(
        is_vertical_strip(result.outer(), t.outer()),
        "successor must remove a vertical strip: {} -> {}",
        t.outer(),
        result.outer()
    );
    Ok(result)
}

/// The Littlewood–Richardson map `T ↦ (P, Q)`.
///
/// Iterates [`successor`] until the first fixpoint `P^{k0}`; the cell
/// `(i,j)` of `λ/ν^{k0}` receives the label
/// `Q(i,j) = min{k | (i,j) ∉ D(ν^k)}`, i.e. the step at which it
/// disappeared.
pub fn lr_map(t: &Tableau, n: u32) -> Result<LrResult, Error> {
    require_straight_bounded(t, n, "the LR map")?;
    let lambda = t.outer().clone();
    let mut p = t.clone();
    let mut trajectory = vec![lambda.clone()];
    let mut labels: BTreeMap<Cell, u32> = BTreeMap::new();
    loop {
        let next = successor(&p, n)?;
        if next == p {
            break;
        }
        if trajectory.len() > lambda.size() {
            return Err(Error::Internal(
                "successor iteration exceeded the cell count of the shape".into(),
            ));
        }
        let step = trajectory.len() as u32;
        let new_shape = next.outer().clone();
        for cell in p.outer().cells() {
            if !new_shape.contains_cell(cell) {
                labels.insert(cell, step);
            }
        }
        trajectory.push(new_shape);
        p = next;
    }
    let nu = trajectory.last().expect("trajectory starts with λ").clone();
    let shape = SkewShape::new(lambda, nu)?;
    let rows: Vec<Vec<u32>> = (1..=shape.outer().len())
        .map(|i| {
            shape
                .row_cols(i)
                .map(|j| labels[&Cell::new(i, j)])
                .collect()
        })
        .collect();
    let q = Tableau::new(shape, rows)?;
    Ok(LrResult {
        p,
        q,
        steps: trajectory.len() - 1,
        trajectory,
    })
}

/// Reconstructs the intermediate shape `ν^{k−1}` from a filling `Q` of
/// `λ/ν` via `D(ν^{k−1}) = D(ν) ⊔ {(i,j) ∈ D(λ/ν) | Q(i,j) ≥ k}`.
///
/// Returns `None` when the cell set is not a partition diagram (cannot
/// happen once (R1) and (R2) hold).
fn reconstruct_shape(q: &Tableau, k: u32) -> Option<Partition> {
    let shape = q.shape();
    let mut parts = Vec::new();
    for i in 1..=shape.outer().len() {
        let inner_len = shape.inner().part(i - 1);
        let marked: Vec<usize> = shape
            .row_cols(i)
            .filter(|&j| q.get(i, j).expect("cell in domain") >= k)
            .collect();
        // The marked cells must extend the inner row contiguously.
        let len = inner_len + marked.len();
        if marked.iter().enumerate().any(|(t, &j)| j != inner_len + t + 1) {
            return None;
        }
        parts.push(len);
    }
    Partition::new(parts).ok()
}

/// Checks the recording axioms (R1)–(R5) for a filling `Q` of `λ/ν`:
///
/// - (R1) entries strictly decrease along rows, left to right;
/// - (R2) entries weakly decrease along columns, top to bottom;
/// - (R3) every value `k > 0` occurs an even number of times;
/// - (R4) `Q[k] ≥ 2(ℓ(ν^{k−1}) − n)` with `ν^{k−1}` reconstructed from
///   the cells `{Q ≥ k}`;
/// - (R5) `Q_{≤r}[k+1] ≤ Q_{≤r}[k]` for all rows `r` and values `k`,
///   counting occurrences in rows `1..=r`.
///
/// (R4) instantiated just past the largest label forces `ℓ(ν) ≤ n`, so a
/// shape violating that precondition simply fails the axioms.
pub fn is_recording(
    q: &Tableau,
    lambda: &Partition,
    nu: &Partition,
    n: u32,
) -> Result<bool, Error> {
    if q.outer() != lambda || q.inner() != nu {
        return Err(Error::ShapeMismatch(format!(
            "recording tableau has shape {} but {}/{} was claimed",
            q.shape(),
            lambda,
            nu
        )));
    }
    let shape = q.shape();
    let rows = shape.outer().len();
    // (R1) and (R2).
    for (cell, v) in q.cells() {
        if let Some(left) = q.get(cell.row, cell.col.wrapping_sub(1)) {
            if left <= v {
                return Ok(false);
            }
        }
        if cell.row > 1 {
            if let Some(above) = q.get(cell.row - 1, cell.col) {
                if above < v {
                    return Ok(false);
                }
            }
        }
    }
    let max_label = q.max_entry();
    let count = |r: usize, k: u32| -> usize {
        q.cells()
            .iter()
            .filter(|(c, v)| c.row <= r && *v == k)
            .count()
    };
    // (R3) and (R4); k = max_label + 1 reduces (R4) to ℓ(ν) ≤ n.
    for k in 1..=max_label + 1 {
        let total = count(rows, k);
        if k <= max_label && total % 2 != 0 {
            return Ok(false);
        }
        let prev = match reconstruct_shape(q, k) {
            Some(p) => p,
            None => return Ok(false),
        };
        if 2 * (prev.len() as i64 - n as i64) > total as i64 {
            return Ok(false);
        }
    }
    // (R5).
    for r in 1..=rows {
        for k in 1..max_label {
            if count(r, k + 1) > count(r, k) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Enumerates all recording tableaux of shape `λ/ν`, in lexicographic
/// order of their row-major reading words.
///
/// The search space is finite because used labels form an initial segment
/// `[1, K]` with even counts `≥ 2` (forced by (R3) and (R5) at the last
/// row), so `K ≤ ⌊|λ/ν|/2⌋`; candidates built with the local constraints
/// (R1)/(R2) are then filtered through [`is_recording`].
pub fn enumerate_recording(
    lambda: &Partition,
    nu: &Partition,
    n: u32,
) -> Result<Vec<Tableau>, Error> {
    let shape = SkewShape::new(lambda.clone(), nu.clone())?;
    let cells = shape.cells();
    let max_label = (cells.len() / 2) as u32;
    let mut results = Vec::new();
    let mut filling: BTreeMap<Cell, u32> = BTreeMap::new();
    fill_recording(
        &shape,
        &cells,
        0,
        max_label,
        n,
        &mut filling,
        &mut results,
    )?;
    Ok(results)
}

fn fill_recording(
    shape: &SkewShape,
    cells: &[Cell],
    idx: usize,
    max_label: u32,
    n: u32,
    filling: &mut BTreeMap<Cell, u32>,
    results: &mut Vec<Tableau>,
) -> Result<(), Error> {
    if idx == cells.len() {
        let rows: Vec<Vec<u32>> = (1..=shape.outer().len())
            .map(|i| shape.row_cols(i).map(|j| filling[&Cell::new(i, j)]).collect())
            .collect();
        let q = Tableau::new(shape.clone(), rows)?;
        if is_recording(&q, shape.outer(), shape.inner(), n)? {
            results.push(q);
        }
        return Ok(());
    }
    let cell = cells[idx];
    // (R1): strictly below the left neighbour; (R2): at most the value
    // above. Cells are visited in row-major order, so both are filled.
    let mut bound = max_label;
    let left = Cell::new(cell.row, cell.col.wrapping_sub(1));
    if cell.col > 1 && shape.contains_cell(left) {
        bound = bound.min(filling[&left].saturating_sub(1));
    }
    if cell.row > 1 {
        let above = Cell::new(cell.row - 1, cell.col);
        if shape.contains_cell(above) {
            bound = bound.min(filling[&above]);
        }
    }
    for v in 1..=bound {
        filling.insert(cell, v);
        fill_recording(shape, cells, idx + 1, max_label, n, filling, results)?;
    }
    filling.remove(&cell);
    Ok(())
}

/// A memoized inverse of [`lr_map`] for one shape `λ`: the table of
/// `(P, Q) ↦ T` over all of `SST_{2n}(λ)`.
///
/// Building the table verifies injectivity as a side effect; a collision
/// is an internal invariant violation.
#[derive(Debug, Clone)]
pub struct LrInverseTable {
    map: BTreeMap<(Tableau, Tableau), Tableau>,
}

impl LrInverseTable {
    pub fn build(lambda: &Partition, n: u32) -> Result<Self, Error> {
        let mut map = BTreeMap::new();
        for t in enumerate_sst(lambda, 2 * n) {
            let result = lr_map(&t, n)?;
            if let Some(other) = map.insert((result.p, result.q), t.clone()) {
                return Err(Error::Internal(format!(
                    "LR map collision: {} and {} share an image",
                    other, t
                )));
            }
        }
        Ok(LrInverseTable { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn lookup(&self, p: &Tableau, q: &Tableau) -> Option<&Tableau> {
        self.map.get(&(p.clone(), q.clone()))
    }
}

/// Finds the unique `T ∈ SST_{2n}(λ)` with `lr_map(T) = (p, q)` by
/// memoized lookup, or [`Error::NotInImage`] if the pair is not in the
/// codomain. Build an [`LrInverseTable`] directly to amortize repeated
/// queries for the same `λ`.
pub fn lr_inverse_lookup(
    p: &Tableau,
    q: &Tableau,
    lambda: &Partition,
    n: u32,
) -> Result<Tableau, Error> {
    let table = LrInverseTable::build(lambda, n)?;
    table.lookup(p, q).cloned().ok_or_else(|| {
        Error::NotInImage(format!(
            "no tableau of shape {} maps to the pair (P, Q) = ({}, {})",
            lambda, p, q
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_partitions, enumerate_partitions_sized};
    use crate::tableaux::enumerate_spt;
    use std::collections::BTreeSet;

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn skew_tab(outer: &[usize], inner: &[usize], rows: &[&[u32]]) -> Tableau {
        let shape = SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap();
        Tableau::new(shape, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// The full worked trace: λ = (4,3,2,2,1), n = 3.
    #[test]
    fn lr_worked_example_full_trace() {
        let t = tab(&[&[1, 1, 2, 4], &[2, 2, 3], &[4, 4], &[5, 6], &[6]]);
        assert!(t.is_semistandard(6));

        let p1 = successor(&t, 3).unwrap();
        assert_eq!(p1, tab(&[&[1, 2, 4], &[2, 3], &[4, 4], &[6]]));
        let p2 = successor(&p1, 3).unwrap();
        assert_eq!(p2, tab(&[&[2, 4, 4], &[3], &[4], &[6]]));
        let p3 = successor(&p2, 3).unwrap();
        assert_eq!(p3, tab(&[&[2, 4, 4], &[6]]));
        assert_eq!(successor(&p3, 3).unwrap(), p3);

        let result = lr_map(&t, 3).unwrap();
        assert_eq!(result.p, p3);
        assert_eq!(result.steps, 3);
        assert_eq!(
            result.trajectory,
            vec![
                part(&[4, 3, 2, 2, 1]),
                part(&[3, 2, 2, 1]),
                part(&[3, 1, 1, 1]),
                part(&[3, 1]),
            ]
        );
        let q = skew_tab(
            &[4, 3, 2, 2, 1],
            &[3, 1],
            &[&[1], &[2, 1], &[3, 2], &[3, 1], &[1]],
        );
        assert_eq!(result.q, q);
        assert!(is_recording(&q, &part(&[4, 3, 2, 2, 1]), &part(&[3, 1]), 3).unwrap());
        assert!(result.p.is_symplectic(3).unwrap());
    }

    /// The successor-chain example: n = 7, a 10-row tableau that is not
    /// semistandard (row 7 reads (11, 10)); the successor map is defined
    /// regardless and the printed chain reaches its fixpoint at step 3.
    #[test]
    fn successor_chain_example() {
        let t = tab(&[
            &[1, 2, 2, 3],
            &[3, 3, 4, 5],
            &[4, 4, 5, 6],
            &[5, 6, 6, 9],
            &[6, 7, 7, 10],
            &[7, 8, 8],
            &[11, 10],
            &[12],
            &[13],
            &[14],
        ]);
        assert!(!t.is_semistandard(14));

        let s1 = successor(&t, 7).unwrap();
        assert_eq!(
            s1,
            tab(&[
                &[1, 2, 2, 3],
                &[3, 4, 5, 9],
                &[4, 5, 6],
                &[6, 6, 7],
                &[7, 7, 10],
                &[8, 8],
                &[10],
                &[11],
                &[12],
            ])
        );
        let s2 = successor(&s1, 7).unwrap();
        assert_eq!(
            s2,
            tab(&[
                &[1, 2, 2, 3],
                &[4, 5, 6, 9],
                &[5, 6],
                &[6, 7],
                &[7, 10],
                &[8],
                &[10],
            ])
        );
        let s3 = successor(&s2, 7).unwrap();
        assert_eq!(
            s3,
            tab(&[&[1, 2, 2, 3], &[4, 5, 6, 9], &[6, 10], &[7], &[10]])
        );
        let s4 = successor(&s3, 7).unwrap();
        assert_eq!(s4, s3);
    }

    #[test]
    fn successor_fixes_symplectic_tableaux() {
        for nu in enumerate_partitions(2, &part(&[3, 3])) {
            for t in enumerate_spt(&nu, 2) {
                assert_eq!(successor(&t, 2).unwrap(), t);
            }
        }
    }

    #[test]
    fn successor_on_small_columns() {
        let t = tab(&[&[1], &[2]]);
        assert_eq!(successor(&t, 1).unwrap(), Tableau::empty());
        assert_eq!(successor(&t, 3).unwrap(), Tableau::empty());
        assert_eq!(successor(&Tableau::empty(), 1).unwrap(), Tableau::empty());
    }

    #[test]
    fn successor_input_validation() {
        let skew = skew_tab(&[2, 1], &[1], &[&[1], &[1]]);
        assert!(matches!(
            successor(&skew, 2),
            Err(Error::SkewNotAllowed(_))
        ));
        let t = tab(&[&[1, 5]]);
        assert!(matches!(
            successor(&t, 2),
            Err(Error::EntryOutOfRange { .. })
        ));
    }

    #[test]
    fn lr_map_on_symplectic_input_is_immediate() {
        let t = tab(&[&[1, 1], &[3, 3]]);
        assert!(t.is_symplectic(2).unwrap());
        let result = lr_map(&t, 2).unwrap();
        assert_eq!(result.p, t);
        assert_eq!(
            result.q,
            Tableau::new(
                SkewShape::new(part(&[2, 2]), part(&[2, 2])).unwrap(),
                vec![vec![], vec![]],
            )
            .unwrap()
        );
        assert_eq!(result.trajectory, vec![part(&[2, 2])]);
        assert_eq!(result.steps, 0);
    }

    #[test]
    fn lr_map_on_the_column_one_two() {
        let t = tab(&[&[1], &[2]]);
        let result = lr_map(&t, 1).unwrap();
        assert_eq!(result.p, Tableau::empty());
        assert_eq!(result.q, skew_tab(&[1, 1], &[], &[&[1], &[1]]));
        assert_eq!(result.trajectory, vec![part(&[1, 1]), Partition::empty()]);
        assert_eq!(result.steps, 1);
    }

    #[test]
    fn lr_result_serializes_with_named_fields() {
        let t = tab(&[&[1], &[2]]);
        let result = lr_map(&t, 1).unwrap();
        let json = serde_json::to_string(&result).unwrap();
        assert_eq!(
            json,
            "{\"p\":{\"outer\":[],\"inner\":[],\"rows\":[]},\
             \"q\":{\"outer\":[1,1],\"inner\":[],\"rows\":[[1],[1]]},\
             \"trajectory\":[[1,1],[]],\"steps\":1}"
        );
        let back: LrResult = serde_json::from_str(&json).unwrap();
        assert_eq!(back, result);
    }

    #[test]
    fn recording_axioms_on_hand_fillings() {
        // Empty skew shape: vacuously a recording tableau.
        let empty = Tableau::new(
            SkewShape::new(part(&[2]), part(&[2])).unwrap(),
            vec![vec![]],
        )
        .unwrap();
        assert!(is_recording(&empty, &part(&[2]), &part(&[2]), 1).unwrap());

        // Both cells of a vertical domino must carry the same label.
        let good = skew_tab(&[1, 1], &[], &[&[1], &[1]]);
        assert!(is_recording(&good, &part(&[1, 1]), &part(&[]), 1).unwrap());
        let bad = skew_tab(&[1, 1], &[], &[&[2], &[1]]);
        assert!(!is_recording(&bad, &part(&[1, 1]), &part(&[]), 1).unwrap());

        // Odd count: single cell labeled 1 fails (R3).
        let odd = skew_tab(&[1], &[], &[&[1]]);
        assert!(!is_recording(&odd, &part(&[1]), &part(&[]), 1).unwrap());

        // A horizontal domino labeled (2, 1) passes (R1) but has two odd
        // counts, failing (R3); with (1, 1) it would fail (R1) instead,
        // so Rec((2)/()) is empty.
        let wide = skew_tab(&[2], &[], &[&[2, 1]]);
        assert!(!is_recording(&wide, &part(&[2]), &part(&[]), 1).unwrap());

        // ℓ(ν) > n is caught by (R4) past the last label: the empty
        // filling of (1,1)/(1,1) is not a recording tableau for n = 1.
        let tall = Tableau::new(
            SkewShape::new(part(&[1, 1]), part(&[1, 1])).unwrap(),
            vec![vec![], vec![]],
        )
        .unwrap();
        assert!(!is_recording(&tall, &part(&[1, 1]), &part(&[1, 1]), 1).unwrap());

        // Shape mismatch is an error, not `false`.
        assert!(matches!(
            is_recording(&good, &part(&[2]), &part(&[]), 1),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn recording_enumeration_small_cases() {
        // λ = (1,1), ν = ∅, n = 1: exactly one recording tableau.
        let recs = enumerate_recording(&part(&[1, 1]), &part(&[]), 1).unwrap();
        assert_eq!(recs, vec![skew_tab(&[1, 1], &[], &[&[1], &[1]])]);

        // λ = ν: exactly the empty filling.
        let recs = enumerate_recording(&part(&[2, 1]), &part(&[2, 1]), 2).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].size(), 0);

        // The worked example's Q is in its enumeration.
        let q = skew_tab(
            &[4, 3, 2, 2, 1],
            &[3, 1],
            &[&[1], &[2, 1], &[3, 2], &[3, 1], &[1]],
        );
        let recs = enumerate_recording(&part(&[4, 3, 2, 2, 1]), &part(&[3, 1]), 3).unwrap();
        assert!(recs.contains(&q));
    }

    /// The image of the LR map is exactly `⨆_ν SpT × Rec`, checked
    /// set-wise on a small grid (the harness covers the full grid).
    #[test]
    fn image_matches_axioms_small_grid() {
        for n in 1..=2u32 {
            for lambda in enumerate_partitions_sized(4, 2 * n as usize) {
                let mut image: BTreeSet<(Tableau, Tableau)> = BTreeSet::new();
                for t in enumerate_sst(&lambda, 2 * n) {
                    let r = lr_map(&t, n).unwrap();
                    assert!(r.p.is_symplectic(n).unwrap());
                    assert!(r.p.outer().len() <= n as usize);
                    for w in r.trajectory.windows(2) {
                        assert!(is_vertical_strip(&w[1], &w[0]));
                        assert!((w[0].size() - w[1].size()) % 2 == 0);
                        assert!(w[0].size() > w[1].size());
                    }
                    assert!(image.insert((r.p, r.q)), "LR map not injective");
                }
                let mut codomain: BTreeSet<(Tableau, Tableau)> = BTreeSet::new();
                for nu in enumerate_partitions(n as usize, &lambda) {
                    let recs = enumerate_recording(&lambda, &nu, n).unwrap();
                    for p in enumerate_spt(&nu, n) {
                        for q in &recs {
                            codomain.insert((p.clone(), q.clone()));
                        }
                    }
                }
                assert_eq!(image, codomain, "λ = {lambda}, n = {n}");
            }
        }
    }

    #[test]
    fn inverse_lookup_round_trip() {
        for n in 1..=2u32 {
            for lambda in enumerate_partitions_sized(6, 2 * n as usize) {
                let table = LrInverseTable::build(&lambda, n).unwrap();
                for t in enumerate_sst(&lambda, 2 * n) {
                    let r = lr_map(&t, n).unwrap();
                    assert_eq!(table.lookup(&r.p, &r.q), Some(&t));
                }
            }
        }
    }

    #[test]
    fn inverse_lookup_worked_example_and_rejection() {
        let t = tab(&[&[1, 1, 2, 4], &[2, 2, 3], &[4, 4], &[5, 6], &[6]]);
        let r = lr_map(&t, 3).unwrap();
        assert_eq!(
            lr_inverse_lookup(&r.p, &r.q, &part(&[4, 3, 2, 2, 1]), 3).unwrap(),
            t
        );

        // A codomain pair that no tableau maps to: mismatched labels.
        let p = Tableau::empty();
        let q = skew_tab(&[1, 1], &[], &[&[2], &[1]]);
        assert!(matches!(
            lr_inverse_lookup(&p, &q, &part(&[1, 1]), 1),
            Err(Error::NotInImage(_))
        ));
    }
}
