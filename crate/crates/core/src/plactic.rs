//! Column insertion and the plactic `*` product on straight tableaux.
//!
//! Insertion here is *column* insertion: a value enters the first column,
//! bumps the topmost entry that is ≥ it into the next column, and so on
//! until a bump lands at the bottom of a (possibly empty) column. The `*`
//! product inserts the column word of the left factor into the right
//! factor, last letter first.

use crate::error::Error;
use crate::partitions::Partition;
use crate::tableaux::{Column, Tableau};

/// The rows touched by one insertion: `route[j]` is the row in which
/// column `j + 1` was modified. Routes are weakly decreasing, and the last
/// entry is the row of the newly created cell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BumpingRoute {
    rows: Vec<usize>,
}

impl BumpingRoute {
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of columns touched.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The created cell `(row, col)`, 1-based.
    pub fn new_cell(&self) -> (usize, usize) {
        (*self.rows.last().expect("routes are never empty"), self.rows.len())
    }
}

/// Inserts `w` into a straight-shape semistandard tableau by column
/// insertion, returning the grown tableau and the bumping route.
///
/// The shape grows by exactly one cell and semistandardness is preserved;
/// both facts are debug-asserted. Fails on `w = 0` or a skew input.
pub fn column_insert(w: u32, t: &Tableau) -> Result<(Tableau, BumpingRoute), Error> {
    if w == 0 {
        return Err(Error::EntryOutOfRange {
            what: "inserted value",
            where_: "input".into(),
            entry: w,
            bound: u32::MAX,
        });
    }
    if !t.is_straight() {
        return Err(Error::SkewNotAllowed(
            "column insertion is defined on straight shapes".into(),
        ));
    }
    let mut rows: Vec<Vec<u32>> = t.rows().to_vec();
    let heights = t.outer().col_heights();
    let mut route = Vec::new();
    let mut carry = w;
    let mut col = 0usize; // 0-based column index
    loop {
        let height = heights.get(col).copied().unwrap_or(0);
        // Topmost row in this column whose value is ≥ the carried value.
        let hit = (0..height).find(|&r| rows[r][col] >= carry);
        match hit {
            Some(r) => {
                route.push(r + 1);
                std::mem::swap(&mut rows[r][col], &mut carry);
                col += 1;
            }
            None => {
                // The carried value settles at the bottom of this column.
                if height == rows.len() {
                    rows.push(Vec::new());
                }
                debug_assert_eq!(rows[height].len(), col, "new cell extends its row by one");
                rows[height].push(carry);
                route.push(height + 1);
                break;
            }
        }
    }
    debug_assert!(
        route.windows(2).all(|w| w[0] >= w[1]),
        "bumping routes decrease weakly: {:?}",
        route
    );
    let result = Tableau::from_rows(rows)?;
    debug_assert_eq!(result.size(), t.size() + 1);
    debug_assert!(
        result.max_entry() <= t.max_entry().max(w)
            && result.is_semistandard(t.max_entry().max(w)),
        "insertion preserves semistandardness"
    );
    Ok((result, BumpingRoute { rows: route }))
}

/// The plactic product `S * T`: the letters of the column word of `S` are
/// column-inserted into `T`, starting from the *last* letter of the word.
///
/// Both factors must be straight semistandard tableaux.
pub fn star(s: &Tableau, t: &Tableau) -> Result<Tableau, Error> {
    if !s.is_straight() || !t.is_straight() {
        return Err(Error::SkewNotAllowed(
            "the plactic product is defined on straight shapes".into(),
        ));
    }
    let mut acc = t.clone();
    for &w in s.column_word().iter().rev() {
        let (next, _) = column_insert(w, &acc)?;
        acc = next;
    }
    Ok(acc)
}

/// Splits a non-empty tableau into its first column and the remainder
/// (everything to the right, shifted one column left).
pub fn split_first_column(t: &Tableau) -> Result<(Column, Tableau), Error> {
    if !t.is_straight() {
        return Err(Error::SkewNotAllowed(
            "column split is defined on straight shapes".into(),
        ));
    }
    if t.is_empty() {
        return Err(Error::EmptyInput("cannot split the empty tableau".into()));
    }
    let first = Column::new(t.column(1))?;
    let rest_rows: Vec<Vec<u32>> = t
        .rows()
        .iter()
        .filter(|r| r.len() > 1)
        .map(|r| r[1..].to_vec())
        .collect();
    let rest = Tableau::from_rows(rest_rows)?;
    Ok((first, rest))
}

/// Inverts the Pieri growth `U = b * T'` where `b` is a column: given `U`
/// and the shape `λ'` of `T'` (so `sh(U)/λ'` is a vertical strip of size
/// `k`), reverse-bumps the strip cells out of `U` and returns `(b, T')`.
///
/// Strip cells are un-inserted in the reverse of their insertion order:
/// by column ascending and, within a column, by row descending. Fails if
/// the extracted letters do not form a strictly increasing column, which
/// cannot happen for pairs in the image of the Pieri bijection.
pub fn unstar(u: &Tableau, lambda_prime: &Partition, k: usize) -> Result<(Column, Tableau), Error> {
    if !u.is_straight() {
        return Err(Error::SkewNotAllowed("unstar expects a straight shape".into()));
    }
    if !crate::partitions::is_vertical_strip(lambda_prime, u.outer()) {
        return Err(Error::ShapeMismatch(format!(
            "{}/{} is not a vertical strip",
            u.outer(),
            lambda_prime
        )));
    }
    if u.outer().size() != lambda_prime.size() + k {
        return Err(Error::ShapeMismatch(format!(
            "strip {}/{} does not have {} cells",
            u.outer(),
            lambda_prime,
            k
        )));
    }
    // Cells of the strip, ordered column-ascending then row-descending;
    // since the strip has at most one cell per row and rows of later
    // columns sit higher, this is exactly row-descending.
    let mut strip: Vec<(usize, usize)> = (0..u.outer().len())
        .filter(|&i| u.outer().part(i) > lambda_prime.part(i))
        .map(|i| (i + 1, u.outer().part(i)))
        .collect();
    strip.sort_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
    let mut rows: Vec<Vec<u32>> = u.rows().to_vec();
    let mut extracted: Vec<u32> = Vec::with_capacity(k);
    for &(row, col) in &strip {
        let mut carry = rows[row - 1]
            .pop()
            .ok_or_else(|| Error::Internal("strip cell missing".into()))?;
        debug_assert_eq!(rows[row - 1].len(), col - 1);
        // Walk back through the columns, undoing each bump: in column j the
        // reverse bump replaces the bottom-most value ≤ carry.
        for j in (0..col - 1).rev() {
            let r = (0..rows.len())
                .rev()
                .find(|&r| rows[r].len() > j && rows[r][j] <= carry)
                .ok_or_else(|| {
                    Error::NotInImage(format!(
                        "reverse bump from column {} found no value ≤ {}",
                        j + 2,
                        carry
                    ))
                })?;
            std::mem::swap(&mut rows[r][j], &mut carry);
        }
        extracted.push(carry);
    }
    // Letters come out largest first; the column wants them increasing.
    extracted.reverse();
    let column = Column::new(extracted)
        .map_err(|e| Error::NotInImage(format!("extracted letters are not a column: {}", e)))?;
    let rest = Tableau::from_rows(rows.into_iter().filter(|r| !r.is_empty()).collect())?;
    if rest.outer() != lambda_prime {
        return Err(Error::Internal(format!(
            "unstar left shape {}, expected {}",
            rest.outer(),
            lambda_prime
        )));
    }
    Ok((column, rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{enumerate_partitions_sized, is_vertical_strip, Partition, SkewShape};
    use crate::tableaux::enumerate_sst;
    use std::collections::{BTreeMap, BTreeSet};

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn insertion_worked_example() {
        // Insert 7; the bump chain is 7 → 7 (row 5, col 1) → 7 (row 5,
        // col 2) → 9 (row 4, col 3) → new cell (2, 4).
        let before = t(&[
            &[1, 2, 2, 3],
            &[3, 4, 5],
            &[4, 5, 6],
            &[6, 6, 9],
            &[7, 7, 10],
            &[8, 8],
            &[10],
        ]);
        let after = t(&[
            &[1, 2, 2, 3],
            &[3, 4, 5, 9],
            &[4, 5, 6],
            &[6, 6, 7],
            &[7, 7, 10],
            &[8, 8],
            &[10],
        ]);
        let (got, route) = column_insert(7, &before).unwrap();
        assert_eq!(got, after);
        assert_eq!(route.rows(), &[5, 5, 4, 2]);
        assert_eq!(route.new_cell(), (2, 4));
    }

    #[test]
    fn insertion_small_examples() {
        let (got, route) = column_insert(1, &t(&[&[1]])).unwrap();
        assert_eq!(got, t(&[&[1, 1]]));
        assert_eq!(route.rows(), &[1, 1]);
        let (got, route) = column_insert(2, &Tableau::empty()).unwrap();
        assert_eq!(got, t(&[&[2]]));
        assert_eq!(route.rows(), &[1]);
        assert!(column_insert(0, &Tableau::empty()).is_err());
    }

    #[test]
    fn insertion_grows_shape_by_one_vertical_strip_cell() {
        for lambda in enumerate_partitions_sized(6, 4) {
            for tab in enumerate_sst(&lambda, 4) {
                for w in 1..=4u32 {
                    let (next, route) = column_insert(w, &tab).unwrap();
                    assert!(next.is_semistandard(4));
                    assert_eq!(next.size(), tab.size() + 1);
                    assert!(next.outer().contains(tab.outer()));
                    let (r, c) = route.new_cell();
                    assert!(next.get(r, c).is_some());
                    assert_eq!(tab.get(r, c), None);
                }
            }
        }
    }

    /// Successive insertions of `w < w'`: the second route is no longer
    /// than the first and runs strictly below it in every shared column.
    #[test]
    fn consecutive_insertions_nest_routes() {
        for lambda in enumerate_partitions_sized(6, 6) {
            for tab in enumerate_sst(&lambda, 6) {
                for w in 1..=5u32 {
                    for w2 in w + 1..=6u32 {
                        let (mid, r1) = column_insert(w, &tab).unwrap();
                        let (_, r2) = column_insert(w2, &mid).unwrap();
                        assert!(r2.len() <= r1.len(), "λ = {lambda}, w = {w}, w' = {w2}");
                        for j in 0..r2.len() {
                            assert!(
                                r2.rows()[j] > r1.rows()[j],
                                "λ = {lambda}, w = {w}, w' = {w2}, column {}",
                                j + 1
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn star_of_column_with_tableau() {
        // (4) * [[1,2,4],[2,3],[4,4],[6]] — one letter, one insertion.
        let col = Column::new(vec![4]).unwrap().to_tableau();
        let rest = t(&[&[1, 2, 4], &[2, 3], &[4, 4], &[6]]);
        let got = star(&col, &rest).unwrap();
        // 4 bumps 4 in column 1 (row 3)? No: column 1 is (1,2,4,6); the
        // topmost entry ≥ 4 is the 4 in row 3. 4 → column 2: (2,3,4);
        // topmost ≥ 4 is 4 in row 3. 4 → column 3: (4); topmost ≥ 4 is row
        // 1. 4 → column 4: empty, lands at (1,4).
        assert_eq!(got, t(&[&[1, 2, 4, 4], &[2, 3], &[4, 4], &[6]]));
    }

    #[test]
    fn split_first_column_examples() {
        let tab = t(&[&[1, 1, 2, 4], &[2, 2, 3], &[4, 4], &[5, 6], &[6]]);
        let (col, rest) = split_first_column(&tab).unwrap();
        assert_eq!(col, Column::new(vec![1, 2, 4, 5, 6]).unwrap());
        assert_eq!(rest, t(&[&[1, 2, 4], &[2, 3], &[4], &[6]]));
        assert!(split_first_column(&Tableau::empty()).is_err());
        let (col, rest) = split_first_column(&t(&[&[3], &[5]])).unwrap();
        assert_eq!(col, Column::new(vec![3, 5]).unwrap());
        assert!(rest.is_empty());
    }

    #[test]
    fn unstar_inverts_star_on_a_worked_example() {
        // U = (4) * T' from `star_of_column_with_tableau`.
        let u = t(&[&[1, 2, 4, 4], &[2, 3], &[4, 4], &[6]]);
        let lambda_prime = Partition::new(vec![3, 2, 2, 1]).unwrap();
        let (col, rest) = unstar(&u, &lambda_prime, 1).unwrap();
        assert_eq!(col, Column::new(vec![4]).unwrap());
        assert_eq!(rest, t(&[&[1, 2, 4], &[2, 3], &[4, 4], &[6]]));
    }

    /// Pieri property: for fixed `λ` and `k`, the product `b * T` over all
    /// columns `b` of size `k` and `T ∈ SST_m(λ)` is a bijection onto
    /// `⨆_μ SST_m(μ)` over vertical strips `μ/λ` with `k` cells, and
    /// `unstar` inverts it.
    #[test]
    fn pieri_bijection_and_unstar_round_trip() {
        let m = 4u32;
        for lambda in enumerate_partitions_sized(5, m as usize) {
            let tableaux = enumerate_sst(&lambda, m);
            for k in 0..=m as usize {
                let columns = columns_over(m, k);
                let mut seen: BTreeMap<Tableau, usize> = BTreeMap::new();
                for b in &columns {
                    for tab in &tableaux {
                        let u = star(&b.to_tableau(), tab).unwrap();
                        assert!(is_vertical_strip(&lambda, u.outer()));
                        assert_eq!(u.size(), lambda.size() + k);
                        *seen.entry(u.clone()).or_insert(0) += 1;
                        let (b2, t2) = unstar(&u, &lambda, k).unwrap();
                        assert_eq!(&b2, b, "λ = {lambda}, b = {b}");
                        assert_eq!(&t2, tab);
                    }
                }
                // Injectivity:
                assert!(seen.values().all(|&c| c == 1));
                // Surjectivity onto all SSTs of the strip-extended shapes:
                let mut expected: BTreeSet<Tableau> = BTreeSet::new();
                for mu in strip_extensions(&lambda, k, m as usize) {
                    for tab in enumerate_sst(&mu, m) {
                        expected.insert(tab);
                    }
                }
                let got: BTreeSet<Tableau> = seen.into_keys().collect();
                assert_eq!(got, expected, "λ = {lambda}, k = {k}");
            }
        }
    }

    /// All strictly increasing k-subsets of [1, m] as columns.
    fn columns_over(m: u32, k: usize) -> Vec<Column> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(m: u32, k: usize, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Column>) {
            if cur.len() == k {
                out.push(Column::new(cur.clone()).unwrap());
                return;
            }
            for v in start..=m {
                cur.push(v);
                go(m, k, v + 1, cur, out);
                cur.pop();
            }
        }
        go(m, k, 1, &mut cur, &mut out);
        out
    }

    /// All μ ⊇ λ with μ/λ a vertical strip of exactly k cells and ℓ(μ) ≤ max_rows.
    fn strip_extensions(lambda: &Partition, k: usize, max_rows: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for mu in enumerate_partitions_sized(lambda.size() + k, max_rows) {
            if mu.size() == lambda.size() + k && is_vertical_strip(lambda, &mu) {
                out.push(mu);
            }
        }
        out
    }

    #[test]
    fn unstar_rejects_bad_strips() {
        let u = t(&[&[1, 2], &[2, 3]]);
        // (2,2)/(1) is not a vertical strip (row 1 gains one cell, fine;
        // row 2 gains two).
        assert!(unstar(&u, &Partition::new(vec![1]).unwrap(), 3).is_err());
        // Size mismatch.
        assert!(unstar(&u, &Partition::new(vec![2, 1]).unwrap(), 2).is_err());
    }

    #[test]
    fn star_is_associative_on_small_cases() {
        // Plactic associativity spot-check on all triples of one-row
        // tableaux over [1,3] of length ≤ 2.
        let mut smalls = vec![Tableau::empty()];
        for a in 1..=3u32 {
            smalls.push(t(&[&[a]]));
            for b in a..=3 {
                smalls.push(t(&[&[a, b]]));
            }
        }
        for x in &smalls {
            for y in &smalls {
                for z in &smalls {
                    let left = star(&star(x, y).unwrap(), z).unwrap();
                    let right = star(x, &star(y, z).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn skew_shape_never_passes() {
        let skew = Tableau::new(
            SkewShape::new(
                Partition::new(vec![2]).unwrap(),
                Partition::new(vec![1]).unwrap(),
            )
            .unwrap(),
            vec![vec![1]],
        )
        .unwrap();
        assert!(column_insert(1, &skew).is_err());
        assert!(star(&skew, &Tableau::empty()).is_err());
        assert!(split_first_column(&skew).is_err());
    }
}
