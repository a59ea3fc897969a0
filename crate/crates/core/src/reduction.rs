//! The reduction map on columns.
//!
//! A column `a = (a_1 < ⋯ < a_l)` over `[1, 2n]` may fail the symplectic
//! condition `a_k ≥ 2k − 1`. The reduction map deletes a canonical set
//! `Rem(a)` of entries — consecutive pairs `(2j − 1, 2j)` that sit "too
//! high" in the column — producing the largest symplectic subcolumn
//! compatible with the successor construction. `red(a) = a ∖ Rem(a)`.
//!
//! Two computations of `Rem` are provided: the defining right-to-left
//! recursion, implemented as a single left-to-right pass, and an
//! independent entrywise characterization used as a cross-check oracle.

use crate::error::Error;
use crate::tableaux::Column;

/// The set `Rem(a)` of removable entries of a column, kept sorted.
///
/// Always of even cardinality and closed under the partner involution
/// `s(v) = v + 1` for odd `v`, `v − 1` for even `v`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RemovableSet {
    values: Vec<u32>,
}

impl RemovableSet {
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
}

impl std::fmt::Display for RemovableSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "}}")
    }
}

fn check_alphabet(a: &Column, n: u32) -> Result<(), Error> {
    if let Some(max) = a.max() {
        if max > 2 * n {
            return Err(Error::EntryOutOfRange {
                what: "column alphabet bound",
                where_: format!("column {}", a),
                entry: max,
                bound: 2 * n,
            });
        }
    }
    Ok(())
}

/// Computes `Rem(a)` for a column over `[1, 2n]`.
///
/// The defining recursion says: `Rem` of a column of length ≤ 1 is empty,
/// and for longer columns the last two entries `(a_{l−1}, a_l)` join the
/// set iff `a_l` is even, `a_{l−1} = a_l − 1`, and
/// `a_l < 2l − |Rem(a_1…a_{l−2})| − 1`; otherwise `Rem(a) = Rem(a_1…a_{l−1})`.
/// Two consecutive positions can never both trigger the pair rule (the
/// parities clash), so one forward pass maintaining prefix sizes suffices.
pub fn removable_entries(a: &Column, n: u32) -> Result<RemovableSet, Error> {
    check_alphabet(a, n)?;
    let v = a.values();
    let l = v.len();
    // sizes[i] = |Rem(a_1 … a_i)|.
    let mut sizes = vec![0usize; l + 1];
    let mut values = Vec::new();
    for i in 2..=l {
        let last = v[i - 1];
        let pair = last.is_multiple_of(2)
            && v[i - 2] + 1 == last
            && (last as usize) < 2 * i - sizes[i - 2] - 1;
        if pair {
            sizes[i] = sizes[i - 2] + 2;
            values.push(v[i - 2]);
            values.push(last);
        } else {
            sizes[i] = sizes[i - 1];
        }
    }
    debug_assert!(values.len() % 2 == 0);
    debug_assert!(values.windows(2).all(|w| w[0] < w[1]));
    Ok(RemovableSet { values })
}

/// Computes `Rem(a)` by the direct entrywise characterization, as an
/// independent oracle:
///
/// * an odd `a_i` is removable iff `i < l`, `a_{i+1} = a_i + 1`, and
///   `a_i < 2i − |Rem(a_1…a_{i−1})|`;
/// * an even `a_i` is removable iff `i > 1`, `a_{i−1} = a_i − 1`, and
///   `a_i < 2i − |Rem(a_1…a_{i−2})| − 1`.
///
/// The prefix sizes are themselves computed by re-scanning each prefix
/// with the same criteria (quadratic, test-oriented).
pub fn removable_entries_direct(a: &Column, n: u32) -> Result<RemovableSet, Error> {
    check_alphabet(a, n)?;
    let v = a.values();
    let l = v.len();
    // sizes[k] = |Rem(a_1 … a_k)|, built bottom-up; each entry is obtained
    // by scanning the prefix word of length k with the criteria, using only
    // the strictly shorter prefix sizes.
    let mut sizes = vec![0usize; l + 1];
    for k in 1..=l {
        sizes[k] = direct_members(&v[..k], &sizes).len();
    }
    let values = direct_members(v, &sizes);
    Ok(RemovableSet { values })
}

/// Members of `Rem(word)` by the entrywise criteria, given the sizes of
/// all strictly shorter prefixes of `word`.
fn direct_members(word: &[u32], sizes: &[usize]) -> Vec<u32> {
    let l = word.len();
    let mut out = Vec::new();
    for i in 1..=l {
        let v = word[i - 1];
        let member = if v % 2 == 1 {
            i < l && word[i] == v + 1 && (v as usize) < 2 * i - sizes[i - 1]
        } else {
            i > 1 && word[i - 2] + 1 == v && (v as usize) < 2 * i - sizes[i - 2] - 1
        };
        if member {
            out.push(v);
        }
    }
    out
}

/// The reduction `red(a) = a ∖ Rem(a)`.
///
/// Fixes exactly the symplectic columns (`a_k ≥ 2k − 1` for all `k`) and is
/// idempotent.
pub fn reduce(a: &Column, n: u32) -> Result<Column, Error> {
    let rem = removable_entries(a, n)?;
    let values: Vec<u32> = a
        .values()
        .iter()
        .copied()
        .filter(|&v| !rem.contains(v))
        .collect();
    Column::new(values)
}

/// Whether a column satisfies the symplectic condition `a_k ≥ 2k − 1`.
pub fn is_symplectic_column(a: &Column) -> bool {
    a.values()
        .iter()
        .enumerate()
        .all(|(k, &v)| v as usize >= 2 * (k + 1) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn col(values: &[u32]) -> Column {
        Column::new(values.to_vec()).unwrap()
    }

    /// The literal recursion from the definition, kept test-only.
    fn rem_literal(word: &[u32]) -> Vec<u32> {
        let l = word.len();
        if l <= 1 {
            return Vec::new();
        }
        let last = word[l - 1];
        if last.is_multiple_of(2) && word[l - 2] + 1 == last {
            let head = rem_literal(&word[..l - 2]);
            if (last as usize) < 2 * l - head.len() - 1 {
                let mut out = head;
                out.push(word[l - 2]);
                out.push(last);
                return out;
            }
        }
        rem_literal(&word[..l - 1])
    }

    /// All strictly increasing sequences over [1, 2n] (as bitmask subsets).
    fn all_columns(n: u32) -> Vec<Column> {
        let m = 2 * n;
        (0u32..1 << m)
            .map(|mask| {
                let values: Vec<u32> = (1..=m).filter(|v| mask >> (v - 1) & 1 == 1).collect();
                Column::new(values).unwrap()
            })
            .collect()
    }

    #[test]
    fn removable_entries_worked_examples() {
        // n = 3: all four entries of the pairs (1,2) and (5,6) go.
        assert_eq!(
            removable_entries(&col(&[1, 2, 4, 5, 6]), 3).unwrap().values(),
            &[1, 2, 5, 6]
        );
        // n = 7, the ten-row column: pairs (3,4), (5,6), (13,14).
        assert_eq!(
            removable_entries(&col(&[1, 3, 4, 5, 6, 7, 11, 12, 13, 14]), 7)
                .unwrap()
                .values(),
            &[3, 4, 5, 6, 13, 14]
        );
        assert_eq!(
            removable_entries(&col(&[1, 2, 4, 6]), 3).unwrap().values(),
            &[1, 2]
        );
        assert_eq!(
            removable_entries(&col(&[2, 3, 4, 6]), 3).unwrap().values(),
            &[3, 4]
        );
        assert!(removable_entries(&col(&[2, 6]), 3).unwrap().is_empty());
        assert!(removable_entries(&col(&[]), 2).unwrap().is_empty());
        assert!(removable_entries(&col(&[2]), 1).unwrap().is_empty());
    }

    #[test]
    fn direct_characterization_worked_examples() {
        assert!(removable_entries_direct(&col(&[2, 3]), 2).unwrap().is_empty());
        assert_eq!(
            removable_entries_direct(&col(&[1, 2]), 1).unwrap().values(),
            &[1, 2]
        );
        assert_eq!(
            removable_entries_direct(&col(&[1, 3, 4, 5, 6, 7, 11, 12, 13, 14]), 7)
                .unwrap()
                .values(),
            &[3, 4, 5, 6, 13, 14]
        );
    }

    #[test]
    fn reduce_worked_examples() {
        assert_eq!(
            reduce(&col(&[1, 2, 4, 5, 6]), 3).unwrap(),
            col(&[4])
        );
        assert_eq!(
            reduce(&col(&[1, 3, 4, 5, 6, 7, 11, 12, 13, 14]), 7).unwrap(),
            col(&[1, 7, 11, 12])
        );
        assert_eq!(reduce(&col(&[2, 6]), 3).unwrap(), col(&[2, 6]));
        assert_eq!(reduce(&col(&[]), 1).unwrap(), col(&[]));
    }

    #[test]
    fn alphabet_bound_is_enforced() {
        assert!(removable_entries(&col(&[1, 5]), 2).is_err());
        assert!(reduce(&col(&[3]), 1).is_err());
    }

    #[test]
    fn all_three_implementations_agree_exhaustively() {
        for n in 1..=4u32 {
            for a in all_columns(n) {
                let fast = removable_entries(&a, n).unwrap();
                let direct = removable_entries_direct(&a, n).unwrap();
                let literal = rem_literal(a.values());
                assert_eq!(fast.values(), direct.values(), "n = {n}, a = {a}");
                assert_eq!(fast.values(), literal.as_slice(), "n = {n}, a = {a}");
            }
        }
    }

    #[test]
    fn removable_set_structure() {
        for n in 1..=4u32 {
            for a in all_columns(n) {
                let rem = removable_entries(&a, n).unwrap();
                // Even cardinality.
                assert_eq!(rem.len() % 2, 0);
                // Subset of the column.
                assert!(rem.values().iter().all(|&v| a.contains(v)));
                // Closed under the partner involution v ↦ s(v).
                for &v in rem.values() {
                    let partner = if v % 2 == 1 { v + 1 } else { v - 1 };
                    assert!(rem.contains(partner), "n = {n}, a = {a}, v = {v}");
                }
                // Size bounds: 0 ≤ l − |Rem| ≤ min(l, 2n − l).
                let l = a.len();
                let kept = l - rem.len();
                assert!(kept <= l.min(2 * n as usize - l), "n = {n}, a = {a}");
            }
        }
    }

    #[test]
    fn reduce_fixes_exactly_symplectic_columns_and_is_idempotent() {
        for n in 1..=4u32 {
            for a in all_columns(n) {
                let r = reduce(&a, n).unwrap();
                assert!(is_symplectic_column(&r), "n = {n}, a = {a}");
                assert_eq!(reduce(&r, n).unwrap(), r, "idempotence at {a}");
                assert_eq!(r == a, is_symplectic_column(&a), "fixpoint iff symplectic: {a}");
            }
        }
    }

    #[test]
    fn reduce_is_injective_per_length() {
        use std::collections::BTreeMap;
        for n in 1..=4u32 {
            let mut images: BTreeMap<(usize, Column), Column> = BTreeMap::new();
            for a in all_columns(n) {
                let r = reduce(&a, n).unwrap();
                if let Some(other) = images.insert((a.len(), r.clone()), a.clone()) {
                    panic!("n = {n}: {other} and {a} both reduce to {r}");
                }
            }
        }
    }

    /// The division property: if `a_i ∉ Rem(a)` then the removable set
    /// splits as `Rem(a_1…a_{i−1}) ⊔ (Rem(a) ∩ {a_{i+1}, …, a_l})`.
    #[test]
    fn removable_set_division_at_non_members() {
        for n in 1..=3u32 {
            for a in all_columns(n) {
                let rem = removable_entries(&a, n).unwrap();
                for i in 1..=a.len() {
                    let v = a.values()[i - 1];
                    if rem.contains(v) {
                        continue;
                    }
                    let prefix = col(&a.values()[..i - 1]);
                    let prefix_rem = removable_entries(&prefix, n).unwrap();
                    let mut expect: Vec<u32> = prefix_rem.values().to_vec();
                    expect.extend(a.values()[i..].iter().filter(|&&w| rem.contains(w)));
                    assert_eq!(rem.values(), expect.as_slice(), "n = {n}, a = {a}, i = {i}");
                }
            }
        }
    }

    /// Prefix monotonicity: `Rem(a_1…a_k) ⊆ Rem(a)` for every prefix.
    #[test]
    fn removable_sets_grow_with_the_column() {
        for n in 1..=3u32 {
            for a in all_columns(n) {
                let rem = removable_entries(&a, n).unwrap();
                for k in 0..=a.len() {
                    let prefix = col(&a.values()[..k]);
                    let prefix_rem = removable_entries(&prefix, n).unwrap();
                    assert!(
                        prefix_rem.values().iter().all(|&v| rem.contains(v)),
                        "n = {n}, a = {a}, k = {k}"
                    );
                }
            }
        }
    }

    proptest! {
        /// Same structural facts on larger alphabets than the exhaustive
        /// sweep covers (n up to 8 via random subsets).
        #[test]
        fn reduce_structure_randomized(n in 1u32..=8, mask in 0u32..(1 << 16)) {
            let m = 2 * n;
            let values: Vec<u32> = (1..=m).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            let a = Column::new(values).unwrap();
            let rem = removable_entries(&a, n).unwrap();
            let direct = removable_entries_direct(&a, n).unwrap();
            prop_assert_eq!(rem.values(), direct.values());
            prop_assert_eq!(rem.len() % 2, 0);
            let r = reduce(&a, n).unwrap();
            prop_assert!(is_symplectic_column(&r));
            prop_assert_eq!(reduce(&r, n).unwrap(), r);
        }
    }
}
