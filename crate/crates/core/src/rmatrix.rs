//! The combinatorial R-matrix on pairs of columns, and the factored form
//! of the column reduction map built from it.
//!
//! `R_{k,l}` swaps the sizes of a pair of columns over `[1, m]`:
//! `SST_m(ϖ_k) × SST_m(ϖ_l) → SST_m(ϖ_l) × SST_m(ϖ_k)`, and `R_{l,k}` is
//! its inverse. The factored reduction composes R-matrices with a handful
//! of elementary moves (`∨`, `K`, `K⁻¹`, `∧`, `π`) to reproduce
//! [`crate::reduction::reduce`] one letter at a time.

use crate::error::Error;
use crate::tableaux::Column;

/// A pair of columns, as consumed and produced by the R-matrix.
pub type ColumnPair = (Column, Column);

fn check_alphabet(label: &str, a: &Column, m: u32) -> Result<(), Error> {
    if let Some(max) = a.max() {
        if max > m {
            return Err(Error::EntryOutOfRange {
                what: "column alphabet bound",
                where_: format!("{} column {}", label, a),
                entry: max,
                bound: m,
            });
        }
    }
    Ok(())
}

/// Merges two disjoint increasing sequences into one column.
fn merge_disjoint(a: &[u32], b: &[u32]) -> Result<Column, Error> {
    let mut values = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) => {
                if x == y {
                    return Err(Error::Internal(format!(
                        "R-matrix merge produced a duplicate value {}",
                        x
                    )));
                }
                x < y
            }
            (Some(_), None) => true,
            _ => false,
        };
        if take_a {
            values.push(a[i]);
            i += 1;
        } else {
            values.push(b[j]);
            j += 1;
        }
    }
    Column::new(values)
}

/// Case `k ≤ l` of the definition: select for each `a_r` the lowest unused
/// `b_i ≥ a_r` (lowest unused at all if none), then hand the selected
/// values to the right output and merge the rest into the left input.
fn r_matrix_small_large(a: &Column, b: &Column) -> Result<ColumnPair, Error> {
    let (av, bv) = (a.values(), b.values());
    let (k, l) = (av.len(), bv.len());
    debug_assert!(k <= l);
    let mut used = vec![false; l];
    for &ar in av {
        let i = (0..l)
            .find(|&i| !used[i] && bv[i] >= ar)
            .or_else(|| (0..l).find(|&i| !used[i]))
            .expect("k ≤ l leaves an unused index");
        used[i] = true;
    }
    let selected: Vec<u32> = (0..l).filter(|&i| used[i]).map(|i| bv[i]).collect();
    let rest: Vec<u32> = (0..l).filter(|&i| !used[i]).map(|i| bv[i]).collect();
    Ok((merge_disjoint(av, &rest)?, Column::new(selected)?))
}

/// Case `k ≥ l`: select for each `b_r` the highest unused `a_i ≤ b_r`
/// (highest unused at all if none); the selected values form the left
/// output and the rest merges into the right input.
fn r_matrix_large_small(a: &Column, b: &Column) -> Result<ColumnPair, Error> {
    let (av, bv) = (a.values(), b.values());
    let (k, l) = (av.len(), bv.len());
    debug_assert!(k >= l);
    let mut used = vec![false; k];
    for &br in bv {
        let i = (0..k)
            .rev()
            .find(|&i| !used[i] && av[i] <= br)
            .or_else(|| (0..k).rev().find(|&i| !used[i]))
            .expect("l ≤ k leaves an unused index");
        used[i] = true;
    }
    let selected: Vec<u32> = (0..k).filter(|&i| used[i]).map(|i| av[i]).collect();
    let rest: Vec<u32> = (0..k).filter(|&i| !used[i]).map(|i| av[i]).collect();
    Ok((Column::new(selected)?, merge_disjoint(bv, &rest)?))
}

/// The combinatorial R-matrix `R_{k,l}(a, b)` over the alphabet `[1, m]`.
///
/// The output sizes are `(l, k)`; `R_{l,k} ∘ R_{k,l} = id`. For `k = l`
/// the two defining cases coincide and the first is used.
pub fn r_matrix(a: &Column, b: &Column, m: u32) -> Result<ColumnPair, Error> {
    check_alphabet("left", a, m)?;
    check_alphabet("right", b, m)?;
    if a.len() <= b.len() {
        r_matrix_small_large(a, b)
    } else {
        r_matrix_large_small(a, b)
    }
}

/// `∨`: splits off the last (largest) letter: `a ↦ (a_l, (a_1…a_{l−1}))`.
pub fn vee_split(a: &Column) -> Result<(u32, Column), Error> {
    let values = a.values();
    match values.split_last() {
        Some((&last, rest)) => Ok((last, Column::new(rest.to_vec())?)),
        None => Err(Error::EmptyInput("∨ needs a non-empty column".into())),
    }
}

/// The partner involution `s`: pairs `2j − 1 ↔ 2j`.
pub fn partner(v: u32) -> u32 {
    if v % 2 == 1 {
        v + 1
    } else {
        v - 1
    }
}

/// `K`: sends a letter `a` to the full column missing `s(a)`:
/// `a ↦ s(a)^∨ ∈ SST_{2n}(ϖ_{2n−1})`.
pub fn k_map(a: u32, n: u32) -> Result<Column, Error> {
    let m = 2 * n;
    if a == 0 || a > m {
        return Err(Error::EntryOutOfRange {
            what: "letter",
            where_: "K".into(),
            entry: a,
            bound: m,
        });
    }
    let missing = partner(a);
    Column::new((1..=m).filter(|&v| v != missing).collect::<Vec<_>>())
}

/// `K⁻¹`: recovers the letter from a column of size `2n − 1`: if the
/// column misses exactly `v`, the letter is `s(v)`.
pub fn k_inv(c: &Column, n: u32) -> Result<u32, Error> {
    let m = 2 * n;
    check_alphabet("K⁻¹", c, m)?;
    if c.len() != (m - 1) as usize {
        return Err(Error::ShapeMismatch(format!(
            "K⁻¹ expects a column of size {}, got {}",
            m - 1,
            c.len()
        )));
    }
    let missing = (1..=m)
        .find(|&v| !c.contains(v))
        .ok_or_else(|| Error::Internal("full column of size 2n−1 misses a value".into()))?;
    Ok(partner(missing))
}

/// `∧`: appends a letter at the bottom of a column when it is strictly
/// larger than everything present; `None` when the result would not be a
/// column.
pub fn wedge_append(a: u32, b: &Column) -> Option<Column> {
    if b.max().is_none_or(|max| a > max) {
        let mut values = b.values().to_vec();
        values.push(a);
        Some(Column::new(values).expect("appending a strictly larger value"))
    } else {
        None
    }
}

/// `π`: kills the single column `(1, 2)`, fixes everything else.
pub fn pi_project(c: Column) -> Column {
    if c.values() == [1, 2] {
        Column::empty()
    } else {
        c
    }
}

/// The factored form of the reduction map: peels off the largest letter
/// with `∨`, routes it through `K` and two R-matrices around a recursive
/// reduction of the remainder, and reattaches the transformed letter with
/// `K⁻¹`/`∧`, finishing with `π`.
///
/// Agrees with [`reduce`] on every column over `[1, 2n]`; the agreement is
/// exercised exhaustively in tests. An `∧` failure inside the pipeline
/// would be an internal invariant violation, surfaced as
/// [`Error::Internal`].
pub fn reduce_factored(a: &Column, n: u32) -> Result<Column, Error> {
    let m = 2 * n;
    check_alphabet("input", a, m)?;
    if a.len() <= 1 {
        return Ok(a.clone());
    }
    let (last, rest) = vee_split(a)?;
    let kcol = k_map(last, n)?;
    let (c, d) = r_matrix(&kcol, &rest, m)?;
    let c_red = reduce_factored(&c, n)?;
    let (svee, b_rest) = r_matrix(&c_red, &d, m)?;
    let letter = k_inv(&svee, n)?;
    let b = wedge_append(letter, &b_rest).ok_or_else(|| {
        Error::Internal(format!(
            "factored reduction tried to append {} below {}",
            letter, b_rest
        ))
    })?;
    Ok(pi_project(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::reduce;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn col(values: &[u32]) -> Column {
        Column::new(values.to_vec()).unwrap()
    }

    fn all_columns(m: u32) -> Vec<Column> {
        (0u32..1 << m)
            .map(|mask| col(&(1..=m).filter(|v| mask >> (v - 1) & 1 == 1).collect::<Vec<_>>()))
            .collect()
    }

    fn vee(v: u32, m: u32) -> Column {
        col(&(1..=m).filter(|&x| x != v).collect::<Vec<_>>())
    }

    #[test]
    fn r_matrix_worked_examples() {
        // m = 4: the single 4 trades places with the whole of (1,2,3).
        assert_eq!(
            r_matrix(&col(&[4]), &col(&[1, 2, 3]), 4).unwrap(),
            (col(&[2, 3, 4]), col(&[1]))
        );
        // m = 4, case k > l: selections i_1 = 1 (a_1 = 1 ≤ 1), then the
        // fallback takes the highest unused for b_2 = 2.
        assert_eq!(
            r_matrix(&col(&[1, 3, 4]), &col(&[1, 2]), 4).unwrap(),
            (col(&[1, 4]), col(&[1, 2, 3]))
        );
        // Empty sides pass through.
        assert_eq!(
            r_matrix(&col(&[]), &col(&[2, 3]), 4).unwrap(),
            (col(&[2, 3]), col(&[]))
        );
        assert_eq!(
            r_matrix(&col(&[2, 3]), &col(&[]), 4).unwrap(),
            (col(&[]), col(&[2, 3]))
        );
    }

    #[test]
    fn r_matrix_checks_alphabet() {
        assert!(r_matrix(&col(&[5]), &col(&[1]), 4).is_err());
        assert!(r_matrix(&col(&[1]), &col(&[5]), 4).is_err());
    }

    #[test]
    fn r_matrix_output_sizes_swap_and_round_trip() {
        for m in 1..=5u32 {
            for a in all_columns(m) {
                for b in all_columns(m) {
                    let (c, d) = r_matrix(&a, &b, m).unwrap();
                    assert_eq!(c.len(), b.len());
                    assert_eq!(d.len(), a.len());
                    let (a2, b2) = r_matrix(&c, &d, m).unwrap();
                    assert_eq!((a2, b2), (a.clone(), b.clone()), "m = {m}, a = {a}, b = {b}");
                }
            }
        }
    }

    #[test]
    fn both_cases_agree_on_equal_sizes() {
        for m in 1..=5u32 {
            for a in all_columns(m) {
                for b in all_columns(m) {
                    if a.len() == b.len() {
                        assert_eq!(
                            r_matrix_small_large(&a, &b).unwrap(),
                            r_matrix_large_small(&a, &b).unwrap(),
                            "m = {m}, a = {a}, b = {b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn subset_inputs_swap_cleanly() {
        // When every letter of a occurs in b (k ≤ l): R(a,b) = (b,a) and
        // R(b,a) = (a,b).
        for m in 1..=5u32 {
            for b in all_columns(m) {
                for a in all_columns(m) {
                    if a.len() <= b.len() && a.values().iter().all(|&v| b.contains(v)) {
                        assert_eq!(
                            r_matrix(&a, &b, m).unwrap(),
                            (b.clone(), a.clone()),
                            "m = {m}, a = {a}, b = {b}"
                        );
                        if a.len() < b.len() {
                            assert_eq!(r_matrix(&b, &a, m).unwrap(), (a.clone(), b.clone()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn full_letter_identities() {
        // R(m, m^∨) = (1^∨, 1).
        for m in 2..=6u32 {
            assert_eq!(
                r_matrix(&col(&[m]), &vee(m, m), m).unwrap(),
                (vee(1, m), col(&[1]))
            );
            // R(t^∨, (1..t)) = ((1..t−1, m), m^∨) for t ∈ [1, m−1].
            for t in 1..m {
                let left: Vec<u32> = (1..t).chain([m]).collect();
                assert_eq!(
                    r_matrix(&vee(t, m), &col(&(1..=t).collect::<Vec<_>>()), m).unwrap(),
                    (col(&left), vee(m, m)),
                    "m = {m}, t = {t}"
                );
            }
        }
    }

    /// Randomized check of the shifted-interval identity: for
    /// `a_k + 1 < r ≤ s ≤ m`,
    /// `R(s^∨, a ⊔ [r,s]) = (a ⊔ [r−1,s−1], (r−1)^∨)` and back.
    #[test]
    fn shifted_interval_identity_randomized() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..500 {
            let m = rng.gen_range(3..=9u32);
            let r = rng.gen_range(2..=m);
            let s = rng.gen_range(r..=m);
            // a ⊆ [1, r−2], possibly empty.
            let a_vals: Vec<u32> = (1..=r.saturating_sub(2))
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            let a = col(&a_vals);
            let right: Vec<u32> = a_vals.iter().copied().chain(r..=s).collect();
            let shifted: Vec<u32> = a_vals.iter().copied().chain(r - 1..=s - 1).collect();
            let got = r_matrix(&vee(s, m), &col(&right), m).unwrap();
            assert_eq!(
                got,
                (col(&shifted), vee(r - 1, m)),
                "m = {m}, a = {a}, r = {r}, s = {s}"
            );
            let back = r_matrix(&col(&shifted), &vee(r - 1, m), m).unwrap();
            assert_eq!(back, (vee(s, m), col(&right)));
        }
    }

    #[test]
    fn vee_and_wedge_and_pi() {
        assert_eq!(vee_split(&col(&[1, 3, 4])).unwrap(), (4, col(&[1, 3])));
        assert_eq!(vee_split(&col(&[2])).unwrap(), (2, col(&[])));
        assert!(vee_split(&col(&[])).is_err());
        assert_eq!(wedge_append(5, &col(&[1, 3])), Some(col(&[1, 3, 5])));
        assert_eq!(wedge_append(3, &col(&[1, 3])), None);
        assert_eq!(wedge_append(2, &col(&[])), Some(col(&[2])));
        assert_eq!(pi_project(col(&[1, 2])), col(&[]));
        assert_eq!(pi_project(col(&[1, 3])), col(&[1, 3]));
        assert_eq!(pi_project(col(&[1, 2, 3])), col(&[1, 2, 3]));
    }

    #[test]
    fn k_map_examples_and_inverse() {
        assert_eq!(k_map(3, 2).unwrap(), col(&[1, 2, 3]));
        assert_eq!(k_map(4, 2).unwrap(), col(&[1, 2, 4]));
        assert_eq!(k_inv(&col(&[1, 2, 3]), 2).unwrap(), 3);
        for n in 1..=4u32 {
            for a in 1..=2 * n {
                assert_eq!(k_inv(&k_map(a, n).unwrap(), n).unwrap(), a);
            }
        }
        assert!(k_map(5, 2).is_err());
        assert!(k_map(0, 2).is_err());
        assert!(k_inv(&col(&[1, 2]), 2).is_err());
    }

    #[test]
    fn factored_reduction_matches_direct_reduction() {
        for n in 1..=3u32 {
            for a in all_columns(2 * n) {
                assert_eq!(
                    reduce_factored(&a, n).unwrap(),
                    reduce(&a, n).unwrap(),
                    "n = {n}, a = {a}"
                );
            }
        }
    }

    #[test]
    fn factored_reduction_worked_example() {
        assert_eq!(
            reduce_factored(&col(&[1, 3, 4, 5, 6, 7, 11, 12, 13, 14]), 7).unwrap(),
            col(&[1, 7, 11, 12])
        );
        assert_eq!(reduce_factored(&col(&[1, 2, 4, 5, 6]), 3).unwrap(), col(&[4]));
    }

    proptest! {
        #[test]
        fn round_trip_randomized(m in 1u32..=8, mask_a in 0u32..(1 << 8), mask_b in 0u32..(1 << 8)) {
            let a = col(&(1..=m).filter(|v| mask_a >> (v - 1) & 1 == 1).collect::<Vec<_>>());
            let b = col(&(1..=m).filter(|v| mask_b >> (v - 1) & 1 == 1).collect::<Vec<_>>());
            let (c, d) = r_matrix(&a, &b, m).unwrap();
            prop_assert_eq!(r_matrix(&c, &d, m).unwrap(), (a, b));
        }
    }
}
