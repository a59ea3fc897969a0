//! The combinatorial R-matrix on pairs of columns, and the factored form
//! of the reduction map built out of it.
//!
//! R maps a pair of columns of sizes (k, l) over [1, m] to a pair of
//! sizes (l, k), bijectively; composing R-matrices with a few elementary
//! moves reproduces the column reduction one letter at a time.
//!
//! Run with: cargo run --example r_matrix

use symplectic_branching::reduction::reduce;
use symplectic_branching::rmatrix::{r_matrix, reduce_factored};
use symplectic_branching::tableaux::Column;

fn col(values: &[u32]) -> Column {
    Column::new(values.to_vec()).unwrap()
}

fn main() {
    let m = 4;

    // Growing case, k ≤ l: each left letter claims the smallest unused
    // right letter that can sit below it.
    let (c, d) = r_matrix(&col(&[4]), &col(&[1, 2, 3]), m).unwrap();
    println!("R((4), (1, 2, 3)) over [1, {}] = ({}, {})", m, c, d);

    // Shrinking case, k > l: mirrored, with maxima instead of minima.
    let (e, f) = r_matrix(&c, &d, m).unwrap();
    println!("R({}, {}) = ({}, {})  (the inverse)", c, d, e, f);
    assert_eq!((e, f), (col(&[4]), col(&[1, 2, 3])));

    // A full column swaps cleanly past anything.
    let full = col(&[1, 2, 3, 4]);
    let other = col(&[2, 4]);
    let (g, h) = r_matrix(&other, &full, m).unwrap();
    println!("R({}, {}) = ({}, {})", other, full, g, h);
    assert_eq!((g, h), (full.clone(), other));

    // When the left letters all appear on the right (and k ≤ l), R just
    // swaps the two columns.
    let (i, j) = r_matrix(&col(&[1, 3]), &col(&[1, 2, 3, 4]), m).unwrap();
    println!("R((1, 3), (1, 2, 3, 4)) = ({}, {})", i, j);

    // The factored reduction: ∨ splits a letter off, K conjugates into
    // the complementary column, two R-matrices shuttle it through the
    // recursive core, and π deletes the pair (1, 2) that signals a
    // removable pair.
    println!();
    for (values, n) in [
        (&[1, 2, 4, 5, 6][..], 3u32),
        (&[1, 3, 4, 5, 6, 7, 11, 12, 13, 14][..], 7),
    ] {
        let a = col(values);
        let direct = reduce(&a, n).unwrap();
        let factored = reduce_factored(&a, n).unwrap();
        println!("n = {}, a = {}", n, a);
        println!("  red(a) direct   = {}", direct);
        println!("  red(a) factored = {}", factored);
        assert_eq!(direct, factored);
    }

    // The two implementations agree on every column over [1, 2n], n ≤ 3.
    for n in 1..=3u32 {
        let m = 2 * n;
        for mask in 0u32..1 << m {
            let a = col(&(1..=m).filter(|v| mask >> (v - 1) & 1 == 1).collect::<Vec<_>>());
            assert_eq!(reduce_factored(&a, n).unwrap(), reduce(&a, n).unwrap());
        }
    }
    println!("\nfactored and direct reduction agree on all columns, n ≤ 3");
}
