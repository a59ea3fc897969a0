//! Column insertion, the plactic star product, and splitting a tableau
//! back apart.
//!
//! Run with: cargo run --example column_insertion

use symplectic_branching::plactic::{column_insert, split_first_column, star, unstar};
use symplectic_branching::tableaux::Tableau;

fn main() {
    // Insert 3 into a tableau: the letter enters the first column,
    // bumping the smallest entry ≥ 3 into the next column, and so on.
    let t = Tableau::from_rows(vec![vec![1, 2, 4], vec![2, 3], vec![4, 4], vec![6]]).unwrap();
    println!("T =\n{}", t.render());

    let (after, route) = column_insert(3, &t).unwrap();
    println!("\n3 → T =\n{}", after.render());
    println!("bumping route (row per column): {:?}", route.rows());
    println!("new cell: {:?}", route.new_cell());

    // The star product s * t column-inserts the column word of s into t,
    // last letter first. It realizes the plactic product.
    let s = Tableau::from_rows(vec![vec![2, 4], vec![3]]).unwrap();
    println!("\nS =\n{}", s.render());
    let product = star(&s, &t).unwrap();
    println!("\nS * T =\n{}", product.render());

    // A single-column tableau stars on the left by inserting bottom-up.
    let column = Tableau::from_rows(vec![vec![1], vec![3], vec![5]]).unwrap();
    let with_column = star(&column, &t).unwrap();
    println!("\n(1,3,5) * T =\n{}", with_column.render());

    // split_first_column is the inverse direction: peel the first column
    // off; unstar undoes a star against a remembered shape.
    let (first, rest) = split_first_column(&t).unwrap();
    println!("\nfirst column of T: {}", first);
    println!("rest of T =\n{}", rest.render());

    let (recovered_col, recovered_rest) =
        unstar(&with_column, t.outer(), column.size()).unwrap();
    println!(
        "\nunstar recovers the column {} and the tableau below:\n{}",
        recovered_col,
        recovered_rest.render()
    );
    assert_eq!(recovered_rest, t);
}
