//! Partitions, skew shapes, and semistandard tableaux: construction,
//! rendering, weights, and the symplectic condition.
//!
//! Run with: cargo run --example shapes_and_tableaux

use symplectic_branching::partitions::{Partition, SkewShape};
use symplectic_branching::tableaux::{enumerate_spt, enumerate_sst, Tableau};

fn main() {
    // A partition is a weakly decreasing list of positive parts.
    let lambda = Partition::new(vec![4, 3, 2, 2, 1]).unwrap();
    println!("λ = {}  (size {}, length {})", lambda, lambda.size(), lambda.len());
    println!("column heights of λ: {:?}", lambda.col_heights());
    println!("λ has even columns: {}", lambda.has_even_columns());

    // A straight-shape tableau, checked for weakly increasing rows and
    // strictly increasing columns on construction of the checks below.
    let t = Tableau::from_rows(vec![
        vec![1, 1, 2, 4],
        vec![2, 2, 3],
        vec![4, 4],
        vec![5, 6],
        vec![6],
    ])
    .unwrap();
    println!("\nT =\n{}", t.render());
    println!("semistandard over [1, 6]: {}", t.is_semistandard(6));
    println!("weight wt(T)     = {:?}", t.weight(6).unwrap());
    println!("column word      = {:?}", t.column_word());

    // The symplectic weight pairs up the alphabet: entry 2i−1 counts +1
    // and entry 2i counts −1 toward the i-th coordinate.
    println!("wt^Sp(T)         = {:?}", t.sp_weight(3).unwrap());
    // King's condition: row i starts at 2i−1 or later.
    println!("T symplectic for n = 3: {}", t.is_symplectic(3).unwrap());

    // Skew tableaux carry an inner shape of skipped cells.
    let shape = SkewShape::new(
        Partition::new(vec![3, 2]).unwrap(),
        Partition::new(vec![1]).unwrap(),
    )
    .unwrap();
    let skew = Tableau::new(shape, vec![vec![1, 1], vec![1, 2]]).unwrap();
    println!("\na skew tableau of shape (3,2)/(1):\n{}", skew.render());

    // Enumeration: all semistandard fillings, and the symplectic subset.
    let nu = Partition::new(vec![2, 1]).unwrap();
    let sst = enumerate_sst(&nu, 4);
    let spt = enumerate_spt(&nu, 2);
    println!("\n|SST_4((2,1))| = {}", sst.len());
    println!("|SpT_4((2,1))| = {} (symplectic subset, n = 2):", spt.len());
    for t in &spt {
        println!("{}\n", t.render());
    }
}
