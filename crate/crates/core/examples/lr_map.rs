//! The Littlewood-Richardson map T ↦ (P, Q): iterate the successor map
//! to its symplectic fixpoint P and record in Q which cells disappear at
//! which step.
//!
//! Run with: cargo run --example lr_map

use symplectic_branching::branching::{is_recording, lr_map};
use symplectic_branching::tableaux::Tableau;

fn main() {
    let t = Tableau::from_rows(vec![
        vec![1, 1, 2, 4],
        vec![2, 2, 3],
        vec![4, 4],
        vec![5, 6],
        vec![6],
    ])
    .unwrap();
    let n = 3;

    println!("T =\n{}\n", t.render());
    let result = lr_map(&t, n).unwrap();

    println!("P = (symplectic part)\n{}\n", result.p.render());
    println!("Q = (recording tableau, shape λ/ν)\n{}\n", result.q.render());

    println!("steps to fixpoint: {}", result.steps);
    println!("shape trajectory ν^0 ⊇ ν^1 ⊇ …:");
    for (k, shape) in result.trajectory.iter().enumerate() {
        println!("  ν^{} = {}", k, shape);
    }

    let lambda = t.outer();
    let nu = result.p.outer();
    println!("\nP symplectic for n = {}: {}", n, result.p.is_symplectic(n).unwrap());
    println!(
        "Q satisfies the recording axioms (R1)–(R5): {}",
        is_recording(&result.q, lambda, nu, n).unwrap()
    );

    // Each step strikes out a removable set of pairs, so the cell count
    // drops by an even number every time.
    for w in result.trajectory.windows(2) {
        let removed = w[0].size() - w[1].size();
        assert!(removed % 2 == 0);
    }
    println!("every step removes an even number of cells: true");
}
