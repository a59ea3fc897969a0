//! Iterating the successor map to its fixpoint.
//!
//! One successor step peels the first column off, reduces it, and stars
//! the reduced column back on. Each step strictly shrinks a
//! non-symplectic tableau; the fixpoints are exactly the symplectic
//! tableaux.
//!
//! Run with: cargo run --example successor_chain

use symplectic_branching::branching::successor;
use symplectic_branching::tableaux::Tableau;

fn main() {
    // A 10-row tableau over [1, 14] (n = 7). The successor map only needs
    // strictly increasing columns, which every straight-shape tableau
    // representation here guarantees; this input is not even semistandard
    // (row 7 reads 11, 10) and the chain still works.
    let mut t = Tableau::from_rows(vec![
        vec![1, 2, 2, 3],
        vec![3, 3, 4, 5],
        vec![4, 4, 5, 6],
        vec![5, 6, 6, 9],
        vec![6, 7, 7, 10],
        vec![7, 8, 8],
        vec![11, 10],
        vec![12],
        vec![13],
        vec![14],
    ])
    .unwrap();
    let n = 7;

    println!("T =\n{}", t.render());
    let mut step = 0;
    loop {
        let next = successor(&t, n).unwrap();
        if next == t {
            break;
        }
        step += 1;
        println!("\nsuc^{}(T) =\n{}", step, next.render());
        t = next;
    }
    println!("\nfixpoint reached after {} steps", step);
    println!("fixpoint symplectic for n = {}: {}", n, t.is_symplectic(n).unwrap());
}
