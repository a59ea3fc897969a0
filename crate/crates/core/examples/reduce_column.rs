//! The column reduction map: find the removable entries Rem(a) of a
//! strictly increasing column over [1, 2n] and strike them out.
//!
//! A column is symplectic (it starts a valid symplectic tableau) exactly
//! when nothing is removable; `reduce` projects any column onto one that
//! is.
//!
//! Run with: cargo run --example reduce_column

use symplectic_branching::reduction::{
    is_symplectic_column, reduce, removable_entries, removable_entries_direct,
};
use symplectic_branching::tableaux::Column;

fn main() {
    let examples: [(&[u32], u32); 4] = [
        (&[1, 2, 4, 5, 6], 3),
        (&[1, 3, 4, 5, 6, 7, 11, 12, 13, 14], 7),
        (&[2, 3, 4, 6], 3),
        (&[2, 6], 3),
    ];

    for (values, n) in examples {
        let a = Column::new(values.to_vec()).unwrap();
        let rem = removable_entries(&a, n).unwrap();
        let red = reduce(&a, n).unwrap();
        println!("n = {}, a = {}", n, a);
        println!("  Rem(a) = {}", rem);
        println!("  red(a) = {}", red);
        println!("  a symplectic: {}", is_symplectic_column(&a));
        println!("  red(a) symplectic: {}", is_symplectic_column(&red));

        // Two independent implementations of Rem: the defining recursion
        // on prefixes, and the direct entrywise characterization.
        assert_eq!(rem, removable_entries_direct(&a, n).unwrap());
        // Reduction is idempotent.
        assert_eq!(reduce(&red, n).unwrap(), red);
        println!();
    }

    // Entries pair up as (odd, odd+1); a removable pair must sit in
    // consecutive rows and low enough in the alphabet. An adjacent pair
    // that is too large survives:
    let a = Column::new(vec![5, 6]).unwrap();
    println!("n = 3, a = {}: Rem = {}", a, removable_entries(&a, 3).unwrap());
    let b = Column::new(vec![1, 2]).unwrap();
    println!("n = 3, a = {}: Rem = {}", b, removable_entries(&b, 3).unwrap());
}
