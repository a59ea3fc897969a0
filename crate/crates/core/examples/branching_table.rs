//! Branching multiplicity tables: how an irreducible GL(2n)
//! representation decomposes when restricted to Sp(2n), computed three
//! independent ways.
//!
//! Run with: cargo run --example branching_table

use symplectic_branching::partitions::Partition;
use symplectic_branching::verification::{branching_multiplicities, Backend};

fn main() {
    let lambda = Partition::new(vec![4, 3, 2, 2, 1]).unwrap();
    let n = 3;

    // bijection:  run the LR map over SST_{2n}(λ) and count recording
    //             tableaux per fixpoint shape;
    // sundaram:   count symplectic LR fillings of each λ/ν;
    // character:  restrict the Schur polynomial and decompose it in the
    //             symplectic character basis.
    let mut tables = Vec::new();
    for backend in Backend::ALL {
        let table = branching_multiplicities(&lambda, n, backend).unwrap();
        println!("λ = {}, n = {}, backend {}:", table.lambda, table.n, table.backend);
        for (nu, m) in table.entries.iter().rev() {
            println!("  m_{{λ,{}}} = {}", nu, m);
        }
        println!("  total dimension: {}\n", table.total_dimension());
        tables.push(table);
    }

    assert!(tables.windows(2).all(|w| w[0].entries == w[1].entries));
    println!("all three backends agree");

    // The table serializes with ν in decreasing lexicographic order.
    println!("\nJSON: {}", serde_json::to_string(&tables[0]).unwrap());
}
