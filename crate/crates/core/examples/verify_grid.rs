//! The verification harness: run every property suite exhaustively over
//! a bounded grid, then demonstrate that an injected fault is caught.
//!
//! Run with: cargo run --example verify_grid

use symplectic_branching::harness::{run_verify, FaultInjection, GridConfig};

fn main() {
    // The default grid: ranks n ≤ 2, shapes with at most 6 cells, one
    // worker thread, a fixed seed for the randomized R-matrix samples.
    let config = GridConfig::default();
    let report = run_verify(&config);
    println!("{}", report);
    assert!(report.all_passed());

    // The same grid with the reduction map corrupted on purpose (its
    // alphabet-bound side condition is dropped). The factorization suite
    // must notice and report the smallest offending column.
    let faulty = GridConfig {
        fault: FaultInjection::CorruptReduce,
        ..GridConfig::default()
    };
    println!("\nwith --fault-injection (corrupted reduction):");
    let report = run_verify(&faulty);
    println!("{}", report);
    assert!(!report.all_passed());
}
