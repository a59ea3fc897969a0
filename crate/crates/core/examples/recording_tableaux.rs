//! Recording tableaux: the skew fillings that arise as the Q-side of the
//! LR map, characterized by five local axioms, and their translation
//! into symplectic Littlewood-Richardson fillings.
//!
//! Run with: cargo run --example recording_tableaux

use symplectic_branching::branching::{enumerate_recording, is_recording, lr_map};
use symplectic_branching::partitions::Partition;
use symplectic_branching::tableaux::{enumerate_spt, enumerate_sst};
use symplectic_branching::verification::{enumerate_lrsp, is_symplectic_lr, rec_to_lrsp};

fn main() {
    let lambda = Partition::new(vec![2, 2]).unwrap();
    let nu = Partition::empty();
    let n = 1;

    // All recording tableaux of shape λ/ν for rank n: rows strictly
    // decrease, columns weakly decrease, every label is used an even
    // number of times, labels stay within a depth bound, and truncated
    // counts are monotone in the label.
    let recs = enumerate_recording(&lambda, &nu, n).unwrap();
    println!(
        "recording tableaux of shape {}/{} for n = {}: {}",
        lambda,
        nu,
        n,
        recs.len()
    );
    for q in &recs {
        println!("{}\n", q.render());
        assert!(is_recording(q, &lambda, &nu, n).unwrap());
    }

    // Each recording tableau maps to a symplectic LR filling: entry (i, j)
    // counts the labels ≥ that cell's label in the rows above. The map is
    // injective into the Sundaram set.
    println!("their images under rec → LR^Sp:");
    for q in &recs {
        let image = rec_to_lrsp(q).unwrap();
        println!("{}\n", image.render());
        assert!(is_symplectic_lr(&image, n));
    }

    let lrsp = enumerate_lrsp(&lambda, &nu, n).unwrap();
    println!("Sundaram fillings of the same shape: {}", lrsp.len());

    // The recording tableaux of shape λ/ν are exactly the Q-sides of the
    // LR map applied to SST_{2n}(λ) whose fixpoint has shape ν; each one
    // appears once per symplectic tableau of shape ν.
    let mut seen = 0;
    for t in enumerate_sst(&lambda, 2 * n) {
        let result = lr_map(&t, n).unwrap();
        if result.p.outer() == &nu {
            assert!(recs.contains(&result.q));
            seen += 1;
        }
    }
    let spt_count = enumerate_spt(&nu, n).len();
    println!(
        "LR images with P of shape {}: {} = |SpT| × |Rec| = {} × {}",
        nu,
        seen,
        spt_count,
        recs.len()
    );
    assert_eq!(seen, spt_count * recs.len());
}
