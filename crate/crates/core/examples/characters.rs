//! Characters as Laurent polynomials: Schur polynomials, symplectic
//! characters, restriction from GL(2n) to Sp(2n), and decomposition into
//! the symplectic basis.
//!
//! Run with: cargo run --example characters

use symplectic_branching::partitions::Partition;
use symplectic_branching::verification::{
    decompose_in_sp_basis, restrict_character, schur, sp_schur,
};

fn main() {
    let n = 2;
    let lambda = Partition::new(vec![2, 1]).unwrap();

    // The Schur polynomial s_λ(x_1, …, x_{2n}): one monomial per
    // semistandard tableau.
    let s = schur(&lambda, 2 * n);
    println!("s_{}(x_1..x_4): {} terms, dimension {}", lambda, s.num_terms(), s.sum_of_coefficients());

    // The symplectic character s^Sp_ν(y_1^±, …, y_n^±): one monomial per
    // symplectic tableau, with y-exponents given by the symplectic weight.
    let nu = Partition::new(vec![1, 1]).unwrap();
    let sp = sp_schur(&nu, n);
    println!("s^Sp_{}(y_1^±, y_2^±) = {}", nu, sp);
    println!("  dimension {}", sp.sum_of_coefficients());

    // Restriction specializes the x-variables in ± pairs:
    // x_{2i-1} ↦ y_i^(±1), x_{2i} ↦ y_i^(∓1) with alternating signs.
    let restricted = restrict_character(&s, n).unwrap();
    println!(
        "\nres s_{}: {} terms, dimension {}",
        lambda,
        restricted.num_terms(),
        restricted.sum_of_coefficients()
    );

    // Decompose the restriction in the basis of symplectic characters by
    // repeatedly stripping the lexicographically leading term.
    let decomposition = decompose_in_sp_basis(&restricted, n).unwrap();
    println!("res s_{} = Σ m_ν s^Sp_ν with:", lambda);
    let mut dimension: i64 = 0;
    for (nu, m) in decomposition.iter().rev() {
        let d = sp_schur(nu, n).sum_of_coefficients();
        println!("  m_{} = {}  (dimension {})", nu, m, d);
        dimension += *m as i64 * d;
    }
    println!(
        "dimension check: Σ m_ν · dim V^Sp_ν = {} = dim V^GL_λ = {}",
        dimension,
        s.sum_of_coefficients()
    );
    assert_eq!(dimension, s.sum_of_coefficients());
}
