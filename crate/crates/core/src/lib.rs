//! Combinatorics of the branching from GL(2n) to Sp(2n).
//!
//! The library implements the tableau-level machinery underlying the
//! restriction of a general-linear irreducible representation to the
//! symplectic subgroup:
//!
//! * [`partitions`] — partitions, skew shapes, vertical strips;
//! * [`tableaux`] — semistandard and symplectic (King) tableaux, weights,
//!   enumeration, rendering;
//! * [`plactic`] — column insertion, the plactic `*` product and its inverse
//!   on Pieri strips;
//! * [`reduction`] — the reduction map `red` that deletes removable entries
//!   from a column, with its direct characterization;
//! * [`rmatrix`] — the combinatorial R-matrix on pairs of columns and the
//!   factored form of the reduction map built from it;
//! * [`branching`] — the successor map on tableaux and the induced
//!   correspondence `T ↦ (P, Q)` together with the recording-tableau axioms;
//! * [`verification`] — Sundaram-style symplectic LR tableaux and
//!   character-level cross checks of the branching multiplicities;
//! * [`harness`] — exhaustive property suites over bounded grids, used by the
//!   `verify` and `bench` subcommands of the CLI.
//!
//! Everything is exact integer combinatorics: no floating point, no
//! randomness outside the explicitly seeded sampling suites, and all
//! enumeration orders are deterministic.

pub mod branching;
pub mod error;
pub mod harness;
pub mod partitions;
pub mod plactic;
pub mod reduction;
pub mod rmatrix;
pub mod tableaux;
pub mod verification;

pub use branching::LrResult;
pub use error::Error;
pub use partitions::{Cell, Partition, SkewShape};
pub use reduction::RemovableSet;
pub use tableaux::{Column, Tableau};
pub use verification::{Backend, LaurentPoly, MultiplicityTable};
