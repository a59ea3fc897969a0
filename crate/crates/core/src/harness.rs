//! The exhaustive verification harness: property suites over bounded
//! grids of `(n, λ)`, a fault-injection self-test, and wall-clock
//! benchmarking of the multiplicity backends.
//!
//! Every suite walks its search space in a fixed order and reports the
//! *first* counterexample in that order, so output is deterministic.
//! Work is sharded across a rayon pool sized by
//! [`GridConfig::workers`]; shard results are merged by index, so the
//! worker count never changes the report.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::branching::{enumerate_recording, lr_map, successor};
use crate::error::Error;
use crate::partitions::{enumerate_partitions, enumerate_partitions_sized, Partition};
use crate::plactic::{star, unstar};
use crate::reduction::{
    is_symplectic_column, reduce, removable_entries, removable_entries_direct,
};
use crate::rmatrix::{r_matrix, reduce_factored};
use crate::tableaux::{enumerate_spt, enumerate_sst, Column, Tableau};
use crate::verification::{branching_multiplicities, Backend, MultiplicityTable};

/// Bounds and knobs for one verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridConfig {
    /// Largest `n`; the alphabet is `[1, 2n]`.
    pub max_n: u32,
    /// Largest `|λ|` for the tableau-level suites.
    pub max_size: usize,
    /// Worker threads for sharding (1 = sequential).
    pub workers: usize,
    /// Seed for the randomized R-matrix samples.
    pub seed: u64,
    /// Optional deliberate corruption, to prove the harness can fail.
    pub fault: FaultInjection,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            max_n: 2,
            max_size: 6,
            workers: 1,
            seed: 0,
            fault: FaultInjection::None,
        }
    }
}

/// Deliberate corruptions for the harness self-test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FaultInjection {
    #[default]
    None,
    /// Drop the bound check from the removable-pair rule, so reduction
    /// deletes every adjacent odd/even pair; the factorization suite
    /// must catch this.
    CorruptReduce,
}

/// The outcome of one property suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    /// Individual checks performed.
    pub cases: u64,
    /// Work shards that hit a failure (a shard stops at its first).
    pub failed_shards: u64,
    /// The failure from the earliest shard, if any.
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed_shards == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: PASS ({} cases)", self.name, self.cases)
        } else {
            write!(
                f,
                "{}: FAIL ({} cases; first counterexample: {})",
                self.name,
                self.cases,
                self.counterexample.as_deref().unwrap_or("unknown")
            )
        }
    }
}

/// The merged outcome of a full verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for suite in &self.suites {
            writeln!(f, "{}", suite)?;
        }
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        if failed == 0 {
            write!(f, "verification: all {} suites passed", self.suites.len())
        } else {
            write!(
                f,
                "verification: {} of {} suites failed",
                failed,
                self.suites.len()
            )
        }
    }
}

/// What one work shard found: how many checks it ran and its first
/// failure, if any.
struct ShardOutcome {
    cases: u64,
    failure: Option<String>,
}

impl ShardOutcome {
    fn pass(cases: u64) -> Self {
        ShardOutcome {
            cases,
            failure: None,
        }
    }
}

/// Runs `check` over `shards` in parallel (on the ambient rayon pool)
/// and merges in shard order, keeping the earliest failure.
fn run_shards<I, F>(name: &'static str, shards: Vec<I>, check: F) -> SuiteReport
where
    I: Sync,
    F: Fn(&I) -> ShardOutcome + Sync,
{
    let outcomes: Vec<ShardOutcome> = shards.par_iter().map(&check).collect();
    let mut report = SuiteReport {
        name,
        cases: 0,
        failed_shards: 0,
        counterexample: None,
    };
    for outcome in outcomes {
        report.cases += outcome.cases;
        if let Some(msg) = outcome.failure {
            report.failed_shards += 1;
            report.counterexample.get_or_insert(msg);
        }
    }
    report
}

/// All strictly increasing sequences over `[1, m]`, by increasing
/// bitmask (so shorter prefixes of the value set come first).
fn all_columns(m: u32) -> Vec<Column> {
    (0u64..1 << m)
        .map(|mask| {
            Column::new(
                (1..=m)
                    .filter(|v| mask >> (v - 1) & 1 == 1)
                    .collect::<Vec<_>>(),
            )
            .expect("increasing by construction")
        })
        .collect()
}

fn vee(v: u32, m: u32) -> Column {
    Column::new((1..=m).filter(|&x| x != v).collect::<Vec<_>>()).expect("increasing")
}

/// `Rem` with the bound check removed: deletes every adjacent pair
/// `(2j−1, 2j)`. Wrong on purpose; see [`FaultInjection::CorruptReduce`].
fn corrupt_reduce(a: &Column, _n: u32) -> Column {
    let v = a.values();
    let mut removed = vec![false; v.len()];
    for i in 2..=v.len() {
        let last = v[i - 1];
        if last.is_multiple_of(2) && v[i - 2] + 1 == last && !removed[i - 2] {
            removed[i - 2] = true;
            removed[i - 1] = true;
        }
    }
    Column::new(
        v.iter()
            .zip(&removed)
            .filter(|(_, &r)| !r)
            .map(|(&x, _)| x)
            .collect::<Vec<_>>(),
    )
    .expect("subsequence of a column")
}

/// `Rem` structure for every column over `[1, 2n]`, `n ≤ max_n`:
/// even size, partner-closed, subset of the column, the size window
/// `0 ≤ l − |Rem| ≤ min(l, 2n − l)`, agreement of the two computations,
/// reduction idempotence, and fixpoint exactly on symplectic columns.
pub fn suite_reduction_invariants(max_n: u32) -> SuiteReport {
    let shards: Vec<u32> = (1..=max_n).collect();
    run_shards("reduction-invariants", shards, |&n| {
        let mut cases = 0;
        for a in all_columns(2 * n) {
            cases += 1;
            let fail = |msg: String| ShardOutcome {
                cases,
                failure: Some(format!("n = {}, a = {}: {}", n, a, msg)),
            };
            let rem = removable_entries(&a, n).expect("alphabet in range");
            let direct = removable_entries_direct(&a, n).expect("alphabet in range");
            if rem != direct {
                return fail(format!("forward pass {} vs direct {}", rem, direct));
            }
            if !rem.len().is_multiple_of(2) {
                return fail(format!("|Rem| = {} is odd", rem.len()));
            }
            if !rem.values().iter().all(|&v| a.contains(v)) {
                return fail(format!("Rem {} is not a subset", rem));
            }
            let paired = rem.values().chunks(2).all(|p| p[0] % 2 == 1 && p[1] == p[0] + 1);
            if !paired {
                return fail(format!("Rem {} is not partner-closed", rem));
            }
            let l = a.len();
            let kept = l - rem.len();
            if kept > l.min(2 * n as usize - l) {
                return fail(format!("|red| = {} exceeds min(l, 2n − l)", kept));
            }
            let red = reduce(&a, n).expect("alphabet in range");
            if reduce(&red, n).expect("alphabet in range") != red {
                return fail(format!("reduction is not idempotent at {}", red));
            }
            if (red == a) != is_symplectic_column(&a) {
                return fail("fixpoint does not match symplecticity".into());
            }
        }
        ShardOutcome::pass(cases)
    })
}

/// `R_{l,k} ∘ R_{k,l} = id` exhaustively for alphabets `m ≤ max_m`, the
/// size swap, and the randomized shifted-interval identity
/// `R(s^∨, a ⊔ [r,s]) = (a ⊔ [r−1,s−1], (r−1)^∨)`.
pub fn suite_rmatrix(max_m: u32, seed: u64) -> SuiteReport {
    enum Shard {
        Exhaustive(u32),
        Randomized(u64),
    }
    let mut shards: Vec<Shard> = (1..=max_m).map(Shard::Exhaustive).collect();
    shards.push(Shard::Randomized(seed));
    run_shards("rmatrix", shards, |shard| match *shard {
        Shard::Exhaustive(m) => {
            let cols = all_columns(m);
            let mut cases = 0;
            for a in &cols {
                for b in &cols {
                    cases += 1;
                    let fail = |msg: String| ShardOutcome {
                        cases,
                        failure: Some(format!("m = {}, a = {}, b = {}: {}", m, a, b, msg)),
                    };
                    let (c, d) = match r_matrix(a, b, m) {
                        Ok(pair) => pair,
                        Err(e) => return fail(format!("R failed: {}", e)),
                    };
                    if c.len() != b.len() || d.len() != a.len() {
                        return fail(format!("sizes not swapped: ({}, {})", c, d));
                    }
                    match r_matrix(&c, &d, m) {
                        Ok(pair) if pair == (a.clone(), b.clone()) => {}
                        Ok((a2, b2)) => {
                            return fail(format!("round trip gave ({}, {})", a2, b2))
                        }
                        Err(e) => return fail(format!("inverse failed: {}", e)),
                    }
                }
            }
            ShardOutcome::pass(cases)
        }
        Shard::Randomized(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut cases = 0;
            for _ in 0..300 {
                cases += 1;
                let m = rng.gen_range(3..=9u32);
                let r = rng.gen_range(2..=m);
                let s = rng.gen_range(r..=m);
                let a_vals: Vec<u32> = (1..=r.saturating_sub(2))
                    .filter(|_| rng.gen_bool(0.5))
                    .collect();
                let right =
                    Column::new(a_vals.iter().copied().chain(r..=s).collect::<Vec<_>>())
                        .expect("increasing");
                let shifted =
                    Column::new(a_vals.iter().copied().chain(r - 1..=s - 1).collect::<Vec<_>>())
                        .expect("increasing");
                let want = (shifted.clone(), vee(r - 1, m));
                let got = r_matrix(&vee(s, m), &right, m);
                if got.as_ref() != Ok(&want) {
                    return ShardOutcome {
                        cases,
                        failure: Some(format!(
                            "m = {}, r = {}, s = {}, right = {}: expected ({}, {})",
                            m, r, s, right, want.0, want.1
                        )),
                    };
                }
            }
            ShardOutcome::pass(cases)
        }
    })
}

/// Factored reduction against direct reduction on every column over
/// `[1, 2n]`, `n ≤ max_n`. Under [`FaultInjection::CorruptReduce`] the
/// direct side is deliberately wrong and this suite must fail.
pub fn suite_factorization(max_n: u32, fault: FaultInjection) -> SuiteReport {
    let shards: Vec<u32> = (1..=max_n).collect();
    run_shards("factorization", shards, move |&n| {
        let mut cases = 0;
        for a in all_columns(2 * n) {
            cases += 1;
            let direct = match fault {
                FaultInjection::None => reduce(&a, n).expect("alphabet in range"),
                FaultInjection::CorruptReduce => corrupt_reduce(&a, n),
            };
            let factored = reduce_factored(&a, n).expect("alphabet in range");
            if direct != factored {
                return ShardOutcome {
                    cases,
                    failure: Some(format!(
                        "n = {}, a = {}: direct reduction {}, factored reduction {}",
                        n, a, direct, factored
                    )),
                };
            }
        }
        ShardOutcome::pass(cases)
    })
}

/// The Pieri bijection: for every column `c` of size `k` and every
/// `T ∈ SST_m(λ)`, `c * T` lands in some `SST_m(μ)` with `μ/λ` a
/// vertical `k`-strip; the products are pairwise distinct, hit each `μ`
/// exactly `|SST_m(μ)|` times, and `unstar` recovers `(c, T)`.
pub fn suite_pieri(max_m: u32, max_size: usize) -> SuiteReport {
    let mut shards: Vec<(u32, Partition)> = Vec::new();
    for m in 1..=max_m {
        for lambda in enumerate_partitions_sized(max_size, m as usize) {
            shards.push((m, lambda));
        }
    }
    run_shards("pieri", shards, |(m, lambda)| {
        let m = *m;
        let tableaux = enumerate_sst(lambda, m);
        let mut cases = 0;
        for k in 1..=m as usize {
            let mut products: BTreeMap<Partition, BTreeSet<Tableau>> = BTreeMap::new();
            for col in all_columns(m).into_iter().filter(|c| c.len() == k) {
                for t in &tableaux {
                    cases += 1;
                    let fail = |msg: String| ShardOutcome {
                        cases,
                        failure: Some(format!(
                            "m = {}, λ = {}, c = {}, T = ({:?}): {}",
                            m,
                            lambda,
                            col,
                            t.rows(),
                            msg
                        )),
                    };
                    let u = match star(&col.to_tableau(), t) {
                        Ok(u) => u,
                        Err(e) => return fail(format!("product failed: {}", e)),
                    };
                    let mu = u.outer().clone();
                    if !crate::partitions::is_vertical_strip(lambda, &mu)
                        || mu.size() != lambda.size() + k
                    {
                        return fail(format!("shape {} is not λ plus a {}-strip", mu, k));
                    }
                    match unstar(&u, lambda, k) {
                        Ok(pair) if pair == (col.clone(), t.clone()) => {}
                        Ok((c2, t2)) => {
                            return fail(format!(
                                "unstar gave ({}, {:?})",
                                c2,
                                t2.rows()
                            ))
                        }
                        Err(e) => return fail(format!("unstar failed: {}", e)),
                    }
                    if !products.entry(mu).or_default().insert(u) {
                        return fail("duplicate product".into());
                    }
                }
            }
            for (mu, set) in products {
                cases += 1;
                let expected = enumerate_sst(&mu, m).len();
                if set.len() != expected {
                    return ShardOutcome {
                        cases,
                        failure: Some(format!(
                            "m = {}, λ = {}, k = {}: {} products of shape {}, want {}",
                            m,
                            lambda,
                            k,
                            set.len(),
                            mu,
                            expected
                        )),
                    };
                }
            }
        }
        ShardOutcome::pass(cases)
    })
}

/// `suc(T) = T` exactly for symplectic `T`, over `SST_{2n}(λ)` with
/// `n ≤ max_n`, `|λ| ≤ max_size`.
pub fn suite_successor_fixpoints(max_n: u32, max_size: usize) -> SuiteReport {
    let shards = tableau_grid(max_n, max_size);
    run_shards("successor-fixpoints", shards, |(n, lambda)| {
        let n = *n;
        let mut cases = 0;
        for t in enumerate_sst(lambda, 2 * n) {
            cases += 1;
            let next = successor(&t, n).expect("valid input");
            let fixed = next == t;
            let symplectic = t.is_symplectic(n).expect("entries in range");
            if fixed != symplectic {
                return ShardOutcome {
                    cases,
                    failure: Some(format!(
                        "n = {}, λ = {}, T = ({:?}): fixpoint {} but symplectic {}",
                        n,
                        lambda,
                        t.rows(),
                        fixed,
                        symplectic
                    )),
                };
            }
        }
        ShardOutcome::pass(cases)
    })
}

fn tableau_grid(max_n: u32, max_size: usize) -> Vec<(u32, Partition)> {
    let mut shards = Vec::new();
    for n in 1..=max_n {
        for lambda in enumerate_partitions_sized(max_size, 2 * n as usize) {
            shards.push((n, lambda));
        }
    }
    shards
}

/// Injectivity of the LR map and of the successor map on `SST_{2n}(λ)`,
/// and set equality of the LR image with `⨆_ν SpT_{2n}(ν) × Rec(λ/ν)`.
pub fn suite_bijectivity(max_n: u32, max_size: usize) -> SuiteReport {
    let shards = tableau_grid(max_n, max_size);
    run_shards("bijectivity", shards, |(n, lambda)| {
        let n = *n;
        let tableaux = enumerate_sst(lambda, 2 * n);
        let mut cases = 0;
        let mut image: BTreeSet<(Tableau, Tableau)> = BTreeSet::new();
        let mut successors: BTreeSet<Tableau> = BTreeSet::new();
        let fail_at = |cases: u64, msg: String| ShardOutcome {
            cases,
            failure: Some(format!("n = {}, λ = {}: {}", n, lambda, msg)),
        };
        for t in &tableaux {
            cases += 1;
            let r = match lr_map(t, n) {
                Ok(r) => r,
                Err(e) => {
                    return fail_at(cases, format!("lr_map failed on {:?}: {}", t.rows(), e))
                }
            };
            if !successors.insert(successor(t, n).expect("valid input")) {
                return fail_at(cases, format!("successor collision at {:?}", t.rows()));
            }
            if !image.insert((r.p, r.q)) {
                return fail_at(cases, format!("LR collision at {:?}", t.rows()));
            }
        }
        let mut codomain: BTreeSet<(Tableau, Tableau)> = BTreeSet::new();
        for nu in enumerate_partitions(n as usize, lambda) {
            let recs = match enumerate_recording(lambda, &nu, n) {
                Ok(recs) => recs,
                Err(e) => return fail_at(cases, format!("Rec({}/{}) failed: {}", lambda, nu, e)),
            };
            for p in enumerate_spt(&nu, n) {
                for q in &recs {
                    codomain.insert((p.clone(), q.clone()));
                }
            }
        }
        cases += 1;
        if image != codomain {
            let missing = codomain.difference(&image).count();
            let extra = image.difference(&codomain).count();
            return fail_at(
                cases,
                format!(
                    "image ≠ codomain ({} missing, {} extra of {})",
                    missing,
                    extra,
                    codomain.len()
                ),
            );
        }
        ShardOutcome::pass(cases)
    })
}

/// For each `ν`: the set of recording tableaux produced by the LR map
/// equals the (R1)–(R5) filter, element by element.
pub fn suite_rec_equality(max_n: u32, max_size: usize) -> SuiteReport {
    let shards = tableau_grid(max_n, max_size);
    run_shards("rec-equality", shards, |(n, lambda)| {
        let n = *n;
        let mut by_nu: BTreeMap<Partition, BTreeSet<Tableau>> = BTreeMap::new();
        let mut cases = 0;
        for t in enumerate_sst(lambda, 2 * n) {
            cases += 1;
            let r = lr_map(&t, n).expect("valid input");
            by_nu.entry(r.p.outer().clone()).or_default().insert(r.q);
        }
        for nu in enumerate_partitions(n as usize, lambda) {
            cases += 1;
            let filter: BTreeSet<Tableau> = enumerate_recording(lambda, &nu, n)
                .expect("valid shapes")
                .into_iter()
                .collect();
            let image = by_nu.remove(&nu).unwrap_or_default();
            if image != filter {
                return ShardOutcome {
                    cases,
                    failure: Some(format!(
                        "n = {}, λ = {}, ν = {}: {} image Q's vs {} axiom fillings",
                        n,
                        lambda,
                        nu,
                        image.len(),
                        filter.len()
                    )),
                };
            }
        }
        ShardOutcome::pass(cases)
    })
}

/// The three multiplicity backends agree, and the dimensions add up:
/// `Σ_ν m_{λ,ν} |SpT_{2n}(ν)| = |SST_{2n}(λ)|`.
pub fn suite_multiplicity(max_n: u32, max_size: usize) -> SuiteReport {
    let shards = tableau_grid(max_n, max_size);
    run_shards("multiplicity", shards, |(n, lambda)| {
        let n = *n;
        let mut cases = 0;
        let mut tables: Vec<MultiplicityTable> = Vec::new();
        for backend in Backend::ALL {
            cases += 1;
            match branching_multiplicities(lambda, n, backend) {
                Ok(table) => tables.push(table),
                Err(e) => {
                    return ShardOutcome {
                        cases,
                        failure: Some(format!(
                            "n = {}, λ = {}, backend {}: {}",
                            n, lambda, backend, e
                        )),
                    }
                }
            }
        }
        for other in &tables[1..] {
            cases += 1;
            if other.entries != tables[0].entries {
                return ShardOutcome {
                    cases,
                    failure: Some(format!(
                        "n = {}, λ = {}: {} disagrees with {}",
                        n, lambda, other.backend, tables[0].backend
                    )),
                };
            }
        }
        cases += 1;
        let dim = enumerate_sst(lambda, 2 * n).len() as u64;
        if tables[0].total_dimension() != dim {
            return ShardOutcome {
                cases,
                failure: Some(format!(
                    "n = {}, λ = {}: Σ m·|SpT| = {} but |SST| = {}",
                    n,
                    lambda,
                    tables[0].total_dimension(),
                    dim
                )),
            };
        }
        ShardOutcome::pass(cases)
    })
}

/// Runs every suite, deriving per-suite bounds from the grid:
/// the tableau-level suites use the grid as-is, while the column- and
/// word-level suites are capped at their standard exhaustive ranges
/// (columns `n ≤ 4`, R-matrix alphabets `m ≤ 5`, Pieri `m ≤ 4`,
/// `|λ| ≤ 5`, successor fixpoints `n ≤ 3`, `|λ| ≤ 6`).
pub fn run_verify(config: &GridConfig) -> VerifyReport {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        let suites = vec![
            suite_reduction_invariants(config.max_n.min(4)),
            suite_rmatrix((2 * config.max_n).min(5), config.seed),
            suite_factorization(config.max_n.min(4), config.fault),
            suite_pieri((2 * config.max_n).min(4), config.max_size.min(5)),
            suite_successor_fixpoints(config.max_n.min(3), config.max_size.min(6)),
            suite_bijectivity(config.max_n, config.max_size),
            suite_rec_equality(config.max_n, config.max_size),
            suite_multiplicity(config.max_n, config.max_size),
        ];
        VerifyReport { suites }
    })
}

/// One timed multiplicity computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub backend: Backend,
    pub lambda: Partition,
    pub n: u32,
    pub millis: u128,
}

pub const BENCH_CSV_HEADER: &str = "backend,lambda,n,millis";

impl BenchRecord {
    /// One CSV row; `λ` is dot-joined to stay comma-free.
    pub fn csv_row(&self) -> String {
        let lambda = self
            .lambda
            .parts()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(".");
        format!("{},{},{},{}", self.backend, lambda, self.n, self.millis)
    }
}

/// Times `branching_multiplicities` for each backend on one `(λ, n)`.
pub fn bench_backends(
    lambda: &Partition,
    n: u32,
    backends: &[Backend],
) -> Result<Vec<BenchRecord>, Error> {
    let mut records = Vec::new();
    for &backend in backends {
        let start = Instant::now();
        branching_multiplicities(lambda, n, backend)?;
        records.push(BenchRecord {
            backend,
            lambda: lambda.clone(),
            n,
            millis: start.elapsed().as_millis(),
        });
    }
    Ok(records)
}
