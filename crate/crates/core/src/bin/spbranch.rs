//! Command-line front end: apply the branching maps to user-supplied
//! data, emit multiplicity tables, run the verification grid, and
//! benchmark the backends.
//!
//! Exit codes: 0 on success, 1 when a verified property fails
//! (`verify` counterexamples, backend disagreement), 2 on usage or
//! validation errors.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use symplectic_branching::branching::{enumerate_recording, lr_map, successor};
use symplectic_branching::harness::{
    bench_backends, run_verify, FaultInjection, GridConfig, BENCH_CSV_HEADER,
};
use symplectic_branching::partitions::{enumerate_partitions_sized, Partition, SkewShape};
use symplectic_branching::plactic::column_insert;
use symplectic_branching::reduction::{reduce, removable_entries};
use symplectic_branching::rmatrix::r_matrix;
use symplectic_branching::tableaux::{enumerate_spt, enumerate_sst, Column, Tableau};
use symplectic_branching::verification::{
    branching_multiplicities, enumerate_lrsp, Backend, MultiplicityTable,
};

#[derive(Parser)]
#[command(
    name = "spbranch",
    version,
    about = "Branching from GL(2n) to Sp(2n): reduction, insertion, the \
             Littlewood-Richardson map, multiplicity tables, and an \
             exhaustive verification grid."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Bijection,
    Sundaram,
    Character,
    All,
}

impl BackendArg {
    fn backends(self) -> Vec<Backend> {
        match self {
            BackendArg::Bijection => vec![Backend::Bijection],
            BackendArg::Sundaram => vec![Backend::Sundaram],
            BackendArg::Character => vec![Backend::Character],
            BackendArg::All => Backend::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateKind {
    Sst,
    Spt,
    Recording,
    Lrsp,
    Partitions,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the Littlewood-Richardson map to a tableau.
    Map {
        /// Tableau input: a file path or '-' for stdin; JSON
        /// ({"outer":…,"inner":…,"rows":…}) or a text grid (rows of
        /// integers, '.' for inner cells).
        #[arg(short, long)]
        input: String,
        /// Alphabet parameter: entries must lie in [1, 2n].
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// With pretty output, print every intermediate P^k, Q^k.
        #[arg(long)]
        trace: bool,
    },
    /// Compute the removable entries and the reduction of a column.
    Reduce {
        /// Comma-separated strictly increasing values, e.g. 1,2,4,5,6.
        #[arg(long)]
        column: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Column-insert a value into a tableau.
    Insert {
        #[arg(long)]
        value: u32,
        /// Tableau input (same formats as `map`).
        #[arg(short, long)]
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply the combinatorial R-matrix to a pair of columns.
    Rmatrix {
        /// Left column, comma-separated (may be empty: "").
        #[arg(long)]
        left: String,
        /// Right column, comma-separated (may be empty: "").
        #[arg(long)]
        right: String,
        /// Alphabet bound.
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Emit the branching multiplicity table for one λ.
    Table {
        /// λ as comma-separated parts, e.g. 4,3,2,2,1.
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "all")]
        backend: BackendArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List tableaux, recording tableaux, or partitions.
    Enumerate {
        #[arg(long, value_enum)]
        kind: EnumerateKind,
        /// Outer shape (sst, recording, lrsp).
        #[arg(long)]
        lambda: Option<String>,
        /// Straight shape (spt) or inner shape (recording, lrsp).
        #[arg(long)]
        nu: Option<String>,
        /// Symplectic rank (spt, recording, lrsp).
        #[arg(long)]
        n: Option<u32>,
        /// Alphabet bound (sst).
        #[arg(long)]
        m: Option<u32>,
        /// Size cap (partitions).
        #[arg(long)]
        max_size: Option<usize>,
        /// Length cap (partitions).
        #[arg(long)]
        max_length: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the exhaustive property suites over a bounded grid.
    Verify {
        #[arg(long, default_value_t = 2)]
        max_n: u32,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Seed for the randomized R-matrix samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Corrupt the reduction map on purpose; verification must then
        /// fail (harness self-test).
        #[arg(long)]
        fault_injection: bool,
    },
    /// Time the multiplicity backends on one λ; CSV on stdout.
    Bench {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "all")]
        backend: BackendArg,
    },
}

/// A validation failure that should terminate with exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String, Usage> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Usage(format!("cannot read stdin: {}", e)))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| Usage(format!("cannot read {}: {}", path, e)))
    }
}

fn parse_tableau(text: &str) -> Result<Tableau, Usage> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        Ok(serde_json::from_str(trimmed)?)
    } else {
        Ok(Tableau::from_text_grid(trimmed)?)
    }
}

fn parse_values(text: &str, what: &str) -> Result<Vec<u32>, Usage> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u32>()
                .map_err(|_| Usage(format!("{}: not an integer: {:?}", what, s)))
        })
        .collect()
}

fn parse_column(text: &str, what: &str) -> Result<Column, Usage> {
    Ok(Column::new(parse_values(text, what)?)?)
}

fn parse_partition(text: &str, what: &str) -> Result<Partition, Usage> {
    let parts: Vec<usize> = parse_values(text, what)?
        .into_iter()
        .map(|v| v as usize)
        .collect();
    Ok(Partition::new(parts)?)
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("serializable output")
    );
}

fn run(cli: Cli) -> Result<ExitCode, Usage> {
    match cli.command {
        Command::Map {
            input,
            n,
            format,
            trace,
        } => run_map(&input, n, format, trace),
        Command::Reduce { column, n, format } => run_reduce(&column, n, format),
        Command::Insert {
            value,
            input,
            format,
        } => run_insert(value, &input, format),
        Command::Rmatrix {
            left,
            right,
            m,
            format,
        } => run_rmatrix(&left, &right, m, format),
        Command::Table {
            lambda,
            n,
            backend,
            format,
        } => run_table(&lambda, n, backend, format),
        Command::Enumerate {
            kind,
            lambda,
            nu,
            n,
            m,
            max_size,
            max_length,
            format,
        } => run_enumerate(kind, lambda, nu, n, m, max_size, max_length, format),
        Command::Verify {
            max_n,
            max_size,
            workers,
            seed,
            fault_injection,
        } => {
            let config = GridConfig {
                max_n,
                max_size,
                workers,
                seed,
                fault: if fault_injection {
                    FaultInjection::CorruptReduce
                } else {
                    FaultInjection::None
                },
            };
            let report = run_verify(&config);
            println!("{}", report);
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Bench { lambda, n, backend } => {
            let lambda = parse_partition(&lambda, "--lambda")?;
            let records = bench_backends(&lambda, n, &backend.backends())?;
            println!("{}", BENCH_CSV_HEADER);
            for record in records {
                println!("{}", record.csv_row());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_map(input: &str, n: u32, format: Format, trace: bool) -> Result<ExitCode, Usage> {
    let t = parse_tableau(&read_input(input)?)?;
    if !t.is_straight() {
        return Err(Usage("the LR map needs a straight shape".into()));
    }
    t.check_semistandard(2 * n)?;
    let result = lr_map(&t, n)?;
    match format {
        Format::Json => print_json(&result),
        Format::Pretty => {
            if trace {
                let mut p = t;
                for k in 1..=result.steps {
                    p = successor(&p, n)?;
                    println!("P^{}:", k);
                    println!("{}", p.render());
                    println!("Q^{}:", k);
                    println!("{}", partial_q(&result.q, &result.trajectory[k])?.render());
                }
            }
            println!("P:");
            println!("{}", result.p.render());
            println!("Q:");
            println!("{}", result.q.render());
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// The recording tableau after `k` steps: the final `Q` restricted to
/// the cells already removed at that point (labels `≤ k`), of shape
/// `λ/ν^k`.
fn partial_q(q: &Tableau, nu_k: &Partition) -> Result<Tableau, Usage> {
    let shape = SkewShape::new(q.outer().clone(), nu_k.clone())?;
    let rows: Vec<Vec<u32>> = (1..=shape.outer().len())
        .map(|i| {
            shape
                .row_cols(i)
                .map(|j| q.get(i, j).expect("cell removed by step k"))
                .collect()
        })
        .collect();
    Ok(Tableau::new(shape, rows)?)
}

#[derive(Serialize)]
struct ReduceOutput {
    column: Column,
    n: u32,
    removable: Vec<u32>,
    reduced: Column,
}

fn run_reduce(column: &str, n: u32, format: Format) -> Result<ExitCode, Usage> {
    let column = parse_column(column, "--column")?;
    let removable = removable_entries(&column, n)?;
    let reduced = reduce(&column, n)?;
    match format {
        Format::Json => print_json(&ReduceOutput {
            column,
            n,
            removable: removable.values().to_vec(),
            reduced,
        }),
        Format::Pretty => {
            println!("Rem = {}", removable);
            println!("red = {}", reduced);
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct InsertOutput {
    tableau: Tableau,
    route: Vec<usize>,
    new_cell: [usize; 2],
}

fn run_insert(value: u32, input: &str, format: Format) -> Result<ExitCode, Usage> {
    if value == 0 {
        return Err(Usage("--value must be positive".into()));
    }
    let t = parse_tableau(&read_input(input)?)?;
    if !t.is_straight() {
        return Err(Usage("column insertion needs a straight shape".into()));
    }
    t.check_semistandard(t.max_entry().max(value))?;
    let (result, route) = column_insert(value, &t)?;
    match format {
        Format::Json => {
            let (row, col) = route.new_cell();
            print_json(&InsertOutput {
                tableau: result,
                route: route.rows().to_vec(),
                new_cell: [row, col],
            });
        }
        Format::Pretty => {
            println!("{}", result.render());
            let route_str: Vec<String> = route.rows().iter().map(|r| r.to_string()).collect();
            println!("route: ({})", route_str.join(", "));
            let (row, col) = route.new_cell();
            println!("new cell: ({}, {})", row, col);
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct RmatrixOutput {
    left: Column,
    right: Column,
}

fn run_rmatrix(left: &str, right: &str, m: u32, format: Format) -> Result<ExitCode, Usage> {
    let a = parse_column(left, "--left")?;
    let b = parse_column(right, "--right")?;
    let (c, d) = r_matrix(&a, &b, m)?;
    match format {
        Format::Json => print_json(&RmatrixOutput { left: c, right: d }),
        Format::Pretty => println!("R({}, {}) = ({}, {})", a, b, c, d),
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct TableSetOutput {
    tables: Vec<MultiplicityTable>,
    agree: bool,
}

fn run_table(lambda: &str, n: u32, backend: BackendArg, format: Format) -> Result<ExitCode, Usage> {
    let lambda = parse_partition(lambda, "--lambda")?;
    let mut tables = Vec::new();
    for b in backend.backends() {
        tables.push(branching_multiplicities(&lambda, n, b)?);
    }
    let agree = tables.windows(2).all(|w| w[0].entries == w[1].entries);
    match format {
        Format::Json => {
            if tables.len() == 1 {
                print_json(&tables[0]);
            } else {
                print_json(&TableSetOutput {
                    tables,
                    agree,
                });
            }
        }
        Format::Pretty => {
            let multiple = tables.len() > 1;
            for table in &tables {
                println!(
                    "λ = {}, n = {}, backend {}:",
                    table.lambda, table.n, table.backend
                );
                for (nu, m) in table.entries.iter().rev() {
                    println!("  {}: {}", nu, m);
                }
            }
            if multiple {
                println!("{}", if agree { "backends agree" } else { "backends disagree" });
            }
        }
    }
    Ok(if agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct EnumerateOutput<T: Serialize> {
    count: usize,
    items: Vec<T>,
}

fn require<T>(opt: Option<T>, kind: &str, flag: &str) -> Result<T, Usage> {
    opt.ok_or_else(|| Usage(format!("enumerate --kind {} requires {}", kind, flag)))
}

#[allow(clippy::too_many_arguments)]
fn run_enumerate(
    kind: EnumerateKind,
    lambda: Option<String>,
    nu: Option<String>,
    n: Option<u32>,
    m: Option<u32>,
    max_size: Option<usize>,
    max_length: Option<usize>,
    format: Format,
) -> Result<ExitCode, Usage> {
    let lambda = lambda
        .map(|s| parse_partition(&s, "--lambda"))
        .transpose()?;
    let nu = nu.map(|s| parse_partition(&s, "--nu")).transpose()?;
    match kind {
        EnumerateKind::Sst => {
            let lambda = require(lambda, "sst", "--lambda")?;
            let m = require(m, "sst", "--m")?;
            emit_tableaux(enumerate_sst(&lambda, m), format);
        }
        EnumerateKind::Spt => {
            let nu = require(nu, "spt", "--nu")?;
            let n = require(n, "spt", "--n")?;
            emit_tableaux(enumerate_spt(&nu, n), format);
        }
        EnumerateKind::Recording => {
            let lambda = require(lambda, "recording", "--lambda")?;
            let nu = require(nu, "recording", "--nu")?;
            let n = require(n, "recording", "--n")?;
            emit_tableaux(enumerate_recording(&lambda, &nu, n)?, format);
        }
        EnumerateKind::Lrsp => {
            let lambda = require(lambda, "lrsp", "--lambda")?;
            let nu = require(nu, "lrsp", "--nu")?;
            let n = require(n, "lrsp", "--n")?;
            emit_tableaux(enumerate_lrsp(&lambda, &nu, n)?, format);
        }
        EnumerateKind::Partitions => {
            let max_size = require(max_size, "partitions", "--max-size")?;
            let max_length = require(max_length, "partitions", "--max-length")?;
            let items = enumerate_partitions_sized(max_size, max_length);
            match format {
                Format::Json => print_json(&EnumerateOutput {
                    count: items.len(),
                    items,
                }),
                Format::Pretty => {
                    let count = items.len();
                    for p in items {
                        println!("{}", p);
                    }
                    println!("count: {}", count);
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_tableaux(items: Vec<Tableau>, format: Format) {
    match format {
        Format::Json => print_json(&EnumerateOutput {
            count: items.len(),
            items,
        }),
        Format::Pretty => {
            let count = items.len();
            for t in items {
                println!("{}", t.render());
                println!();
            }
            println!("count: {}", count);
        }
    }
}
