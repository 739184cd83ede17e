//! `permcut`: build, solve, recognize and audit MaxCut reductions.
//!
//! Every run prints a JSON report to standard output and a short summary
//! to standard error. Exit status: 0 success, 1 a requested property
//! fails, 2 malformed input.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{write_atomic, RunReport};

#[derive(Debug, Parser)]
#[command(name = "permcut", version, about = "MaxCut reductions to permutation graphs")]
struct Cli {
    /// Also write the run report to this file.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the reduction of a graph and write its model.
    Reduce(ReduceArgs),
    /// Compute a maximum cut.
    Solve(SolveArgs),
    /// Check a gadget, a reduction's structure, a cut or the counting formulas.
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Test a graph class; a failing test prints a witness.
    Recognize(RecognizeArgs),
    /// Audit the canonical cut of every source cut against its threshold.
    Audit(AuditArgs),
    /// Print sizes, constraints, α1, α2 and the threshold for each k.
    Report(ReportArgs),
}

/// A source graph plus the reduction parameters.
#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Source graph in text format.
    #[arg(long)]
    graph: PathBuf,
    /// `closed-form`, `interval` or explicit `p:q:pe:qe`.
    #[arg(long, default_value = "closed-form")]
    params: String,
    /// Accept non-cubic sources and parameters outside the sound range.
    #[arg(long)]
    force: bool,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value = "closed-form")]
    params: String,
}

/// A graph from a text file or from a model document.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Graph in text format; vertices are labeled 1..n.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Permutation or interval model document; vertices keep their labels.
    #[arg(long)]
    model: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Perm,
    Interval,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long, value_enum, default_value = "perm")]
    kind: Kind,
    #[arg(long)]
    graph: PathBuf,
    /// `closed-form`, `interval` or `p:q:pe:qe`; defaults to `closed-form` for the
    /// permutation reduction and `interval` for the interval construction.
    #[arg(long)]
    params: Option<String>,
    #[arg(long)]
    force: bool,
    /// Model document to write.
    #[arg(long)]
    out: PathBuf,
    /// Label registry to write, one `label<TAB>role` line per vertex.
    #[arg(long)]
    registry: Option<PathBuf>,
    /// Realized graph to write in text format.
    #[arg(long)]
    graph_out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Exact,
    Local,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum, default_value = "exact")]
    algo: Algo,
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 16)]
    restarts: u64,
    /// Largest vertex count the exact solver accepts.
    #[arg(long, default_value_t = permcut::solvers::DEFAULT_EXACT_LIMIT)]
    limit: usize,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Standalone gadget: three realizations agree and every maximum cut
    /// satisfies the lemma conclusions.
    Gadget {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        y: usize,
        /// Add one outside vertex adjacent to all of K'.
        #[arg(long)]
        weak: bool,
        #[arg(long, default_value_t = permcut::solvers::DEFAULT_EXACT_LIMIT)]
        limit: usize,
    },
    /// Gadget shapes, link relations and link pairs of a realized reduction.
    Structure(SourceArgs),
    /// A claimed cut: part A by label, B is the rest.
    Cut {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated labels of part A.
        #[arg(long, value_delimiter = ',')]
        part_a: Vec<String>,
        #[arg(long)]
        size: u64,
    },
    /// Counted cut edges of a canonical cut against α1, α2 + 2q'k.
    Formula {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated source vertices (1-based) forming X.
        #[arg(long, value_delimiter = ',')]
        x: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Prop {
    Comparability,
    Permutation,
    Chordal,
    Interval,
    /// no induced 4-cycle
    C4,
}

#[derive(Debug, Args)]
pub struct RecognizeArgs {
    #[arg(long, value_enum)]
    prop: Prop,
    #[command(flatten)]
    input: GraphInput,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Audit report to write.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = RunReport::new(std::env::args().skip(1).collect());
    let start = Instant::now();
    let outcome = commands::run(&cli.command, &mut report);
    report.set_elapsed(start.elapsed());
    if let Err(e) = outcome {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    let json = report.to_json();
    if let Some(path) = &cli.report {
        if let Err(e) = write_atomic(path, json.as_bytes()) {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    }
    print!("{json}");
    for (name, holds) in &report.verdicts {
        eprintln!("{name}: {}", if *holds { "ok" } else { "FAILED" });
    }
    if report.all_hold() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
