//! `locprof`: exact local profiles, extremal constants and universality
//! checks from the command line.
//!
//! Exit codes: 0 success, 1 input error, 2 verification failure,
//! 3 resource refusal, 4 certified non-universal.

mod commands;
mod error;
mod report;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;
use locprof_core::Kind;
use source::Source;

/// Environment variable overriding the default work cap.
pub const WORK_CAP_ENV: &str = "LOCPROF_WORK_CAP";

#[derive(Parser)]
#[command(name = "locprof", version, about = "Local profiles of graphs and tournaments")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on predicted elementary operations for enumerative kernels.
    #[arg(long, global = true, env = WORK_CAP_ENV)]
    work_cap: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct InputArgs {
    /// Graph or tournament in the text format.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Construction, e.g. `circular:1001` or `clique-union:0.4,0.4:500`.
    #[arg(long)]
    construct: Option<String>,
    /// JSON construction spec, e.g. `{"family": "tyomkyn", "k": 3}`.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Require the input to be of this kind.
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
}

impl InputArgs {
    fn source(&self) -> Result<Source, CliError> {
        Source::from_flags(self.input.as_ref(), self.construct.as_deref(), self.spec.as_ref())
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum KindArg {
    Graph,
    Tournament,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Graph => Kind::Graph,
            KindArg::Tournament => Kind::Tournament,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Goodman,
    TournamentInequalities,
    Identities,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WitnessArg {
    P5,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Circular,
    Tyomkyn,
    ExtremalRho,
    RandomGraph,
    RandomTournament,
}

#[derive(Subcommand)]
enum Command {
    /// Counts and densities of induced l-vertex types.
    Profile {
        #[command(flatten)]
        input: InputArgs,
        /// Subobject order (default 3 for graphs, 4 for tournaments).
        #[arg(long)]
        l: Option<usize>,
        /// Estimate from this many uniform samples instead of counting.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also enumerate every subset and require exact agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// The extremal constants and the case table, or the grid oracle.
    SolveExtremal {
        /// Print the case table (the default).
        #[arg(long)]
        cases: bool,
        /// Run the grid-search oracle.
        #[arg(long)]
        grid: bool,
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, default_value_t = 0.005)]
        step: f64,
        #[arg(long, default_value_t = 0.01)]
        band: f64,
    },
    /// Check an inequality or identity suite.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        suite: SuiteArg,
    },
    /// Decide (exhaustive) or probe (sampled) l-universality.
    Universal {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        l: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also search for a specific induced witness.
        #[arg(long, value_enum)]
        witness: Option<WitnessArg>,
    },
    /// One CSV row of densities and slacks per family member.
    Sweep {
        #[arg(value_enum)]
        family: Family,
        /// `start:end:step` over n (k for tyomkyn), inclusive.
        #[arg(long)]
        range: String,
        /// Edge probability for random-graph.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Clique and anticlique counts in random induced subgraphs on
    /// ceil(2^(k/4)) vertices.
    Fox {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a construction in the text format.
    Generate {
        #[command(flatten)]
        input: InputArgs,
        /// Tournaments in matrix form.
        #[arg(long)]
        matrix: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List the isomorphism classes on l vertices.
    Classes {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        l: usize,
    },
}

fn run(cli: Cli) -> Result<report::Report, CliError> {
    let cap = cli.work_cap.unwrap_or(locprof_core::DEFAULT_WORK_CAP);
    match cli.command {
        Command::Profile { input, l, samples, seed, oracle } => commands::profile(&input, l, samples, seed, oracle, cap),
        Command::SolveExtremal { cases, grid, r, step, band } => commands::solve_extremal(cases || !grid, grid, r, step, band),
        Command::Verify { input, suite } => commands::verify(&input, suite),
        Command::Universal { input, l, mode, samples, seed, witness } => {
            commands::universal(&input, l, mode, samples, seed, witness, cap)
        }
        Command::Sweep { family, range, p, seed, output } => commands::sweep(family, &range, p, seed, output.as_deref()),
        Command::Fox { input, k, trials, seed } => commands::fox(&input, k, trials, seed, cap),
        Command::Generate { input, matrix, output } => commands::generate(&input, matrix, output.as_deref()),
        Command::Classes { kind, l } => commands::classes(kind.into(), l),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("input error: --threads {t}: {e}");
            return ExitCode::from(error::EXIT_INPUT);
        }
    }
    let json = cli.json;
    let start = Instant::now();
    match run(cli) {
        Ok(report) => {
            if json {
                let value = report.to_json(start.elapsed());
                println!("{}", serde_json::to_string_pretty(&value).expect("report serialises"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.exit)
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
