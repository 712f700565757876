//! `fundpoly`: command-line front end for the fundamental-polytope toolkit.
//!
//! JSON goes to `--output` (or stdout); human-readable summaries go to
//! stderr. Exit codes: 0 success, 10 nontrivial pseudocodeword from
//! `decode`, 2 input error, 3 size guard exceeded, 1 anything else.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fundpoly::code::io::MatrixFormat;
use fundpoly::Rational;

#[derive(Parser, Debug)]
#[command(
    name = "fundpoly",
    version,
    about = "Exact LP decoding and pseudocodeword analysis"
)]
pub struct Cli {
    /// Worker threads for parallel loops (1 runs everything sequentially).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Parity-check matrix file.
    #[arg(long)]
    pub input: PathBuf,

    /// `dense` (first line "r n", then rows of 0/1) or `alist`.
    #[arg(long, default_value = "dense")]
    pub format: MatrixFormat,

    /// Lower the code-length guard.
    #[arg(long)]
    pub max_n: Option<usize>,

    /// Lower the check-degree guard.
    #[arg(long)]
    pub max_degree: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate all vertices and check their structure.
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
    },
    /// LP-decode one cost vector, read from a file or sampled from a BSC
    /// with the zero codeword transmitted.
    Decode {
        #[command(flatten)]
        input: InputArgs,
        /// File of n whitespace-separated rationals `p/q`.
        #[arg(long, conflicts_with = "p")]
        lambda: Option<PathBuf>,
        /// BSC crossover probability `P/Q`, `0 < p < 1/2`.
        #[arg(long)]
        p: Option<Rational>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Zero-codeword BSC trials comparing LP with brute-force ML decoding.
    Trials {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        p: Rational,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write one CSV row per trial.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Generate a cycle code in dense format.
    Gen {
        /// Number of columns (random mode).
        #[arg(long, required_unless_present = "cycles")]
        n: Option<usize>,
        /// Number of rows (random mode).
        #[arg(long, required_unless_present = "cycles")]
        r: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Disjoint cycles instead, given as check counts, e.g. `3,3`.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["n", "r"])]
        cycles: Option<Vec<usize>>,
    },
    /// Print the explicit constraint system of the polytope.
    Constraints {
        #[command(flatten)]
        input: InputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
