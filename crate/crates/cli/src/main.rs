//! `cupcap`: homology, cohomology, cup and cap products of finite groupoids,
//! shift-of-finite-type invariants, the `Z^N` cap-of-cup identity and
//! cohomology of two-dimensional Δ-complexes.

mod check;
mod commands;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cupcap::groupoid::{Limits, Ring};

#[derive(Parser, Debug)]
#[command(name = "cupcap", version, about = "Cup and cap products for finite groupoids and tiling complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub config: RunConfig,
}

#[derive(clap::Args, Debug, Clone)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Degree to compute. Without it, `homology` and `cohomology` list degrees 0 to 3.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Coefficient ring: `z` or `z/<k>`.
    #[arg(long, global = true, default_value = "z", value_parser = parse_ring)]
    pub ring: Ring,
    /// Seed for the randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest number of composable strings enumerated in one degree.
    #[arg(long, global = true, default_value_t = Limits::default().max_strings as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn parse_ring(s: &str) -> Result<Ring, String> {
    s.parse()
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Homology `H_n(G)` of a groupoid file.
    Homology {
        #[arg(long)]
        file: PathBuf,
    },
    /// Cohomology `H^n(G)` of a groupoid file.
    Cohomology {
        #[arg(long)]
        file: PathBuf,
    },
    /// Cup product of two cochain files.
    Cup {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Cap product of a chain file with a cochain file.
    Cap {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        chain: PathBuf,
        #[arg(long)]
        cochain: PathBuf,
    },
    /// Cap products of all basis classes `H_n × H^m → H_{n-m}`, with `n` from `--degree`.
    Pairing {
        #[arg(long)]
        file: PathBuf,
        /// Cochain degree `m`.
        #[arg(long)]
        by: usize,
    },
    /// Map induced by a groupoid homomorphism in degree `--degree`.
    Induced {
        #[arg(long)]
        domain: PathBuf,
        #[arg(long)]
        codomain: PathBuf,
        /// Homomorphism file: `{"map": {"g": "h", ...}}`.
        #[arg(long)]
        map: PathBuf,
        /// Report the contravariant map on cohomology instead of homology.
        #[arg(long)]
        cohomology: bool,
    },
    /// Homology of a shift of finite type and the cap with the winding cocycle.
    Sft {
        /// Adjacency matrix as a JSON array of rows.
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        matrix: Option<String>,
        /// Adjacency file: `{"vertices": [...], "matrix": [[...]]}`.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Compares both sides of the `Z^N` cap-of-cup identity point by point.
    ZnVerify { file: PathBuf },
    /// Cohomology of a Δ-complex file.
    DeltaCohomology { file: PathBuf },
    /// Cup products of the declared `H^1` cocycles in the declared `H^2` basis.
    DeltaCup { file: PathBuf },
    /// Runs the chain-level identity suite on a groupoid file.
    Check {
        #[arg(long)]
        file: PathBuf,
        /// Random samples per identity.
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

/// Bad input or a computation that could not start. Failed verifications
/// are reports with `passed == false` instead.
#[derive(Debug)]
pub struct CliError(pub String);

/// Output of a command: text lines, a JSON document and a verdict.
pub struct Report {
    pub text: String,
    pub json: serde_json::Value,
    pub passed: bool,
}

impl Report {
    pub fn ok(text: String, json: serde_json::Value) -> Self {
        Report { text, json, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, &cli.config) {
        Ok(report) => {
            let body = match cli.config.format {
                Format::Text => report.text,
                Format::Json => serde_json::to_string_pretty(&report.json).expect("JSON values serialize") + "\n",
            };
            // ignore a closed pipe
            let _ = io::stdout().lock().write_all(body.as_bytes());
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
