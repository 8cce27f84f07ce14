//! Command-line front end over the JSON interchange format. Exit codes:
//! `0` a verdict was computed (whatever it is), `1` invalid input, `2` an
//! internal assertion failed (a theorem-violating state, which includes
//! harness counterexamples).

pub mod files;

mod commands;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::Error;

#[derive(Parser)]
#[command(
    name = "homlift",
    version,
    about = "Exact lifting obstructions for bounded chain complexes over a field"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structurally validate a problem file.
    Validate { path: PathBuf },
    /// Build the obstruction, decide its triviality, and emit a certificate.
    Chi {
        path: PathBuf,
        /// Write a re-checkable certificate here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide the lifting-up-to-homotopy relation directly.
    Decide {
        path: PathBuf,
        /// Write a re-checkable certificate here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively enumerate witnesses on a tiny F_2 instance.
    Oracle {
        path: PathBuf,
        /// Maximum number of unknown bits to enumerate.
        #[arg(long, default_value_t = 24)]
        cap_bits: u32,
    },
    /// Run the randomized theorem harness.
    Harness {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        count: usize,
        /// Degree window width of generated complexes.
        #[arg(long, default_value_t = 4)]
        width: usize,
        /// Maximum dimension per degree.
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// A prime, or "rational".
        #[arg(long, default_value = "2")]
        field: String,
        /// Plant a lift in every instance (default: every fourth).
        #[arg(long)]
        plant: bool,
        /// Force alpha to be a planted quasi-isomorphism.
        #[arg(long)]
        quasi_iso: bool,
    },
    /// Re-check a certificate against its problem file.
    Verify { problem: PathBuf, certificate: PathBuf },
}

/// Parses arguments, runs the command, and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Validate { path } => commands::validate(&path),
        Command::Chi { path, out } => commands::chi(&path, out.as_deref()),
        Command::Decide { path, out } => commands::decide(&path, out.as_deref()),
        Command::Oracle { path, cap_bits } => commands::oracle(&path, cap_bits),
        Command::Harness { seed, count, width, dim, field, plant, quasi_iso } => {
            commands::harness(seed, count, width, dim, &field, plant, quasi_iso)
        }
        Command::Verify { problem, certificate } => commands::verify(&problem, &certificate),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => 2,
                _ => 1,
            }
        }
    }
}
