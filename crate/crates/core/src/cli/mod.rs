//! Command-line front end. `run` parses arguments, dispatches and maps
//! outcomes to exit codes: 0 success, 1 usage, 2 failed check, 3 budget.

mod commands;
pub mod format;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::groups::DEFAULT_BUDGET;
pub use format::Format;

/// Overrides the default element budget when --budget is not given.
pub const BUDGET_ENV: &str = "SZDESCENT_BUDGET";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;
pub const EXIT_SCALE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "szdescent", version, about = "Character tables of B2(q)⋊⟨σ⟩ and Shintani descent to Sz(q)")]
pub struct Cli {
    /// Maximum number of group elements any enumeration may visit.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Sz,
    B2,
    Outer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Orthogonality,
    Chevalley,
    Induction,
    Thm41,
    DigneMichel,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a character table.
    Table {
        kind: TableKind,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Rebuild the outer table from inductions and print the derivation log.
    DeriveOuter {
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Run an exact verification suite.
    Verify {
        check: Check,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// The Shintani class map with Lang witnesses.
    Shintani {
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Frobenius roots of the unipotent characters of Sz(q).
    Roots {
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Families and Fourier matrices.
    Fourier {
        #[arg(long)]
        latex: bool,
    },
    /// All tables and family data at n.
    Export {
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
}

/// Result of a command: text to print and whether every check held.
pub struct Outcome {
    pub output: String,
    pub pass: bool,
}

pub fn budget_from_env(flag: Option<u64>) -> Result<u64, String> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{BUDGET_ENV}={v:?} is not a nonnegative integer")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ScaleExceeded { .. } => EXIT_SCALE,
        Error::InvalidParameter(_) | Error::UnsupportedDegree(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

/// Runs one command line, writing to `out` and `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let budget = match budget_from_env(cli.budget) {
        Ok(b) => b,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    match commands::dispatch(&cli, budget) {
        Ok(o) => {
            let _ = out.write_all(o.output.as_bytes());
            if o.pass {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
