//! Command-line front end: argument parsing, command dispatch, result cache,
//! fixture corpus and verification suites.

pub mod cache;
mod commands;
pub mod fixtures;
pub mod record;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "specht", version, about = "Elementary divisors of Gram matrices of Specht modules")]
pub struct Cli {
    /// Directory for cached brute-force results.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Elementary divisors of the Gram matrix of S^lambda.
    Ediv {
        partition: String,
        /// Print the valuations of the divisors at this prime.
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a closed form.
    Formula {
        #[command(subcommand)]
        which: Formula,
    },
    /// Jantzen layer dimensions read off the divisors.
    Jantzen {
        partition: String,
        #[arg(long)]
        prime: u64,
    },
    /// Diagonal-hook quantities of a symmetric partition.
    Symmetric { partition: String },
    /// Parity test for a unimodular lattice in S^{(n-m,m)}.
    Unimodular {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        /// Test one prime instead of every prime up to n.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Solutions x <= B of 2y^2 - x^2 = 1 and 3z^2 - x^2 = 2, one "x y z" per line.
    Pell {
        #[arg(long)]
        bound: u64,
    },
    /// Kernel-intersection check for (2^h, 1^{n-2h}).
    Conm5 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        h: usize,
    },
    /// Compare closed forms against brute force.
    Verify {
        /// One of the suite names, or `all`.
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        /// Also print reference-only fixtures.
        #[arg(long)]
        include_reference: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum Formula {
    /// Two-row shape (n-m, m).
    TwoRow {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        prime: u64,
    },
    /// Hook (n-l, 1^l).
    Hook {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        prime: Option<u64>,
    },
    /// (2^2, 1^{n-4}).
    TwoColumn {
        #[arg(long)]
        n: usize,
    },
    /// Primes p > n - lambda_1.
    LargePrime {
        partition: String,
        #[arg(long)]
        prime: u64,
    },
    /// Jantzen sum of a Schaper family head.
    SchaperFamily {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        prime: u64,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match commands::dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
