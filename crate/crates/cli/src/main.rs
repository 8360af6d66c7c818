//! `bidiag`: command-line front end. Every command prints JSON (or CSV for matrix dumps)
//! and exits nonzero on error.

mod commands;
mod emit;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "bidiag", version, about = "Bidiagonal factor chains: condition numbers, solves, special matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the result to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
}

/// Where the matrix under study comes from.
#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Factor-file JSON describing a chain of bidiagonal factors.
    #[arg(long, value_name = "FILE", conflicts_with = "gallery")]
    pub factors: Option<PathBuf>,

    /// Gallery matrix: NAME N [PARAMS...], e.g. `--gallery kms 6 0.3`.
    #[arg(long, num_args = 2.., value_names = ["NAME", "N"], allow_negative_numbers = true)]
    pub gallery: Option<Vec<String>>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleOp {
    Inverse,
    Kinf,
    Det,
    TnCheck,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reproduce a table: pascal_solve, hilbert_cond, pascal_cond, or all.
    Experiment {
        table: String,
        /// Include wall-clock runtime in the report (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
    },
    /// Build a gallery matrix and dump it, its factor chain, or its TN parameters.
    Gallery {
        name: String,
        n: usize,
        /// Name-specific parameters (KMS rho; first row of the Toeplitz example).
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
        /// Emit the factor chain as a factor file.
        #[arg(long, conflicts_with = "tn")]
        chain: bool,
        /// Emit the TN parameter matrix.
        #[arg(long)]
        tn: bool,
        /// Exact rational values instead of doubles.
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Infinity-norm condition number of a chain or TN factorization.
    Cond {
        #[command(flatten)]
        source: Source,
        /// TN parameter file.
        #[arg(long, value_name = "FILE", conflicts_with_all = ["factors", "gallery", "random_tn"])]
        tn: Option<PathBuf>,
        /// Random TN matrix of this order, drawn from --seed.
        #[arg(long, value_name = "N", conflicts_with_all = ["factors", "gallery"])]
        random_tn: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exact rational evaluation through the oracle.
        #[arg(long)]
        exact: bool,
    },
    /// Solve A x = b through the chain, reporting both error budgets.
    Solve {
        #[command(flatten)]
        source: Source,
        /// Right-hand side: JSON array or one value per line. Random +-1 from --seed if absent.
        #[arg(long, value_name = "FILE")]
        rhs: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// The chain represents A^{-1}; x is formed by multiplication.
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        exact: bool,
    },
    /// Singular values of the first factor of the chain by Golub-Kahan bisection.
    Svd {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = bidiag::svals::DEFAULT_TOL)]
        tol: f64,
    },
    /// f(B) for a single bidiagonal factor: exp, inv, or monomial:p.
    Func {
        function: String,
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Exact reference computations on a JSON matrix (array of rows).
    Oracle {
        #[arg(value_enum)]
        op: OracleOp,
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Exit status for a report whose computed pass flag is false.
const EXIT_FAILED_CHECK: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Experiment { table, timing } => commands::experiment(&table, timing),
        Command::Gallery { name, n, params, chain, tn, exact, format } => commands::gallery(&name, n, &params, chain, tn, exact, format),
        Command::Cond { source, tn, random_tn, seed, exact } => commands::cond(&source, tn.as_deref(), random_tn, seed, exact),
        Command::Solve { source, rhs, seed, inverse, exact } => commands::solve(&source, rhs.as_deref(), seed, inverse, exact),
        Command::Svd { source, tol } => commands::svd(&source, tol),
        Command::Func { function, source, exact, format } => commands::func(&function, &source, exact, format),
        Command::Oracle { op, matrix, format } => commands::oracle(op, &matrix, format),
    };
    match outcome {
        Ok(out) => {
            let mut text = out.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let written = match &cli.output {
                Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::FAILURE
                }
                Ok(()) if !out.pass => ExitCode::from(EXIT_FAILED_CHECK),
                Ok(()) => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
