//! `sasaki`: extremal Sasaki metrics on S³-bundles over Riemann surfaces, from the
//! command line.

mod args;
mod commands;
mod output;
mod scan;

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use args::{isolation_width, parse_bundle, Format, JoinArgs, RayArgs};
use sasaki_core::{Bundle, Rational};

/// Exit status 2: the input was rejected. Exit status 1: an internal check failed.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(sasaki_core::Error),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) if !e.is_internal() => 2,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<sasaki_core::Error> for CliError {
    fn from(e: sasaki_core::Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Debug, Parser)]
#[command(name = "sasaki", version, about = "Exact extremality analysis for Sasakian joins over Riemann surfaces")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Contact invariants, diffeomorphism type and (with a ray) the quotient orbifold
    Classify {
        #[command(flatten)]
        join: JoinArgs,
        #[command(flatten)]
        ray: RayArgs,
    },
    /// The joins realizing D_k on one bundle, one row per m
    Bouquet {
        #[arg(long)]
        g: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, value_parser = parse_bundle)]
        bundle: Bundle,
    },
    /// The constant scalar curvature ray and its regularity
    Csc {
        #[command(flatten)]
        join: JoinArgs,
    },
    /// Extremality of a ray (the regular ray when no ray is given)
    Extremal {
        #[command(flatten)]
        join: JoinArgs,
        #[command(flatten)]
        ray: RayArgs,
    },
    /// Decomposition of the slopes c = v2/v1 by extremality verdict
    Region {
        #[command(flatten)]
        join: JoinArgs,
    },
    /// Transverse and Sasaki scalar curvature on a ray
    Curvature {
        #[command(flatten)]
        join: JoinArgs,
        #[command(flatten)]
        ray: RayArgs,
    },
    /// Joins and rays with Sasaki scalar curvature identically -4
    NullScalar {
        #[arg(long)]
        g: u64,
        /// Largest l searched
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
    /// Regular-ray verdicts, CSC roots and scalar coefficients over a grid, as CSV
    Scan {
        #[arg(long, default_value_t = 1)]
        g_min: u64,
        #[arg(long)]
        g_max: u64,
        #[arg(long, default_value_t = 1)]
        k_min: u64,
        #[arg(long)]
        k_max: u64,
        /// Output file (standard output when absent)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn run(cli: Cli, width: Option<&Rational>) -> Result<String, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Classify { join, ray } => commands::classify(&join.resolve()?, ray.resolve()?, format),
        Command::Bouquet { g, k, bundle } => commands::bouquet(g, k, bundle, format),
        Command::Csc { join } => commands::csc(&join.resolve()?, width, format),
        Command::Extremal { join, ray } => commands::extremal(&join.resolve()?, ray.resolve()?, format),
        Command::Region { join } => commands::region(&join.resolve()?, width, format),
        Command::Curvature { join, ray } => commands::curvature(&join.resolve()?, ray.resolve()?, format),
        Command::NullScalar { g, bound } => commands::null_scalar(g, bound, format),
        Command::Scan { g_min, g_max, k_min, k_max, out, jobs } => {
            let grid = scan::Grid { g_min, g_max, k_min, k_max };
            let rows = scan::scan_rows(&grid, width, jobs)?;
            match out {
                Some(path) => {
                    let file = File::create(&path)
                        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", path.display())))?;
                    scan::write_csv(&rows, BufWriter::new(file))?;
                    Ok(String::new())
                }
                None => {
                    let mut buf = Vec::new();
                    scan::write_csv(&rows, &mut buf)?;
                    String::from_utf8(buf).map_err(|e| CliError::Io(e.to_string()))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env_width = std::env::var("SASAKI_ISOLATION_WIDTH").ok();
    let result = isolation_width(env_width.as_deref()).and_then(|w| run(cli, w.as_ref()));
    match result {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
