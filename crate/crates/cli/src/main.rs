mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use srtriple::exact::{parse_rational, Rational};

#[derive(Parser, Debug)]
#[command(name = "srtriple", version, about = "Exact checks for the inertial-motion algebra and its Poincaré/dS/AdS triple")]
pub struct Cli {
    /// Curvature radius; sets λ = 1/l².
    #[arg(long, global = true, value_parser = rational_arg, conflicts_with = "lambda", allow_hyphen_values = true)]
    pub l: Option<Rational>,

    /// λ directly (overrides the radius).
    #[arg(long, global = true, value_parser = rational_arg, allow_hyphen_values = true)]
    pub lambda: Option<Rational>,

    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,

    #[arg(long, global = true, default_value_t = 100)]
    pub samples: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// JSON matrix of rational strings: 5×5 for `act`, 4×4 Lorentz for `transform`.
    #[arg(long, global = true)]
    pub matrix_file: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the 24 basis generators with their components.
    Basis,
    /// Decompose [A, B] in the 24-basis.
    Bracket { a: String, b: String },
    /// Structure table of a named subalgebra.
    Table {
        /// iso13, so14, so23, im4, gl4, poincare2, cartanM or lorentz
        algebra: String,
    },
    /// Run a verification suite.
    Verify { suite: String },
    /// Apply the dS/AdS map sending A to the origin.
    Transform {
        /// ds or ads
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Timelike, null or spacelike separation of two points.
    Classify {
        kind: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Embed a chart point on the dS/AdS hyperboloid.
    Embed {
        kind: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Act with the projective matrix from --matrix-file on a point.
    Act {
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// Killing check of generators against a metric; defaults to its isometries.
    Killing { kind: String, generators: Vec<String> },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
