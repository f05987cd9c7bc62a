use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxlab::maximal::MaximalKind;
use maxlab::measure::rational::{parse_rational, Rational};

#[derive(Debug, Parser)]
#[command(name = "maxlab", version, about = "Exact maximal functions of step functions on the line")]
pub struct Cli {
    /// Write results into this directory instead of standard output.
    #[arg(long, global = true)]
    pub output_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Also write SVG plots (requires --output-dir).
    #[arg(long, global = true)]
    pub plot: bool,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    TwoSided,
    Plus,
    Minus,
}

impl From<Kind> for MaximalKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::TwoSided => MaximalKind::TwoSided,
            Kind::Plus => MaximalKind::OneSidedPlus,
            Kind::Minus => MaximalKind::OneSidedMinus,
        }
    }
}

pub fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s)
}

#[derive(Debug, Args)]
pub struct Inputs {
    /// Measure JSON file, or `lebesgue`.
    #[arg(long)]
    pub measure: String,

    /// Step function JSON file.
    #[arg(long)]
    pub function: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximal function on a mesh.
    Eval {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum, default_value_t = Kind::TwoSided)]
        kind: Kind,
        /// Comma-separated mesh points.
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["from", "to", "steps"])]
        mesh: Option<String>,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        from: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        to: Option<Rational>,
        #[arg(long, default_value_t = 100)]
        steps: usize,
    },
    /// L^p norm of the function, or of its maximal function.
    Norm {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum)]
        maximal: Option<Kind>,
    },
    /// ||M f||_p / ||f||_p.
    Ratio {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Checks t * mu({M+ f > t}) against the integral of f over that set.
    SunriseCheck {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        t: Rational,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Builds a disjoint covering of {f > t} by balls of average t.
    Cover {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        t: Rational,
        #[arg(long)]
        unimodal: bool,
        #[arg(long)]
        verify: bool,
        #[arg(long = "L", default_value_t = 1)]
        overlap: usize,
    },
    /// Verifies a covering family read from JSON.
    Verify {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        family: PathBuf,
        #[arg(long = "L", default_value_t = 1)]
        overlap: usize,
    },
    /// Searches for step functions with a small maximal ratio.
    SearchMinRatio {
        /// Measure JSON file, or `lebesgue`.
        #[arg(long, default_value = "lebesgue")]
        measure: String,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 6)]
        pieces: usize,
        #[arg(long, default_value_t = 2000)]
        budget: usize,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
    },
    /// Reproduces a worked example.
    Reproduce {
        #[command(subcommand)]
        example: Example,
    },
    /// Lower-bound constants for the maximal ratio.
    Constants {
        #[arg(long)]
        p: f64,
        #[arg(long = "L", default_value_t = 1)]
        overlap: u32,
    },
    /// Compares searched minima across exponent pairs (report only).
    Holder {
        #[arg(long, default_value = "lebesgue")]
        measure: String,
        #[arg(long, value_delimiter = ',', required = true)]
        p_list: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        r_list: Vec<f64>,
        #[arg(long, default_value_t = 4)]
        pieces: usize,
        #[arg(long, default_value_t = 400)]
        budget: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Example {
    /// Atoms 1/(t-1) at 0 and t^(i-1) at i, with the indicator of 0.
    #[command(name = "discrete-atoms", alias = "example-4.1")]
    DiscreteAtoms {
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        t: Rational,
        #[arg(long)]
        p: f64,
        #[arg(long = "N", default_value_t = 40)]
        atoms: usize,
    },
    /// One atom of weight t at 1 over Lebesgue measure on (0, inf).
    #[command(name = "one-atom", alias = "example-final")]
    OneAtom {
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        t: Rational,
        #[arg(long)]
        p: f64,
    },
}
