use clap::{Args, Parser, Subcommand, ValueEnum};
use ptrig_core::bounds::TheoremId;
use ptrig_core::FnId;
use std::path::PathBuf;

/// Generalized p-trigonometric and p-hyperbolic functions.
#[derive(Debug, Parser)]
#[command(name = "ptrig", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format (default: csv for `table`, text otherwise)
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Significant digits
    #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u8).range(6..=17))]
    pub prec: u8,
    /// Write to this file instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print π_p = 2π / (p sin(π/p))
    Pi {
        #[arg(long, allow_hyphen_values = true)]
        p: f64,
        /// Also compute 2 arcsin_p(1) by quadrature
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Evaluate one function at one point
    Eval {
        #[arg(long = "fn")]
        func: FnId,
        #[arg(long, allow_hyphen_values = true)]
        p: f64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Tabulate a function on a uniform grid
    Table {
        #[arg(long = "fn")]
        func: FnId,
        #[arg(long, allow_hyphen_values = true)]
        p: f64,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Check a double inequality on a grid
    Verify {
        /// 3.1 .. 3.7
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long, allow_hyphen_values = true)]
        p: f64,
        #[arg(long, allow_hyphen_values = true)]
        endpoint: Option<f64>,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        /// Run even when p is below the hypothesis (non-certifying)
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Print the best exponent constants
    Constants {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long, allow_hyphen_values = true)]
        p: f64,
        #[arg(long, allow_hyphen_values = true)]
        endpoint: Option<f64>,
        #[arg(long)]
        force: bool,
        /// Add the empirical endpoint limits along the ε ladder
        #[arg(long)]
        sharpness: bool,
        #[command(flatten)]
        output: Output,
    },
}
