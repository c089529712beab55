use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "cauchy-beta", version, about = "Beta-like integrals over the simplex, by closed form and by quadrature")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    #[value(alias = "integral")]
    Quad,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one pendant at one point.
    Eval {
        /// euler | mult | add1 | add2 | log1 | log2 | sine
        #[arg(long)]
        family: String,
        /// Comma-separated coordinates, e.g. 3,3
        #[arg(long, allow_hyphen_values = true)]
        args: String,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        /// Relative tolerance of the quadrature.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Tabulate a pendant over a lattice as CSV.
    Tabulate {
        #[arg(long)]
        family: String,
        /// Axis range NAME=START:STOP:STEP, once per variable.
        #[arg(long = "range", required = true, allow_hyphen_values = true)]
        ranges: Vec<String>,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        #[arg(long)]
        tol: Option<f64>,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare closed form and integral on seeded quasi-random samples.
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 2)]
        arity: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// First-kind additive coefficient c_k with a rational hint.
    Coeff {
        #[arg(long)]
        k: i64,
    },
    /// Least-squares search for a Cauchy-quotient representation.
    Fit {
        #[arg(long)]
        target: String,
        /// exp | mult | add | log
        #[arg(long)]
        class: String,
        /// LO:HI:N
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value_t = 500)]
        iters: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value_t = 1e-3)]
        damping: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}
