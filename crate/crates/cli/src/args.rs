use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Parser, Debug)]
#[command(name = "jue", version, about = "Exact JUE correlators and triple monotone Hurwitz numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format [default: json]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// TOML file with keys max_weight, max_r, threads, format
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Largest partition weight accepted (default 6); also the sweep range of `verify --suite`
    #[arg(long, global = true)]
    pub max_weight: Option<u32>,

    /// Largest number of transpositions enumerated (default 10)
    #[arg(long, global = true)]
    pub max_r: Option<u32>,

    /// Worker threads for the parallel parts
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Add elapsed_ms to the output record
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Plain,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact correlator as a rational function of N, alpha, beta
    Correlator(CorrelatorArgs),
    /// Triple monotone Hurwitz numbers
    Hurwitz(HurwitzArgs),
    /// Compare the correlator expansion with Hurwitz sums, or run a check suite
    Verify(VerifyArgs),
    /// Coefficients of N^(2-2g) of the rescaled correlator
    Expand(ExpandArgs),
}

#[derive(Args, Debug)]
pub struct CorrelatorArgs {
    /// Powers k1,k2,... of the traces
    #[arg(long, required_unless_present = "mixed")]
    pub powers: Option<String>,
    /// pos for tr X^k, neg for tr X^-k
    #[arg(long, default_value = "pos")]
    pub sign: String,
    #[arg(long)]
    pub connected: bool,
    /// Specialize variables, e.g. N=1,alpha=3,beta=2
    #[arg(long)]
    pub numeric: Option<String>,
    /// Connected mixed correlator, e.g. pos=1,2,neg=1,one=3 (one=k is tr (1-X)^k)
    #[arg(long, conflicts_with_all = ["powers", "sign"])]
    pub mixed: Option<String>,
}

#[derive(Args, Debug)]
pub struct HurwitzArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long, required_unless_present = "table")]
    pub mu: Option<String>,
    #[arg(long, required_unless_present = "table")]
    pub nu: Option<String>,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub genus: i64,
    #[arg(long)]
    pub connected: bool,
    /// Strictly increasing larger elements instead of weakly increasing
    #[arg(long)]
    pub strict: bool,
    /// Sweep all mu, nu of the same weight
    #[arg(long, conflicts_with_all = ["mu", "nu"])]
    pub table: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Analytic against Schur correlators, every partition up to the weight (default 5)
    Routes,
    /// Lax equation at infinity, zero and one
    Lax,
    /// Genus expansion against Hurwitz sums, every partition up to the weight (default 4)
    Genus,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, required_unless_present = "suite")]
    pub lambda: Option<String>,
    #[arg(long, default_value = "pos")]
    pub sign: String,
    #[arg(long, default_value_t = 0)]
    pub gmax: i64,
    #[arg(long)]
    pub connected: bool,
    #[arg(long, value_enum, conflicts_with = "lambda")]
    pub suite: Option<Suite>,
    /// Order of the Lax check
    #[arg(long, default_value_t = 6)]
    pub order: usize,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[arg(long)]
    pub powers: String,
    #[arg(long, default_value = "pos")]
    pub sign: String,
    #[arg(long, default_value_t = 0)]
    pub gmax: i64,
    #[arg(long)]
    pub connected: bool,
}
