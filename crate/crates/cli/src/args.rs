use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use junta_core::lp::DEFAULT_LP_MAX_DEGREE;

#[derive(Debug, Parser)]
#[command(
    name = "junta",
    version,
    about = "Exact bounds on relevant variables of low-degree Boolean functions"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Decimal places for rounded-up decimals.
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=60), global = true)]
    pub digits: u32,

    /// Worker threads for LP scans and the verification suite (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// LP upper bounds b(d) on block sensitivity.
    BsTable(BsTableArgs),
    /// W[cap(d)][d] for every d up to the depth.
    WTable(WArgs),
    /// Head, tail and total of the W* bound.
    WStar(WArgs),
    /// The bound obtained without block-sensitivity caps.
    Baseline(BaselineArgs),
    /// Every measure of one truth table.
    Analyze(AnalyzeArgs),
    /// Exhaustive check of the inequalities over all functions of small arity.
    Verify(VerifyArgs),
    /// Re-validate a file of LP witnesses and certificates.
    LpCheck(LpCheckArgs),
}

#[derive(Debug, Args)]
pub struct BsTableArgs {
    #[arg(long, default_value_t = DEFAULT_LP_MAX_DEGREE, value_parser = clap::value_parser!(u32).range(1..))]
    pub dmax: u32,

    /// Allow --dmax above the default ceiling.
    #[arg(long)]
    pub allow_slow: bool,

    /// Write every verdict (one JSON record per line) to this file.
    #[arg(long)]
    pub persist: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct LpSource {
    /// Load verified LP records (from `bs-table --persist`) instead of solving.
    #[arg(long)]
    pub lp_records: Option<PathBuf>,

    /// Largest degree with LP caps; higher degrees use d².
    #[arg(long, default_value_t = DEFAULT_LP_MAX_DEGREE, value_parser = clap::value_parser!(u32).range(1..))]
    pub lp_max_degree: u32,
}

#[derive(Debug, Args)]
pub struct WArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub depth: u32,

    /// Block-sensitivity cap strategy.
    #[arg(long, default_value = "lp")]
    pub caps: String,

    /// Drop the min(·, d/2) term from the recursion.
    #[arg(long)]
    pub no_half_degree: bool,

    #[command(flatten)]
    pub lp: LpSource,
}

#[derive(Debug, Args)]
pub struct BaselineArgs {
    /// Largest depth searched for the minimum.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    pub depth: u32,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Truth table (`n:BITS` or `n:0xHEX`) or a file containing one.
    #[arg(long)]
    pub input: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Arity enumerated exhaustively.
    #[arg(long, default_value_t = 4)]
    pub n: usize,

    /// Run only these checks (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<String>,

    #[command(flatten)]
    pub lp: LpSource,
}

#[derive(Debug, Args)]
pub struct LpCheckArgs {
    /// Record file to validate.
    #[arg(long)]
    pub input: PathBuf,
}
