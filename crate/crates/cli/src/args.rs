use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "partlab",
    version,
    about = "Exact restricted partition counts, bounds and inequality scans"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QpMethod {
    /// Interpolation from DP values.
    Fit,
    /// Direct tuple sum (limited by a tuple budget).
    Cnt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    LeadingTerm,
    FourParts,
    ThreeTerm,
    StablePart,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Parts, comma separated; repeated values are distinct colors.
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_negative_numbers = true
    )]
    pub parts: Vec<i64>,
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print p_A(n, k).
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: u64,
        /// Directory holding cached partition tables.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Write n, p(n), Δ(n) and its sign for 2 <= n <= n_max as CSV.
    DeltaCsv {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n_max: u64,
        /// Append a floating-point approximation of Δ(n).
        #[arg(long)]
        approx: bool,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Quasi-polynomial coefficients per residue class.
    Qp {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "fit")]
        method: QpMethod,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// σ coefficients, leading term and polynomial parts.
    Sigma {
        #[command(flatten)]
        common: Common,
        /// Highest σ index (default: k).
        #[arg(long)]
        max: Option<usize>,
    },
    /// Sandwich envelopes and their constants.
    Bounds {
        #[command(flatten)]
        common: Common,
        /// Only this envelope; failing hypotheses then exit with status 1.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        /// Sub-multiset size for the stable-part envelope.
        #[arg(long)]
        j: Option<usize>,
    },
    /// Bessenrodt–Ono and log-concavity thresholds.
    Thresholds {
        #[command(flatten)]
        common: Common,
    },
    /// Whether the inequalities hold eventually, with witnesses.
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Scan p(a)p(b) > p(a+b) for 1 <= b <= a <= max.
    ScanBo {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max: u64,
        /// Only report pairs with b >= FROM.
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Exit with status 2 if any violation is reported.
        #[arg(long)]
        assert: bool,
    },
    /// Scan p(n)^2 > (1 + 1/(u n^2))^e p(n+1)p(n-1) on [lo, hi].
    ScanLogc {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lo: u64,
        #[arg(long)]
        hi: u64,
        /// Strengthening parameter, e.g. 1 or 1/3.
        #[arg(long)]
        u: Option<String>,
        /// Exponent on the strengthening factor (default 1 when --u is given).
        #[arg(long)]
        e: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Exit with status 2 if any violation is reported.
        #[arg(long)]
        assert: bool,
        /// Exit with status 2 unless there are no violations in [N, hi].
        #[arg(long, value_name = "N")]
        assert_start: Option<u64>,
    },
}
