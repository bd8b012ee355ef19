use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "nilcayley", version, about = "Exact verification of trace and power Cayley-Hamilton identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification check (or `all` of them) and print a report.
    Verify(VerifyArgs),
    /// Print the k-th right characteristic polynomial of a matrix.
    Charpoly(MatrixArgs),
    /// Print the symmetric determinant of a matrix.
    Sdet(MatrixArgs),
    /// Print the symmetric adjoint, or the k-th right adjoint with `--k`.
    Adjoint(MatrixArgs),
    /// Walk through a few small worked examples.
    Demo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Jennings,
    Fundamental,
    Ch,
    Domokos,
    TraceNilpotency,
    PowerCh,
    CommutatorPowerCh,
    Conjugation,
    IdealNilpotency,
    All,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum LiftArg {
    #[default]
    Canonical,
    Randomized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdealArg {
    DoubleCommutator,
    Commutator,
    Jennings,
}

#[derive(Args, Debug, Clone, Default)]
pub struct CapArgs {
    /// Raise the matrix size cap of the determinant theory (default 5).
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Raise the level cap of the determinant theory (default 4).
    #[arg(long)]
    pub max_k: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    pub check: CheckArg,
    /// Backend: rational | grassmann:M | relfree:M,K,D | utri:T:<backend> | json:PATH.
    #[arg(long)]
    pub backend: Option<String>,
    /// Matrix size for sampled matrices.
    #[arg(long)]
    pub n: Option<usize>,
    /// Lie nilpotency index / level; defaults to the backend's known index.
    #[arg(long)]
    pub k: Option<usize>,
    /// Wrap the backend in t x t upper triangular matrices.
    #[arg(long)]
    pub t: Option<usize>,
    /// Exponent of the power identity or expected ideal nilpotency exponent.
    #[arg(long)]
    pub exponent: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of sampled instances.
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, value_enum, default_value_t = LiftArg::Canonical)]
    pub lift: LiftArg,
    /// Ideal for `ideal-nilpotency`.
    #[arg(long, value_enum)]
    pub ideal: Option<IdealArg>,
    /// Check this matrix instead of sampled ones, e.g. "[[v1,v2],[v3,v4]]".
    #[arg(long)]
    pub matrix: Option<String>,
    /// Rational conjugating matrix for `conjugation`.
    #[arg(long)]
    pub transform: Option<String>,
    /// Extra polynomial factor h for `ch`, in the indeterminate x, e.g. "x + v1".
    #[arg(long)]
    pub h: Option<String>,
    /// Include slow configurations in `verify all`.
    #[arg(long)]
    pub slow: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub caps: CapArgs,
}

#[derive(Args, Debug, Clone)]
pub struct MatrixArgs {
    #[arg(long, default_value = "rational")]
    pub backend: String,
    /// Matrix text, e.g. "[[1,2],[3,4]]".
    #[arg(long)]
    pub matrix: String,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub caps: CapArgs,
}
