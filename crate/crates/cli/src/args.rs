use clap::{Args, Parser, Subcommand, ValueEnum};

/// Spectral toolkit for the 2D oscillator with a linear field in a circular
/// box: variational spectra, perturbation expansions, and limit checks.
#[derive(Debug, Parser)]
#[command(name = "oscbox", version, max_term_width = 100)]
pub struct Cli {
    /// Optional key=value config file; command-line flags override it.
    #[arg(long, global = true)]
    pub config: Option<std::path::PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write the table here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,

    /// Significant digits to print (also raises the working precision when
    /// above 30).
    #[arg(long, global = true)]
    pub digits: Option<u32>,

    /// Compare against the built-in reference values and fail on mismatch;
    /// also strips timestamps from JSON output for reproducible diffs.
    #[arg(long, global = true, default_value_t = false)]
    pub golden: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Poly,
    Gauss,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lowest merged eigenvalues at one (r0, λ) point or over a λ range.
    Spectrum(SpectrumArgs),
    /// Per-N convergence table for one parity sector.
    Converge(ConvergeArgs),
    /// Perturbation coefficients: level table, r0 grid, or partial sums.
    Pt(PtArgs),
    /// Small-box (Bessel) and large-box (separable) limit checks.
    Limits(LimitsArgs),
    /// Data series behind the eigenvalue-vs-λ figure: variational points
    /// and second-order perturbation curves.
    Figure(FigureArgs),
    /// Reproduce a built-in reference table by id (1-7).
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    /// Dimensionless box radius.
    #[arg(long)]
    pub r0: Option<String>,
    /// Dimensionless field strength.
    #[arg(long)]
    pub lambda: Option<String>,
    /// λ sweep as start:stop:step (overrides --lambda).
    #[arg(long, value_name = "A:B:STEP")]
    pub lambda_range: Option<String>,
    /// Explicit λ values, comma separated (overrides both).
    #[arg(long, value_name = "LIST")]
    pub lambda_list: Option<String>,
    #[arg(long, value_enum)]
    pub basis: Option<BasisArg>,
    /// Sector to solve; `both` merges them.
    #[arg(long, value_enum)]
    pub parity: Option<ParityArg>,
    /// Basis truncation order (defaults to a converged choice for r0).
    #[arg(long)]
    pub n: Option<u32>,
    /// Number of levels.
    #[arg(long)]
    pub count: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    #[arg(long)]
    pub r0: Option<String>,
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long, value_enum)]
    pub basis: Option<BasisArg>,
    /// Sector under study (even or odd).
    #[arg(long, value_enum)]
    pub parity: Option<ParityArg>,
    /// Range of truncation orders, e.g. 2..10.
    #[arg(long, value_name = "LO..HI")]
    pub n_range: Option<String>,
    #[arg(long)]
    pub count: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PtArgs {
    #[arg(long)]
    pub r0: Option<String>,
    /// How many of the lowest levels to expand.
    #[arg(long)]
    pub levels: Option<usize>,
    /// Expansion order: coefficients through λ^(2·order).
    #[arg(long)]
    pub order: Option<u32>,
    /// Basis truncation order.
    #[arg(long)]
    pub n: Option<u32>,
    /// Emit the E0/E2 grid over this r0 list (e.g. 1..5 or 1,2,3).
    #[arg(long, value_name = "RANGE")]
    pub grid: Option<String>,
    /// Expand only the ground state.
    #[arg(long, default_value_t = false)]
    pub ground: bool,
    /// Keep this many sum-over-states terms (with --show-partials).
    #[arg(long)]
    pub terms: Option<usize>,
    /// Show the individual second-order terms, largest first.
    #[arg(long, default_value_t = false)]
    pub show_partials: bool,
}

#[derive(Debug, Args)]
pub struct LimitsArgs {
    /// Which limit to check.
    #[arg(long, default_value = "both")]
    pub which: String,
    /// Radius for the small-box check.
    #[arg(long)]
    pub r0: Option<String>,
    /// Levels for the small-box check.
    #[arg(long)]
    pub levels: Option<usize>,
    /// Radii for the large-box grid (comma list).
    #[arg(long, value_name = "LIST")]
    pub r0_list: Option<String>,
    /// Field strengths for the large-box grid (comma list).
    #[arg(long, value_name = "LIST")]
    pub lambda_list: Option<String>,
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    #[arg(long)]
    pub r0: Option<String>,
    /// λ sweep as start:stop:step; defaults to the reference grid
    /// 0.05 then 0.5..6 in steps of 0.5.
    #[arg(long, value_name = "A:B:STEP")]
    pub lambda_range: Option<String>,
    /// Number of levels in both series.
    #[arg(long)]
    pub levels: Option<usize>,
    /// Perturbation order for the curve series.
    #[arg(long)]
    pub order: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Reference table id, 1-7.
    #[arg(long)]
    pub id: u32,
}
