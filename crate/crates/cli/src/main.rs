mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sedenion_core::slice::DEFAULT_SEED;

/// Sedenion algebra, zero divisors, slice geometry and star-series convergence domains.
#[derive(Parser, Debug)]
#[command(name = "sedenion", version, propagate_version = true)]
pub struct Cli {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Emit JSON instead of text where a command supports it.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the basis multiplication table, or verify it against the reference.
    Table {
        /// Compare the generated level-4 table with the reference, entry by entry.
        #[arg(long)]
        verify: bool,
        /// Cayley-Dickson level (0 = reals .. 4 = sedenions).
        #[arg(long, default_value_t = 4)]
        level: u8,
        /// Print comma-separated values.
        #[arg(long)]
        csv: bool,
    },
    /// Multiply two elements.
    Mul { left: String, right: String },
    /// Kernel of left multiplication by an element.
    Kernel { element: String },
    /// Whether an element is a zero divisor; exits 1 when it is not.
    ZdCheck { element: String },
    /// Whether two slice units form a hyper-solution; exits 1 when they do not.
    /// Without arguments a random hyper pair is drawn.
    Hyper { j1: Option<String>, j2: Option<String> },
    /// Polar coordinates of a slice unit; draws a random one when neither an
    /// element nor `--alpha`/`--theta` is given.
    Polar {
        #[arg(conflicts_with_all = ["alpha", "theta"], allow_hyphen_values = true)]
        element: Option<String>,
        #[command(flatten)]
        coords: PolarCoords,
    },
    /// The companion curve of a hyper-solution: a point at `--theta`, a
    /// membership test for `--member` (exits 1 when not a member), or
    /// `--samples` points as CSV rows `theta,c0..c15`.
    Cker {
        j1: String,
        j2: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        member: Option<String>,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Convergence radii of a coefficient sequence around a center.
    Radii(SeriesArgs),
    /// Position of a point relative to the convergence domain.
    Contains {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Evaluate the series at a point.
    Eval {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value_t = 200)]
        max_terms: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Compare predicted membership with evaluation over a polar grid of one slice.
    Scan {
        #[command(flatten)]
        series: SeriesArgs,
        /// Slice unit whose upper half-plane is scanned.
        #[arg(long, allow_hyphen_values = true)]
        slice: String,
        #[command(flatten)]
        grid: ScanGrid,
        #[arg(long, default_value_t = 400)]
        max_terms: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Margin below which samples are not scored.
        #[arg(long, default_value_t = 0.05)]
        band: f64,
        /// Write per-sample CSV here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Classify four representative slices on a polar grid and write region
    /// CSV (and optionally SVG) into the output directory.
    Figure {
        #[command(flatten)]
        series: SeriesArgs,
        /// Samples per polar axis.
        #[arg(long, default_value_t = 100)]
        grid: usize,
        /// Largest sampled modulus.
        #[arg(long, default_value_t = 4.0)]
        extent: f64,
        #[arg(long, env = "SEDENION_OUT_DIR", default_value = ".")]
        out_dir: PathBuf,
        /// Also write `figure.svg`.
        #[arg(long)]
        svg: bool,
    },
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Center `p` of the series.
    #[arg(long, default_value = "e1", allow_hyphen_values = true)]
    pub center: String,
    /// Coefficient sequence: a JSON file path, inline JSON, or `example`.
    #[arg(long, default_value = "example")]
    pub seq: String,
}

/// A slice unit given as `ψ(alpha, theta, frame)`.
#[derive(Args, Debug)]
pub struct PolarCoords {
    #[arg(long, requires = "theta", allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, requires = "alpha", allow_hyphen_values = true)]
    pub theta: Option<f64>,
    /// Orthonormal imaginary octonion pair `i1,i2`.
    #[arg(long, default_value = "e1,e2", allow_hyphen_values = true)]
    pub frame: String,
}

#[derive(Args, Debug)]
pub struct ScanGrid {
    #[arg(long, default_value_t = 0.2)]
    pub r_min: f64,
    #[arg(long, default_value_t = 4.0)]
    pub r_max: f64,
    #[arg(long, default_value_t = 0.2)]
    pub r_step: f64,
    /// Angles evenly spaced in `[0, π]`; a single angle means `π/2`.
    #[arg(long, default_value_t = 1)]
    pub angles: usize,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Malformed input; exit status 2.
    Usage(String),
    /// A requested check came out negative; exit status 1.
    Verification(String),
}

impl From<sedenion_core::Error> for Failure {
    fn from(err: sedenion_core::Error) -> Self {
        Failure::Usage(err.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure::Usage(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
    }
}
