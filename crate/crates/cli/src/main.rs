mod commands;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read config {0}: {1}")]
    Config(String, String),
    #[error(transparent)]
    Compute(#[from] gencheb::Error),
    #[error("i/o error on {0}: {1}")]
    Io(String, std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("non-finite value in output at {0}")]
    NonFinite(String),
    #[error("{0} check(s) failed")]
    ChecksFailed(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Config(..) => 2,
            _ => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "gencheb", version, about = "Orthogonal polynomials on several intervals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// JSON file {"alphas": [...], "betas": [...]}
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Degree or horizon
    #[arg(short = 'n', long = "degree", default_value_t = 24)]
    pub n: usize,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Tolerance for the command's own check (period detection, envelope)
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recurrence coefficients as CSV: n,a_n,b_n,h_n
    Coeffs {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = CoeffMethod::Stieltjes)]
        method: CoeffMethod,
    },
    /// P_n and Q_n at the given points as CSV: x,P_n,Q_n
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long = "x", num_args = 1.., required = true, allow_negative_numbers = true)]
        x: Vec<f64>,
        #[arg(long, value_enum, default_value_t = EvalMethod::Recurrence)]
        method: EvalMethod,
    },
    /// Auxiliary polynomial coefficients and gamma points per degree, JSON
    Aux {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = AuxMethod::Solve)]
        method: AuxMethod,
    },
    /// Charges, periods and mapping polynomials
    Map {
        #[command(subcommand)]
        action: MapAction,
    },
    /// Zeros of P_n as CSV: root,band_index (empty in a gap)
    Zeros {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = ZeroKind::P)]
        method: ZeroKind,
    },
    /// Discriminants of P_2..P_n as CSV: n,D
    Disc {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = DiscMethod::Direct)]
        method: DiscMethod,
    },
    /// Envelope bound for the normalised P_n of a period-K configuration, JSON
    Envelope {
        #[command(flatten)]
        common: Common,
        #[arg(long = "K")]
        k: Option<usize>,
        #[arg(long, default_value_t = 400)]
        points: usize,
    },
    /// Run a verification suite, JSON; exit status 0 iff every check passes
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 20_240_601)]
        seed: u64,
    },
    /// Grid of x, normalised P_n, +envelope, -envelope for plotting, CSV
    PlotData {
        #[command(flatten)]
        common: Common,
        #[arg(long = "K")]
        k: Option<usize>,
        #[arg(long, default_value_t = 400)]
        points: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum MapAction {
    /// Band charges and the detected period
    Detect {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = gencheb::mapping::DEFAULT_KMAX)]
        kmax: usize,
    },
    /// Mapping polynomial M_K with its constraint checks
    Build {
        #[command(flatten)]
        common: Common,
        #[arg(long = "K")]
        k: Option<usize>,
    },
    /// Explicit period-2/3 families: contour samples as CSV, or one member as JSON
    Family {
        #[arg(long = "K")]
        k: usize,
        /// Pick one member instead of sampling the curves
        #[arg(long, value_enum)]
        variant: Option<Variant>,
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
        #[arg(long, default_value_t = 50)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq)]
pub enum CoeffMethod {
    Stieltjes,
    Elliptic,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq)]
pub enum EvalMethod {
    Recurrence,
    Product,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq)]
pub enum AuxMethod {
    Solve,
    Closed,
    Definition,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq)]
pub enum ZeroKind {
    P,
    Q,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq)]
pub enum DiscMethod {
    Direct,
    Formula,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq)]
pub enum Suite {
    Config,
    Acceptance,
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq)]
pub enum Variant {
    /// K = 2: gap (alpha, -alpha)
    Symmetric,
    /// K = 3: two gaps from (alpha, beta)
    General,
    /// K = 3: gaps symmetric about +-1/2
    Mirror,
    /// K = 3: one gap, second gap closed
    ClosedRight,
    /// K = 3: one gap, first gap closed
    ClosedLeft,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
