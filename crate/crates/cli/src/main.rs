mod commands;
mod config;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::FileConfig;
use crate::output::Format;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Domain(aci_core::Error),
    Io(String),
    /// A cross-check disagreed.
    Verify(String),
}

impl From<aci_core::Error> for CliError {
    fn from(e: aci_core::Error) -> Self {
        match e {
            aci_core::Error::Inconsistent(s) => CliError::Verify(s),
            other => CliError::Domain(other),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(s) | CliError::Io(s) => f.write_str(s),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Verify(s) => write!(f, "verification failed: {s}"),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verify(_) => 2,
            _ => 1,
        }
    }
}

/// Gröbner bases, initial ideals and Lefschetz tests for
/// I = (x1^m1, ..., xn^mn, (x1 + ... + xn)^k).
#[derive(Parser, Debug)]
#[command(name = "aci-gb", version)]
pub struct Cli {
    /// TOML file with default values for the flags below.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file (atomically) instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Args, Debug, Clone)]
pub struct IdealArgs {
    /// Number of variables; optional check against the length of --m.
    #[arg(long)]
    pub n: Option<usize>,
    /// Exponents as `3,2,2,3` or `eq:m:n`.
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub k: Option<u32>,
}

#[derive(Args, Debug, Clone)]
pub struct OrderArgs {
    /// One-based variable ranking, largest first, e.g. `2,1,3`.
    #[arg(long)]
    pub ranking: Option<String>,
    /// `grevlex` or `grlex`.
    #[arg(long)]
    pub order: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    G,
    Motzkin,
    Riordan,
    Catalan,
    SCatalan,
    Spin,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis (closed form, or Buchberger over F_p with --char).
    Gb {
        #[command(flatten)]
        ideal: IdealArgs,
        #[command(flatten)]
        order: OrderArgs,
        /// Compute over F_p with the Buchberger engine.
        #[arg(long = "char")]
        characteristic: Option<u64>,
    },
    /// Minimal generators of the initial ideal.
    Init {
        #[command(flatten)]
        ideal: IdealArgs,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Critical monomials grouped by last variable, and the surviving pure powers.
    Crit {
        #[command(flatten)]
        ideal: IdealArgs,
    },
    /// Hilbert series of R/P and R/I with the socle degrees.
    Hilbert {
        #[command(flatten)]
        ideal: IdealArgs,
    },
    /// Integer sequences.
    Seq {
        #[arg(long, value_enum)]
        family: Family,
        /// For `g`: exponents whose last entry repeats forever. For `s-catalan`: m = s + 1.
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        k: Option<u32>,
        /// Twice the spin, for `spin`.
        #[arg(long)]
        sigma2: Option<u32>,
        /// Last index.
        #[arg(long, default_value_t = 10)]
        max: usize,
    },
    /// Weak Lefschetz property over F_p.
    Wlp {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        /// Comma list of threshold, rank, initideal.
        #[arg(long)]
        routes: Option<String>,
    },
    /// Cross-check closed forms against the oracles over a parameter grid.
    Verify {
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_m: Option<u32>,
        #[arg(long)]
        max_k: Option<u32>,
    },
    /// Rank of multiplication by a power of the linear form over F_p.
    Rank {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<String>,
        #[arg(long)]
        p: Option<u64>,
        /// Source degree.
        #[arg(long)]
        d: u32,
        /// Power of the linear form.
        #[arg(long, default_value_t = 1)]
        e: u32,
    },
    /// Lattice path of a monomial, with the red line for --k.
    Render {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        monomial: String,
    },
}

fn init_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("ACI_GB_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Input(format!("ACI_GB_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Input(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    init_threads()?;
    let file = match &cli.config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    let format = match (cli.format, &file.format) {
        (Some(f), _) => Some(f),
        (None, Some(s)) => Some(Format::parse(s)?),
        (None, None) => None,
    };
    let out = cli.out.clone().or_else(|| file.out.as_ref().map(PathBuf::from));
    let text = commands::dispatch(&cli.cmd, &file, format)?;
    output::emit(&text.body, out.as_deref())?;
    match text.failure {
        Some(why) => Err(CliError::Verify(why)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let msg = e.render().to_string();
            eprintln!("{}", msg.lines().next().unwrap_or("invalid arguments"));
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
