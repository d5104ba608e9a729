//! `polind`: polarization and nullcone computations from the command line.
//!
//! [`run`] parses an argument vector, executes one command and returns the
//! exit status together with the text destined for stdout and stderr, so
//! the binary and the tests share a single code path.

mod commands;
mod report;
mod scenarios;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use polind_core::groups::{DEFAULT_GROUP_ORDER_CAP, DEFAULT_MONOMIAL_CAP};
use polind_core::polarization::DEFAULT_SPAN_PRODUCT_CAP;
use polind_core::random::DEFAULT_SEED;
use polind_core::Caps;

pub use report::{Check, Report, Status};

pub const TOOL: &str = "polind";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_CAP_EXCEEDED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "polind", version, about = "Polarizations of invariants and nullcone certificates")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "POLIND_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Largest finite group that may be enumerated.
    #[arg(long, global = true, env = "POLIND_CAP_GROUP_ORDER", default_value_t = DEFAULT_GROUP_ORDER_CAP,
          value_parser = positive)]
    cap_group_order: usize,

    /// Largest number of generator products spanned in one multidegree.
    #[arg(long, global = true, env = "POLIND_CAP_SPAN_PRODUCTS", default_value_t = DEFAULT_SPAN_PRODUCT_CAP,
          value_parser = positive)]
    cap_span_products: usize,

    /// Largest number of monomials enumerated in one multidegree.
    #[arg(long, global = true, env = "POLIND_CAP_MONOMIALS", default_value_t = DEFAULT_MONOMIAL_CAP,
          value_parser = positive)]
    cap_monomials: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("caps must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Split a polynomial on one copy into its polarizations on `copies` copies.
    Polarize {
        poly_file: PathBuf,
        #[arg(long)]
        copies: usize,
    },
    /// Dimensions of the invariants of a finite group on several copies.
    InvariantDims {
        group_file: PathBuf,
        #[arg(long)]
        copies: usize,
        #[arg(long)]
        max_degree: u32,
    },
    /// Compare invariant dimensions with the polarization algebra, degree by degree.
    Compare {
        group_file: PathBuf,
        #[arg(long)]
        copies: usize,
        #[arg(long)]
        max_degree: u32,
    },
    /// Decide whether a polynomial lies in the algebra generated by a list.
    Membership { poly_file: PathBuf, gens_file: PathBuf },
    /// Nullcone membership tests.
    Nullcone {
        #[command(subcommand)]
        which: NullconeCommand,
    },
    /// Run a packaged certificate scenario.
    Certify { scenario: Scenario },
}

#[derive(Subcommand, Debug)]
enum NullconeCommand {
    /// A vector of a diagonal torus module, written `1,0,-2/3`.
    Torus {
        module_file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// A binary form.
    Binary { form_file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Scenario {
    Dm,
    So5,
    Sl3,
    Torus,
    #[value(name = "sl2-r1")]
    Sl2R1,
}

/// Failure to produce a report at all.
#[derive(Debug)]
pub(crate) enum CliError {
    Input(String),
    Cap(String),
}

impl From<polind_core::Error> for CliError {
    fn from(e: polind_core::Error) -> Self {
        match e {
            polind_core::Error::CapExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub(crate) type CliResult<T> = Result<T, CliError>;

/// Everything a run produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub(crate) struct Config {
    pub seed: u64,
    pub caps: Caps,
    pub command: Vec<String>,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_PASS };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Outcome { code, stdout, stderr };
        }
    };
    let config = Config {
        seed: cli.seed,
        caps: Caps {
            group_order: cli.cap_group_order,
            span_products: cli.cap_span_products,
            monomials: cli.cap_monomials,
        },
        command: argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
    };
    let result = match &cli.command {
        Command::Polarize { poly_file, copies } => commands::polarize(&config, poly_file, *copies),
        Command::InvariantDims {
            group_file,
            copies,
            max_degree,
        } => commands::invariant_dims(&config, group_file, *copies, *max_degree),
        Command::Compare {
            group_file,
            copies,
            max_degree,
        } => commands::compare(&config, group_file, *copies, *max_degree),
        Command::Membership { poly_file, gens_file } => commands::membership(&config, poly_file, gens_file),
        Command::Nullcone {
            which: NullconeCommand::Torus { module_file, vector },
        } => commands::nullcone_torus(&config, module_file, vector),
        Command::Nullcone {
            which: NullconeCommand::Binary { form_file },
        } => commands::nullcone_binary(&config, form_file),
        Command::Certify { scenario } => match scenario {
            Scenario::Dm => scenarios::dm(&config),
            Scenario::So5 => scenarios::so5(&config),
            Scenario::Sl3 => scenarios::sl3(&config),
            Scenario::Torus => scenarios::torus(&config),
            Scenario::Sl2R1 => scenarios::sl2_r1(&config),
        },
    };
    match result {
        Ok(report) => {
            let code = if report.overall == Status::Pass { EXIT_PASS } else { EXIT_CHECK_FAILED };
            let stdout = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let (code, kind, message) = match e {
                CliError::Input(m) => (EXIT_INPUT_ERROR, "input", m),
                CliError::Cap(m) => (EXIT_CAP_EXCEEDED, "cap", m),
            };
            let stdout = match cli.format {
                Format::Text => String::new(),
                Format::Json => {
                    let doc = serde_json::json!({
                        "tool": TOOL,
                        "version": VERSION,
                        "command": config.command,
                        "error": { "kind": kind, "message": message },
                    });
                    format!("{}\n", serde_json::to_string_pretty(&doc).expect("error serializes"))
                }
            };
            Outcome {
                code,
                stdout,
                stderr: format!("error: {message}\n"),
            }
        }
    }
}
