//! Command-line front end.
//!
//! ```text
//! nsm validate FILE
//! nsm op --kind union|intersect|complement|transpose [--norm N] [--complement-mode M] A [B] [-o OUT]
//! nsm product --kind and|or [--norm N] A B [-o OUT]
//! nsm decide [--product and|or] [--norm N] [--format table|json] A B
//! ```
//!
//! Exit codes: 0 success, 2 invalid input document, 3 shape mismatch,
//! 4 usage error (bad flags, unreadable files).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::decision::nsm_decide;
use crate::error::Error;
use crate::io::{matrix_to_json, outcome_to_json, outcome_to_table, parse_matrix};
use crate::matrix::NsMatrix;
use crate::norm::NormId;
use crate::product::{product, ProductKind};
use crate::soft_set::ComplementMode;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_SHAPE: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

/// Environment variable overriding [`RunConfig::output_precision`].
pub const PRECISION_ENV: &str = "NSM_PRECISION";

const MAX_PRECISION: usize = 17;

/// Settings shared by the subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub product_kind: ProductKind,
    pub norm: NormId,
    pub complement_mode: ComplementMode,
    /// Decimals used when displaying decision results, `0..=17`.
    pub output_precision: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            product_kind: ProductKind::And,
            norm: NormId::Minmax,
            complement_mode: ComplementMode::OneMinusI,
            output_precision: 4,
        }
    }
}

impl RunConfig {
    /// Applies an `NSM_PRECISION` value, if one is set.
    pub fn with_precision_override(mut self, value: Option<&str>) -> Result<Self, CliError> {
        if let Some(raw) = value {
            let precision: usize = raw.trim().parse().map_err(|_| {
                CliError::Usage(format!("{PRECISION_ENV}={raw:?} is not a non-negative integer"))
            })?;
            if precision > MAX_PRECISION {
                return Err(CliError::Usage(format!(
                    "{PRECISION_ENV}={precision} exceeds the maximum of {MAX_PRECISION}"
                )));
            }
            self.output_precision = precision;
        }
        Ok(self)
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input { path: PathBuf, source: Error },
    Algebra(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Input { source, .. } | CliError::Algebra(source) => match source {
                Error::ShapeMismatch(_) | Error::NotBlockSquare(_) | Error::LengthMismatch { .. } => {
                    EXIT_SHAPE
                }
                Error::UnknownNorm(_) | Error::UnknownComplementMode(_) => EXIT_USAGE,
                _ => EXIT_VALIDATION,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Input { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Algebra(source) => source.fmt(f),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Algebra(e)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "nsm",
    version,
    about = "Neutrosophic soft matrix algebra and min-max-max group decision making"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a matrix document is well formed.
    Validate { file: PathBuf },
    /// Union, intersection, complement or transpose.
    Op {
        #[arg(long, value_enum)]
        kind: OpKind,
        #[arg(long, value_parser = parse_norm)]
        norm: Option<NormId>,
        #[arg(long, value_parser = parse_complement_mode)]
        complement_mode: Option<ComplementMode>,
        a: PathBuf,
        b: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// And-product or Or-product of two matrices.
    Product {
        #[arg(long, value_parser = parse_product_kind)]
        kind: ProductKind,
        #[arg(long, value_parser = parse_norm)]
        norm: Option<NormId>,
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rank the objects of two decision makers' matrices.
    Decide {
        #[arg(long, value_parser = parse_product_kind)]
        product: Option<ProductKind>,
        #[arg(long, value_parser = parse_norm)]
        norm: Option<NormId>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        a: PathBuf,
        b: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OpKind {
    Union,
    Intersect,
    Complement,
    Transpose,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn parse_norm(s: &str) -> Result<NormId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_complement_mode(s: &str) -> Result<ComplementMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_product_kind(s: &str) -> Result<ProductKind, String> {
    s.parse()
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code. `NSM_PRECISION` is read from the environment.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let env = std::env::var(PRECISION_ENV).ok();
    let result = RunConfig::default()
        .with_precision_override(env.as_deref())
        .and_then(|config| execute(cli.command, config, stdout));
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, mut config: RunConfig, stdout: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Validate { file } => {
            let m = load(&file)?;
            emit(stdout, &format!("OK {}×{}\n", m.rows(), m.cols()))
        }
        Command::Op {
            kind,
            norm,
            complement_mode,
            a,
            b,
            output,
        } => {
            config.norm = norm.unwrap_or(config.norm);
            config.complement_mode = complement_mode.unwrap_or(config.complement_mode);
            let left = load(&a)?;
            let result = match (kind, b) {
                (OpKind::Union | OpKind::Intersect, None) => {
                    return Err(CliError::Usage(
                        "union and intersect need two input files".into(),
                    ))
                }
                (OpKind::Complement | OpKind::Transpose, Some(_)) => {
                    return Err(CliError::Usage(
                        "complement and transpose take a single input file".into(),
                    ))
                }
                (OpKind::Union, Some(b)) => {
                    let right = load(&b)?;
                    let set = left
                        .to_soft_set()
                        .union(&right.to_soft_set(), &config.norm.pair())?;
                    NsMatrix::from_soft_set(&set)
                }
                (OpKind::Intersect, Some(b)) => {
                    let right = load(&b)?;
                    let set = left
                        .to_soft_set()
                        .intersection(&right.to_soft_set(), &config.norm.pair())?;
                    NsMatrix::from_soft_set(&set)
                }
                (OpKind::Complement, None) => {
                    NsMatrix::from_soft_set(&left.to_soft_set().complement(config.complement_mode))
                }
                (OpKind::Transpose, None) => left.transpose(),
            };
            write_matrix(&result, output.as_deref(), stdout)
        }
        Command::Product {
            kind,
            norm,
            a,
            b,
            output,
        } => {
            config.product_kind = kind;
            config.norm = norm.unwrap_or(config.norm);
            let (left, right) = (load(&a)?, load(&b)?);
            let result = product(&left, &right, config.product_kind, &config.norm.pair())?;
            write_matrix(&result, output.as_deref(), stdout)
        }
        Command::Decide {
            product,
            norm,
            format,
            a,
            b,
        } => {
            config.product_kind = product.unwrap_or(config.product_kind);
            config.norm = norm.unwrap_or(config.norm);
            let (left, right) = (load(&a)?, load(&b)?);
            let outcome = nsm_decide(&left, &right, config.product_kind, &config.norm.pair())?;
            let text = match format {
                Format::Table => outcome_to_table(&outcome, config.output_precision),
                Format::Json => outcome_to_json(&outcome, config.output_precision),
            };
            emit(stdout, &text)
        }
    }
}

fn load(path: &Path) -> Result<NsMatrix, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

fn write_matrix(m: &NsMatrix, output: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    let text = matrix_to_json(m);
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => emit(stdout, &text),
    }
}

fn emit(stdout: &mut dyn Write, text: &str) -> Result<(), CliError> {
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Usage(format!("cannot write output: {e}")))
}
