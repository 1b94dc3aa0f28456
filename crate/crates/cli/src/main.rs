//! `antimagic`: build, label, verify and brute-force local antimagic
//! labelings from the command line.
//!
//! Exit codes: 0 success, 1 I/O or malformed input, 2 failed verification
//! or a design that does not exist, 3 parameters no construction covers.

mod commands;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use antimagic_core::Error;

#[derive(Parser, Debug)]
#[command(
    name = "antimagic",
    version,
    about = "Local antimagic labelings from magic-type arrays"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Dimensions, given positionally (`7 11 4`) or as `--m 7 --n 11 --r 4`.
#[derive(Args, Debug, Clone, Default)]
pub struct Dims {
    #[arg(value_name = "DIM")]
    pub dims: Vec<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    /// Write the document here instead of stdout. A run manifest is
    /// written next to it as `<out>.manifest.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructKind {
    MagicSquare,
    MagicRectangle,
    Nmr,
    Ka,
    Qka,
    Mrs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build an array: magic-square N, magic-rectangle A B, nmr A B, ka A B,
    /// qka M R, mrs A B C.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        #[command(flatten)]
        dims: Dims,
        #[command(flatten)]
        output: Output,
    },
    /// Label a graph family (kmn M N, rkmn M N R, k1mn M N) with the
    /// construction covering it, or label the arrays in a document.
    Label {
        family: Option<String>,
        #[command(flatten)]
        dims: Dims,
        /// Use this recipe instead of the one the bound table picks.
        #[arg(long)]
        recipe: Option<String>,
        /// Read the arrays to label from a document written by `construct`
        /// or `label --matrices`.
        #[arg(long, conflicts_with_all = ["family", "recipe"])]
        from: Option<PathBuf>,
        /// Also write the family or B matrix the labeling came from.
        #[arg(long)]
        matrices: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Re-check a document from its entries or labels alone.
    Verify { path: PathBuf },
    /// Vertex weights of the labeling a document describes.
    Weights {
        path: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Known bounds on the local antimagic chromatic number.
    Bounds {
        family: String,
        #[command(flatten)]
        dims: Dims,
    },
    /// Exact local antimagic chromatic number by exhaustive search
    /// (kmn, rkmn, k1mn or path K).
    Oracle {
        family: String,
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value_t = antimagic_core::oracle::DEFAULT_MAX_EDGES)]
        max_edges: usize,
        /// Give up after this many labelings and report what was found.
        #[arg(long)]
        max_labelings: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// Convert a document to CSV.
    Export {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failed run: what to print and which exit code to use.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn io(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn scope(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Format(_) | Error::InvalidParameters(_) | Error::ShapeMismatch(_) => 1,
            Error::NonexistentDesign { .. } | Error::Construction(_) => 2,
            Error::OutOfScope(_) | Error::BudgetExceeded { .. } => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub type Outcome = Result<(), Failure>;

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Construct { kind, dims, output } => commands::construct(kind, &dims, &output),
        Command::Label {
            family,
            dims,
            recipe,
            from,
            matrices,
            output,
        } => match from {
            Some(path) => commands::label_document(&path, &output),
            None => {
                let family = family.ok_or_else(|| Failure::io("label needs a family or --from"))?;
                commands::label(
                    &family,
                    &dims,
                    recipe.as_deref(),
                    matrices.as_deref(),
                    &output,
                )
            }
        },
        Command::Verify { path } => commands::verify(&path),
        Command::Weights { path, output } => commands::weights(&path, &output),
        Command::Bounds { family, dims } => commands::bounds(&family, &dims),
        Command::Oracle {
            family,
            dims,
            max_edges,
            max_labelings,
            output,
        } => commands::oracle(&family, &dims, max_edges, max_labelings, &output),
        Command::Export { path, out } => commands::export(&path, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
