//! Command-line front end for the `apolar` library.
//!
//! Every subcommand is an [`analyses::Analysis`] registered by name; the
//! binary parses arguments into an [`analyses::AnalysisRequest`] and looks
//! the analysis up at runtime.

pub mod analyses;
pub mod hilbert;
pub mod replication;
pub mod report;

use std::ffi::OsString;

use apolar::catalecticant::CatalecticantError;
use apolar::grading::GradingError;
use apolar::inverse_system::PresentationError;
use apolar::poly::PolyError;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use analyses::{default_registry, AnalysisRequest};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Validation(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Parse(_) => CliError::Parse(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<PresentationError> for CliError {
    fn from(e: PresentationError) -> Self {
        match e {
            PresentationError::Poly(p) => p.into(),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<CatalecticantError> for CliError {
    fn from(e: CatalecticantError) -> Self {
        match e {
            CatalecticantError::Poly(p) => p.into(),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<GradingError> for CliError {
    fn from(e: GradingError) -> Self {
        match e {
            GradingError::Invariant(_) | GradingError::RankCriterionMismatch { .. } => CliError::Invariant(e.to_string()),
            GradingError::Presentation(p) => p.into(),
            GradingError::Catalecticant(c) => c.into(),
            other => CliError::Validation(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "apolar", version, about = "Inverse systems of Artin local algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Number of variables.
    #[arg(short = 'n')]
    num_vars: usize,
    /// Dual generators in y1..yn, e.g. "y1^3*y2^2 + y2^4". Put generators
    /// starting with '-' after `--`.
    #[arg(required = true)]
    generators: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert function of A.
    Hilbert {
        #[command(flatten)]
        input: Input,
        /// Also run every other applicable method and compare.
        #[arg(long)]
        check: bool,
        /// inverse-system or catalecticant.
        #[arg(long)]
        method: Option<String>,
    },
    /// Socle type of A.
    Socle {
        #[command(flatten)]
        input: Input,
    },
    /// Catalecticant matrix of order q.
    Delta {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'q')]
        q: usize,
    },
    /// Obstruction matrix for the step removing degree s-p.
    Mmatrix {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'p')]
        p: usize,
    },
    /// Compare the Hilbert function with the compressed one.
    Compressed {
        #[command(flatten)]
        input: Input,
    },
    /// Try to remove all lower-degree parts of the generators.
    Graded {
        #[command(flatten)]
        input: Input,
    },
    /// Replay the pinned worked examples.
    PaperExamples {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn request_from(command: Command) -> (AnalysisRequest, Format) {
    let mut request = AnalysisRequest::default();
    let input = match command {
        Command::Hilbert { input, check, method } => {
            request.command = "hilbert".into();
            request.check = check;
            request.method = method;
            input
        }
        Command::Socle { input } => {
            request.command = "socle".into();
            input
        }
        Command::Delta { input, q } => {
            request.command = "delta".into();
            request.q = Some(q);
            input
        }
        Command::Mmatrix { input, p } => {
            request.command = "mmatrix".into();
            request.p = Some(p);
            input
        }
        Command::Compressed { input } => {
            request.command = "compressed".into();
            input
        }
        Command::Graded { input } => {
            request.command = "graded".into();
            input
        }
        Command::PaperExamples { seed, format } => {
            request.command = "paper-examples".into();
            request.seed = seed;
            return (request, format);
        }
    };
    request.num_vars = input.num_vars;
    request.generators = input.generators;
    (request, input.format)
}

/// Output of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: 1 }
            } else {
                Outcome { stdout: text, stderr: String::new(), code: 0 }
            };
        }
    };
    let (request, format) = request_from(cli.command);
    match default_registry().run(&request) {
        Ok(report) => Outcome {
            stdout: match format {
                Format::Text => report.to_text(),
                Format::Structured => report.to_structured(),
            },
            stderr: String::new(),
            code: 0,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}
