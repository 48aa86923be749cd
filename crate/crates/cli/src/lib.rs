//! Command-line front end for springer-cells.

mod commands;
mod output;
pub mod suite;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use output::*;

#[derive(Parser, Debug)]
#[command(name = "springer-cells", version, about = "Springer Schubert cells of two-row Springer fibers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Latex,
    Dot,
}

/// Matching given as arcs, as a B/T word, or both (then they must agree).
#[derive(Args, Debug, Clone)]
pub struct MatchingArgs {
    #[arg(long)]
    pub matching: Option<String>,
    #[arg(long)]
    pub word: Option<String>,
    /// Number of points; defaults to the word length or the largest arc end.
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    /// Size of the first Jordan block.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct OutArgs {
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Shorthand for --format json.
    #[arg(long)]
    pub json: bool,
}

impl OutArgs {
    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List every standard noncrossing matching of a Jordan type.
    Enumerate {
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Convert between a matching and its B/T word.
    Word {
        #[command(flatten)]
        input: MatchingArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Show the cell template of a matching.
    Cell {
        #[command(flatten)]
        input: MatchingArgs,
        /// Shorthand for --format latex.
        #[arg(long)]
        latex: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Cut a set of arcs.
    Cut {
        #[command(flatten)]
        input: MatchingArgs,
        #[arg(long)]
        arcs: String,
        /// Include the label map in table output.
        #[arg(long)]
        labels: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Closure decomposition of a cell.
    Closure {
        #[command(flatten)]
        input: MatchingArgs,
        /// Write a DOT graph to FILE, or to stdout for "-".
        #[arg(long)]
        dot: Option<String>,
        /// Certify every piece with limit curves at random targets.
        #[arg(long)]
        certify: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Build and verify a limit curve for one piece.
    Limit {
        #[command(flatten)]
        input: MatchingArgs,
        #[arg(long, default_value = "")]
        arcs: String,
        /// Comma-separated rationals, one per uncut arc; random if omitted.
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Count Springer flags over a prime field by brute force.
    Fqcount {
        #[arg(long)]
        q: u32,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: suite::Suite,
        #[arg(long = "max-N")]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    /// A verification ran and failed; the report was already printed.
    Failed,
    /// stdout went away, e.g. piped into `head`.
    ClosedOutput,
}

macro_rules! usage_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Usage(e.to_string())
            }
        }
    )*};
}

usage_from!(
    springer_cells::matchcore::MatchError,
    springer_cells::cellgeom::CellError,
    springer_cells::closure::ClosureError,
    springer_cells::oracle::OracleError
);

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            CliError::ClosedOutput
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

fn configure_threads() {
    if let Some(k) = std::env::var("SPRINGER_CELLS_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // a second call in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global();
    }
}

/// Parses argv, runs the command, writes to `out` and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    configure_threads();
    match commands::dispatch(cli.command, out) {
        Ok(()) | Err(CliError::ClosedOutput) => 0,
        Err(CliError::Failed) => 1,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
