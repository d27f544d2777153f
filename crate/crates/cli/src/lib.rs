//! The `monodromy` command-line tool.
//!
//! Exit codes: 0 success or equivalent, 1 failed check or inequivalent,
//! 2 unknown (budget exhausted), 3 usage or input error.

mod commands;
mod files;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use files::{CertificateFile, ContextSpec, FactorizationFile, MoveRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "monodromy",
    version,
    about = "Hurwitz equivalence, mapping class words and van Kampen groups"
)]
struct Cli {
    /// Worker threads for search and hom counting (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
struct SearchFlags {
    /// Node expansion budget.
    #[arg(long, env = "MONODROMY_BUDGET", default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    /// Allow simultaneous conjugation (by the context's generators unless
    /// --conjugators is given).
    #[arg(long)]
    conjugate: bool,

    /// Comma-separated conjugator words; implies --conjugate.
    #[arg(long, value_delimiter = ',')]
    conjugators: Vec<String>,

    /// Allow cyclic rotation of the factor tuple.
    #[arg(long)]
    rotate: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a factorization or fibration file, or replay a certificate.
    Verify {
        file: PathBuf,
        /// Treat FILE as a certificate and replay it.
        #[arg(long)]
        replay: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide Hurwitz equivalence of two factorizations within a budget.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
        /// Inputs are fibration files; compare them up to Hurwitz moves and
        /// simultaneous conjugation.
        #[arg(long)]
        kas: bool,
        /// Where to write the certificate of an equivalent verdict.
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerate the orbit of a factorization.
    Orbit {
        file: PathBuf,
        #[command(flatten)]
        search: SearchFlags,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Presentation and fingerprint of a curve complement group.
    Vankampen {
        file: PathBuf,
        /// Degrees of the symmetric groups to count homomorphisms into.
        #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 4])]
        ks: Vec<usize>,
        /// Regenerate a cuspidal input before building the presentation.
        #[arg(long)]
        regenerate: bool,
        /// Maximum number of Tietze generator eliminations.
        #[arg(long, default_value_t = 64)]
        effort: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Fiber sum of two fibrations, gluing by PSI.
    Fibersum {
        first: PathBuf,
        second: PathBuf,
        /// Gluing mapping class, as an mcg word body (default: identity).
        #[arg(long, default_value = "")]
        psi: String,
        /// Write the resulting fibration here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Coxeter element of a chain of twist curves.
    Coxeter {
        #[arg(long)]
        genus: usize,
        /// Comma-separated chain indices in 1..=2g+1.
        #[arg(long, value_delimiter = ',', required = true)]
        chain: Vec<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Evaluate the braid and mapping class group relators in every
    /// representation.
    Relators {
        #[arg(long)]
        genus: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let target: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n as usize).build() {
            Ok(pool) => pool.install(|| commands::dispatch(&cli.command)),
            Err(e) => Err(anyhow::anyhow!("cannot start worker pool: {e}")),
        },
        None => commands::dispatch(&cli.command),
    };
    match result {
        Ok(outcome) => {
            let _ = out.write_all(outcome.output.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}
