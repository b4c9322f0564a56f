mod commands;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use horrocks_core::shapes::{ClassFilter, Mode};

use table::Format;

#[derive(Parser, Debug)]
#[command(name = "horrocks", version, about = "Spectra, minimal Horrocks monads and monad verification on P^3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Md, global = true)]
    format: Format,
    /// Write to a file instead of stdout.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassArg {
    Positive,
    #[value(alias = "non_negative", alias = "non-negative")]
    Nonnegative,
    Negative,
}

impl From<ClassArg> for ClassFilter {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::Positive => ClassFilter::Positive,
            ClassArg::Nonnegative => ClassFilter::NonNegative,
            ClassArg::Negative => ClassFilter::Negative,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    #[value(alias = "paper_table")]
    Strict,
    Permissive,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strict => Mode::Strict,
            ModeArg::Permissive => Mode::Permissive,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List admissible spectra of length c2.
    Spectra {
        #[arg(long)]
        c2: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Candidate monad shapes for every spectrum of length c2.
    Shapes {
        #[arg(long)]
        c2: i64,
        #[arg(long, value_enum, default_value = "positive")]
        class: ClassArg,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
        /// Restrict to one spectrum, e.g. r0r1^2.
        #[arg(long)]
        spectrum: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Verify explicit monads read from JSON instance files.
    Verify {
        /// Instance files, or names of bundled fixtures such as p4.
        #[arg(required = true)]
        paths: Vec<String>,
        /// Saturation bound.
        #[arg(long, env = "MONAD_DMAX", default_value_t = horrocks_core::verify::DEFAULT_DMAX)]
        dmax: u32,
        /// Reduce the instance to GF(p) first ("rational" keeps it exact).
        #[arg(long)]
        field: Option<String>,
        /// Print only these checks (comma separated).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Family dimensions of homotopy-free shapes.
    Dims {
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        a: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        b: Vec<i64>,
        /// The nine tabulated families with c2 in {6, 8}.
        #[arg(long, alias = "table5", conflicts_with_all = ["a", "b"])]
        tabulated: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Extend a shape by a summand O(r-1) and a middle pair (requires u + v = 2r - 1).
    Transform {
        /// A row label such as P3.
        #[arg(long, conflicts_with_all = ["a", "b", "fixture"])]
        shape: Option<String>,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        a: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        b: Vec<i64>,
        /// Take the shape of an instance file.
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        u: i64,
        #[arg(long)]
        v: i64,
        #[command(flatten)]
        out: Output,
    },
}

const EXIT_USAGE: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
