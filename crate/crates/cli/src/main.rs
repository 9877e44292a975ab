use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use romankit_cli::commands::{self, exit_code, Outcome, DEFAULT_BOUNDS, EXIT_USAGE};
use romankit_cli::output::OutputFormat;

#[derive(Debug, Parser)]
#[command(
    name = "romankit",
    version,
    about = "Exact generalized binomial coefficients"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a coefficient: roman, knuth, gamma, trivial or q:<rational>.
    Eval {
        scheme: String,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        /// An integer, or comma-separated parts for a multinomial.
        #[arg(allow_hyphen_values = true)]
        k: String,
    },
    /// Print a reference table.
    Table { name: String },
    /// Sweep an identity (or `all`) over a square or cube of integers.
    Verify {
        identity: String,
        #[arg(allow_hyphen_values = true, default_value = DEFAULT_BOUNDS)]
        bounds: String,
        scheme: Option<String>,
        /// Upper end of the corollary's summation length.
        #[arg(long)]
        r_max: Option<i64>,
    },
    /// List places where printed values disagree with the definitions.
    Ledger,
    /// Floating-point Roman factorial of `a`, or the coefficient (a choose b).
    Real {
        #[arg(allow_negative_numbers = true)]
        a: f64,
        #[arg(allow_negative_numbers = true)]
        b: Option<f64>,
    },
}

fn run(cli: &Cli) -> romankit::Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Eval { scheme, n, k } => commands::eval(scheme, *n, k, format),
        Command::Table { name } => commands::table(name, format),
        Command::Verify {
            identity,
            bounds,
            scheme,
            r_max,
        } => commands::verify(identity, bounds, scheme.as_deref(), *r_max, format),
        Command::Ledger => commands::ledger(format),
        Command::Real { a, b } => commands::real(*a, *b, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(err) => {
            eprintln!("romankit: {err}");
            return ExitCode::from(exit_code(&err));
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.text),
        None => std::io::stdout().write_all(outcome.text.as_bytes()),
    };
    if let Err(err) = written {
        eprintln!("romankit: cannot write output: {err}");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(outcome.code)
}
