use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tropcrit_cli::commands::limits_from_env;
use tropcrit_cli::error::{exit, CliError};
use tropcrit_cli::report::{input_schema, result_schema};
use tropcrit_cli::{run, CommandName, MatroidDocument, Options};

/// Tropical critical points of affine matroids.
#[derive(Parser)]
#[command(name = "tropcrit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Beta invariant and characteristic polynomial.
    Beta(Common),
    /// Critical points for one weight vector.
    Critical(Common),
    /// Compare beta, the basis construction and the flag-pair oracle.
    Verify(Common),
    /// Divisibility of the tautological classes on every chamber.
    Taut(Common),
    /// Print a JSON schema.
    Schema {
        #[arg(value_enum, default_value = "result")]
        kind: SchemaKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemaKind {
    Input,
    Result,
}

#[derive(Args)]
struct Common {
    /// Matroid document (JSON).
    file: PathBuf,
    /// Weights on the non-special elements, e.g. `1,10,100`, or `auto`.
    #[arg(long)]
    w: Option<String>,
    /// Use the exhaustive flag-pair search.
    #[arg(long)]
    oracle: bool,
    /// Random weight vectors for `verify`.
    #[arg(long, default_value_t = 3)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn execute(name: CommandName, args: Common) -> Result<u8, CliError> {
    let path = args.file.display().to_string();
    let text = std::fs::read_to_string(&args.file).map_err(|source| CliError::Io { path, source })?;
    let doc = MatroidDocument::from_json(&text)?;
    let opts = Options {
        w: args.w,
        oracle: args.oracle,
        samples: args.samples,
        seed: args.seed,
        limits: limits_from_env()?,
    };
    let outcome = run(name, &doc, &opts)?;
    let json = serde_json::to_string_pretty(&outcome.document)?;
    match args.out {
        Some(out) => std::fs::write(&out, json + "\n").map_err(|source| CliError::Io {
            path: out.display().to_string(),
            source,
        })?,
        None => print_stdout(&json)?,
    }
    Ok(outcome.exit_code)
}

/// Prints to standard output; a closed pipe is not an error.
fn print_stdout(text: &str) -> Result<(), CliError> {
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(CliError::Io {
            path: "<stdout>".into(),
            source: e,
        }),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, args) = match cli.command {
        Command::Beta(a) => (CommandName::Beta, a),
        Command::Critical(a) => (CommandName::Critical, a),
        Command::Verify(a) => (CommandName::Verify, a),
        Command::Taut(a) => (CommandName::Taut, a),
        Command::Schema { kind } => {
            let schema = match kind {
                SchemaKind::Input => input_schema(),
                SchemaKind::Result => result_schema(),
            };
            let json = serde_json::to_string_pretty(&schema).expect("schema serializes");
            return match print_stdout(&json) {
                Ok(()) => ExitCode::from(exit::SUCCESS),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(e.exit_code())
                }
            };
        }
    };
    match execute(name, args) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
