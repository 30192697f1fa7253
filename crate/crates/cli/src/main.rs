use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use tsat_cli::output::Format;
use tsat_cli::run::EXIT_INTERNAL;

/// Exact computer algebra over Q[t]_(t): Groebner bases, t-adic
/// saturation, strength decompositions, and height computations.
#[derive(Parser)]
#[command(name = "tsat", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    #[value(name = "json-like-structured")]
    JsonLikeStructured,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json | FormatArg::JsonLikeStructured => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a job file (ring + named objects + one command).
    Run {
        /// Path to the job document.
        job: PathBuf,
        /// Output format.
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Write the output document here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in property suites.
    Selftest {
        /// Seed for the randomized suites.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // a panic is an internal invariant violation: exit 3
    let result = std::panic::catch_unwind(move || -> (String, i32, Option<PathBuf>) {
        match cli.command {
            Cmd::Run { job, format, out } => {
                let text = match std::fs::read_to_string(&job) {
                    Ok(t) => t,
                    Err(e) => {
                        return (
                            format!("error: cannot read {}: {e}\n", job.display()),
                            tsat_cli::run::EXIT_INPUT_ERROR,
                            out,
                        )
                    }
                };
                let (rendered, code) = tsat_cli::execute(&text, format.into());
                (rendered, code, out)
            }
            Cmd::Selftest { seed, format, out } => {
                let seed_line = seed
                    .map(|s| format!("selftest seed {s}\n"))
                    .unwrap_or_else(|| "selftest\n".to_string());
                let (rendered, code) = tsat_cli::execute(&seed_line, format.into());
                (rendered, code, out)
            }
        }
    });
    match result {
        Ok((rendered, code, out)) => {
            // not-applicable outcomes are still result documents; only
            // input errors go to stderr
            if code == tsat_cli::run::EXIT_INPUT_ERROR {
                eprint!("{rendered}");
            } else if let Err(e) = emit(&rendered, out.as_ref()) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(EXIT_INTERNAL as u8);
            }
            ExitCode::from(code as u8)
        }
        Err(_) => {
            eprintln!("error: internal invariant violation");
            ExitCode::from(EXIT_INTERNAL as u8)
        }
    }
}
