//! `segre`: classify real symmetric pencils, build canonical forms and
//! reciprocal ideals, and compute likelihood degrees and Segre strata.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use segre::selftest::Scope;

use commands::Outcome;
use report::{exit_code, RunReport, Status, EXIT_OK, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(name = "segre", version, about = "Pencils of real symmetric matrices and their Segre symbols")]
struct Cli {
    #[command(flatten)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct Format {
    /// Print the full JSON run report (default).
    #[arg(long, global = true)]
    json: bool,
    /// Print a plain-text rendering instead.
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum ScopeArg {
    Quick,
    Full,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a pencil (or a JSON array of pencils) read from a file or `-` for stdin.
    Classify { input: String },
    /// Canonical pair for a Segre symbol. With --text, prints bare pencil JSON for piping.
    Canonical {
        symbol: String,
        /// Comma-separated distinct eigenvalues, one per class.
        #[arg(long)]
        eigenvalues: Option<String>,
    },
    /// Ideal of the reciprocal curve, from a symbol or from a pencil file.
    Reciprocal {
        input: Option<String>,
        #[arg(long, conflicts_with = "input")]
        symbol: Option<String>,
        #[arg(long, requires = "symbol")]
        eigenvalues: Option<String>,
    },
    /// ML and reciprocal ML degrees; --verify compares with the elimination oracle.
    Mldeg {
        symbol: String,
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        draws: usize,
    },
    /// Search for data whose reciprocal ML critical points of a diagonal model are all real.
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated data vector to try before the random draws (repeatable).
        #[arg(long)]
        inject: Vec<String>,
    },
    /// Closure poset of Segre strata.
    Poset {
        #[arg(long)]
        n: usize,
        /// Also write Graphviz DOT to this file.
        #[arg(long)]
        dot: Option<String>,
    },
    /// Codimensions, degrees and generator counts for every symbol of size n.
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Number of Segre symbols of size n, by series and by enumeration.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Run the acceptance checks.
    Selftest {
        #[arg(long, value_enum, default_value_t = ScopeArg::Quick)]
        scope: ScopeArg,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Canonical { .. } => "canonical",
            Command::Reciprocal { .. } => "reciprocal",
            Command::Mldeg { .. } => "mldeg",
            Command::Conjecture { .. } => "conjecture",
            Command::Poset { .. } => "poset",
            Command::Table { .. } => "table",
            Command::Count { .. } => "count",
            Command::Selftest { .. } => "selftest",
        }
    }

    fn run(&self) -> segre::Result<Outcome> {
        match self {
            Command::Classify { input } => commands::cmd_classify(input),
            Command::Canonical { symbol, eigenvalues } => {
                commands::cmd_canonical(symbol, eigenvalues.as_deref())
            }
            Command::Reciprocal { input, symbol, eigenvalues } => {
                commands::cmd_reciprocal(symbol.as_deref(), eigenvalues.as_deref(), input.as_deref())
            }
            Command::Mldeg { symbol, verify, seed, draws } => {
                commands::cmd_mldeg(symbol, *verify, *seed, *draws)
            }
            Command::Conjecture { n, trials, seed, inject } => {
                commands::cmd_conjecture(*n, *trials, *seed, inject)
            }
            Command::Poset { n, dot } => commands::cmd_poset(*n, dot.as_deref()),
            Command::Table { n } => commands::cmd_table(*n),
            Command::Count { n } => commands::cmd_count(*n),
            Command::Selftest { scope } => commands::cmd_selftest(match scope {
                ScopeArg::Quick => Scope::Quick,
                ScopeArg::Full => Scope::Full,
            }),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { EXIT_OK as u8 });
        }
    };
    let name = cli.command.name().to_string();
    let (report, text, code) = match cli.command.run() {
        Ok(Outcome { inputs, outputs, text, code }) => {
            let status = if code == EXIT_OK {
                Status::Ok
            } else {
                Status::Error { kind: "BatchItemFailed".into(), message: "at least one item failed".into() }
            };
            (RunReport { command: name, inputs, outputs, status }, text, code)
        }
        Err(e) => {
            let text = format!("error: {e}");
            let code = exit_code(&e);
            let status = Status::from_error(&e);
            (RunReport { command: name, inputs: serde_json::Value::Null, outputs: serde_json::Value::Null, status }, text, code)
        }
    };
    if cli.format.text {
        if code == EXIT_OK {
            println!("{text}");
        } else {
            eprintln!("{text}");
        }
    } else {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    }
    ExitCode::from(code as u8)
}
