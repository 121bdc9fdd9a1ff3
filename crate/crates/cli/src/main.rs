use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use toeplitz_core::{Error, ToeplitzParams};

mod commands;
mod export;

/// Envelope version for machine-mode output.
const SCHEMA_VERSION: &str = "1";

const EXIT_INVALID: u8 = 2;
const EXIT_BOUND: u8 = 3;
const EXIT_DISCREPANCY: u8 = 4;

#[derive(Parser)]
#[command(
    name = "toeplitz",
    version,
    about = "Classify Toeplitz graphs T_n<t_1,...,t_k> and check the rules against brute force"
)]
struct Cli {
    /// Emit one JSON envelope instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GraphArgs {
    /// Number of vertices.
    #[arg(long)]
    n: usize,
    /// Strictly increasing, comma-separated offsets, e.g. 5,10,15.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    offsets: Vec<usize>,
}

impl GraphArgs {
    fn params(&self) -> Result<ToeplitzParams, Error> {
        ToeplitzParams::new(self.n, self.offsets.clone())
    }

    fn echo(&self) -> Value {
        json!({"n": self.n, "offsets": self.offsets})
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide claw-freeness and line-graph membership.
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Look up a claw whenever the graph is not claw-free.
        #[arg(long)]
        witness: bool,
        /// Also report chordality, intervality and clique number.
        #[arg(long)]
        all: bool,
    },
    /// Split the graph into its predicted components.
    Components {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Write the graph as DOT, an adjacency list or JSON.
    Export {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "dot")]
        format: ExportFormat,
    },
    /// Cross-check the rules against the oracles over a box of parameters.
    Sweep(commands::SweepArgs),
    /// Show every rule consulted for a graph.
    Explain {
        #[command(flatten)]
        graph: GraphArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Adjlist,
    Json,
}

/// What a command produced: a payload, its human rendering and an exit code.
pub struct Output {
    pub result: Value,
    pub human: String,
    pub code: u8,
}

fn exit_code(e: &Error) -> u8 {
    if e.is_bound_exceeded() {
        EXIT_BOUND
    } else {
        match e {
            Error::EmptyOffsets
            | Error::NonIncreasingOffsets { .. }
            | Error::OffsetOutOfRange { .. }
            | Error::OrderTooLarge { .. }
            | Error::InvalidSweep(_)
            | Error::PremiseNotMet(_)
            | Error::NotACocoonery
            | Error::VertexOutOfRange { .. } => EXIT_INVALID,
            _ => 1,
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match exit_code(e) {
        EXIT_INVALID => "invalid_params",
        EXIT_BOUND => "bound_exceeded",
        _ => "internal",
    }
}

fn envelope(command: &str, params: Value, result: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "result": result,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, params, outcome) = match &cli.command {
        Command::Classify {
            graph,
            witness,
            all,
        } => (
            "classify",
            graph.echo(),
            graph
                .params()
                .and_then(|p| commands::classify(&p, *witness, *all)),
        ),
        Command::Components { graph } => (
            "components",
            graph.echo(),
            graph.params().and_then(|p| commands::components(&p)),
        ),
        Command::Export { graph, format } => (
            "export",
            graph.echo(),
            graph.params().map(|p| export::export(&p, *format)),
        ),
        Command::Sweep(args) => ("sweep", args.echo(), commands::sweep(args, cli.json)),
        Command::Explain { graph } => (
            "explain",
            graph.echo(),
            graph.params().and_then(|p| commands::explain(&p)),
        ),
    };

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match outcome {
        Ok(output) => {
            let raw = matches!(cli.command, Command::Export { format, .. } if !matches!(format, ExportFormat::Json));
            if cli.json && !raw {
                let _ = writeln!(out, "{}", envelope(name, params, output.result));
            } else {
                let _ = write!(out, "{}", output.human);
            }
            output.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            if cli.json {
                let mut env = envelope(name, params, Value::Null);
                env["error"] = json!({"kind": error_kind(&e), "message": e.to_string()});
                let _ = writeln!(out, "{env}");
            }
            exit_code(&e)
        }
    };
    ExitCode::from(code)
}
