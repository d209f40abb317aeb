use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use degbox_cli::commands::{self, CliError, CrossvalArgs, Format, GraphFormat};
use degbox_cli::{parse_instance, InstanceSpec};
use degbox_core::Criterion;

/// Degree-interval realizability for simple graphs.
///
/// Exit codes: 0 affirmative, 1 negative verdict, 2 usage or input error.
#[derive(Debug, Parser)]
#[command(name = "degbox", version)]
struct Cli {
    /// Machine-readable output with sorted keys
    #[arg(long, global = true)]
    json: bool,

    /// Print nothing on stdout; only the exit code reports the verdict
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate every criterion on an instance
    Check {
        /// `a1,a2,.../b1,b2,...`, or `@file.json` with {"a": [...], "b": [...]}
        #[arg(value_parser = instance_arg)]
        instance: InstanceSpec,
        /// Also run the brute-force oracle (n <= 7)
        #[arg(long)]
        oracle: bool,
    },
    /// Construct a graph whose degrees lie inside the bounds
    Realize {
        #[arg(value_parser = instance_arg)]
        instance: InstanceSpec,
        /// Graphviz output instead of an edge list
        #[arg(long)]
        dot: bool,
    },
    /// Compare criteria against the oracle on every instance of size N
    Crossval {
        n: usize,
        /// Draw COUNT uniform instances instead of enumerating
        #[arg(long, value_name = "COUNT")]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also print the implication matrix (N <= 6)
        #[arg(long)]
        matrix: bool,
        /// Comma-separated criterion names or labels; CDZ is always included
        #[arg(long, value_delimiter = ',', value_parser = criterion_arg)]
        criteria: Option<Vec<Criterion>>,
        /// Stored examples per nonzero matrix cell
        #[arg(long, default_value_t = 1)]
        examples: usize,
    },
    /// Check the sequence identities on random inputs
    Identities {
        #[arg(long, default_value_t = 10_000)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn instance_arg(text: &str) -> Result<InstanceSpec, String> {
    parse_instance(text).map_err(|e| e.to_string())
}

fn criterion_arg(text: &str) -> Result<Criterion, String> {
    text.trim()
        .parse()
        .map_err(|e: degbox_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fmt = Format { json: cli.json };
    let result = match cli.command {
        Command::Check { instance, oracle } => commands::check(&instance, oracle, fmt),
        Command::Realize { instance, dot } => {
            let graph = if dot {
                GraphFormat::Dot
            } else {
                GraphFormat::EdgeList
            };
            commands::realize(&instance, graph, fmt)
        }
        Command::Crossval {
            n,
            sample,
            seed,
            matrix,
            criteria,
            examples,
        } => {
            let args = CrossvalArgs {
                n,
                sample,
                seed,
                matrix,
                criteria: criteria.unwrap_or_else(|| Criterion::ALL.to_vec()),
                examples,
            };
            commands::crossval(&args, fmt)
        }
        Command::Identities { count, seed } => commands::identities(count, seed, fmt),
    };
    match result {
        Ok(outcome) => {
            if !cli.quiet {
                let mut stdout = std::io::stdout().lock();
                let _ = stdout.write_all(outcome.stdout.as_bytes());
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(CliError::EXIT_CODE)
        }
    }
}
