mod commands;
mod record;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::commands::{CliError, Outcome};
use crate::record::{write_records, Format};

#[derive(Parser, Debug)]
#[command(name = "bstir", version, about = "Exact Bernoulli and Stirling number tables, expansions and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Sequence {
    Bernoulli,
    Bernoulli2nd,
    GenBernoulli,
    Stirling1,
    Stirling2,
    ZetaNeg,
    EtaNeg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kernel {
    Hessenberg,
    Fps,
    Bell,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate a sequence over an index range such as `0..6` or `n=4`.
    Tab {
        #[arg(value_enum)]
        sequence: Sequence,
        /// Inclusive index range; defaults to the first index up to --max-n.
        range: Option<String>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Computation route (bernoulli, bernoulli2nd).
        #[arg(long)]
        route: Option<String>,
        /// Order of the generalized Bernoulli numbers, as p or p/q.
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
    },
    /// Coefficients of a named expansion next to the series oracle.
    Expand {
        id: String,
        /// Inclusive coefficient range; defaults to 0 up to --max-n.
        range: Option<String>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long)]
        variant: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
    },
    /// Identity audit plus route and expansion agreement.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Values of r, repeated or comma separated.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', default_value = "-1,-1/2,1/2,2")]
        r: Vec<String>,
        /// Corrupt one route before checking.
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Time one kernel at the given size.
    Bench {
        #[arg(value_enum)]
        kernel: Kernel,
        size: usize,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let outcome = match cli.command {
        Command::Tab { sequence, range, max_n, route, r } => {
            commands::tab(sequence, range.as_deref(), max_n, route.as_deref(), r.as_deref())?
        }
        Command::Expand { id, range, max_n, variant, r } => {
            commands::expand(&id, range.as_deref(), max_n, variant.as_deref(), r.as_deref())?
        }
        Command::Verify { max_n, r, inject_fault } => commands::verify(max_n, &r, inject_fault.as_deref())?,
        Command::Bench { kernel, size } => commands::bench(kernel, size)?,
    };
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| CliError::Usage(format!("cannot create {}: {e}", path.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    write_records(&outcome.records, cli.format, &mut out)
        .and_then(|()| out.flush())
        .map_err(|e| CliError::Usage(format!("write failed: {e}")))?;
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(outcome) if outcome.ok => ExitCode::SUCCESS,
        Ok(outcome) => {
            eprintln!("bstir: {}", outcome.summary);
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("bstir: {msg}");
            ExitCode::from(2)
        }
    }
}
