//! `snarkforge` command-line tool.
//!
//! Exit codes: 0 success, 2 usage, 3 scope (order above the ceiling),
//! 4 data (unparsable or invalid input), 5 network.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use snarkforge_core::generation::{GenConfig, GenSpec, Generator};
use snarkforge_core::pipeline::{
    compute_all_invariants, count_table, graph6_lines, invariants_csv, read_graph6_lines,
};
use snarkforge_core::{GenerationError, OddnessMode, PipelineError};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "snarkforge", version, about = "Snark generation and cubic graph invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate connected cubic graphs of one order as graph6 lines.
    Generate {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 3)]
        min_girth: usize,
        /// Keep only snarks (2-connected, not 3-edge-colourable).
        #[arg(long)]
        snarks_only: bool,
        #[arg(long)]
        two_connected: bool,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (0 = all CPUs).
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Compute invariants for every graph6 line of a file, as CSV.
    Invariants {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::CrossChecked)]
        oddness_mode: ModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Count snarks by oddness and connectivity for orders 10..=max-order.
    Table {
        #[arg(long)]
        min_girth: usize,
        #[arg(long)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Cross-check every oddness value with both algorithms.
        #[arg(long)]
        paranoid: bool,
    },
    /// Save a graph6 dataset from a URL or local file and validate it.
    #[command(group(ArgGroup::new("source").required(true).args(["url", "input"])))]
    Fetch {
        #[arg(long)]
        url: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Fast,
    CrossChecked,
}

impl From<ModeArg> for OddnessMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Fast => OddnessMode::Fast,
            ModeArg::CrossChecked => OddnessMode::CrossChecked,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Text,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Scope(String),
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    Network(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Scope(_) => 3,
            CliError::Data(_) => 4,
            CliError::Network(_) => 5,
        }
    }
}

impl From<GenerationError> for CliError {
    fn from(e: GenerationError) -> Self {
        match e {
            GenerationError::OrderTooLarge { .. } => CliError::Scope(e.to_string()),
            GenerationError::InvalidSpec(_) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Generation(g) => g.into(),
            other => CliError::Data(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Generate {
            order,
            min_girth,
            snarks_only,
            two_connected,
            out,
            workers,
        } => {
            let spec = GenSpec {
                order,
                min_girth,
                two_connected,
                snarks_only,
            };
            let mut generator = Generator::new(GenConfig::from_env().with_workers(workers));
            let graphs = generator.generate(&spec)?;
            emit(out.as_deref(), &graph6_lines(&graphs))?;
            eprintln!("{} graphs written", graphs.len());
        }
        Command::Invariants {
            input,
            oddness_mode,
            out,
            workers,
        } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| CliError::Data(format!("{}: {e}", input.display())))?;
            let graphs = read_graph6_lines(&text)?;
            let records = compute_all_invariants(&graphs, oddness_mode.into(), workers)?;
            emit(out.as_deref(), &invariants_csv(&records))?;
        }
        Command::Table {
            min_girth,
            max_order,
            format,
            workers,
            paranoid,
        } => {
            let config = GenConfig::from_env().with_workers(workers);
            if max_order < 10 {
                return Err(CliError::Usage(format!(
                    "max order must be at least 10, got {max_order}"
                )));
            }
            GenSpec::snarks(max_order, min_girth).validate(config.ceiling)?;
            let mode = if paranoid {
                OddnessMode::CrossChecked
            } else {
                OddnessMode::Fast
            };
            let mut generator = Generator::new(config);
            let table = count_table(&mut generator, min_girth, max_order, mode)?;
            let text = match format {
                TableFormat::Csv => table.to_csv(),
                TableFormat::Text => table.to_text(),
            };
            emit(None, &text)?;
        }
        Command::Fetch { url, input, out } => {
            let bytes = match (url, input) {
                (Some(url), _) => download(&url)?,
                (None, Some(path)) => fs::read(&path)
                    .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?,
                (None, None) => unreachable!("clap requires a source"),
            };
            fs::write(&out, &bytes).map_err(|e| CliError::Data(format!("{}: {e}", out.display())))?;
            let text = String::from_utf8(bytes)
                .map_err(|_| CliError::Data("dataset is not UTF-8 text".into()))?;
            let graphs = read_graph6_lines(&text)?;
            println!("{} graphs validated", graphs.len());
        }
    }
    Ok(())
}

fn download(url: &str) -> Result<Vec<u8>, CliError> {
    let mut response = ureq::get(url)
        .call()
        .map_err(|e| CliError::Network(format!("{url}: {e}")))?;
    response
        .body_mut()
        .read_to_vec()
        .map_err(|e| CliError::Network(format!("{url}: {e}")))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Data(format!("{}: {e}", path.display()))),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Data(format!("stdout: {e}"))),
    }
}
