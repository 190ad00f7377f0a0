use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dgspec::cli::{emit_report, parse_edge_list, render, serialize_edge_list, sweep_report};
use dgspec::cli::{OutputFormat, ReportKind};
use dgspec::digraph::{gen_cycle, gen_kbip, gen_path, gen_random};
use dgspec::oracle::sweep;
use dgspec::{Digraph, DEFAULT_TOL};

/// Energy, Randić index and equality-case classification for digraphs.
#[derive(Debug, Parser)]
#[command(name = "dgspec", version)]
struct Cli {
    /// Absolute tolerance for bound and equality checks.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Singular values, total energy and vertex energies.
    Energy { file: PathBuf },
    /// Randić index.
    Randic { file: PathBuf },
    /// Certificate for 2R <= E <= 2 sqrt(max degree) R.
    Bounds { file: PathBuf },
    /// Edges of the bipartite double.
    Double { file: PathBuf },
    /// Sink-source splitting and both equality classifications.
    Classify { file: PathBuf },
    /// Print a generated digraph as an edge list.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Check every property on all digraphs up to a vertex count.
    Sweep {
        #[arg(long)]
        max_n: usize,
        /// Worker threads; 0 picks the number of CPUs.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Debug, Subcommand)]
enum GenKind {
    Cycle { n: usize },
    Path { n: usize },
    Kbip { n: usize, m: usize },
    Random { n: usize, p: f64, seed: u64 },
}

fn read_graph(file: &PathBuf) -> Result<Digraph, String> {
    let mut text = String::new();
    if file.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("stdin: {e}"))?;
    } else {
        text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    }
    parse_edge_list(&text).map_err(|e| format!("{}: {e}", file.display()))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = match cli.format {
        Format::Json => OutputFormat::Json,
        Format::Text => OutputFormat::Text,
    };
    let report = |file: &PathBuf, kind: ReportKind| -> Result<ExitCode, String> {
        let g = read_graph(file)?;
        let v = emit_report(&g, kind, cli.tol).map_err(|e| e.to_string())?;
        print!("{}", render(&v, format));
        Ok(ExitCode::SUCCESS)
    };
    match &cli.command {
        Command::Energy { file } => report(file, ReportKind::Energy),
        Command::Randic { file } => report(file, ReportKind::Randic),
        Command::Bounds { file } => report(file, ReportKind::Bounds),
        Command::Double { file } => report(file, ReportKind::Double),
        Command::Classify { file } => report(file, ReportKind::Classify),
        Command::Gen { kind } => {
            let g = match *kind {
                GenKind::Cycle { n } => gen_cycle(n),
                GenKind::Path { n } => gen_path(n),
                GenKind::Kbip { n, m } => gen_kbip(n, m),
                GenKind::Random { n, p, seed } => gen_random(n, p, seed),
            }
            .map_err(|e| e.to_string())?;
            print!("{}", serialize_edge_list(&g));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { max_n, jobs } => {
            let summary = sweep(*max_n, cli.tol, *jobs).map_err(|e| e.to_string())?;
            print!("{}", render(&sweep_report(&summary), format));
            Ok(if summary.is_clean() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("dgspec: {msg}");
            ExitCode::from(2)
        }
    }
}
