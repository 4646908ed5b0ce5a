//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on input errors (unreadable or malformed
//! files, usage errors), 2 when a verification or consistency check fails.

pub mod parse;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::chain::groupoid_homology;
use crate::hyperplane::{octagonal_pipeline, penrose_pipeline};
use crate::sft::{self, DirectedGraph, SixTermMode};
use crate::zlinalg::smith_normal_form;
use parse::ParseError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "gpdhom", version, about = "Exact integer homology of étale groupoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Smith normal form U·M·V = D of an integer matrix.
    Snf { matrix: PathBuf },
    /// H_0 and H_1 of the SFT groupoid of a graph or adjacency matrix.
    SftHomology { input: PathBuf },
    /// The six groups and consistency checks of a doubled-graph sequence.
    SftSixterm {
        #[arg(long, value_enum)]
        mode: Mode,
        input: PathBuf,
    },
    /// Check exactness of a sequence file at every interior node.
    LesVerify { sequence: PathBuf },
    /// Homology of a finite transformation groupoid below a truncation degree.
    Nerve {
        groupoid: PathBuf,
        #[arg(long)]
        max_degree: usize,
    },
    /// Homology of a planar tiling groupoid.
    Tiling {
        #[arg(value_enum)]
        kind: Tiling,
        /// Print every intermediate step.
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Factor,
    Sub,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Tiling {
    Octagonal,
    Penrose,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Output(#[from] std::io::Error),
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn parsed<T>(path: &Path, r: Result<T, ParseError>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

/// A graph file, or an adjacency matrix file turned into its graph.
fn load_graph(path: &Path) -> Result<DirectedGraph, CliError> {
    let text = read(path)?;
    if parse::looks_like_graph(&text) {
        parsed(path, parse::parse_graph(&text))
    } else {
        let b = parsed(path, parse::parse_matrix(&text))?;
        DirectedGraph::from_adjacency(&b).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

/// Runs the command line `args` (including the program name); returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if informational { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if informational { EXIT_OK } else { EXIT_INPUT };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Snf { matrix } => {
            let m = parsed(&matrix, parse::parse_matrix(&read(&matrix)?))?;
            let s = smith_normal_form(&m);
            write!(out, "U\n{}D\n{}V\n{}", s.u, s.d, s.v)?;
            let factors: Vec<String> = s.invariant_factors().iter().map(ToString::to_string).collect();
            writeln!(out, "rank {}", s.rank())?;
            writeln!(out, "invariant factors: {}", factors.join(" "))?;
            Ok(EXIT_OK)
        }
        Command::SftHomology { input } => {
            let g = load_graph(&input)?;
            let h = sft::sft_homology(&g.adjacency()).expect("graph validated on load");
            write!(out, "{}", h.render(2))?;
            Ok(EXIT_OK)
        }
        Command::SftSixterm { mode, input } => {
            let g = load_graph(&input)?;
            let (mode, labels) = match mode {
                Mode::Factor => (SixTermMode::Factor, ["B^t+I", "block", "B^t-I"]),
                Mode::Sub => (SixTermMode::Sub, ["B^t-I", "block", "B^t+I"]),
            };
            let s = sft::six_term(&g, mode);
            let groups = s.sequence.groups();
            for (i, g) in groups.iter().enumerate() {
                let kind = if i < 3 { "Ker" } else { "Coker" };
                writeln!(out, "{kind}({}) = {g}", labels[i % 3])?;
            }
            write!(out, "{}", s.report)?;
            let ok = s.report.all_pass();
            writeln!(out, "verdict: {}", if ok { "consistent" } else { "INCONSISTENT" })?;
            Ok(if ok { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::LesVerify { sequence } => {
            let s = parsed(&sequence, parse::parse_sequence(&read(&sequence)?))?;
            let report = s
                .verify_exactness()
                .map_err(|e| CliError::Input(format!("{}: {e}", sequence.display())))?;
            write!(out, "{report}")?;
            Ok(if report.is_exact() { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Nerve { groupoid, max_degree } => {
            let g = parsed(&groupoid, parse::parse_groupoid(&read(&groupoid)?))?;
            let h = groupoid_homology(&g, max_degree).map_err(|e| CliError::Input(e.to_string()))?;
            write!(out, "{}", h.render(max_degree))?;
            Ok(EXIT_OK)
        }
        Command::Tiling { kind, trace } => {
            let p = match kind {
                Tiling::Octagonal => octagonal_pipeline(),
                Tiling::Penrose => penrose_pipeline(),
            }
            .map_err(|e| CliError::Input(e.to_string()))?;
            if trace {
                write!(out, "{p}")?;
            } else {
                write!(out, "{}", p.homology().render(3))?;
            }
            Ok(EXIT_OK)
        }
    }
}
