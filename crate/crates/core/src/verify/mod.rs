//! Command-line front end: per-graph reports over graph6 corpora and
//! parameter sweeps over the extremal families.
//!
//! Every command is falsification-style. A clean run means no
//! counterexample was found in the inputs tried, nothing more.

pub mod cli;
pub mod commands;
pub mod output;
pub mod report;

use thiserror::Error;

pub use cli::{run, Cli, Command};
pub use commands::{
    analyze, extremal, laman_max, read_corpus, sweep_quartic, ExtremalRow, LamanMaxRow,
    QuarticGrid, QuarticRow,
};
pub use output::{write_rows, Format};
pub use report::{analyze_graph, round_sig, SpectralReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INCONSISTENT: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("{}", .0.iter().map(|(line, e)| format!("line {line}: {e}")).collect::<Vec<_>>().join("\n"))]
    Parse(Vec<(usize, String)>),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("i/o error: {0}")]
    Io(String),
}
