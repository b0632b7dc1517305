use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use super::commands::{analyze, extremal, laman_max, read_corpus, sweep_quartic, QuarticGrid};
use super::output::{write_rows, Format};
use super::{VerifyError, EXIT_INCONSISTENT, EXIT_INPUT, EXIT_OK};
use crate::graphcore::graph6::write_graph6_lines;
use crate::rigidity::enumerate_laman;

#[derive(Debug, Parser)]
#[command(
    name = "rigidity",
    version,
    about = "Rigidity verdicts and spectral checks for graph corpora"
)]
pub struct Cli {
    /// Seed for random placements.
    #[arg(long, global = true, env = "RIGIDITY_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Tolerance for spectral comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One report per graph6 line of FILE (`-` for stdin).
    Analyze { file: PathBuf },
    /// Largest spectral radius among minimally rigid graphs, per order.
    LamanMax {
        #[arg(long, default_value_t = 3)]
        nmin: usize,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
    /// Quartic root against dense eigensolves, and its decrease in `a`.
    SweepQuartic {
        /// Number of cross edges; repeat for several.
        #[arg(long = "i", default_values_t = [2, 3])]
        i: Vec<usize>,
        /// Defaults to `i + 1`.
        #[arg(long)]
        amin: Option<usize>,
        #[arg(long, default_value_t = 12)]
        amax: usize,
        #[arg(long, default_value_t = 60)]
        nmax: usize,
    },
    /// Structure of the two extremal two-clique graphs for one minimum degree.
    Extremal {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        nmax: usize,
    },
    /// Minimally rigid graphs on `n` vertices as graph6, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Runs a parsed command, writing records to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(cli: Cli, out: &mut (dyn Write + Send), err: &mut dyn Write) -> u8 {
    let pool = match cli.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let result = pool.install(|| dispatch(&cli, out)).and_then(|ok| {
        out.flush().map_err(|e| VerifyError::Io(e.to_string()))?;
        Ok(ok)
    });
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => {
            let _ = writeln!(
                err,
                "consistency violation: see records with consistent = false"
            );
            EXIT_INCONSISTENT
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(cli: &Cli, out: &mut (dyn Write + Send)) -> Result<bool, VerifyError> {
    let io = |e: io::Error| VerifyError::Io(e.to_string());
    match &cli.command {
        Command::Analyze { file } => {
            let graphs = if file.as_os_str() == "-" {
                read_corpus(io::stdin().lock())?
            } else {
                read_corpus(BufReader::new(File::open(file).map_err(io)?))?
            };
            let reports = analyze(&graphs, cli.tol)?;
            write_rows(&reports, cli.format, out)?;
            Ok(reports.iter().all(|r| r.consistent()))
        }
        Command::LamanMax { nmin, nmax } => {
            let rows = laman_max(*nmin, *nmax, cli.tol)?;
            write_rows(&rows, cli.format, out)?;
            Ok(rows.iter().all(|r| r.consistent))
        }
        Command::SweepQuartic {
            i,
            amin,
            amax,
            nmax,
        } => {
            let mut rows = Vec::new();
            for &i in i {
                let grid = QuarticGrid {
                    i,
                    amin: amin.unwrap_or(i + 1),
                    amax: *amax,
                    nmax: *nmax,
                };
                rows.extend(sweep_quartic(grid)?);
            }
            write_rows(&rows, cli.format, out)?;
            Ok(rows.iter().all(|r| r.consistent))
        }
        Command::Extremal { delta, nmax } => {
            let rows = extremal(*delta, *nmax, cli.seed)?;
            write_rows(&rows, cli.format, out)?;
            Ok(rows.iter().all(|r| r.consistent))
        }
        Command::Enumerate { n, out: path } => {
            let graphs = enumerate_laman(*n).map_err(|e| VerifyError::Input(e.to_string()))?;
            match path {
                Some(p) => {
                    let mut f = BufWriter::new(File::create(p).map_err(io)?);
                    write_graph6_lines(&mut f, &graphs).map_err(io)?;
                    f.flush().map_err(io)?;
                }
                None => write_graph6_lines(out, &graphs).map_err(io)?,
            }
            Ok(true)
        }
    }
}
