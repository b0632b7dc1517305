use std::io;
use std::process::ExitCode;

use clap::Parser;
use rigidity_core::verify::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout);
    let code = run(cli, &mut out, &mut io::stderr());
    ExitCode::from(code)
}
