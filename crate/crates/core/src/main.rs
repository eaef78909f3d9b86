//! Binary entry point for `subcubic-tsp`.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use subcubic_tsp::cli::{self, Cli};

fn main() -> ExitCode {
    match cli::run(Cli::parse()) {
        Ok(out) => {
            if out.is_empty() {
                return ExitCode::SUCCESS;
            }
            let mut stdout = io::stdout().lock();
            match writeln!(stdout, "{out}").and_then(|()| stdout.flush()) {
                Ok(()) => ExitCode::SUCCESS,
                // A closed pipe (e.g. `... | head`) is not our failure.
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
