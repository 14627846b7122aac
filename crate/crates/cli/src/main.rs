use std::process::ExitCode;

use clap::Parser;
use cliquefactor_cli::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cliquefactor: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
