use std::process::ExitCode;

use clap::Parser;
use hilbert_games::cli::{execute, write_output, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = || -> hilbert_games::Result<()> {
        let (request, out) = cli.into_request()?;
        let output = execute(&request)?;
        for w in &output.warnings {
            eprintln!("warning: {w}");
        }
        write_output(&output.text, out.as_deref())
    };
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
