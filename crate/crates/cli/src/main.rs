use std::io;
use std::process::ExitCode;

use agx_cli::Cli;
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut input = io::stdin().lock();
    let mut out = io::stdout().lock();
    match agx_cli::run(&cli, &mut input, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("agx: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
