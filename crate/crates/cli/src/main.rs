//! `subsample`: generate inputs, draw samples, estimate output laws and test
//! their invariances from the shell.
//!
//! Exit status: 0 success, 1 failed statistical test, 2 usage error, 3 I/O or
//! malformed input file.

mod args;
mod commands;
mod input;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use input::CliError;

fn run(cli: &Cli) -> Result<bool, CliError> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(CliError::usage("--threads must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::usage(format!("cannot start {t} threads: {e}")))?;
    }
    match &cli.command {
        Command::Generate(a) => commands::generate(a),
        Command::Sample(a) => commands::sample(a),
        Command::Estimate(c) => commands::estimate(c),
        Command::Test(c) => commands::test(c),
        Command::Diagnose(a) => commands::diagnose(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("subsample: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
