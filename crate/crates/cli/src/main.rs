mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::commands::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(CliError::USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };

    let result = match cli.command {
        Command::Decompose(a) => commands::decompose(&a),
        Command::Spectrum(a) => commands::spectrum(&a),
        Command::Compare(a) => commands::compare(&a),
        Command::Cost(a) => commands::cost(&a),
        Command::PipelineSim(a) => commands::pipeline_sim(&a),
        Command::Bench(a) => commands::bench(&a),
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("psdfft: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
