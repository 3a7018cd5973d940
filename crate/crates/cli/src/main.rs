#![forbid(unsafe_code)]

mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use crate::commands::Cli;

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };

    match commands::run(&cli.command) {
        Ok(report) => {
            if let Err(err) = output::emit(&report, cli.format) {
                eprintln!("nilpath: {err}");
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(if report.passed() { EXIT_PASS } else { EXIT_FAIL })
        }
        Err(err) => {
            eprintln!("nilpath: {err}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
