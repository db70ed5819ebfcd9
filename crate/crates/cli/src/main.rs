//! `susa`: sexagesimal calculator, heptagon area rules, constructions and
//! the cut-and-paste dissection from the command line.
//!
//! Exit status is 0 on success, 1 for malformed flags or literals and 2 for
//! errors reported by the library (division by zero, impossible
//! constructions, bad placements, I/O).

mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Failure with its exit status.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("susa: {}", first.trim_start_matches("error: "));
            return ExitCode::from(1);
        }
    };
    match commands::run(&cli.command) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let first_line = e.message().lines().next().unwrap_or("unknown error");
            eprintln!("susa: {first_line}");
            ExitCode::from(e.code())
        }
    }
}
