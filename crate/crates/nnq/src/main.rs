use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use nnq::cli::{self, Cli, Invocation};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match cli::limits_from_env() {
        Ok(l) => l,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(cli::EXIT_USAGE as u8);
        }
    };
    let outcome = cli::run(&Invocation::from(cli), &limits);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
