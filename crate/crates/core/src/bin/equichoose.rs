use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use equichoose::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli.command, cli.format);
    let stream = if outcome.code == equichoose::cli::EXIT_USAGE || outcome.code == equichoose::cli::EXIT_BUDGET {
        std::io::stderr().write_all(outcome.output.as_bytes())
    } else {
        std::io::stdout().write_all(outcome.output.as_bytes())
    };
    if stream.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.code as u8)
}
