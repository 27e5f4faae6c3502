use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use tworoots_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match tworoots_cli::execute(&cli) {
        Ok((out, code)) => {
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
