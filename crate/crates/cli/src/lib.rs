//! Command-line front end for the `tworoots` engine.

pub mod args;
pub mod commands;
pub mod format;
pub mod render;
pub mod verify;
pub mod weyl;

use args::{Cli, Command};

/// Runs a parsed command, returning its output and exit status.
pub fn execute(cli: &Cli) -> anyhow::Result<(String, u8)> {
    if let Command::Verify {
        suite,
        json,
        seed,
        max_order,
        words,
    } = &cli.command
    {
        let opts = verify::Options {
            seed: *seed,
            max_order: *max_order,
            words: *words,
        };
        let results = verify::run(*suite, &opts);
        let code = if results.iter().all(|r| r.passed) { 0 } else { 1 };
        let out = if *json {
            serde_json::to_string_pretty(&results)?
        } else {
            results.iter().map(verify::line).collect::<Vec<_>>().join("\n")
        };
        return Ok((out, code));
    }
    let json = match &cli.command {
        Command::Basis(t) | Command::Highest(t) => t.output.json,
        Command::Roots { target, .. }
        | Command::Orbits { target, .. }
        | Command::Expand { target, .. }
        | Command::Matrix { target, .. }
        | Command::Decompose { target, .. }
        | Command::Kernel { target, .. }
        | Command::Skein { target, .. } => target.output.json,
        Command::Verify { .. } => unreachable!(),
    };
    let report = commands::run(&cli.command)?;
    let out = if json {
        serde_json::to_string_pretty(&report.json)?
    } else {
        report.text
    };
    Ok((out, report.code as u8))
}
