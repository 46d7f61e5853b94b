mod args;
mod commands;
mod config;
mod error;
mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command};
use error::CliError;
use output::OutputRecord;

fn run(cli: &Cli) -> Result<(OutputRecord, config::Settings), CliError> {
    let st = config::resolve(&cli.global)?;
    if let Some(n) = st.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("threads: {e}")))?;
    }
    let start = Instant::now();
    let (name, (inputs, result)) = match &cli.command {
        Command::Correlator(a) => ("correlator", commands::correlator_cmd(a, &st)?),
        Command::Hurwitz(a) => ("hurwitz", commands::hurwitz_cmd(a, &st)?),
        Command::Verify(a) => ("verify", commands::verify_cmd(a, &st)?),
        Command::Expand(a) => ("expand", commands::expand_cmd(a, &st)?),
    };
    let record = OutputRecord {
        command: name.to_string(),
        args: std::env::args().skip(1).collect(),
        inputs,
        result,
        version: env!("CARGO_PKG_VERSION"),
        elapsed_ms: st.timing.then(|| start.elapsed().as_millis()),
    };
    Ok((record, st))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((record, st)) => {
            print!("{}", record.render(st.format));
            if record.result.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
