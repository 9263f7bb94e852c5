// `!(x >= MIN)` style checks are used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod config;
mod output;
mod run;

use std::process::ExitCode;

use clap::Parser;

use config::{Cli, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: invalid configuration: {e}");
            return ExitCode::from(run::EXIT_INVALID_CONFIG);
        }
    };
    match run::run(&config) {
        Ok(()) => run::exit_ok(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
