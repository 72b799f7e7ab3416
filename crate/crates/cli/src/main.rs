mod commands;
mod config;
mod render;

use std::process::ExitCode;

use clap::Parser;

use config::{Cli, UsageError};

/// Exit codes: 0 every law holds, 1 some law fails, 2 usage error.
fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = config::init_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match commands::run(cli) {
        Ok(output) => match render::emit(&output.text, output.path.as_deref()) {
            Ok(()) if output.all_hold => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
