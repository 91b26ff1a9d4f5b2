use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use qparity::cli::{execute, parse_tolerance_env, Cli, EXIT_USAGE, TOLERANCE_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();

    let env_value = std::env::var(TOLERANCE_ENV).ok();
    let tolerance = match parse_tolerance_env(env_value.as_deref()) {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };

    match execute(&cli.into_config(tolerance)) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(outcome.exit_code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
