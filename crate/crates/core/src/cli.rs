//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use clap::{Parser, Subcommand};

use crate::json::to_canonical_string;
use crate::oracles::TruthTable;
use crate::quantum::TOLERANCE;
use crate::report::{ClassificationReport, DjReport, FunctionTable, RunReport};
use crate::verify::{run_verification, VerifyConfig};

pub const TOLERANCE_ENV: &str = "QPARITY_TOLERANCE";

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "qparity", version)]
#[command(
    about = "Classify two-bit Boolean functions as even or odd with an entangling two-qubit circuit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Full classification record for one function
    Classify {
        /// Truth table f(00) f(01) f(10) f(11), e.g. 0001
        #[arg(value_parser = parse_truth_table)]
        bits: TruthTable,
        #[arg(long)]
        json: bool,
    },
    /// Run the even/odd circuit on one function
    Run {
        #[arg(value_parser = parse_truth_table)]
        bits: TruthTable,
        /// Print the state after each gate
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the two-bit Deutsch-Jozsa circuit on one function
    Dj {
        #[arg(value_parser = parse_truth_table)]
        bits: TruthTable,
        #[arg(long)]
        json: bool,
    },
    /// Class table over all 16 functions
    Table {
        #[arg(long)]
        json: bool,
    },
    /// Check every invariant exhaustively
    Verify {
        #[arg(long)]
        json: bool,
    },
}

fn parse_truth_table(s: &str) -> Result<TruthTable, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Classify,
    Run,
    Table,
    Verify,
    Dj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub function: Option<TruthTable>,
    pub output_format: OutputFormat,
    pub trace: bool,
    pub tolerance_override: Option<f64>,
}

impl RunConfig {
    /// `run`, `classify` and `dj` need a function; `table` and `verify` must not have one.
    pub fn validate(&self) -> Result<(), String> {
        let needs_function = matches!(self.command, Command::Run | Command::Classify | Command::Dj);
        match (needs_function, self.function.is_some()) {
            (true, false) => {
                Err(format!("{:?} requires a truth table", self.command).to_lowercase())
            }
            (false, true) => Err(format!("{:?} takes no truth table", self.command).to_lowercase()),
            _ => Ok(()),
        }?;
        if let Some(tol) = self.tolerance_override {
            if !(tol.is_finite() && tol > 0.0) {
                return Err(format!(
                    "tolerance must be a positive finite number, got {tol}"
                ));
            }
        }
        Ok(())
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance_override.unwrap_or(TOLERANCE)
    }
}

impl Cli {
    pub fn into_config(self, tolerance_override: Option<f64>) -> RunConfig {
        let format = |json: bool| {
            if json {
                OutputFormat::Json
            } else {
                OutputFormat::Text
            }
        };
        let (command, function, output_format, trace) = match self.command {
            CliCommand::Classify { bits, json } => {
                (Command::Classify, Some(bits), format(json), false)
            }
            CliCommand::Run { bits, trace, json } => {
                (Command::Run, Some(bits), format(json), trace)
            }
            CliCommand::Dj { bits, json } => (Command::Dj, Some(bits), format(json), false),
            CliCommand::Table { json } => (Command::Table, None, format(json), false),
            CliCommand::Verify { json } => (Command::Verify, None, format(json), false),
        };
        RunConfig {
            command,
            function,
            output_format,
            trace,
            tolerance_override,
        }
    }
}

/// Reads the tolerance override from the environment value, if set.
pub fn parse_tolerance_env(value: Option<&str>) -> Result<Option<f64>, String> {
    match value {
        None => Ok(None),
        Some(raw) => raw
            .trim()
            .parse::<f64>()
            .map(Some)
            .map_err(|_| format!("{TOLERANCE_ENV} must be a number, got {raw:?}")),
    }
}

/// What a command writes to stdout and the exit code it ends with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: u8,
}

pub fn execute(config: &RunConfig) -> Result<Outcome, String> {
    config.validate()?;
    let json = config.output_format == OutputFormat::Json;
    let function = || config.function.expect("validated");
    let ok = |stdout| {
        Ok(Outcome {
            stdout,
            exit_code: EXIT_OK,
        })
    };

    match config.command {
        Command::Classify => {
            let report = ClassificationReport::new(function());
            ok(if json {
                to_canonical_string(&report)
            } else {
                report.render_text()
            })
        }
        Command::Run => {
            let report = RunReport::new(function(), config.trace);
            ok(if json {
                to_canonical_string(&report)
            } else {
                report.render_text()
            })
        }
        Command::Dj => {
            let report = DjReport::new(function());
            ok(if json {
                to_canonical_string(&report)
            } else {
                report.render_text()
            })
        }
        Command::Table => {
            let table = FunctionTable::build();
            ok(if json {
                to_canonical_string(&table)
            } else {
                table.render_text()
            })
        }
        Command::Verify => {
            let report = run_verification(&VerifyConfig {
                tolerance: config.tolerance(),
                ..VerifyConfig::default()
            });
            Ok(Outcome {
                stdout: if json {
                    to_canonical_string(&report)
                } else {
                    report.render_text()
                },
                exit_code: report.exit_code(),
            })
        }
    }
}
