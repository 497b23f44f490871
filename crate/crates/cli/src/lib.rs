//! Command-line front end for `frustra-core`.
//!
//! Every command prints one JSON report on stdout,
//! `{command, inputs, results, failures, version}`, with sorted keys so equal
//! inputs give byte-identical output. Short human summaries go to stderr.
//! The thread count is not echoed in `inputs`; it never changes results.

mod args;
mod commands;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::Value;

pub use args::{Check, Cli, Command, Kind, SpectrumMethod};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit code plus everything destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// A finished command before rendering.
pub(crate) struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub failures: Vec<String>,
    pub summary: String,
    /// Replaces the JSON report on stdout (`--csv`, `--plain`).
    pub raw: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "failures": self.failures,
            "version": VERSION,
        })
    }
}

/// Error raised while running a command, already mapped to an exit code.
#[derive(Debug)]
pub(crate) struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<frustra_core::Error> for Failure {
    fn from(err: frustra_core::Error) -> Self {
        use frustra_core::Error as E;
        let code = match &err {
            E::Graph6(_) | E::EdgeList(_) | E::SelfLoop { .. } | E::VertexOutOfRange { .. } => {
                EXIT_PARSE
            }
            E::Capability(_) | E::Construction(_) | E::SizeOverflow { .. } | E::VertexCount { .. } => {
                EXIT_CAPABILITY
            }
            E::OutOfRange { .. } => EXIT_USAGE,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome::usage(rendered),
            };
        }
    };
    match commands::dispatch(cli.command) {
        Ok(report) => {
            let code = if report.failures.is_empty() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            };
            let stdout = match &report.raw {
                Some(raw) => raw.clone(),
                None => {
                    let mut s = serde_json::to_string_pretty(&report.to_json())
                        .expect("report values are plain JSON");
                    s.push('\n');
                    s
                }
            };
            let mut stderr = report.summary.clone();
            for failure in &report.failures {
                stderr.push_str("\nFAIL ");
                stderr.push_str(failure);
            }
            stderr.push('\n');
            Outcome { code, stdout, stderr }
        }
        Err(failure) => Outcome {
            code: failure.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", failure.message),
        },
    }
}
