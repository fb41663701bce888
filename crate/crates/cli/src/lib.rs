//! The `koszulk` command line: argument grammar, dispatch and rendering.
//!
//! [`run`] is the whole program minus process I/O, so tests can drive it
//! in-process.

mod args;
mod commands;
mod render;

use clap::Parser;

pub use args::{Cli, Command, Format};
pub use commands::COVERAGE;
use koszulk_core::Error;

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Default bound on any requested cap, overridable via `KOSZULK_MAX_CAP`.
pub const DEFAULT_MAX_CAP: u64 = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub(crate) fn error_line(kind: &str, message: &str) -> String {
    let v = serde_json::json!({ "error": { "kind": kind, "message": message } });
    format!("{v}\n")
}

fn failure(e: &Error) -> Outcome {
    let code = match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INPUT,
    };
    Outcome {
        code,
        stdout: String::new(),
        stderr: error_line(e.kind(), &e.to_string()),
    }
}

/// Parses `argv` (including the program name) and runs one command.
/// `max_cap` is the value of `KOSZULK_MAX_CAP`, if set.
pub fn run<I, T>(argv: I, max_cap: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: e.render().to_string(),
                    stderr: String::new(),
                },
                _ => {
                    let msg = e.render().to_string();
                    let first = msg
                        .lines()
                        .next()
                        .unwrap_or("invalid arguments")
                        .trim_start_matches("error: ");
                    Outcome {
                        code: EXIT_INPUT,
                        stdout: String::new(),
                        stderr: error_line("usage", first),
                    }
                }
            };
        }
    };
    let max_cap = match max_cap {
        None => DEFAULT_MAX_CAP,
        Some(s) => match s.trim().parse() {
            Ok(v) => v,
            Err(_) => {
                let e = Error::InvalidArgument(format!(
                    "KOSZULK_MAX_CAP must be a nonnegative integer, got `{s}`"
                ));
                return failure(&e);
            }
        },
    };
    match commands::dispatch(&cli, max_cap) {
        Ok(out) => {
            let code = if out.passed { EXIT_OK } else { EXIT_VERIFY };
            Outcome {
                code,
                stdout: out.render(cli.format),
                stderr: String::new(),
            }
        }
        Err(e) => failure(&e),
    }
}
