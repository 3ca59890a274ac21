//! Command-line front end for `qconv-core`: reads signal files and filter
//! specifications, runs a convolution pipeline, checks it against direct
//! convolution and writes a JSON or CSV report.
//!
//! Exit codes: 0 when every reported deviation is within tolerance, 1 when
//! one is not, 2 for usage or input errors, 3 when a pipeline rejects its
//! input (for example a post-selection outcome with zero probability).

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod report;
mod worked_examples;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use args::Cli;
pub use commands::run;
pub use error::CliError;

/// Parses `args` (including the program name) and runs the command.
/// Help and version requests print to `out` and return 0; malformed
/// command lines produce an error object and return 2.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            0
        }
        Err(e) => {
            let message = e.to_string();
            let first = message
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            commands::report_error(&CliError::Usage(first.to_string()), out, err)
        }
    }
}
