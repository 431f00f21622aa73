//! The `pcc` command-line tool.
//!
//! Exit codes: 0 on success, 1 for a semantic negative (a coloring that fails
//! to verify, an exact search that does not reach a verdict, a table row that
//! disagrees with its claim), 2 for usage and input errors. Results go to
//! stdout as `key value` lines, diagnostics to stderr.

pub mod args;
mod commands;
mod table;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

/// A failed command together with its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, unreadable files, inputs outside a constructor's domain.
    Usage(String),
    /// The computation ran and the answer is negative.
    Negative(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Negative(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Negative(m) => m,
        }
    }
}

impl From<pcc_core::Error> for Failure {
    fn from(e: pcc_core::Error) -> Self {
        match e {
            pcc_core::Error::Invariant(_) => Failure::Negative(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

pub type CmdResult = Result<(), Failure>;

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Generate(a) => commands::generate(a, out),
        Command::Color(a) => commands::color(a, out),
        Command::Verify(a) => commands::verify(a, out),
        Command::Exact(a) => commands::exact(a, out),
        Command::Table(a) => table::table(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "pcc: {}", f.message());
            f.code()
        }
    }
}
