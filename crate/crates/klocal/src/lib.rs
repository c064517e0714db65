//! Command-line front end: verification reports as JSON, sweeps as CSV.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::Parser;

pub mod args;
pub mod config;
pub mod qca;
pub mod report;
pub mod sweep;
pub mod verify;

use args::{Cli, Command};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, sizes or configuration.
    Usage(String),
    Io(String),
    Internal(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

/// Rendered report and whether every check passed.
#[derive(Debug)]
pub struct Outcome {
    pub pass: bool,
    pub text: String,
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Verify1d(a) => verify::verify_1d(a),
        Command::Verify2d(a) => verify::verify_2d(a),
        Command::VerifySspt(a) => verify::verify_sspt(a),
        Command::VerifyOneToAll(a) => verify::verify_one_to_all(a),
        Command::QcaVerify(a) => qca::qca_verify(a),
        Command::QcaIndex(a) => qca::qca_index(a),
        Command::MonitoredSweep(a) => Ok(Outcome { pass: true, text: sweep::monitored_sweep(a)? }),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

/// Parse, run and report; returns the process exit code.
pub fn run<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let args = match config::expand_args(args.into_iter().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = execute(&cli).and_then(|o| emit(&cli, &o.text).map(|_| o.pass));
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => {
            eprintln!("{}: identity check failed", cli.command.name());
            EXIT_FAILED
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
                CliError::Internal(_) => EXIT_FAILED,
            }
        }
    }
}
