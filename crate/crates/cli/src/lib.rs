//! Command-line companion to the core crate: argument parsing, config and
//! flag precedence, verification suites, and machine-readable reports.

pub mod cli;
pub mod commands;
pub mod config;
pub mod render;
pub mod report;
pub mod suites;
pub mod values;

use clap::Parser;

/// Argument, config, or input mistake; maps to exit code 64.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Parses `args`, runs the command, prints the report to stdout, and
/// returns the process exit code: 0 verified, 1 counterexample found,
/// 2 unresolved at the precision cap, 64 usage.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let parsed = match cli::Cli::try_parse_from(args) {
        Ok(parsed) => parsed,
        Err(e) => {
            // Help and version land on stdout and succeed; real argument
            // mistakes land on stderr with the usage code.
            let code = if e.use_stderr() { report::EXIT_USAGE } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let format = parsed.format;
    match commands::dispatch(parsed) {
        Ok(report) => {
            print!("{}", render::render(&report, format));
            report.outcome.exit_code()
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            report::EXIT_USAGE
        }
    }
}

pub fn run() -> i32 {
    run_from(std::env::args_os())
}
