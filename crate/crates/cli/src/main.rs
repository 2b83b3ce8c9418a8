//! `junta`: tables, constants and checks from the command line.
//!
//! Exit codes: 0 on success, 1 when a verification or certificate check
//! fails, 2 on usage, parse or I/O errors.

mod args;
mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(junta_core::Error),
}

impl From<junta_core::Error> for CliError {
    fn from(e: junta_core::Error) -> Self {
        Self::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Usage(m) => f.write_str(m),
            Self::Core(e) => write!(f, "{e}"),
        }
    }
}

/// What a command printed and whether everything it checked held.
pub struct Outcome {
    pub stdout: String,
    pub ok: bool,
}

impl Outcome {
    pub fn success(stdout: String) -> Self {
        Self { stdout, ok: true }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let c = &cli.common;
    match &cli.command {
        Command::BsTable(a) => commands::tables::bs_table(c, a),
        Command::WTable(a) => commands::tables::w_table(c, a),
        Command::WStar(a) => commands::tables::w_star(c, a),
        Command::Baseline(a) => commands::tables::baseline(c, a),
        Command::Analyze(a) => commands::analyze::run(c, a),
        Command::Verify(a) => commands::verify::run(c, a),
        Command::LpCheck(a) => commands::lp_check::run(c, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.common.jobs)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.stdout.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
