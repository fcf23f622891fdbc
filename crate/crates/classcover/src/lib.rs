//! File formats, caching and the `classcover` command line on top of
//! `classcover-core`.

pub mod cache;
pub mod cli;
pub mod commands;
pub mod config;
pub mod files;
pub mod report;

use std::ffi::OsString;

use clap::Parser;
use classcover_core::CoreError;

use crate::cli::Cli;
use crate::commands::{Ctx, UsageError};
use crate::config::RunConfig;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Exit code for an error: caps give 3, preconditions and bad input 2,
/// everything else (IO) 1.
pub fn exit_code(e: &anyhow::Error) -> i32 {
    for cause in e.chain() {
        if let Some(c) = cause.downcast_ref::<CoreError>() {
            return if c.is_cap() { EXIT_CAP } else { EXIT_PRECONDITION };
        }
        if cause.is::<UsageError>() {
            return EXIT_PRECONDITION;
        }
    }
    EXIT_FAILURE
}

fn execute(cli: &Cli, argv: &[String]) -> anyhow::Result<i32> {
    let cfg = RunConfig::resolve(&cli.common).map_err(|e| UsageError(format!("{e:#}")))?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cfg.threads {
        pool = pool.num_threads(n);
    }
    let pool = pool.build()?;
    pool.install(|| {
        let mut cfg = cfg.clone();
        if let cli::Command::Cover(a) = &cli.command {
            if let Some(p) = &a.csv {
                cfg.out = Some(p.clone());
                cfg.format = config::Format::Csv;
            }
        }
        let ctx = Ctx::new(&cfg)?;
        let outcome = commands::dispatch(&ctx, &cli.command)?;
        report::emit(&outcome.report, &cfg, argv)?;
        Ok(outcome.code)
    })
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let argv: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PRECONDITION } else { EXIT_OK };
        }
    };
    match execute(&cli, &argv) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("classcover: {e:#}");
            exit_code(&e)
        }
    }
}
