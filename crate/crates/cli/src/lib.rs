//! Command implementations behind the `bernoulli` binary. Every command
//! writes to a caller-supplied sink so it can be exercised in-process.

pub mod args;
pub mod bench;
pub mod commands;
pub mod quadcheck;

use std::io;

use thiserror::Error;

use crate::args::Command;

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    VerificationFailed,
}

impl Status {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Success
        } else {
            Status::VerificationFailed
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::VerificationFailed => 1,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] bernoulli_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for bad input, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Core(_) => 2,
            CliError::Io(_) | CliError::Json(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn run(command: Command, out: &mut dyn io::Write) -> CliResult<Status> {
    match command {
        Command::Bern {
            max,
            formula,
            format,
        } => commands::bern(max as usize, formula, format, out),
        Command::Tables { kind, max, format } => commands::tables(kind, max as usize, format, out),
        Command::Polylog {
            order,
            form,
            eval,
            format,
        } => commands::polylog(order, form, eval.as_deref(), format, out),
        Command::Verify { max_r, format } => commands::run_verify(max_r as usize, format, out),
        Command::Quadcheck {
            identity,
            max_r,
            n,
            tol,
            format,
        } => quadcheck::quadcheck(identity, max_r, n.as_deref(), tol, format, out),
        Command::Bench {
            max_r,
            reps,
            format,
        } => bench::bench(max_r as usize, reps as usize, format, out),
    }
}
