//! The `extremal` command-line front end and its input format.
//!
//! Commands read one [`InputDocument`] from a file or standard input and
//! write text (or JSON with `--json`) to standard output. Exit codes are
//! [`EXIT_OK`], [`EXIT_FAILED`] when a verification fails, [`EXIT_INPUT`] for
//! unusable input and [`EXIT_UNSTABLE`] when the generic initial ideal does
//! not stabilise.

mod commands;
mod document;

pub use commands::{
    execute, run, run_check, Cli, Command, Common, ConventionArg, Outcome, DEFAULT_SEED,
    EXIT_FAILED, EXIT_INPUT, EXIT_OK, EXIT_UNSTABLE,
};
pub use document::{Body, Generator, InputDocument};
