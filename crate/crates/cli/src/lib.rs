//! File formats, input handling and subcommands behind the `catprod` binary.

pub mod commands;
pub mod format;
pub mod input;
pub mod term;

pub use commands::{execute, render, Cli, CliError, Report, Status};
