//! Parsing, reporting and command dispatch for the `matroidal-kit` binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod parse;
pub mod report;
pub mod reproduce;

pub use commands::{run_command, Command, Output};
pub use config::{Config, OutputFormat};
pub use error::CliError;
