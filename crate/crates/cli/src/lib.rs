//! File formats and subcommands behind the `screw` binary.

pub mod commands;
pub mod error;
pub mod schema;

pub use commands::Report;
pub use error::CliError;
