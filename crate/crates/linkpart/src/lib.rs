//! File formats, command-line driver and benchmark harness for `linkpart-core`.

pub mod bench;
pub mod cli;
pub mod commands;
pub mod error;
pub mod format;

pub use cli::Cli;
pub use commands::run;
pub use error::CliError;
