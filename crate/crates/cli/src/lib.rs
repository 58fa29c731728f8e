//! Library side of the `cartbc` command-line tool.

pub mod bench;
pub mod commands;
pub mod edgelist;
pub mod error;
pub mod report;
pub mod verify;

pub use commands::{run, Cli};
pub use error::CliError;
