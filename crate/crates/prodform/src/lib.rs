//! Command-line front end for `prodform-core`: formula files, run
//! manifests, CSV tables and the `search`, `verify`, `bench` and
//! `threshold` subcommands.

pub mod cli;
pub mod commands;
pub mod error;
pub mod formula_file;
pub mod manifest;
pub mod tables;

pub use cli::main_with_args;
pub use error::{CliError, CliResult};
