//! Library half of the `degbox` binary: instance parsing and the
//! subcommand implementations, which return their output instead of
//! printing it.

pub mod commands;
pub mod instance;

pub use commands::{CliError, CrossvalArgs, Format, GraphFormat, Outcome};
pub use instance::{parse_instance, InstanceSpec, ParseError};
