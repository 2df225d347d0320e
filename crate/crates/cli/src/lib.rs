//! JSON documents and command implementations for the `tropcrit` binary.

pub mod commands;
pub mod document;
pub mod error;
pub mod report;

pub use commands::{run, Options, Outcome};
pub use document::{ElementRef, MatroidDocument, MatroidSpec};
pub use error::CliError;
pub use report::{CommandName, ResultDocument};
