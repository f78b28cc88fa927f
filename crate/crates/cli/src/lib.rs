//! Command-line front end for the sandpile library: JSON and PGM
//! output, the verification report and the `sandpile` commands.

pub mod commands;
pub mod json;
pub mod pgm;
pub mod report;

pub use commands::CliError;
pub use report::ReportRow;
