//! Library half of the `dicke` command-line tool: density-matrix files,
//! single-state reports and field sweeps.

pub mod commands;
pub mod error;
pub mod matrix_file;
pub mod sweep;

pub use error::{CliError, Result};
