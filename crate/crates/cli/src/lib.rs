//! File formats, command-line front end and verification suites for `posetdim`.

pub mod commands;
pub mod error;
pub mod format;
pub mod harness;
pub mod hasse;

pub use commands::run_command;
pub use error::{CliError, CliResult};
pub use format::{emit_incidence, emit_poset, parse_document, parse_incidence, parse_poset, Document, PosetDocument};
pub use harness::{verify_suite, Harness, Suite, VerifyReport};
pub use hasse::export_hasse;
