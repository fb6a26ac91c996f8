//! Problem documents, the `equindex` commands, and the conservation harness.
//!
//! Each command returns an [`commands::Outcome`] holding the exit code and
//! the text for stdout and stderr, so the binary is a thin wrapper.

pub mod commands;
pub mod conserve;
pub mod document;

pub use commands::{cmd_chern, cmd_conserve, cmd_index, cmd_validate, Outcome, Settings};
pub use document::{DocumentError, ProblemDocument};
