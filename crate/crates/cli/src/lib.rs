//! Command-line companion to the `monoideal` kernel: file formats,
//! reports, the verification suite, and the `monoideal` binary's logic.

pub mod cli;
pub mod error;
pub mod files;
pub mod report;
pub mod suite;

pub use cli::main_with;
