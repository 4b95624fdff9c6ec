//! Command-line front end for `morrey-orlicz`: text grammars for Young and
//! test functions, flat config files, self-describing JSON/CSV reports and
//! seeded verification suites.

pub mod app;
pub mod config;
pub mod error;
pub mod grammar;
pub mod provenance;
pub mod report;
pub mod suites;

pub use app::run;
pub use error::{CliError, CliResult};
