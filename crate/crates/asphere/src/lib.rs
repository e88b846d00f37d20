//! File formats, the command-line front end and the acceptance suite for `asphere-core`.

pub mod acceptance;
pub mod cli;
pub mod format;
pub mod report;
