//! File formats, configuration and input parsing for the `mockchar` binary.

pub mod bfile;
pub mod config;
pub mod source;

pub use bfile::{BFile, BFileError};
pub use config::{ConfigError, OutputFormat, RunConfig, CONFIG_ENV};
pub use source::{SourceError, SourceSpec};
