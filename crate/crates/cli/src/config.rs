//! Run configuration: all numeric bounds, the output format and the printing
//! precision, read from a `key = value` file.
//!
//! The file is taken from `--config` when given, otherwise from the path in
//! `MOCKCHAR_CONFIG`, otherwise defaults apply.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use mockchar::classify::ClassifyParams;
use serde::Serialize;
use thiserror::Error;

pub const CONFIG_ENV: &str = "MOCKCHAR_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("line {line}: expected key = value")]
    Syntax { line: usize },
    #[error("line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: bad value for {key}: {message}")]
    BadValue {
        line: usize,
        key: String,
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub classify: ClassifyParams,
    pub format: OutputFormat,
    /// Digits after the point for floating output; `None` prints the
    /// shortest representation that reads back exactly, switching to
    /// exponent notation for very small or large magnitudes.
    pub precision: Option<usize>,
    pub f4_truncation: usize,
    /// Range replayed against a synthesized automaton before it is emitted.
    pub replay_bound: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            classify: ClassifyParams::default(),
            format: OutputFormat::Json,
            precision: None,
            f4_truncation: 4096,
            replay_bound: 10_000,
        }
    }
}

fn positive<T: FromStr + PartialOrd + Default>(value: &str) -> Result<T, String> {
    let v: T = value
        .parse()
        .map_err(|_| format!("{value:?} is not a number"))?;
    if v <= T::default() {
        return Err("must be positive".into());
    }
    Ok(v)
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<RunConfig, ConfigError> {
        let mut cfg = RunConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or(ConfigError::Syntax { line: i + 1 })?;
            let (key, value) = (key.trim(), value.trim());
            cfg.set(key, value).map_err(|message| match message {
                None => ConfigError::UnknownKey {
                    line: i + 1,
                    key: key.to_string(),
                },
                Some(message) => ConfigError::BadValue {
                    line: i + 1,
                    key: key.to_string(),
                    message,
                },
            })?;
        }
        Ok(cfg)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), Option<String>> {
        let c = &mut self.classify;
        match key {
            "mult_bound" => c.mult_bound = positive(value)?,
            "zero_prime_bound" => c.zero_prime_bound = positive(value)?,
            "zero_check_bound" => c.zero_check_bound = positive(value)?,
            "prefix_len" => c.prefix_len = positive(value)?,
            "max_preperiod" => c.max_preperiod = positive(value)?,
            "max_period" => c.max_period = positive(value)?,
            "kernel_window" => c.kernel.window = positive(value)?,
            "kernel_max_depth" => c.kernel.max_depth = positive(value)?,
            "kernel_max_size" => c.kernel.max_size = positive(value)?,
            "f4_truncation" => self.f4_truncation = positive(value)?,
            "replay_bound" => self.replay_bound = positive(value)?,
            "precision" => self.precision = Some(positive(value)?),
            "format" => self.format = value.parse().map_err(Some)?,
            _ => return Err(None),
        }
        Ok(())
    }

    pub fn read(path: &Path) -> Result<RunConfig, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        RunConfig::parse(&text)
    }

    /// `explicit` wins over the environment variable.
    pub fn load(explicit: Option<&Path>) -> Result<RunConfig, ConfigError> {
        match explicit {
            Some(path) => RunConfig::read(path),
            None => match std::env::var_os(CONFIG_ENV) {
                Some(path) if !path.is_empty() => RunConfig::read(Path::new(&path)),
                _ => Ok(RunConfig::default()),
            },
        }
    }

    /// Formats a float per the precision setting.
    pub fn number(&self, x: f64) -> String {
        match self.precision {
            Some(p) => format!("{x:.p$}"),
            None => format!("{x:?}"),
        }
    }
}
