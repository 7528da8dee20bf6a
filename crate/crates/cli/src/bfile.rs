//! OEIS b-files: one `n value` pair per line, `#` comments and blank lines
//! ignored, indices strictly increasing.
//!
//! The same layout doubles as the general sequence-file format, where
//! negative indices carry an explicit `-` sign.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("line {line}: expected \"n value\", got {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: index {index} does not exceed the previous index")]
    NotIncreasing { line: usize, index: i64 },
    #[error("line {line}: negative index {index} in a b-file")]
    NegativeIndex { line: usize, index: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BFile {
    entries: Vec<(i64, i64)>,
}

impl BFile {
    /// Parses a b-file; indices must be nonnegative.
    pub fn parse(text: &str) -> Result<BFile, BFileError> {
        let file = BFile::parse_signed(text)?;
        if let Some(&(index, _)) = file.entries.iter().find(|&&(n, _)| n < 0) {
            let line = text
                .lines()
                .position(|l| {
                    l.split_whitespace().next().and_then(|t| t.parse().ok()) == Some(index)
                })
                .map_or(0, |i| i + 1);
            return Err(BFileError::NegativeIndex { line, index });
        }
        Ok(file)
    }

    /// Parses a sequence file, which may also hold negative indices.
    pub fn parse_signed(text: &str) -> Result<BFile, BFileError> {
        let mut entries: Vec<(i64, i64)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = || BFileError::Malformed {
                line: i + 1,
                text: raw.to_string(),
            };
            let mut parts = line.split_whitespace();
            let (Some(n), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(malformed());
            };
            let n: i64 = n.parse().map_err(|_| malformed())?;
            let v: i64 = v.parse().map_err(|_| malformed())?;
            if entries.last().is_some_and(|&(prev, _)| n <= prev) {
                return Err(BFileError::NotIncreasing {
                    line: i + 1,
                    index: n,
                });
            }
            entries.push((n, v));
        }
        Ok(BFile { entries })
    }

    pub fn from_entries(entries: Vec<(i64, i64)>) -> BFile {
        BFile { entries }
    }

    pub fn entries(&self) -> &[(i64, i64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `n value` lines without comments.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (n, v) in &self.entries {
            let _ = writeln!(out, "{n} {v}");
        }
        out
    }
}
