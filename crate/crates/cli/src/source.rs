//! Input sources: `kron:A`, `paperfold`, `char:D`, `const:1` and
//! `file:PATH` (a sequence file with values in {-1, 0, 1}).

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use mockchar::arithfun::{ArithmeticFunction, DirichletCharacter, UnitValue};
use thiserror::Error;

use crate::bfile::{BFile, BFileError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SourceError {
    #[error("unknown source {0:?}; expected kron:A, paperfold, char:D, const:1 or file:PATH")]
    Unknown(String),
    #[error("{0:?} is not an integer")]
    BadInteger(String),
    #[error("no character for discriminant {0}: {1}")]
    NoCharacter(i64, String),
    #[error("cannot read {0}: {1}")]
    Io(String, String),
    #[error(transparent)]
    File(#[from] BFileError),
    #[error("value {value} at index {index} is not -1, 0 or 1")]
    BadValue { index: i64, value: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceSpec {
    Kron(i64),
    Paperfold,
    Char(i64),
    One,
    File(PathBuf),
}

fn integer(s: &str) -> Result<i64, SourceError> {
    s.parse()
        .map_err(|_| SourceError::BadInteger(s.to_string()))
}

impl FromStr for SourceSpec {
    type Err = SourceError;

    fn from_str(s: &str) -> Result<Self, SourceError> {
        match s.split_once(':') {
            None if s == "paperfold" => Ok(SourceSpec::Paperfold),
            Some(("kron", a)) => Ok(SourceSpec::Kron(integer(a)?)),
            Some(("char", d)) => Ok(SourceSpec::Char(integer(d)?)),
            Some(("const", "1")) => Ok(SourceSpec::One),
            Some(("file", path)) if !path.is_empty() => Ok(SourceSpec::File(PathBuf::from(path))),
            _ => Err(SourceError::Unknown(s.to_string())),
        }
    }
}

impl fmt::Display for SourceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceSpec::Kron(a) => write!(f, "kron:{a}"),
            SourceSpec::Paperfold => f.write_str("paperfold"),
            SourceSpec::Char(d) => write!(f, "char:{d}"),
            SourceSpec::One => f.write_str("const:1"),
            SourceSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// A finite function from sequence-file entries; indices not listed map to 0
/// and the domain ends at the first missing positive index.
pub fn function_from_file(label: String, file: &BFile) -> Result<ArithmeticFunction, SourceError> {
    let mut values = BTreeMap::new();
    for &(index, value) in file.entries() {
        let v = match value {
            1 => UnitValue::ONE,
            0 => UnitValue::Zero,
            -1 => UnitValue::MINUS_ONE,
            _ => return Err(SourceError::BadValue { index, value }),
        };
        values.insert(index, v);
    }
    values.entry(0).or_insert(UnitValue::Zero);
    Ok(ArithmeticFunction::from_values(label, values))
}

impl SourceSpec {
    pub fn build(&self) -> Result<ArithmeticFunction, SourceError> {
        match self {
            SourceSpec::Kron(a) => Ok(ArithmeticFunction::kronecker(*a)),
            SourceSpec::Paperfold => Ok(ArithmeticFunction::paperfolding()),
            SourceSpec::Char(d) => DirichletCharacter::kronecker(*d)
                .map(|chi| chi.to_function().with_label(self.to_string()))
                .map_err(|e| SourceError::NoCharacter(*d, e.to_string())),
            SourceSpec::One => Ok(ArithmeticFunction::one()),
            SourceSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| SourceError::Io(path.display().to_string(), e.to_string()))?;
                function_from_file(self.to_string(), &BFile::parse_signed(&text)?)
            }
        }
    }
}
