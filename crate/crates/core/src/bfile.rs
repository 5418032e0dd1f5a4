//! Sequence files of `index value` lines, `#` comments ignored, and
//! prefix comparison against computed terms.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::series::{format_coef, Coef};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BFileError {
    #[error("line {line}: expected `index value`, found {found:?}")]
    Malformed { line: usize, found: String },
    #[error("line {line}: index {index} does not follow {previous}")]
    NotIncreasing {
        line: usize,
        index: i64,
        previous: i64,
    },
}

/// Indices strictly increase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    entries: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn parse(text: &str) -> Result<Self, BFileError> {
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let malformed = || BFileError::Malformed {
                line,
                found: trimmed.to_string(),
            };
            let mut fields = trimmed.split_whitespace();
            let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(malformed());
            };
            let index: i64 = idx.parse().map_err(|_| malformed())?;
            let value: BigInt = val.parse().map_err(|_| malformed())?;
            if let Some(&(previous, _)) = entries.last() {
                if index <= previous {
                    return Err(BFileError::NotIncreasing {
                        line,
                        index,
                        previous,
                    });
                }
            }
            entries.push((index, value));
        }
        Ok(BFile { entries })
    }

    pub fn entries(&self) -> &[(i64, BigInt)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn value_at(&self, index: i64) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&index, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub index: usize,
    pub expected: String,
    pub actual: String,
}

/// `matched` counts leading terms that agree; comparison stops at the first
/// mismatch or at the first term the file does not cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BFileComparison {
    pub compared: usize,
    pub matched: usize,
    pub mismatch: Option<Mismatch>,
}

impl BFileComparison {
    pub fn full_match(&self) -> bool {
        self.mismatch.is_none() && self.matched == self.compared
    }
}

/// Our term `k` is compared with file index `k + offset`.
pub fn compare(terms: &[Coef], bfile: &BFile, offset: i64) -> BFileComparison {
    let mut matched = 0;
    let mut compared = 0;
    for (k, term) in terms.iter().enumerate() {
        let Some(expected) = bfile.value_at(k as i64 + offset) else {
            break;
        };
        compared += 1;
        if !term.is_integer() || term.numer() != expected {
            return BFileComparison {
                compared,
                matched,
                mismatch: Some(Mismatch {
                    index: k,
                    expected: expected.to_string(),
                    actual: format_coef(term),
                }),
            };
        }
        matched += 1;
    }
    BFileComparison {
        compared,
        matched,
        mismatch: None,
    }
}
