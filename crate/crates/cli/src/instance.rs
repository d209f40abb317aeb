use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("length mismatch: {a} lower bounds, {b} upper bounds")]
    LengthMismatch { a: usize, b: usize },
    #[error("lower bound exceeds upper bound at vertex {}: {a} > {b}", .index + 1)]
    LowerExceedsUpper { index: usize, a: usize, b: usize },
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
}

/// Lower and upper degree bounds as typed by the user, before normalization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl InstanceSpec {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<Self, ParseError> {
        if a.len() != b.len() {
            return Err(ParseError::LengthMismatch {
                a: a.len(),
                b: b.len(),
            });
        }
        if let Some(index) = a.iter().zip(&b).position(|(x, y)| x > y) {
            return Err(ParseError::LowerExceedsUpper {
                index,
                a: a[index],
                b: b[index],
            });
        }
        Ok(Self { a, b })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// Compact JSON, `{"a":[..],"b":[..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain vectors serialize")
    }
}

/// Canonical inline form, `a1,a2/b1,b2`.
impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}/{}", join(&self.a), join(&self.b))
    }
}

fn parse_list(text: &str, side: &str) -> Result<Vec<usize>, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            let item = item.trim();
            item.parse::<usize>().map_err(|_| {
                ParseError::Syntax(format!(
                    "`{item}` in the {side} bounds is not a non-negative integer"
                ))
            })
        })
        .collect()
}

fn parse_inline(text: &str) -> Result<InstanceSpec, ParseError> {
    let (a, b) = text
        .split_once('/')
        .ok_or_else(|| ParseError::Syntax("expected `a1,a2,.../b1,b2,...`".into()))?;
    if b.contains('/') {
        return Err(ParseError::Syntax("more than one `/`".into()));
    }
    InstanceSpec::new(parse_list(a, "lower")?, parse_list(b, "upper")?)
}

pub fn parse_json(text: &str) -> Result<InstanceSpec, ParseError> {
    let raw: InstanceSpec = serde_json::from_str(text)
        .map_err(|e| ParseError::Syntax(format!("instance JSON: {e}")))?;
    InstanceSpec::new(raw.a, raw.b)
}

fn read_file(path: &str) -> Result<InstanceSpec, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError::Io {
        path: path.to_string(),
        reason: e.to_string(),
    })?;
    parse_json(&text)
}

/// Parses `a1,.../b1,...`, `@path` to a JSON file, or a bare path to an
/// existing JSON file.
pub fn parse_instance(text: &str) -> Result<InstanceSpec, ParseError> {
    let text = text.trim();
    if let Some(path) = text.strip_prefix('@') {
        return read_file(path.trim());
    }
    if Path::new(text).is_file() {
        return read_file(text);
    }
    parse_inline(text)
}
