//! Text and JSON file formats.

mod decomposition;
mod graph;
mod instance;
mod partition;
mod trace;

pub use decomposition::{parse_decomposition, write_decomposition};
pub use graph::{parse_certificate, parse_graph, write_graph};
pub use instance::{parse_instance, write_instance};
pub use partition::{parse_partition, write_partition};
pub use trace::TraceRecord;

use thiserror::Error;

/// A malformed input file. `line` is 1-based; 0 means the whole file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct FormatError {
    pub line: usize,
    pub msg: String,
}

impl FormatError {
    pub(crate) fn new(line: usize, msg: impl Into<String>) -> Self {
        FormatError { line, msg: msg.into() }
    }

    pub(crate) fn json(e: serde_json::Error) -> Self {
        FormatError { line: e.line(), msg: e.to_string() }
    }
}

/// Non-blank, non-comment lines with their 1-based numbers. Comments start with `c`.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, toks)),
        }
    })
}

pub(crate) fn parse_num(line: usize, tok: &str, what: &str) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| FormatError::new(line, format!("expected {what}, found `{tok}`")))
}
