//! File formats, graph families, and the JSON coloring document.

pub mod document;
pub mod dot;
pub mod edgelist;
pub mod families;
pub mod graph6;

use thiserror::Error;

pub use document::{ColoringDocument, DocumentError, EdgeEntry, Meta};
pub use dot::{emit_dot, DotError};
pub use edgelist::parse_edgelist;
pub use families::{generate, Family, FamilyError};
pub use graph6::{encode_graph6, parse_graph6};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
}

/// Graph input formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Edgelist,
}

/// Parses `text` in the given format, or guesses: a single token made of
/// graph6 characters is graph6, anything else an edge list.
pub fn parse_graph(text: &str, format: Option<Format>) -> Result<crate::Graph, ParseError> {
    let format = format.unwrap_or_else(|| {
        let body: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
        let g6_like = body.len() == 1
            && !body[0].contains(char::is_whitespace)
            && !body[0].starts_with("n=")
            && body[0].bytes().all(|b| (63..=126).contains(&b));
        if g6_like {
            Format::Graph6
        } else {
            Format::Edgelist
        }
    });
    match format {
        Format::Graph6 => parse_graph6(text),
        Format::Edgelist => parse_edgelist(text),
    }
}
