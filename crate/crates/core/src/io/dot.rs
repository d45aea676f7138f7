use std::fmt::Write;

use thiserror::Error;

use crate::color::EdgeColoring;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DotError {
    #[error("edge {edge} has no color")]
    PartialColoring { edge: usize },
    #[error("coloring has {got} entries for {expected} edges")]
    Length { expected: usize, got: usize },
}

/// An undirected DOT graph with one node per vertex and a `color` attribute
/// on every edge.
pub fn emit_dot(g: &Graph, coloring: &EdgeColoring) -> Result<String, DotError> {
    if coloring.len() != g.edge_count() {
        return Err(DotError::Length { expected: g.edge_count(), got: coloring.len() });
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let c = coloring.get(i).ok_or(DotError::PartialColoring { edge: i })?;
        writeln!(out, "  {u} -- {v} [color={c}];").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
