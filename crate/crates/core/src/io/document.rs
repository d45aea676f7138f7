//! The JSON coloring document.
//!
//! ```json
//! {"n": 3, "edges": [[0, 1, "red"], [0, 2, "blue"], [1, 2, "green"]],
//!  "meta": {"root": 0, "version": "0.1.0", "verified": true}}
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::color::{Color, EdgeColoring};
use crate::graph::{Graph, Vertex};

pub const PROCEDURE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEntry(pub Vertex, pub Vertex, pub Color);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub root: Option<Vertex>,
    pub version: String,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub n: usize,
    pub edges: Vec<EdgeEntry>,
    pub meta: Meta,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("document has {doc} vertices, graph has {graph}")]
    VertexCount { doc: usize, graph: usize },
    #[error("edge ({0},{1}) is not in the graph")]
    UnknownEdge(Vertex, Vertex),
    #[error("edge ({0},{1}) listed twice")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph edge ({0},{1}) missing from the document")]
    MissingEdge(Vertex, Vertex),
    #[error("coloring is not total")]
    Partial,
}

impl ColoringDocument {
    pub fn new(
        g: &Graph,
        coloring: &EdgeColoring,
        root: Option<Vertex>,
        verified: bool,
    ) -> Result<Self, DocumentError> {
        let colors = coloring.to_total().filter(|c| c.len() == g.edge_count()).ok_or(DocumentError::Partial)?;
        let edges = g.edges().iter().zip(colors).map(|(&(u, v), c)| EdgeEntry(u, v, c)).collect();
        Ok(ColoringDocument { n: g.n(), edges, meta: Meta { root, version: PROCEDURE_VERSION.to_string(), verified } })
    }

    /// The coloring of `g` the document describes; every edge of `g` must
    /// appear exactly once (in either orientation).
    pub fn coloring_for(&self, g: &Graph) -> Result<EdgeColoring, DocumentError> {
        if self.n != g.n() {
            return Err(DocumentError::VertexCount { doc: self.n, graph: g.n() });
        }
        let mut out = EdgeColoring::uncolored(g.edge_count());
        for &EdgeEntry(u, v, c) in &self.edges {
            let e = g.edge_index(u, v).ok_or(DocumentError::UnknownEdge(u, v))?;
            if out.get(e).is_some() {
                return Err(DocumentError::DuplicateEdge(u, v));
            }
            out.set(e, c);
        }
        if let Some(e) = (0..g.edge_count()).find(|&e| out.get(e).is_none()) {
            let (u, v) = g.edges()[e];
            return Err(DocumentError::MissingEdge(u, v));
        }
        Ok(out)
    }

    /// One edge per line.
    pub fn to_json(&self) -> String {
        let edges: Vec<String> =
            self.edges.iter().map(|e| format!("    {}", serde_json::to_string(e).expect("edge serializes"))).collect();
        let meta = serde_json::to_string(&self.meta).expect("meta serializes");
        if edges.is_empty() {
            return format!("{{\n  \"n\": {},\n  \"edges\": [],\n  \"meta\": {meta}\n}}", self.n);
        }
        format!("{{\n  \"n\": {},\n  \"edges\": [\n{}\n  ],\n  \"meta\": {meta}\n}}", self.n, edges.join(",\n"))
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
