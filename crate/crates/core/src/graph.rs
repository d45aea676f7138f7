//! Finite simple undirected graphs with dense vertex ids.
//!
//! Edges are stored canonically as `(u, v)` with `u < v`, sorted
//! lexicographically; an edge's identity is its index in that list.

use std::collections::VecDeque;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds the canonical graph on `n` vertices. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn new(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Indices of the edges incident to `v`, in neighbor order.
    pub fn incident_edges(&self, v: Vertex) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.adj[v].iter().map(move |&w| (w, self.edge_index(v, w).expect("adjacency consistent with edges")))
    }

    pub fn stats(&self) -> GraphStats {
        let delta = (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0);
        let max_degree = (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0);
        GraphStats { delta, max_degree, connected: self.is_connected(), is_k2: self.n == 2 && self.edges.len() == 1 }
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected, `2δ ≥ Δ`, and not `K₂`. The one-vertex graph qualifies.
    pub fn satisfies_hypothesis(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let s = self.stats();
        s.connected && 2 * s.delta >= s.max_degree && !s.is_k2
    }

    fn distances_from(&self, root: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[root] = Some(0);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn bfs_levels(&self, root: Vertex) -> Result<LevelStructure, GraphError> {
        if root >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: root, n: self.n });
        }
        let dist = self.distances_from(root);
        let level_of: Vec<usize> = dist.into_iter().collect::<Option<Vec<_>>>().ok_or(GraphError::Disconnected)?;
        let depth = level_of.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); depth + 1];
        for (v, &l) in level_of.iter().enumerate() {
            levels[l].push(v);
        }
        Ok(LevelStructure { root, level_of, levels })
    }

    /// Subgraph induced by `vs`, relabeled `0..|vs|` in ascending order of the
    /// original ids. Returns the graph and the old→new map (`None` outside `vs`).
    pub fn induced_subgraph(&self, vs: &[Vertex]) -> Result<(Graph, Vec<Option<Vertex>>), GraphError> {
        let mut sorted = vs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut map = vec![None; self.n];
        for (i, &v) in sorted.iter().enumerate() {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            map[v] = Some(i);
        }
        let pairs: Vec<_> = self.edges.iter().filter_map(|&(u, v)| Some((map[u]?, map[v]?))).collect();
        Ok((Graph::new(sorted.len(), &pairs)?, map))
    }

    /// Maximal connected vertex sets, each sorted, listed by minimum element.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Applies a vertex relabeling `v ↦ perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        let pairs: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &pairs).expect("relabeling preserves simplicity")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub delta: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub is_k2: bool,
}

/// Vertices grouped by distance from a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelStructure {
    pub root: Vertex,
    pub level_of: Vec<usize>,
    pub levels: Vec<Vec<Vertex>>,
}
