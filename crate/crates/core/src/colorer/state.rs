//! Procedure state: the growing coloring, the level structure around the
//! root, and the orbit partition of the color-preserving root stabilizer.

use crate::color::{Color, EdgeColoring};
use crate::graph::{Graph, LevelStructure, Vertex};
use crate::perm::{self, OrbitPartition};

/// Per-vertex counts for an orbit (all vertices of an orbit agree).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitStats {
    /// Colored edges leaving the orbit.
    pub t: usize,
    /// Edges inside the orbit.
    pub r: usize,
    /// Uncolored edges leaving the orbit.
    pub k: usize,
    pub d: usize,
    /// Components of the induced subgraph.
    pub m: usize,
    pub n_comp: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    /// Every processed vertex is fixed.
    pub c1: bool,
    /// Orbits with colored incoming edges are small enough.
    pub c2: bool,
    /// Only the root sees nothing but red.
    pub c3: bool,
    /// `m·(r+1) ≤ δ−t+1` and `|O| ≤ r+k+1` for the same orbits.
    pub inequalities: bool,
    pub violating_orbit: Option<Vec<Vertex>>,
    pub step_index: usize,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.c1 && self.c2 && self.c3 && self.inequalities
    }
}

#[derive(Debug, Clone)]
pub struct ProcState {
    pub graph: Graph,
    pub levels: LevelStructure,
    pub coloring: EdgeColoring,
    pub processed: Vec<bool>,
    pub orbits: OrbitPartition,
    pub paranoid: bool,
    pub delta: usize,
    pub step_index: usize,
}

/// The lowest-index vertex of minimum degree.
pub fn choose_root(g: &Graph) -> Vertex {
    (0..g.n()).min_by_key(|&v| (g.degree(v), v)).unwrap_or(0)
}

impl ProcState {
    /// Requires a connected graph with at least one vertex.
    pub fn new(graph: Graph, paranoid: bool) -> Self {
        let root = choose_root(&graph);
        let levels = graph.bfs_levels(root).expect("procedure runs on connected graphs");
        let delta = graph.degree(root);
        let n = graph.n();
        ProcState {
            coloring: EdgeColoring::uncolored(graph.edge_count()),
            orbits: OrbitPartition::from_blocks(vec![(0..n).collect()]),
            processed: vec![false; n],
            levels,
            graph,
            paranoid,
            delta,
            step_index: 0,
        }
    }

    pub fn root(&self) -> Vertex {
        self.levels.root
    }

    /// Colors every root edge red and marks the root processed.
    pub fn initial_step(&mut self) {
        let root = self.root();
        let edges: Vec<usize> = self.graph.incident_edges(root).map(|(_, e)| e).collect();
        for e in edges {
            self.coloring.set(e, Color::Red);
        }
        self.processed[root] = true;
        self.refresh_orbits();
    }

    pub fn refresh_orbits(&mut self) {
        self.orbits = perm::stabilizer_orbits(&self.graph, &self.coloring, self.root())
            .expect("state coloring matches its graph");
    }

    pub fn color_between(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.coloring.get(self.graph.edge_index(u, v).expect("edge exists"))
    }

    pub fn set_color(&mut self, u: Vertex, v: Vertex, c: Color) {
        let e = self.graph.edge_index(u, v).expect("edge exists");
        debug_assert!(self.coloring.get(e).is_none(), "edge ({u},{v}) colored twice");
        self.coloring.set(e, c);
    }

    pub fn uncolored_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.graph.incident_edges(v).filter(|&(_, e)| self.coloring.get(e).is_none()).map(|(w, _)| w)
    }

    pub fn has_uncolored(&self, v: Vertex) -> bool {
        self.uncolored_neighbors(v).next().is_some()
    }

    pub fn level_of(&self, v: Vertex) -> usize {
        self.levels.level_of[v]
    }

    pub fn orbit_stats(&self, orbit: &[Vertex]) -> OrbitStats {
        let inside = membership(self.graph.n(), orbit);
        let v = orbit[0];
        let (mut t, mut r, mut k) = (0, 0, 0);
        for (w, e) in self.graph.incident_edges(v) {
            if inside[w] {
                r += 1;
            } else if self.coloring.get(e).is_some() {
                t += 1;
            } else {
                k += 1;
            }
        }
        let (h, _) = self.graph.induced_subgraph(orbit).expect("orbit vertices in range");
        let comps = h.connected_components();
        OrbitStats { t, r, k, d: self.graph.degree(v), m: comps.len(), n_comp: comps[0].len() }
    }

    /// Lowest level first, then the largest orbit, then the smallest vertex.
    pub fn next_orbit(&self) -> Option<Vec<Vertex>> {
        self.orbits
            .blocks()
            .iter()
            .filter(|b| b.iter().all(|&v| !self.processed[v]) && b.iter().any(|&v| self.has_uncolored(v)))
            .min_by_key(|b| (self.level_of(b[0]), std::cmp::Reverse(b.len()), b[0]))
            .cloned()
    }

    /// Evaluates the three step conditions against the current orbits.
    pub fn check_conditions(&self) -> ConditionReport {
        let mut report = ConditionReport {
            c1: true,
            c2: true,
            c3: true,
            inequalities: true,
            violating_orbit: None,
            step_index: self.step_index,
        };
        for block in self.orbits.blocks() {
            if block.len() > 1 && block.iter().any(|&v| self.processed[v]) {
                report.c1 = false;
                report.violating_orbit.get_or_insert_with(|| block.clone());
            }
            if block.len() == 1 {
                continue;
            }
            let s = self.orbit_stats(block);
            if s.t == 0 {
                continue;
            }
            let room = self.delta as i64 - s.t as i64 + 1;
            if block.len() as i64 > room {
                report.c2 = false;
                report.violating_orbit.get_or_insert_with(|| block.clone());
            }
            if (s.m * (s.r + 1)) as i64 > room || block.len() > s.r + s.k + 1 {
                report.inequalities = false;
                report.violating_orbit.get_or_insert_with(|| block.clone());
            }
        }
        for v in 0..self.graph.n() {
            if v != self.root() && self.all_red(v) {
                report.c3 = false;
                report.violating_orbit.get_or_insert_with(|| vec![v]);
            }
        }
        report
    }

    /// Degree > 0 and every incident edge is colored red.
    pub fn all_red(&self, v: Vertex) -> bool {
        self.graph.degree(v) > 0 && self.graph.incident_edges(v).all(|(_, e)| self.coloring.get(e) == Some(Color::Red))
    }
}

pub(crate) fn membership(n: usize, vs: &[Vertex]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in vs {
        m[v] = true;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn k24() -> Graph {
        let mut e = Vec::new();
        for a in 0..2 {
            for b in 2..6 {
                e.push((a, b));
            }
        }
        Graph::new(6, &e).unwrap()
    }

    #[test]
    fn roots() {
        assert_eq!(choose_root(&k24()), 2);
        assert_eq!(choose_root(&cycle(5)), 0);
        assert_eq!(choose_root(&Graph::new(3, &[(0, 1), (1, 2)]).unwrap()), 0);
    }

    #[test]
    fn initial_step_colors_root_edges() {
        let mut st = ProcState::new(cycle(5), true);
        st.initial_step();
        let g = &st.graph;
        assert_eq!(st.coloring.get(g.edge_index(0, 1).unwrap()), Some(Color::Red));
        assert_eq!(st.coloring.get(g.edge_index(0, 4).unwrap()), Some(Color::Red));
        assert_eq!(st.coloring.uncolored_count(), 3);
        assert!(st.processed[0]);
        assert!(st.check_conditions().all_hold());
        assert_eq!(st.next_orbit(), Some(vec![1, 4]));

        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let mut st = ProcState::new(p3, true);
        st.initial_step();
        assert_eq!(st.coloring.as_slice(), &[Some(Color::Red), None]);
    }

    #[test]
    fn next_orbit_on_k24() {
        let mut st = ProcState::new(k24(), true);
        st.initial_step();
        assert_eq!(st.next_orbit(), Some(vec![0, 1]));
        let s = st.orbit_stats(&[0, 1]);
        assert_eq!((s.t, s.r, s.k, s.d, s.m, s.n_comp), (1, 0, 3, 4, 2, 1));
    }

    #[test]
    fn fully_colored_state_has_no_next_orbit() {
        let mut st = ProcState::new(cycle(4), false);
        for e in 0..4 {
            st.coloring.set(e, Color::Blue);
        }
        st.refresh_orbits();
        assert_eq!(st.next_orbit(), None);
    }

    #[test]
    fn oversized_colored_block_breaks_c2() {
        // K_{2,3}: 2-side {0,1}, root 2; level 2 = {3,4}.
        let mut e = Vec::new();
        for a in 0..2 {
            for b in 2..5 {
                e.push((a, b));
            }
        }
        let mut st = ProcState::new(Graph::new(5, &e).unwrap(), true);
        st.initial_step();
        for (a, b) in [(0, 3), (0, 4), (1, 3), (1, 4)] {
            st.set_color(a, b, Color::Blue);
        }
        st.refresh_orbits();
        // {0,1} has t = 3, so it may hold δ−t+1 = 0 vertices; it holds 2
        assert_eq!(st.orbits.block_containing(0), &[0, 1]);
        let rep = st.check_conditions();
        assert!(!rep.c2);
        assert_eq!(rep.violating_orbit, Some(vec![0, 1]));
    }
}
