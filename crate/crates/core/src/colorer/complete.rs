//! Base colorings of complete graphs.
//!
//! `K_n` (n ≥ 3) gets the lexicographically first asymmetric coloring (edge
//! order of [`Graph::edges`], red < blue < green) in which every vertex has
//! an incident non-green edge. For `n ≥ 6` only red and blue are used.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::color::{Color, EdgeColoring};
use crate::graph::Graph;
use crate::perm;

pub fn complete_graph(n: usize) -> Graph {
    let mut e = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    Graph::new(n, &e).expect("complete graph is simple")
}

/// Memoized; panics for `n < 3`, which has no asymmetric coloring.
pub fn complete_graph_coloring(n: usize) -> EdgeColoring {
    assert!(n >= 3, "K_{n} has no asymmetric edge coloring");
    static CACHE: OnceLock<Mutex<HashMap<usize, EdgeColoring>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&n) {
        return c.clone();
    }
    let palette: &[Color] = if n >= 6 { &[Color::Red, Color::Blue] } else { &Color::ALL };
    let coloring = LexSearch::new(n, palette).run().expect("complete graphs on ≥ 3 vertices have asymmetric colorings");
    cache.lock().unwrap().insert(n, coloring.clone());
    coloring
}

struct LexSearch<'a> {
    g: Graph,
    palette: &'a [Color],
    colors: Vec<Color>,
    // vertices whose last incident edge is the given edge index
    completes: Vec<Vec<usize>>,
}

impl<'a> LexSearch<'a> {
    fn new(n: usize, palette: &'a [Color]) -> Self {
        let g = complete_graph(n);
        let mut last = vec![0usize; n];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            last[u] = i;
            last[v] = i;
        }
        let mut completes = vec![Vec::new(); g.edge_count()];
        for (v, &i) in last.iter().enumerate() {
            completes[i].push(v);
        }
        LexSearch { g, palette, colors: Vec::new(), completes }
    }

    fn run(mut self) -> Option<EdgeColoring> {
        if self.dfs() {
            Some(EdgeColoring::from_colors(self.colors))
        } else {
            None
        }
    }

    fn color(&self, u: usize, v: usize) -> Color {
        self.colors[self.g.edge_index(u, v).unwrap()]
    }

    /// Rejects prefixes no completion can fix: a finished vertex that is all
    /// green, or two finished vertices swapped by a color-preserving
    /// transposition (which survives any completion).
    fn prefix_ok(&self, edge: usize) -> bool {
        let n = self.g.n();
        for &u in &self.completes[edge] {
            if self.g.neighbors(u).iter().all(|&w| self.color(u, w) == Color::Green) {
                return false;
            }
            for v in 0..n {
                if v == u || !self.finished(v, edge) {
                    continue;
                }
                let twins = (0..n).filter(|&w| w != u && w != v).all(|w| self.color(u, w) == self.color(v, w));
                if twins {
                    return false;
                }
            }
        }
        true
    }

    fn finished(&self, v: usize, upto: usize) -> bool {
        self.completes[..=upto].iter().any(|vs| vs.contains(&v))
    }

    fn dfs(&mut self) -> bool {
        let i = self.colors.len();
        if i == self.g.edge_count() {
            return perm::is_asymmetric(&self.g, &EdgeColoring::from_colors(self.colors.clone()));
        }
        for &c in self.palette {
            self.colors.push(c);
            if self.prefix_ok(i) && self.dfs() {
                return true;
            }
            self.colors.pop();
        }
        false
    }
}
