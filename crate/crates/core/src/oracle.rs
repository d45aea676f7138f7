//! Brute-force ground truth for small graphs: the distinguishing index by
//! exhaustive search, and one representative per isomorphism class of
//! connected graphs.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::color::{Color, EdgeColoring};
use crate::graph::{Graph, Vertex};
use crate::perm;

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search budget of {0} steps exhausted")]
    BudgetExceeded(u64),
    #[error("enumeration supports at most {MAX_ENUMERATION_ORDER} vertices, got {0}")]
    TooLarge(usize),
}

/// An asymmetric coloring with colors `0..r`, one label per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub labels: Vec<u8>,
}

impl Witness {
    pub fn colors_used(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// Red, blue, green for labels 0, 1, 2; `None` with four or more colors.
    pub fn to_coloring(&self) -> Option<EdgeColoring> {
        let colors = self.labels.iter().map(|&l| Color::ALL.get(l as usize).copied()).collect::<Option<Vec<_>>>()?;
        Some(EdgeColoring::from_colors(colors))
    }
}

/// Searches colorings with at most `r` colors, up to renaming of colors
/// (labels appear in order of first use, so the first edge has color 0).
/// `budget` bounds the number of search nodes plus automorphism checks.
pub fn exists_asymmetric_coloring(g: &Graph, r: usize, budget: u64) -> Result<Option<Witness>, OracleError> {
    assert!(r >= 1, "need at least one color");
    let mut s = Search::new(g, r.min(250), budget);
    let found = s.dfs(0, 0)?;
    Ok(found.then(|| {
        let labels = s.labels.iter().map(|&l| l as u8).collect::<Vec<_>>();
        debug_assert!(perm::find_symmetry_labeled(g, &labels).unwrap().is_none());
        Witness { labels }
    }))
}

/// The least `r ≤ max_r` admitting an asymmetric coloring.
pub fn distinguishing_index(g: &Graph, max_r: usize, budget: u64) -> Result<Option<usize>, OracleError> {
    for r in 1..=max_r {
        if exists_asymmetric_coloring(g, r, budget)?.is_some() {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

struct Search<'a> {
    g: &'a Graph,
    r: usize,
    budget: u64,
    spent: u64,
    labels: Vec<i16>,
    // label of edge {u,v} at u*n+v; -1 for non-edges and uncolored edges
    matrix: Vec<i16>,
    // vertices whose last incident edge (in edge order) is the given edge
    completes: Vec<Vec<Vertex>>,
    done: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, r: usize, budget: u64) -> Self {
        let n = g.n();
        let mut completes = vec![Vec::new(); g.edge_count()];
        for v in 0..n {
            if let Some(last) = g.incident_edges(v).map(|(_, e)| e).max() {
                completes[last].push(v);
            }
        }
        Search { g, r, budget, spent: 0, labels: Vec::new(), matrix: vec![-1; n * n], completes, done: vec![false; n] }
    }

    fn tick(&mut self) -> Result<(), OracleError> {
        self.spent += 1;
        if self.spent > self.budget {
            Err(OracleError::BudgetExceeded(self.budget))
        } else {
            Ok(())
        }
    }

    fn dfs(&mut self, edge: usize, used: usize) -> Result<bool, OracleError> {
        self.tick()?;
        if edge == self.g.edge_count() {
            let labels: Vec<u8> = self.labels.iter().map(|&l| l as u8).collect();
            return Ok(perm::find_symmetry_labeled(self.g, &labels).expect("labels match graph").is_none());
        }
        let (u, v) = self.g.edges()[edge];
        let n = self.g.n();
        for c in 0..(used + 1).min(self.r) {
            self.labels.push(c as i16);
            self.matrix[u * n + v] = c as i16;
            self.matrix[v * n + u] = c as i16;
            for &w in &self.completes[edge] {
                self.done[w] = true;
            }
            if !self.has_finished_twins(edge) && self.dfs(edge + 1, used.max(c + 1))? {
                return Ok(true);
            }
            for &w in &self.completes[edge] {
                self.done[w] = false;
            }
            self.labels.pop();
            self.matrix[u * n + v] = -1;
            self.matrix[v * n + u] = -1;
        }
        Ok(false)
    }

    /// Two fully colored vertices whose exchange preserves all colors stay
    /// exchangeable whatever happens to the remaining edges.
    fn has_finished_twins(&self, edge: usize) -> bool {
        let n = self.g.n();
        for &u in &self.completes[edge] {
            for v in (0..n).filter(|&v| v != u && self.done[v]) {
                let same = (0..n).filter(|&w| w != u && w != v).all(|w| {
                    let a = self.g.has_edge(u, w).then(|| self.matrix[u * n + w]);
                    let b = self.g.has_edge(v, w).then(|| self.matrix[v * n + w]);
                    a == b
                });
                if same {
                    return true;
                }
            }
        }
        false
    }
}

/// The least code over relabelings that list vertices by nondecreasing
/// degree; equal exactly for isomorphic graphs. A code lists the
/// upper-triangle adjacency bits in column order ((0,1), (0,2), (1,2),
/// (0,3), ...), first pair in the most significant position.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    let mut by_degree: Vec<Vertex> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let slot_degree: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let mut best: Option<u64> = None;
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    canon_dfs(g, &slot_degree, &mut order, &mut used, 0, &mut best);
    best.unwrap()
}

fn canon_dfs(
    g: &Graph,
    slot_degree: &[usize],
    order: &mut Vec<Vertex>,
    used: &mut [bool],
    prefix: u64,
    best: &mut Option<u64>,
) {
    let n = g.n();
    let j = order.len();
    if j == n {
        if best.is_none_or(|b| prefix < b) {
            *best = Some(prefix);
        }
        return;
    }
    // bits placed so far cover columns 1..j; compare against best's prefix
    let placed = j * j.saturating_sub(1) / 2;
    let total = n * (n - 1) / 2;
    for v in 0..n {
        if used[v] || g.degree(v) != slot_degree[j] {
            continue;
        }
        let mut code = prefix;
        for &w in order.iter() {
            code = code << 1 | u64::from(g.has_edge(w, v));
        }
        let width = placed + j;
        if let Some(b) = *best {
            if code > b >> (total - width) {
                continue;
            }
        }
        used[v] = true;
        order.push(v);
        canon_dfs(g, slot_degree, order, used, code, best);
        order.pop();
        used[v] = false;
    }
}

fn decode(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut bit = total;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("decoded pairs are simple")
}

/// One graph per isomorphism class of connected graphs on `n` vertices,
/// each in its canonical labeling, ordered by edge count then code.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// extending each class on `n − 1` vertices by a new vertex in every
/// possible way reaches all classes on `n`.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, OracleError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(OracleError::TooLarge(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut layer: BTreeSet<u64> = BTreeSet::from([0]);
    for size in 2..=n {
        let prev: Vec<Graph> = layer.iter().map(|&c| decode(size - 1, c)).collect();
        layer = prev
            .par_iter()
            .flat_map_iter(|h| {
                (1u32..1 << (size - 1)).map(move |mask| {
                    let mut edges = h.edges().to_vec();
                    edges.extend((0..size - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, size - 1)));
                    canonical_code(&Graph::new(size, &edges).expect("simple"))
                })
            })
            .collect();
    }
    let mut graphs: Vec<(usize, u64, Graph)> = layer
        .into_iter()
        .map(|c| {
            let g = decode(n, c);
            (g.edge_count(), c, g)
        })
        .collect();
    graphs.sort_by_key(|&(e, c, _)| (e, c));
    Ok(graphs.into_iter().map(|(_, _, g)| g).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub graph: Graph,
    pub delta: usize,
    pub max_degree: usize,
    pub hypothesis: bool,
    pub dprime: Option<usize>,
}

/// Exact distinguishing indices for every connected graph on `2..=n_max`
/// vertices, computed in parallel and listed by order, then edge count.
pub fn census(n_max: usize, hypothesis_only: bool) -> Result<Vec<CensusRow>, OracleError> {
    census_with_budget(n_max, hypothesis_only, DEFAULT_BUDGET)
}

pub fn census_with_budget(n_max: usize, hypothesis_only: bool, budget: u64) -> Result<Vec<CensusRow>, OracleError> {
    let mut graphs = Vec::new();
    for n in 2..=n_max {
        graphs.extend(
            enumerate_connected_graphs(n)?.into_iter().filter(|g| !hypothesis_only || g.satisfies_hypothesis()),
        );
    }
    graphs
        .into_par_iter()
        .map(|g| {
            let s = g.stats();
            let dprime = distinguishing_index(&g, g.n(), budget)?;
            Ok(CensusRow {
                hypothesis: g.satisfies_hypothesis(),
                delta: s.delta,
                max_degree: s.max_degree,
                dprime,
                graph: g,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorer::complete_graph;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn kab(a: usize, b: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..a {
            for j in a..a + b {
                e.push((i, j));
            }
        }
        Graph::new(a + b, &e).unwrap()
    }

    /// Plain scan of all `r^|E|` labelings, no pruning.
    fn brute_exists(g: &Graph, r: usize) -> bool {
        let m = g.edge_count();
        let total = r.pow(m as u32);
        (0..total).any(|mut code| {
            let labels: Vec<u8> = (0..m)
                .map(|_| {
                    let l = (code % r) as u8;
                    code /= r;
                    l
                })
                .collect();
            perm::find_symmetry_labeled(g, &labels).unwrap().is_none()
        })
    }

    #[test]
    fn k2_never() {
        let k2 = complete_graph(2);
        for r in 1..=4 {
            assert_eq!(exists_asymmetric_coloring(&k2, r, DEFAULT_BUDGET).unwrap(), None);
        }
    }

    #[test]
    fn cycles() {
        let w = exists_asymmetric_coloring(&cycle(6), 2, DEFAULT_BUDGET).unwrap().unwrap();
        assert!(perm::is_asymmetric(&cycle(6), &w.to_coloring().unwrap()));
        assert_eq!(exists_asymmetric_coloring(&cycle(5), 2, DEFAULT_BUDGET).unwrap(), None);
    }

    #[test]
    fn known_indices() {
        assert_eq!(distinguishing_index(&complete_graph(4), 4, DEFAULT_BUDGET).unwrap(), Some(3));
        assert_eq!(distinguishing_index(&complete_graph(6), 4, DEFAULT_BUDGET).unwrap(), Some(2));
        assert_eq!(distinguishing_index(&kab(2, 4), 4, DEFAULT_BUDGET).unwrap(), Some(3));
        let star = kab(1, 4);
        assert_eq!(distinguishing_index(&star, 5, DEFAULT_BUDGET).unwrap(), Some(4));
        assert_eq!(distinguishing_index(&Graph::empty(1), 1, DEFAULT_BUDGET).unwrap(), Some(1));
    }

    #[test]
    fn pruned_search_agrees_with_plain_scan() {
        for n in 2..=5 {
            for g in enumerate_connected_graphs(n).unwrap() {
                for r in 1..=3 {
                    if g.edge_count() > 9 && r == 3 {
                        continue;
                    }
                    let fast = exists_asymmetric_coloring(&g, r, DEFAULT_BUDGET).unwrap().is_some();
                    assert_eq!(fast, brute_exists(&g, r), "{:?} r={r}", g.edges());
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(exists_asymmetric_coloring(&complete_graph(5), 2, 10), Err(OracleError::BudgetExceeded(10)));
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        assert_eq!(enumerate_connected_graphs(8), Err(OracleError::TooLarge(8)));
    }

    #[test]
    fn small_classes() {
        let three = enumerate_connected_graphs(3).unwrap();
        assert_eq!(three[0].edge_count(), 2);
        assert!(three[1].is_complete());
    }

    fn code_of(g: &Graph, order: &[Vertex]) -> u64 {
        let n = g.n();
        let mut code = 0u64;
        for j in 1..n {
            for i in 0..j {
                code = code << 1 | u64::from(g.has_edge(order[i], order[j]));
            }
        }
        code
    }

    fn permutations(n: usize) -> Vec<Vec<Vertex>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for at in 0..n {
                let mut q = p.clone();
                q.insert(at, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Isomorphism by trying every relabeling.
    #[test]
    fn canonical_code_matches_full_relabeling_scan() {
        for n in 2..=5 {
            let perms = permutations(n);
            let graphs = enumerate_connected_graphs(n).unwrap();
            let full: BTreeSet<u64> =
                graphs.iter().map(|g| perms.iter().map(|p| code_of(g, p)).min().unwrap()).collect();
            assert_eq!(full.len(), graphs.len());
            for g in &graphs {
                for p in perms.iter().step_by(7) {
                    let inv: Vec<Vertex> = {
                        let mut inv = vec![0; n];
                        for (i, &v) in p.iter().enumerate() {
                            inv[v] = i;
                        }
                        inv
                    };
                    assert_eq!(canonical_code(&g.relabel(&inv)), canonical_code(g));
                }
            }
        }
    }

    #[test]
    fn canonical_code_is_label_free() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let h = g.relabel(&[4, 2, 0, 1, 3]);
        assert_eq!(canonical_code(&g), canonical_code(&h));
        assert_ne!(canonical_code(&g), canonical_code(&cycle(5)));
    }

    #[test]
    fn census_small() {
        let rows = census(2, false).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].dprime, None);
        let rows = census(4, true).unwrap();
        let threes: Vec<_> =
            rows.iter().filter(|r| r.dprime == Some(3)).map(|r| (r.graph.n(), r.graph.edge_count())).collect();
        // K3, C4, K4
        assert_eq!(threes, vec![(3, 3), (4, 4), (4, 6)]);
    }
}
