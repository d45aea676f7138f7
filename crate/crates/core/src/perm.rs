//! Color-preserving automorphisms of partially edge-colored graphs.
//!
//! The search is individualization/refinement over ordered partitions:
//! vertices start in cells keyed by their incident color multiset (fixed
//! vertices get their own singleton cells), cells are refined until
//! equitable with respect to colored adjacency, and a search tree over
//! individualized vertices is explored. Generators are collected level by
//! level from the deepest base point upward, which yields a generating set
//! of the whole group together with its exact order, without enumerating
//! elements.
//!
//! "Uncolored" is an edge class of its own, so the automorphisms returned
//! always map uncolored edges to uncolored edges.

use std::collections::hash_map::DefaultHasher;
use std::collections::{HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::color::EdgeColoring;
use crate::graph::{Graph, Vertex};

pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u128, cap: usize },
    #[error("coloring has {got} entries but the graph has {expected} edges")]
    ColoringLength { expected: usize, got: usize },
    #[error("fixed vertex {0} out of range")]
    VertexOutOfRange(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<Vertex>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// Checks bijectivity.
    pub fn from_images(image: Vec<Vertex>) -> Option<Self> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(Permutation { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.image[v]
    }

    pub fn images(&self) -> &[Vertex] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&v| self.image[v]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }

    /// True when `self` maps edges to edges and preserves every edge class
    /// (each color and "uncolored") of `coloring`.
    pub fn preserves(&self, g: &Graph, coloring: &EdgeColoring) -> bool {
        self.image.len() == g.n()
            && g.edges().iter().enumerate().all(|(i, &(u, v))| match g.edge_index(self.image[u], self.image[v]) {
                Some(j) => coloring.get(j) == coloring.get(i),
                None => false,
            })
    }
}

/// Partition of the vertex set; blocks sorted and ordered by minimum element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    blocks: Vec<Vec<Vertex>>,
    block_of: Vec<usize>,
}

impl OrbitPartition {
    pub fn from_blocks(mut blocks: Vec<Vec<Vertex>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_unstable_by_key(|b| b[0]);
        let n = blocks.iter().map(Vec::len).sum();
        let mut block_of = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                block_of[v] = i;
            }
        }
        OrbitPartition { blocks, block_of }
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_blocks((0..n).map(|v| vec![v]).collect())
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn block_of(&self, v: Vertex) -> usize {
        self.block_of[v]
    }

    pub fn block_containing(&self, v: Vertex) -> &[Vertex] {
        &self.blocks[self.block_of[v]]
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.block_of.len()
    }

    /// True when every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &OrbitPartition) -> bool {
        self.blocks.iter().all(|b| {
            let target = coarser.block_of(b[0]);
            b.iter().all(|&v| coarser.block_of(v) == target)
        })
    }
}

/// Color-preserving automorphism group of a (graph, coloring, fixed set).
#[derive(Debug, Clone)]
pub struct AutGroup {
    n: usize,
    generators: Vec<Permutation>,
    order: u128,
    element_cap: usize,
    elements: Option<Vec<Permutation>>,
}

impl AutGroup {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Exact group order, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn element_cap(&self) -> usize {
        self.element_cap
    }

    /// True when the order exceeds the cap and no element list was built.
    pub fn overflow(&self) -> bool {
        self.elements.is_none()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn elements(&self) -> Option<&[Permutation]> {
        self.elements.as_deref()
    }

    pub fn elements_exact(&self) -> Result<&[Permutation], PermError> {
        self.elements.as_deref().ok_or(PermError::CapExceeded { order: self.order, cap: self.element_cap })
    }
}

pub fn automorphisms(g: &Graph, coloring: &EdgeColoring, fixed: &[Vertex], cap: usize) -> Result<AutGroup, PermError> {
    let inst = Instance::new(g, coloring, fixed)?;
    let (generators, order) = inst.search(false);
    let elements = if order <= cap as u128 { Some(close_group(g.n(), &generators, cap)) } else { None };
    Ok(AutGroup { n: g.n(), generators, order, element_cap: cap.max(1), elements })
}

/// `None` if the coloring is asymmetric, otherwise the first nontrivial
/// automorphism the search finds.
pub fn find_symmetry(g: &Graph, coloring: &EdgeColoring) -> Option<Permutation> {
    find_symmetry_fixing(g, coloring, &[])
}

pub fn find_symmetry_fixing(g: &Graph, coloring: &EdgeColoring, fixed: &[Vertex]) -> Option<Permutation> {
    let inst = Instance::new(g, coloring, fixed).expect("coloring matches graph");
    inst.search(true).0.into_iter().next()
}

pub fn is_asymmetric(g: &Graph, coloring: &EdgeColoring) -> bool {
    find_symmetry(g, coloring).is_none()
}

/// Like [`find_symmetry`] for edges labeled by arbitrary small integers
/// (`labels[i] < 254`), so colorings with more than three colors can be
/// checked.
pub fn find_symmetry_labeled(g: &Graph, labels: &[u8]) -> Result<Option<Permutation>, PermError> {
    let classes: Vec<u8> = labels.iter().map(|&l| l.saturating_add(2)).collect();
    let inst = Instance::with_classes(g, &classes, &[])?;
    Ok(inst.search(true).0.into_iter().next())
}

/// Orbits as connected components of the union of the generators' cycles.
pub fn orbits_under(group: &AutGroup) -> OrbitPartition {
    orbits_of_generators(group.n, &group.generators)
}

pub fn orbits_fixing(g: &Graph, coloring: &EdgeColoring, fixed: &[Vertex]) -> Result<OrbitPartition, PermError> {
    let inst = Instance::new(g, coloring, fixed)?;
    let (gens, _) = inst.search(false);
    Ok(orbits_of_generators(g.n(), &gens))
}

/// Orbits of the color-preserving stabilizer of `x0`.
pub fn stabilizer_orbits(g: &Graph, coloring: &EdgeColoring, x0: Vertex) -> Result<OrbitPartition, PermError> {
    orbits_fixing(g, coloring, &[x0])
}

/// Orbits of the group generated by `gens` on `0..n`.
pub fn orbits_of_generators(n: usize, gens: &[Permutation]) -> OrbitPartition {
    let mut uf = UnionFind::new(n);
    for p in gens {
        for v in 0..n {
            uf.union(v, p.apply(v));
        }
    }
    OrbitPartition::from_blocks(uf.classes())
}

fn close_group(n: usize, gens: &[Permutation], cap: usize) -> Vec<Permutation> {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut out = vec![id.clone()];
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(e) = queue.pop_front() {
        for gen in gens {
            let next = gen.compose(&e);
            if seen.insert(next.clone()) {
                out.push(next.clone());
                queue.push_back(next);
                if out.len() > cap {
                    return out;
                }
            }
        }
    }
    out.sort();
    out
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // smaller root wins so classes stay labeled by their minimum
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }

    pub(crate) fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            let r = self.find(v);
            by_root[r].push(v);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}

type Cells = Vec<Vec<u32>>;

/// Edge classes: 0 = non-edge, 1 = uncolored, 2.. = colors.
struct Instance<'a> {
    g: &'a Graph,
    n: usize,
    class: Vec<u8>,
    adj: Vec<Vec<(u32, u8)>>,
    initial: Cells,
}

struct PathNode {
    cells: Cells,
    target: usize,
    chosen: u32,
    invariant: u64,
}

impl<'a> Instance<'a> {
    fn new(g: &'a Graph, coloring: &EdgeColoring, fixed: &[Vertex]) -> Result<Self, PermError> {
        if coloring.len() != g.edge_count() {
            return Err(PermError::ColoringLength { expected: g.edge_count(), got: coloring.len() });
        }
        let classes: Vec<u8> = coloring
            .as_slice()
            .iter()
            .map(|c| match c {
                None => 1,
                Some(col) => 2 + col.index() as u8,
            })
            .collect();
        Self::with_classes(g, &classes, fixed)
    }

    fn with_classes(g: &'a Graph, classes: &[u8], fixed: &[Vertex]) -> Result<Self, PermError> {
        if classes.len() != g.edge_count() {
            return Err(PermError::ColoringLength { expected: g.edge_count(), got: classes.len() });
        }
        let n = g.n();
        let mut class = vec![0u8; n * n];
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            let c = classes[i];
            class[u * n + v] = c;
            class[v * n + u] = c;
            adj[u].push((v as u32, c));
            adj[v].push((u as u32, c));
        }
        let mut is_fixed = vec![false; n];
        for &f in fixed {
            if f >= n {
                return Err(PermError::VertexOutOfRange(f));
            }
            is_fixed[f] = true;
        }
        let mut keyed: Vec<(Vec<u8>, u32)> = Vec::new();
        let mut initial: Cells = Vec::new();
        for v in 0..n {
            if is_fixed[v] {
                initial.push(vec![v as u32]);
            } else {
                let mut sig: Vec<u8> = adj[v].iter().map(|&(_, c)| c).collect();
                sig.sort_unstable();
                keyed.push((sig, v as u32));
            }
        }
        keyed.sort();
        let mut i = 0;
        while i < keyed.len() {
            let mut j = i;
            let mut cell = Vec::new();
            while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                cell.push(keyed[j].1);
                j += 1;
            }
            initial.push(cell);
            i = j;
        }
        Ok(Instance { g, n, class, adj, initial })
    }

    /// Refines `cells` to the coarsest equitable partition below it. Splits
    /// depend only on cell positions and edge classes, never on labels.
    fn refine(&self, mut cells: Cells) -> Cells {
        let mut cell_of = vec![0u32; self.n];
        loop {
            for (i, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v as usize] = i as u32;
                }
            }
            let mut changed = false;
            let mut next: Cells = Vec::with_capacity(cells.len());
            for cell in cells {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut sigs: Vec<(Vec<u64>, u32)> = cell
                    .iter()
                    .map(|&v| {
                        let mut s: Vec<u64> = self.adj[v as usize]
                            .iter()
                            .map(|&(w, c)| ((c as u64) << 32) | cell_of[w as usize] as u64)
                            .collect();
                        s.sort_unstable();
                        (s, v)
                    })
                    .collect();
                sigs.sort();
                let mut i = 0;
                let before = next.len();
                while i < sigs.len() {
                    let mut j = i;
                    let mut part = Vec::new();
                    while j < sigs.len() && sigs[j].0 == sigs[i].0 {
                        part.push(sigs[j].1);
                        j += 1;
                    }
                    next.push(part);
                    i = j;
                }
                if next.len() - before > 1 {
                    changed = true;
                }
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    /// Label-free summary of an equitable partition: cell sizes plus the
    /// class/cell profile of each cell's first vertex.
    fn invariant(&self, cells: &Cells) -> u64 {
        let mut cell_of = vec![0u32; self.n];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v as usize] = i as u32;
            }
        }
        let mut h = DefaultHasher::new();
        for c in cells {
            c.len().hash(&mut h);
            let mut s: Vec<u64> = self.adj[c[0] as usize]
                .iter()
                .map(|&(w, cl)| ((cl as u64) << 32) | cell_of[w as usize] as u64)
                .collect();
            s.sort_unstable();
            s.hash(&mut h);
        }
        h.finish()
    }

    fn individualize(cells: &Cells, target: usize, v: u32) -> Cells {
        let mut out = Vec::with_capacity(cells.len() + 1);
        for (i, c) in cells.iter().enumerate() {
            if i == target {
                out.push(vec![v]);
                out.push(c.iter().copied().filter(|&w| w != v).collect());
            } else {
                out.push(c.clone());
            }
        }
        out
    }

    fn first_path(&self) -> (Vec<PathNode>, Vec<u32>) {
        let mut path = Vec::new();
        let mut cells = self.refine(self.initial.clone());
        loop {
            let invariant = self.invariant(&cells);
            match cells.iter().position(|c| c.len() > 1) {
                None => {
                    let leaf = cells.iter().map(|c| c[0]).collect();
                    path.push(PathNode { cells, target: usize::MAX, chosen: u32::MAX, invariant });
                    return (path, leaf);
                }
                Some(target) => {
                    let chosen = *cells[target].iter().min().unwrap();
                    let next = self.refine(Self::individualize(&cells, target, chosen));
                    path.push(PathNode { cells, target, chosen, invariant });
                    cells = next;
                }
            }
        }
    }

    fn check_leaf(&self, leaf0: &[u32], cells: &Cells) -> Option<Permutation> {
        let mut image = vec![0usize; self.n];
        for (k, c) in cells.iter().enumerate() {
            image[leaf0[k] as usize] = c[0] as usize;
        }
        let n = self.n;
        for (u, v) in self.g.edges() {
            let (a, b) = (image[*u], image[*v]);
            if self.class[a * n + b] != self.class[u * n + v] {
                return None;
            }
        }
        Some(Permutation { image })
    }

    /// Depth-first search below `cells` (at depth `depth` of the first path)
    /// for any leaf that yields an automorphism.
    fn dfs(&self, path: &[PathNode], leaf0: &[u32], depth: usize, cells: Cells) -> Option<Permutation> {
        let node = &path[depth];
        if node.target == usize::MAX {
            return self.check_leaf(leaf0, &cells);
        }
        let mut candidates = cells[node.target].clone();
        candidates.sort_unstable();
        for w in candidates {
            let next = self.refine(Self::individualize(&cells, node.target, w));
            if self.invariant(&next) != path[depth + 1].invariant {
                continue;
            }
            if let Some(p) = self.dfs(path, leaf0, depth + 1, next) {
                return Some(p);
            }
        }
        None
    }

    /// Generators of the group and its exact order. With `stop_at_first`,
    /// returns as soon as one nontrivial automorphism is found.
    fn search(&self, stop_at_first: bool) -> (Vec<Permutation>, u128) {
        let (path, leaf0) = self.first_path();
        let mut gens = Vec::new();
        let mut uf = UnionFind::new(self.n);
        let mut order: u128 = 1;
        for level in (0..path.len() - 1).rev() {
            let node = &path[level];
            let base = node.chosen as usize;
            let mut cell = node.cells[node.target].clone();
            cell.sort_unstable();
            for &v in &cell {
                let v = v as usize;
                if uf.find(v) == uf.find(base) {
                    continue;
                }
                let next = self.refine(Self::individualize(&node.cells, node.target, v as u32));
                if self.invariant(&next) != path[level + 1].invariant {
                    continue;
                }
                if let Some(p) = self.dfs(&path, &leaf0, level + 1, next) {
                    for x in 0..self.n {
                        uf.union(x, p.apply(x));
                    }
                    gens.push(p);
                    if stop_at_first {
                        return (gens, 0);
                    }
                }
            }
            let root = uf.find(base);
            let orbit = cell.iter().filter(|&&v| uf.find(v as usize) == root).count() as u128;
            order = order.saturating_mul(orbit);
        }
        (gens, order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Color::{self, *};

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn colored(g: &Graph, cs: &[Color]) -> EdgeColoring {
        assert_eq!(cs.len(), g.edge_count());
        EdgeColoring::from_colors(cs.to_vec())
    }

    fn blank(g: &Graph) -> EdgeColoring {
        EdgeColoring::uncolored(g.edge_count())
    }

    /// All permutations of 0..n, for brute-force cross-checks.
    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    fn brute_group(g: &Graph, c: &EdgeColoring, fixed: &[usize]) -> Vec<Permutation> {
        all_perms(g.n())
            .into_iter()
            .map(|p| Permutation::from_images(p).unwrap())
            .filter(|p| fixed.iter().all(|&f| p.apply(f) == f) && p.preserves(g, c))
            .collect()
    }

    #[test]
    fn cycle_and_complete_orders() {
        let c4 = cycle(4);
        assert_eq!(automorphisms(&c4, &blank(&c4), &[], DEFAULT_ELEMENT_CAP).unwrap().order(), 8);
        for n in 1..=6 {
            let k = complete(n);
            let grp = automorphisms(&k, &blank(&k), &[], DEFAULT_ELEMENT_CAP).unwrap();
            assert_eq!(grp.order(), (1..=n as u128).product::<u128>());
            assert_eq!(grp.elements().unwrap().len() as u128, grp.order());
        }
        for n in 3..=7 {
            let c = cycle(n);
            assert_eq!(automorphisms(&c, &blank(&c), &[], 10).unwrap().order(), 2 * n as u128);
        }
    }

    #[test]
    fn colored_c4_filtered_by_brute_force() {
        let c4 = cycle(4);
        // edges: (0,1),(0,3),(1,2),(2,3)
        let col = colored(&c4, &[Red, Blue, Blue, Blue]);
        let brute = brute_group(&c4, &col, &[]);
        assert_eq!(brute.len(), 2);
        let grp = automorphisms(&c4, &col, &[], 100).unwrap();
        assert_eq!(grp.order(), 2);
        let mut got = grp.elements().unwrap().to_vec();
        got.sort();
        let mut want = brute;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn asymmetry_examples() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(is_asymmetric(&p3, &colored(&p3, &[Red, Blue])));
        let k2 = complete(2);
        for c in Color::ALL {
            let w = find_symmetry(&k2, &colored(&k2, &[c])).unwrap();
            assert_eq!(w.images(), &[1, 0]);
        }
        let k3 = complete(3);
        assert!(is_asymmetric(&k3, &colored(&k3, &[Red, Blue, Green])));
    }

    #[test]
    fn orbit_examples() {
        let c5 = cycle(5);
        let grp = automorphisms(&c5, &blank(&c5), &[0], 10).unwrap();
        assert_eq!(orbits_under(&grp).blocks(), &[vec![0], vec![1, 4], vec![2, 3]]);
        let g4 = Graph::empty(4);
        let grp = automorphisms(&g4, &blank(&g4), &[0, 1, 2, 3], 10).unwrap();
        assert_eq!(orbits_under(&grp).blocks().len(), 4);
        let k4 = complete(4);
        let grp = automorphisms(&k4, &blank(&k4), &[], 10).unwrap();
        assert_eq!(orbits_under(&grp).blocks(), &[vec![0, 1, 2, 3]]);
    }

    #[test]
    fn stabilizer_examples() {
        let c5 = cycle(5);
        assert_eq!(stabilizer_orbits(&c5, &blank(&c5), 0).unwrap().blocks(), &[vec![0], vec![1, 4], vec![2, 3]]);
        // K_{2,4} with the 2-side {0,1}; x0 = 2 on the 4-side.
        let mut e = Vec::new();
        for a in 0..2 {
            for b in 2..6 {
                e.push((a, b));
            }
        }
        let k24 = Graph::new(6, &e).unwrap();
        let full = brute_group(&k24, &blank(&k24), &[]);
        assert_eq!(full.len(), 48);
        let stab: Vec<_> = full.iter().filter(|p| p.apply(2) == 2).collect();
        let mut uf = UnionFind::new(6);
        for p in &stab {
            for v in 0..6 {
                uf.union(v, p.apply(v));
            }
        }
        let oracle = OrbitPartition::from_blocks(uf.classes());
        let got = stabilizer_orbits(&k24, &blank(&k24), 2).unwrap();
        assert_eq!(got, oracle);
        assert_eq!(got.blocks(), &[vec![0, 1], vec![2], vec![3, 4, 5]]);

        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(stabilizer_orbits(&p3, &colored(&p3, &[Red, Blue]), 1).unwrap().is_discrete());
    }

    #[test]
    fn large_group_reports_overflow() {
        let k9 = complete(9);
        let grp = automorphisms(&k9, &blank(&k9), &[], 1000).unwrap();
        assert_eq!(grp.order(), 362_880);
        assert!(grp.overflow());
        assert!(matches!(grp.elements_exact(), Err(PermError::CapExceeded { .. })));
        assert_eq!(orbits_under(&grp).blocks().len(), 1);
    }

    #[test]
    fn bad_inputs() {
        let k3 = complete(3);
        assert!(matches!(
            automorphisms(&k3, &EdgeColoring::uncolored(2), &[], 10),
            Err(PermError::ColoringLength { .. })
        ));
        assert!(matches!(automorphisms(&k3, &blank(&k3), &[5], 10), Err(PermError::VertexOutOfRange(5))));
    }
}
