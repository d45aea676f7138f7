//! Processing one non-terminal orbit: inner edges, palette assignment, and
//! coloring of the edges leaving the orbit.

use std::collections::BTreeMap;

use crate::color::{Color, EdgeColoring};
use crate::graph::Vertex;
use crate::palette::{self, Palette, PaletteSeq};

use super::complete::complete_graph_coloring;
use super::state::{membership, ProcState};
use super::{color_graph, ColorError};

/// Bookkeeping for one processed orbit `O`.
#[derive(Debug, Clone)]
pub struct RefinementStep {
    pub source_orbit: Vec<Vertex>,
    /// Components of the subgraph induced by `O`, listed by minimum vertex.
    pub components: Vec<Vec<Vertex>>,
    /// One representative per component: its minimum vertex.
    pub chosen: Vec<Vertex>,
    /// Target orbits `Q₁..Qₛ`, reordered so that `Q₁` takes the most edges.
    pub targets: Vec<Vec<Vertex>>,
    /// Edges from each vertex of `O` into each target.
    pub sizes: Vec<usize>,
    /// Targets whose vertices have no uncolored edges except those to `O`.
    pub bare_terminal: Vec<bool>,
    /// Palette sequence of each representative.
    pub assigned: Vec<PaletteSeq>,
    /// Shared sequence of the non-representatives when components are `K₂`.
    pub extra: Option<PaletteSeq>,
}

impl RefinementStep {
    pub fn n_comp(&self) -> usize {
        self.components[0].len()
    }

    pub fn k(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// The palette sequence driving the edges out of `x ∈ O`.
    pub fn sequence_of(&self, x: Vertex) -> &PaletteSeq {
        if let Some(j) = self.chosen.iter().position(|&c| c == x) {
            return &self.assigned[j];
        }
        match &self.extra {
            Some(seq) => seq,
            None => &self.assigned[0],
        }
    }
}

/// Sets up the step for orbit `orbit`: components, representatives, and the
/// target orbits with their per-vertex edge counts.
pub fn plan_step(st: &ProcState, orbit: &[Vertex]) -> Result<RefinementStep, ColorError> {
    let n = st.graph.n();
    let in_orbit = membership(n, orbit);
    let (h, _) = st.graph.induced_subgraph(orbit)?;
    let components: Vec<Vec<Vertex>> =
        h.connected_components().into_iter().map(|c| c.into_iter().map(|i| orbit[i]).collect()).collect();
    let chosen: Vec<Vertex> = components.iter().map(|c| c[0]).collect();

    let mut in_u = vec![false; n];
    for &x in orbit {
        for w in st.uncolored_neighbors(x) {
            if !in_orbit[w] {
                in_u[w] = true;
            }
        }
    }
    let mut targets: Vec<Vec<Vertex>> = Vec::new();
    for block in st.orbits.blocks() {
        let hits = block.iter().filter(|&&v| in_u[v]).count();
        if hits == 0 {
            continue;
        }
        if hits != block.len() {
            return Err(ColorError::Precondition(format!("orbit {block:?} only partly reached from {orbit:?}")));
        }
        targets.push(block.clone());
    }

    let mut sizes = Vec::with_capacity(targets.len());
    for q in &targets {
        let in_q = membership(n, q);
        let counts: Vec<usize> =
            orbit.iter().map(|&x| st.uncolored_neighbors(x).filter(|&w| in_q[w]).count()).collect();
        if counts.iter().any(|&c| c != counts[0]) || counts[0] == 0 {
            return Err(ColorError::Precondition(format!(
                "vertices of {orbit:?} send unequal edge counts {counts:?} into {q:?}"
            )));
        }
        sizes.push(counts[0]);
    }
    // stable: ties keep block order
    let mut order: Vec<usize> = (0..targets.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(sizes[i]));
    let targets: Vec<Vec<Vertex>> = order.iter().map(|&i| targets[i].clone()).collect();
    let sizes: Vec<usize> = order.iter().map(|&i| sizes[i]).collect();

    let bare_terminal =
        targets.iter().map(|q| q.iter().all(|&v| st.uncolored_neighbors(v).all(|w| in_orbit[w]))).collect();

    Ok(RefinementStep {
        source_orbit: orbit.to_vec(),
        components,
        chosen,
        targets,
        sizes,
        bare_terminal,
        assigned: Vec::new(),
        extra: None,
    })
}

/// Makes every component of the orbit's induced subgraph rigid: components
/// on more than two vertices get an asymmetric coloring of their own, `K₂`
/// components are colored red, isolated vertices need nothing.
pub fn color_inner_edges(st: &mut ProcState, step: &RefinementStep) -> Result<(), ColorError> {
    match step.n_comp() {
        1 => {}
        2 => {
            for comp in &step.components {
                st.set_color(comp[0], comp[1], Color::Red);
            }
        }
        _ => {
            for comp in &step.components {
                let (sub, _) = st.graph.induced_subgraph(comp)?;
                let local: EdgeColoring =
                    if sub.is_complete() { complete_graph_coloring(sub.n()) } else { color_graph(&sub, st.paranoid)? };
                for (i, &(a, b)) in sub.edges().iter().enumerate() {
                    let c = local.get(i).expect("component coloring is total");
                    st.set_color(comp[a], comp[b], c);
                }
            }
        }
    }
    Ok(())
}

/// Gives each representative a different palette sequence (and, for `K₂`
/// components, one more for everyone else). The first representative's
/// sequence is red-free; the first part always comes from
/// [`palette::uniform_palettes`], later parts from
/// [`palette::special_palettes`].
pub fn assign_palettes(step: &mut RefinementStep) -> Result<(), ColorError> {
    let m = step.chosen.len();
    let k = step.k();
    let pairs = step.n_comp() == 2;
    let limit = if pairs { k } else { k + 1 };
    if m > limit {
        return Err(ColorError::Precondition(format!("{m} components but only k = {k} outgoing edges per vertex")));
    }
    let needed = m + usize::from(pairs);
    let seqs = palette_family(&step.sizes)?.take(needed).collect::<Vec<_>>();
    if seqs.len() < needed {
        return Err(ColorError::PaletteExhausted { sizes: step.sizes.clone(), needed, available: seqs.len() });
    }
    debug_assert!(seqs[0].parts.iter().all(|p| p.red == 0));
    step.assigned = seqs[..m].to_vec();
    step.extra = pairs.then(|| seqs[m].clone());
    Ok(())
}

/// Sequences whose first part is any entry of `uniform_palettes(k₁)` and
/// whose `i`-th part (i > 1) is one of `special_palettes(kᵢ)`, in
/// lexicographic order of choices.
fn palette_family(sizes: &[usize]) -> Result<impl Iterator<Item = PaletteSeq>, ColorError> {
    let mut options: Vec<Vec<Palette>> = vec![palette::uniform_palettes(sizes[0])?];
    for &k in &sizes[1..] {
        let (a, b) = palette::special_palettes(k)?;
        options.push(vec![a, b]);
    }
    let total: usize = options.iter().map(Vec::len).product();
    Ok((0..total).map(move |mut idx| {
        let mut parts = vec![Palette::default(); options.len()];
        for (i, opts) in options.iter().enumerate().rev() {
            parts[i] = opts[idx % opts.len()];
            idx /= opts.len();
        }
        PaletteSeq { parts }
    }))
}

/// A refined target cell: vertices of one target with the same neighbors in `O`.
#[derive(Debug, Clone)]
pub struct TargetCell {
    pub target: usize,
    pub vertices: Vec<Vertex>,
    pub sources: Vec<Vertex>,
}

/// Splits target `q` into cells by neighborhood in the source orbit.
pub fn refine_target(st: &ProcState, step: &RefinementStep, target: usize) -> Vec<TargetCell> {
    let in_orbit = membership(st.graph.n(), &step.source_orbit);
    let mut by_sources: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
    for &v in &step.targets[target] {
        let mut s: Vec<Vertex> = st.uncolored_neighbors(v).filter(|&w| in_orbit[w]).collect();
        s.sort_unstable();
        by_sources.entry(s).or_default().push(v);
    }
    let mut cells: Vec<TargetCell> =
        by_sources.into_iter().map(|(sources, vertices)| TargetCell { target, vertices, sources }).collect();
    cells.sort_by_key(|c| c.vertices[0]);
    cells
}

/// For each source vertex, the part of its target palette that goes to each
/// cell it reaches (sizes = cell sizes, since sources see whole cells).
fn split_over_cells(
    step: &RefinementStep,
    target: usize,
    cells: &[TargetCell],
) -> Result<BTreeMap<(Vertex, usize), Palette>, ColorError> {
    let mut out = BTreeMap::new();
    for &x in &step.source_orbit {
        let reached: Vec<usize> = (0..cells.len()).filter(|&c| cells[c].sources.contains(&x)).collect();
        let sizes: Vec<usize> = reached.iter().map(|&c| cells[c].vertices.len()).collect();
        let parts = palette::split_palette(step.sequence_of(x).parts[target], &sizes)?;
        for (c, p) in reached.into_iter().zip(parts) {
            out.insert((x, c), p);
        }
    }
    Ok(out)
}

/// Colors every edge from the source orbit into the non-bare targets.
///
/// Each cell is handled source by source: the source's palette for the cell
/// is split over the classes the cell has been cut into so far, and each
/// class takes its share in ascending vertex order.
pub fn refine_and_color_targets(st: &mut ProcState, step: &RefinementStep) -> Result<(), ColorError> {
    for target in 0..step.targets.len() {
        if step.bare_terminal[target] {
            continue;
        }
        let cells = refine_target(st, step, target);
        let shares = split_over_cells(step, target, &cells)?;
        for (ci, cell) in cells.iter().enumerate() {
            let pairing = matching_partners(st, step, &cell.vertices);
            let mut classes: Vec<Vec<Vertex>> = vec![cell.vertices.clone()];
            for (si, &x) in cell.sources.iter().enumerate() {
                let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
                let parts = palette::split_palette(shares[&(x, ci)], &sizes)?;
                let mut received: BTreeMap<Vertex, Color> = BTreeMap::new();
                for (class, part) in classes.iter().zip(&parts) {
                    let colors = part.to_colors();
                    let order = match (&pairing, si) {
                        (Some(pairs), 0) => paired_order(pairs),
                        _ => class.clone(),
                    };
                    for (&v, &c) in order.iter().zip(&colors) {
                        received.insert(v, c);
                    }
                }
                for (&v, &c) in &received {
                    st.set_color(x, v, c);
                }
                classes = split_classes(&classes, |v| Some(received[&v]));
            }
        }
    }
    Ok(())
}

/// If the cell's only uncolored edges besides those into `O` form a perfect
/// matching inside the cell, returns the matched pairs.
fn matching_partners(st: &ProcState, step: &RefinementStep, cell: &[Vertex]) -> Option<Vec<(Vertex, Vertex)>> {
    let n = st.graph.n();
    let in_orbit = membership(n, &step.source_orbit);
    let in_cell = membership(n, cell);
    let mut pairs = Vec::new();
    for &v in cell {
        let others: Vec<Vertex> = st.uncolored_neighbors(v).filter(|&w| !in_orbit[w]).collect();
        if others.len() != 1 || !in_cell[others[0]] {
            return None;
        }
        if v < others[0] {
            pairs.push((v, others[0]));
        }
    }
    Some(pairs)
}

/// First endpoints, then their partners, so that positions `i` and `i + h`
/// hold a matched pair; a uniform palette listed in color order never puts
/// the same color at both.
fn paired_order(pairs: &[(Vertex, Vertex)]) -> Vec<Vertex> {
    pairs.iter().map(|p| p.0).chain(pairs.iter().map(|p| p.1)).collect()
}

/// Refines `classes` by a per-vertex label (`None` sorts first), keeping
/// the class order and ordering sub-classes by label.
pub(crate) fn split_classes(classes: &[Vec<Vertex>], label: impl Fn(Vertex) -> Option<Color>) -> Vec<Vec<Vertex>> {
    let mut out = Vec::with_capacity(classes.len());
    for class in classes {
        let mut groups: BTreeMap<Option<Color>, Vec<Vertex>> = BTreeMap::new();
        for &v in class {
            groups.entry(label(v)).or_default().push(v);
        }
        out.extend(groups.into_values());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn p(a: usize, b: usize, c: usize) -> Palette {
        Palette::new(a, b, c)
    }

    fn blank_step(m: usize, n_comp: usize, sizes: Vec<usize>) -> RefinementStep {
        let components: Vec<Vec<Vertex>> = (0..m).map(|i| (i * n_comp..(i + 1) * n_comp).collect()).collect();
        RefinementStep {
            source_orbit: (0..m * n_comp).collect(),
            chosen: components.iter().map(|c| c[0]).collect(),
            components,
            targets: vec![Vec::new(); sizes.len()],
            bare_terminal: vec![false; sizes.len()],
            sizes,
            assigned: Vec::new(),
            extra: None,
        }
    }

    #[test]
    fn palettes_for_single_representative() {
        let mut s = blank_step(1, 1, vec![2]);
        assign_palettes(&mut s).unwrap();
        assert_eq!(s.assigned[0].parts, vec![p(0, 1, 1)]);
    }

    #[test]
    fn palettes_for_two_singletons() {
        let mut s = blank_step(2, 1, vec![1]);
        assign_palettes(&mut s).unwrap();
        assert_eq!(s.assigned[0].parts, vec![p(0, 1, 0)]);
        assert_eq!(s.assigned[1].parts, vec![p(0, 0, 1)]);
    }

    #[test]
    fn pairs_need_m_at_most_k() {
        let mut s = blank_step(3, 2, vec![2]);
        assert!(matches!(assign_palettes(&mut s), Err(ColorError::Precondition(_))));
        let mut s = blank_step(2, 2, vec![2]);
        assign_palettes(&mut s).unwrap();
        let extra = s.extra.clone().unwrap();
        assert!(!s.assigned.contains(&extra));
        assert_ne!(s.assigned[0], s.assigned[1]);
    }

    #[test]
    fn family_shape() {
        let fam: Vec<_> = palette_family(&[3, 2, 1]).unwrap().collect();
        assert_eq!(fam.len(), 5 * 2 * 2);
        assert!(fam[0].parts.iter().all(|q| q.red == 0));
        for seq in &fam {
            assert!(seq.parts[0].red * 2 <= 3);
            assert!(seq.parts.iter().all(Palette::is_uniform));
        }
        let mut dedup = fam.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), fam.len());
    }

    #[test]
    fn rainbow_palette_splits_cell_of_three() {
        // root 0 hangs off 1, which has three leaves
        let g = Graph::new(5, &[(0, 1), (1, 2), (1, 3), (1, 4)]).unwrap();
        let mut st = ProcState::new(g, false);
        st.initial_step();
        let mut step = plan_step(&st, &[1]).unwrap();
        assert_eq!(step.targets, vec![vec![2, 3, 4]]);
        assert_eq!(step.bare_terminal, vec![true]);
        step.bare_terminal = vec![false];
        step.assigned = vec![PaletteSeq { parts: vec![p(1, 1, 1)] }];
        refine_and_color_targets(&mut st, &step).unwrap();
        let got: Vec<_> = [2, 3, 4].iter().map(|&v| st.color_between(1, v).unwrap()).collect();
        assert_eq!(got, vec![Color::Red, Color::Blue, Color::Green]);
        st.refresh_orbits();
        assert!(st.orbits.is_discrete());
    }

    #[test]
    fn matched_pair_gets_two_colors() {
        // 1 is joined to both ends of the edge 2–3
        let g = Graph::new(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap();
        let mut st = ProcState::new(g, false);
        st.initial_step();
        let mut step = plan_step(&st, &[1]).unwrap();
        assert_eq!(step.targets, vec![vec![2, 3]]);
        assert_eq!(step.bare_terminal, vec![false]);
        step.assigned = vec![PaletteSeq { parts: vec![p(0, 1, 1)] }];
        refine_and_color_targets(&mut st, &step).unwrap();
        assert_eq!(st.color_between(1, 2), Some(Color::Blue));
        assert_eq!(st.color_between(1, 3), Some(Color::Green));
    }
}
