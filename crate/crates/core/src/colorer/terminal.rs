//! Orbits left with no uncolored edges to the outside.

use std::collections::BTreeMap;

use crate::color::{Color, EdgeColoring};
use crate::graph::Vertex;
use crate::palette::{self, Palette};

use super::complete::complete_graph_coloring;
use super::state::{membership, ProcState};
use super::step::{split_classes, RefinementStep};
use super::{color_graph, ColorError};

/// Colors the remaining inner edges of a block whose vertices have no other
/// uncolored edges. A complete block on three or more vertices gets the base
/// complete-graph coloring, with red and green exchanged when some vertex
/// would otherwise see only red; a single edge is colored blue.
pub fn handle_terminal_block(st: &mut ProcState, block: &[Vertex]) -> Result<(), ColorError> {
    let in_block = membership(st.graph.n(), block);
    let inner: Vec<(Vertex, Vertex)> = block
        .iter()
        .flat_map(|&v| {
            st.uncolored_neighbors(v).filter(|&w| in_block[w] && v < w).map(move |w| (v, w)).collect::<Vec<_>>()
        })
        .collect();
    if inner.is_empty() {
        return Ok(());
    }
    let (sub, _) = st.graph.induced_subgraph(block)?;
    if sub.n() >= 3 && sub.is_complete() && inner.len() == sub.edge_count() {
        place_with_red_guard(st, block, sub.edges(), &complete_graph_coloring(sub.n()));
        return Ok(());
    }
    if inner.len() == 1 {
        st.set_color(inner[0].0, inner[0].1, Color::Blue);
        return Ok(());
    }
    // Not expected once the step conditions hold: the block would have to be
    // complete. Color each remaining piece as well as we can.
    let (rest, _) = {
        let pairs: Vec<(Vertex, Vertex)> =
            inner.iter().map(|&(a, b)| (block.binary_search(&a).unwrap(), block.binary_search(&b).unwrap())).collect();
        (crate::graph::Graph::new(block.len(), &pairs)?, ())
    };
    for comp in rest.connected_components() {
        let (piece, _) = rest.induced_subgraph(&comp)?;
        if piece.edge_count() == 0 {
            continue;
        }
        let verts: Vec<Vertex> = comp.iter().map(|&i| block[i]).collect();
        if piece.satisfies_hypothesis() {
            let local = color_graph(&piece, st.paranoid)?;
            place_with_red_guard(st, &verts, piece.edges(), &local);
        } else {
            for &(a, b) in piece.edges() {
                st.set_color(verts[a], verts[b], Color::Blue);
            }
        }
    }
    Ok(())
}

fn place_with_red_guard(st: &mut ProcState, verts: &[Vertex], edges: &[(Vertex, Vertex)], local: &EdgeColoring) {
    for (i, &(a, b)) in edges.iter().enumerate() {
        st.set_color(verts[a], verts[b], local.get(i).expect("total"));
    }
    if verts.iter().any(|&v| st.all_red(v)) {
        for &(a, b) in edges {
            let e = st.graph.edge_index(verts[a], verts[b]).unwrap();
            let swapped = match st.coloring.get(e) {
                Some(Color::Red) => Color::Green,
                Some(Color::Green) => Color::Red,
                other => other.expect("just colored"),
            };
            st.coloring.set(e, swapped);
        }
    }
}

/// Colors the edges from the source orbit into a target whose vertices have
/// no uncolored edges except those edges, so that every target vertex ends
/// up with a blue or green edge.
///
/// The first representative's red-free palette settles its neighbors. Then,
/// while some target vertex `y` is unsettled, an unused source adjacent to
/// `y` splits its palette over the current classes so that `y`'s class gets
/// a non-red color, and `y` takes it. Sources never needed color their
/// edges by the plain split at the end.
pub fn settle_bare_target(st: &mut ProcState, step: &RefinementStep, target: usize) -> Result<(), ColorError> {
    let q = step.targets[target].clone();
    let n = st.graph.n();
    let in_q = membership(n, &q);
    let mut settled = vec![false; n];
    let mut used: Vec<Vertex> = Vec::new();
    let mut classes: Vec<Vec<Vertex>> = vec![q.clone()];

    let first = step.chosen[0];
    color_from(st, step, target, first, None, &in_q, &mut classes, &mut settled)?;
    used.push(first);

    while let Some(&y) = q.iter().find(|&&v| !settled[v]) {
        let mut candidates: Vec<Vertex> = st.uncolored_neighbors(y).filter(|x| !used.contains(x)).collect();
        candidates.sort_unstable();
        let Some(&x) = candidates.first() else {
            return Err(ColorError::Precondition(format!("no unused source left to settle vertex {y}")));
        };
        color_from(st, step, target, x, Some(y), &in_q, &mut classes, &mut settled)?;
        used.push(x);
    }

    let mut rest: Vec<Vertex> = step.source_orbit.iter().copied().filter(|x| !used.contains(x)).collect();
    rest.sort_unstable();
    for x in rest {
        color_from(st, step, target, x, None, &in_q, &mut classes, &mut settled)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn color_from(
    st: &mut ProcState,
    step: &RefinementStep,
    target: usize,
    x: Vertex,
    focus: Option<Vertex>,
    in_q: &[bool],
    classes: &mut Vec<Vec<Vertex>>,
    settled: &mut [bool],
) -> Result<(), ColorError> {
    let reach: Vec<bool> = {
        let mut r = vec![false; in_q.len()];
        for w in st.uncolored_neighbors(x) {
            if in_q[w] {
                r[w] = true;
            }
        }
        r
    };
    let pieces: Vec<Vec<Vertex>> = classes
        .iter()
        .map(|c| c.iter().copied().filter(|&v| reach[v]).collect::<Vec<_>>())
        .filter(|p: &Vec<Vertex>| !p.is_empty())
        .collect();
    let sizes: Vec<usize> = pieces.iter().map(Vec::len).collect();
    let focus_piece = focus.and_then(|y| pieces.iter().position(|p| p.contains(&y)));
    let palette: Palette = step.sequence_of(x).parts[target];
    let parts = palette::split_palette_where(palette, &sizes, |ps| match focus_piece {
        Some(i) => ps[i].has_non_red(),
        None => true,
    })?;

    let mut received: BTreeMap<Vertex, Color> = BTreeMap::new();
    for (pi, (piece, part)) in pieces.iter().zip(&parts).enumerate() {
        let mut colors = part.to_colors();
        let mut order = piece.clone();
        if focus_piece == Some(pi) {
            let y = focus.unwrap();
            let at = colors.iter().position(|&c| c != Color::Red).expect("split guarantees a non-red color");
            let c = colors.remove(at);
            colors.insert(0, c);
            order.retain(|&v| v != y);
            order.insert(0, y);
        }
        for (&v, &c) in order.iter().zip(&colors) {
            received.insert(v, c);
        }
    }
    for (&v, &c) in &received {
        st.set_color(x, v, c);
        if c != Color::Red {
            settled[v] = true;
        }
    }
    *classes = split_classes(classes, |v| received.get(&v).copied());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorer::step::{assign_palettes, plan_step};
    use crate::graph::Graph;
    use crate::perm;

    #[test]
    fn single_inner_edge_is_blue() {
        // K3 from root 0: level one is the edge 1-2
        let g = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let mut st = ProcState::new(g, false);
        st.initial_step();
        handle_terminal_block(&mut st, &[1, 2]).unwrap();
        assert_eq!(st.color_between(1, 2), Some(Color::Blue));
    }

    #[test]
    fn complete_block_gets_base_coloring_without_all_red() {
        // K5: level one is a K4 with no edges leaving it
        let g = crate::colorer::complete_graph(5);
        let mut st = ProcState::new(g, false);
        st.initial_step();
        handle_terminal_block(&mut st, &[1, 2, 3, 4]).unwrap();
        assert!(st.coloring.is_total());
        assert!((1..5).all(|v| !st.all_red(v)));
        assert!(perm::is_asymmetric(&st.graph, &st.coloring));
    }

    #[test]
    fn bare_target_vertices_all_get_a_non_red_edge() {
        // K_{2,4} from root 2: orbit {0,1} sends 3 edges into {3,4,5}
        let mut e = Vec::new();
        for a in 0..2 {
            for b in 2..6 {
                e.push((a, b));
            }
        }
        let mut st = ProcState::new(Graph::new(6, &e).unwrap(), false);
        st.initial_step();
        let mut step = plan_step(&st, &[0, 1]).unwrap();
        assert_eq!(step.targets, vec![vec![3, 4, 5]]);
        assert_eq!(step.bare_terminal, vec![true]);
        assign_palettes(&mut step).unwrap();
        settle_bare_target(&mut st, &step, 0).unwrap();
        assert!(st.coloring.is_total());
        for v in 3..6 {
            assert!(!st.all_red(v), "vertex {v}");
        }
        assert!(perm::is_asymmetric(&st.graph, &st.coloring));
    }
}
