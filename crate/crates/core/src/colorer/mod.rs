//! The level-by-level coloring procedure.
//!
//! The root's edges are colored red, then orbits of the color-preserving
//! root stabilizer are processed one at a time, lowest level first. Each
//! step fixes every vertex of the processed orbit by coloring its inner
//! and outgoing edges, and colors any orbit it leaves with only inner edges.

pub mod complete;
mod state;
mod step;
mod terminal;

use thiserror::Error;

use crate::color::EdgeColoring;
use crate::graph::{Graph, GraphError, Vertex};
use crate::palette::PaletteError;
use crate::perm::{self, Permutation};

pub use complete::{complete_graph, complete_graph_coloring};
pub use state::{choose_root, ConditionReport, OrbitStats, ProcState};
pub use step::{
    assign_palettes, color_inner_edges, plan_step, refine_and_color_targets, refine_target, RefinementStep, TargetCell,
};
pub use terminal::{handle_terminal_block, settle_bare_target};

/// A finished coloring that still has a nontrivial automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofGap {
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub witness: Permutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("graph is not connected with δ ≥ Δ/2, or is K2")]
    HypothesisViolated,
    #[error("coloring finished but automorphism {:?} survives", .0.witness.images())]
    ProofGapWitness(Box<ProofGap>),
    #[error("step {} broke the orbit conditions: {:?}", .0.step_index, .0)]
    ConditionViolated(ConditionReport),
    #[error("need {needed} palette sequences for sizes {sizes:?}, only {available} exist")]
    PaletteExhausted { sizes: Vec<usize>, needed: usize, available: usize },
    #[error(transparent)]
    Palette(#[from] PaletteError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Precondition(String),
}

/// A verified coloring together with how it was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub coloring: EdgeColoring,
    pub root: Vertex,
    pub steps: usize,
}

/// An asymmetric coloring with red, blue and green. Deterministic.
pub fn color_graph(g: &Graph, paranoid: bool) -> Result<EdgeColoring, ColorError> {
    color_graph_detailed(g, paranoid).map(|o| o.coloring)
}

pub fn color_graph_detailed(g: &Graph, paranoid: bool) -> Result<Outcome, ColorError> {
    if !g.satisfies_hypothesis() {
        return Err(ColorError::HypothesisViolated);
    }
    let mut st = ProcState::new(g.clone(), paranoid);
    if g.n() == 1 {
        return Ok(Outcome { coloring: st.coloring, root: 0, steps: 0 });
    }
    st.initial_step();
    check(&st)?;
    while let Some(orbit) = st.next_orbit() {
        process_orbit(&mut st, &orbit)?;
    }
    if !st.coloring.is_total() {
        return Err(ColorError::Precondition("procedure stopped with uncolored edges".into()));
    }
    if let Some(witness) = perm::find_symmetry(g, &st.coloring) {
        return Err(ColorError::ProofGapWitness(Box::new(ProofGap {
            graph: g.clone(),
            coloring: st.coloring,
            witness,
        })));
    }
    Ok(Outcome { root: st.root(), steps: st.step_index, coloring: st.coloring })
}

/// One step of the procedure for an unprocessed orbit with uncolored edges.
pub fn process_orbit(st: &mut ProcState, orbit: &[Vertex]) -> Result<(), ColorError> {
    let stats = st.orbit_stats(orbit);
    if stats.t == 0 {
        return Err(ColorError::Precondition(format!("orbit {orbit:?} has no colored incoming edges")));
    }
    if stats.k == 0 {
        if st.graph.n() == 3 && st.graph.is_complete() {
            color_whole_complete_graph(st);
        } else {
            handle_terminal_block(st, orbit)?;
        }
        mark_processed(st, orbit);
        st.refresh_orbits();
    } else {
        let mut step = plan_step(st, orbit)?;
        color_inner_edges(st, &step)?;
        assign_palettes(&mut step)?;
        refine_and_color_targets(st, &step)?;
        for i in 0..step.targets.len() {
            if step.bare_terminal[i] {
                settle_bare_target(st, &step, i)?;
            }
        }
        mark_processed(st, orbit);
        st.refresh_orbits();
        finish_targets(st, &step)?;
    }
    st.step_index += 1;
    check(st)
}

/// Colors the blocks inside the targets that were left with inner edges
/// only, then marks every finished target vertex processed.
fn finish_targets(st: &mut ProcState, step: &RefinementStep) -> Result<(), ColorError> {
    let mut in_u = vec![false; st.graph.n()];
    for &v in step.targets.iter().flatten() {
        in_u[v] = true;
    }
    let terminal: Vec<Vec<Vertex>> = st
        .orbits
        .blocks()
        .iter()
        .filter(|b| b.iter().all(|&v| in_u[v]))
        .filter(|b| {
            let inside = state::membership(st.graph.n(), b);
            b.iter().any(|&v| st.has_uncolored(v)) && b.iter().all(|&v| st.uncolored_neighbors(v).all(|w| inside[w]))
        })
        .cloned()
        .collect();
    for block in &terminal {
        handle_terminal_block(st, block)?;
    }
    let done: Vec<Vertex> = step.targets.iter().flatten().copied().filter(|&v| !st.has_uncolored(v)).collect();
    mark_processed(st, &done);
    st.refresh_orbits();
    Ok(())
}

/// `K₃` has no asymmetric coloring with a red root pair, so it takes the
/// base coloring outright.
fn color_whole_complete_graph(st: &mut ProcState) {
    let n = st.graph.n();
    st.coloring = complete_graph_coloring(n);
    mark_processed(st, &(0..n).collect::<Vec<_>>());
}

fn mark_processed(st: &mut ProcState, vs: &[Vertex]) {
    for &v in vs {
        st.processed[v] = true;
    }
}

fn check(st: &ProcState) -> Result<(), ColorError> {
    if !st.paranoid {
        return Ok(());
    }
    let report = st.check_conditions();
    if report.all_hold() {
        Ok(())
    } else {
        Err(ColorError::ConditionViolated(report))
    }
}
