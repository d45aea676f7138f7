//! Asymmetric edge-colorings with three colors for connected graphs whose
//! minimum degree is at least half the maximum degree, plus the tools to
//! check them: a colored-graph automorphism engine, a brute-force
//! distinguishing-index oracle, and file-format plumbing.

pub mod cli;
pub mod color;
pub mod colorer;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod palette;
pub mod perm;

pub use color::{Color, EdgeColoring};
pub use graph::{Graph, GraphError, GraphStats, LevelStructure, Vertex};
pub use perm::{AutGroup, OrbitPartition, Permutation};
