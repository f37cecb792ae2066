//! Minimum label cuts in edge-labeled graphs whose edges may carry several
//! labels.
//!
//! The [`transform`] module eliminates overlaps (operation K) by merging
//! labels that share an edge; [`solvers`] finds exact and greedy label cuts;
//! [`properties`] evaluates the cut-set functions behind the structural
//! claims; [`reductions`] maps hitting set onto the `s-t` variant.

pub mod check;
mod dsu;
pub mod fixtures;
pub mod generate;
pub mod io;
pub mod model;
pub mod properties;
pub mod reductions;
pub mod solvers;
pub mod transform;

pub use dsu::DisjointSet;
pub use model::{
    build_graph, compute_stats, format_weight, Edge, EdgeId, EdgeSubset, GraphBuilder, GraphError, GraphStats, Label,
    LabelId, LabeledGraph, Semantics, VertexId,
};
pub use solvers::{exact_min_label_cut, greedy_st_label_cut, min_edge_cut, CutSolution, SolveConfig, SolveError, Variant};
pub use transform::{operation_k, verify_guarantees, TransformReport};
