//! Deciding reachability in a directed graph from a path or walk decomposition.
//!
//! Given `k` walks whose union is a digraph on `n` vertices, [`reach::decide_reachability`]
//! answers s-t reachability while holding only `2k` frontier registers and a
//! constant number of scratch indices, i.e. `O(k log n)` bits of working memory.
//! The [`meter::RegisterMeter`] records how many index-sized cells were live at
//! the peak so the bound can be checked empirically.
//!
//! For acyclic graphs, [`dag::minimal_path_decomposition`] produces a path
//! decomposition whose size equals the degree-imbalance lower bound, so the
//! two halves compose: a DAG with small path number has a small-space
//! reachability procedure.
//!
//! The crate is `no_std` and only needs `alloc`. Text formats, the CLI and the
//! benchmark harness live in the `pathreach` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod dag;
pub mod decomposition;
mod error;
pub mod graph;
pub mod meter;
pub mod reach;
pub mod testkit;

pub use dag::{
    assign_edge_indices, minimal_path_decomposition, minimal_path_decomposition_metered,
    trace_path, EdgeIndexing,
};
pub use decomposition::{
    path_number_lower_bound, union_graph, validate_path_decomposition, validate_walk_decomposition,
    ValidationReport, Violation, ViolationKind, Walk, WalkDecomposition,
};
pub use error::Error;
pub use graph::{DegreePair, Digraph};
pub use meter::RegisterMeter;
pub use reach::{
    advance_frontier, decide_reachability, earliest_occurrence, occurs_from, FrontierRegisters,
    ReachResult,
};

/// Vertex identifier: a dense index in `[0, n)`.
pub type Vertex = usize;

pub type Result<T, E = Error> = core::result::Result<T, E>;
