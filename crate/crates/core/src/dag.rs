//! Minimal path decompositions of acyclic digraphs by edge indexing.
//!
//! Every vertex numbers its incoming edges `1..=indeg` and its outgoing edges
//! `1..=outdeg`. A path enters a vertex on in-edge `i` and leaves on out-edge
//! `i`, stopping when there is no such out-edge. Paths start on the out-edges
//! numbered above the in-degree, so a vertex with surplus out-degree starts
//! exactly `outdeg - indeg` paths. That count matches the degree-imbalance
//! lower bound, hence the decomposition is minimal.
//!
//! The indexing is never materialised: an edge's index is its rank in the
//! sorted adjacency list, so tracing holds only a few vertex and index cells.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Digraph, Error, RegisterMeter, Result, Vertex, Walk, WalkDecomposition};

/// Cells held while enumerating start edges: start vertex, start index.
const ENUM_SCRATCH: usize = 2;
/// Cells held while tracing: current vertex, next vertex, entry index, and
/// two bounds for the rank search.
const TRACE_SCRATCH: usize = 5;

/// Per-vertex in/out edge indices, 1-based, assigned by ascending neighbor id.
///
/// Incoming edges of `v` are ranked by source id, outgoing edges of `u` by
/// target id. Indices are computed from the sorted adjacency of the borrowed
/// graph rather than stored.
#[derive(Debug, Clone, Copy)]
pub struct EdgeIndexing<'g> {
    graph: &'g Digraph,
}

pub fn assign_edge_indices(g: &Digraph) -> EdgeIndexing<'_> {
    EdgeIndexing { graph: g }
}

impl<'g> EdgeIndexing<'g> {
    pub fn graph(&self) -> &'g Digraph {
        self.graph
    }

    /// Index of `(u, v)` among the incoming edges of `v`, in `1..=indeg(v)`.
    pub fn in_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if v >= self.graph.n() {
            return None;
        }
        self.graph
            .in_neighbors(v)
            .binary_search(&u)
            .ok()
            .map(|r| r + 1)
    }

    /// Index of `(u, v)` among the outgoing edges of `u`, in `1..=outdeg(u)`.
    pub fn out_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.graph.n() {
            return None;
        }
        self.graph
            .out_neighbors(u)
            .binary_search(&v)
            .ok()
            .map(|r| r + 1)
    }

    /// Target of the outgoing edge of `u` with index `i`.
    pub fn out_edge(&self, u: Vertex, i: usize) -> Option<Vertex> {
        i.checked_sub(1)
            .and_then(|r| self.graph.out_neighbors(u).get(r))
            .copied()
    }

    /// Both index tables in edge-id order (lexicographic by `(u, v)`), as
    /// `(in_index, out_index)`.
    pub fn tables(&self) -> (Vec<usize>, Vec<usize>) {
        let m = self.graph.edge_count();
        let mut ins = vec![0; m];
        let mut outs = vec![0; m];
        for (id, (u, v)) in self.graph.edges().enumerate() {
            ins[id] = self.in_index(u, v).expect("edge present");
            outs[id] = self.out_index(u, v).expect("edge present");
        }
        (ins, outs)
    }
}

/// Traces the path that begins with the legal start edge `start`.
///
/// A start edge `(v, w)` is legal when its out-index exceeds `indeg(v)`.
pub fn trace_path(g: &Digraph, idx: &EdgeIndexing<'_>, start: (Vertex, Vertex)) -> Result<Walk> {
    let (u, v) = start;
    let out = idx.out_index(u, v).ok_or(Error::EdgeNotInGraph(u, v))?;
    if out <= g.in_neighbors(u).len() {
        return Err(Error::IllegalStartEdge(u, v));
    }
    if !g.is_acyclic() {
        return Err(Error::Cyclic);
    }
    let mut path = Vec::new();
    trace_into(idx, u, out, &mut path, &mut RegisterMeter::new());
    Walk::new(path)
}

fn trace_into(
    idx: &EdgeIndexing<'_>,
    start: Vertex,
    start_index: usize,
    out: &mut Vec<Vertex>,
    meter: &mut RegisterMeter,
) {
    meter.scoped(TRACE_SCRATCH, |_| {
        let mut at = start;
        let mut index = start_index;
        out.push(at);
        while let Some(next) = idx.out_edge(at, index) {
            out.push(next);
            index = idx.in_index(at, next).expect("traced edge exists");
            at = next;
        }
    });
}

/// A minimal path decomposition of an acyclic `g`.
///
/// Paths are emitted by ascending start vertex, then ascending out-index of
/// the start edge. Fails with [`Error::Cyclic`] if `g` has a cycle.
pub fn minimal_path_decomposition(g: &Digraph) -> Result<WalkDecomposition> {
    minimal_path_decomposition_metered(g, &mut RegisterMeter::new())
}

/// As [`minimal_path_decomposition`], recording working cells in `meter`.
/// The output paths are not counted.
pub fn minimal_path_decomposition_metered(
    g: &Digraph,
    meter: &mut RegisterMeter,
) -> Result<WalkDecomposition> {
    if !g.is_acyclic() {
        return Err(Error::Cyclic);
    }
    let idx = assign_edge_indices(g);
    let mut walks = Vec::new();
    meter.scoped(ENUM_SCRATCH, |meter| {
        for u in 0..g.n() {
            let indeg = g.in_neighbors(u).len();
            let outdeg = g.out_neighbors(u).len();
            for start_index in indeg + 1..=outdeg {
                let mut path = Vec::new();
                trace_into(&idx, u, start_index, &mut path, meter);
                walks.push(Walk::new(path).expect("acyclic trace is a nonempty simple path"));
            }
        }
    });
    Ok(WalkDecomposition::new(walks))
}
