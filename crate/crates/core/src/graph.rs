//! Immutable simple digraphs: no loops, no parallel arcs, dense vertex ids.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result, Vertex};

/// In- and out-degree of a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DegreePair {
    pub indeg: usize,
    pub outdeg: usize,
}

impl DegreePair {
    /// `max(0, outdeg - indeg)`.
    pub fn imbalance(&self) -> usize {
        self.outdeg.saturating_sub(self.indeg)
    }
}

/// A simple directed graph on vertices `0..n`.
///
/// Adjacency is held in compressed sparse row form in both directions, with
/// each neighbor list sorted ascending. Edge ids are positions in the
/// out-adjacency array, so they enumerate edges in lexicographic `(u, v)` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out_offsets: Vec<usize>,
    out_targets: Vec<Vertex>,
    in_offsets: Vec<usize>,
    in_sources: Vec<Vertex>,
}

impl Digraph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range ids.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edges: Vec<_> = edges.into_iter().collect();
        for &(u, v) in &edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unique(n, &edges))
    }

    /// Builds a graph from edges that may repeat; duplicates collapse to one arc.
    pub(crate) fn new_dedup(n: usize, mut edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        for &(u, v) in &edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted_unique(n, &edges))
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        Self::from_sorted_unique(n, &[])
    }

    fn from_sorted_unique(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut out_offsets = vec![0; n + 1];
        let mut in_offsets = vec![0; n + 1];
        for &(u, v) in edges {
            out_offsets[u + 1] += 1;
            in_offsets[v + 1] += 1;
        }
        for i in 0..n {
            out_offsets[i + 1] += out_offsets[i];
            in_offsets[i + 1] += in_offsets[i];
        }
        let out_targets = edges.iter().map(|&(_, v)| v).collect();

        // Sources arrive in ascending order because `edges` is sorted by `u` first.
        let mut in_sources = vec![0; edges.len()];
        let mut fill = in_offsets.clone();
        for &(u, v) in edges {
            in_sources[fill[v]] = u;
            fill[v] += 1;
        }

        Self {
            n,
            out_offsets,
            out_targets,
            in_offsets,
            in_sources,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.out_targets.len()
    }

    /// Successors of `u` in ascending order. Panics if `u >= n`.
    pub fn out_neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.out_targets[self.out_offsets[u]..self.out_offsets[u + 1]]
    }

    /// Predecessors of `v` in ascending order. Panics if `v >= n`.
    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.in_sources[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    /// Id of edge `(u, v)`, if present. Ids lie in `0..edge_count()`.
    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.out_neighbors(u)
            .binary_search(&v)
            .ok()
            .map(|pos| self.out_offsets[u] + pos)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Edges in lexicographic order; the i-th item has edge id i.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).iter().map(move |&v| (u, v)))
    }

    pub fn degrees(&self, v: Vertex) -> Result<DegreePair> {
        check_vertex(v, self.n)?;
        Ok(DegreePair {
            indeg: self.in_offsets[v + 1] - self.in_offsets[v],
            outdeg: self.out_offsets[v + 1] - self.out_offsets[v],
        })
    }

    /// True iff the graph has no directed cycle (Kahn's algorithm).
    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_neighbors(v).len()).collect();
        let mut ready: Vec<Vertex> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(u) = ready.pop() {
            removed += 1;
            for &v in self.out_neighbors(u) {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.push(v);
                }
            }
        }
        removed == self.n
    }
}

pub(crate) fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n })
    }
}
