//! Walk and path decompositions of a digraph and their validation.
//!
//! A walk decomposition is any family of walks whose union of steps is exactly
//! the edge set. A path decomposition additionally requires every walk to be a
//! simple path and every edge to be covered exactly once.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::check_vertex;
use crate::{Digraph, Error, Result, Vertex};

/// A nonempty vertex sequence in which consecutive vertices differ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk(Vec<Vertex>);

impl Walk {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyWalk);
        }
        if let Some(position) = vertices.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::LoopStep {
                vertex: vertices[position],
                position,
            });
        }
        Ok(Self(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Number of vertices (not steps).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive vertex pairs, in traversal order.
    pub fn steps(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn is_simple(&self) -> bool {
        self.repeated_vertices().is_empty()
    }

    fn repeated_vertices(&self) -> BTreeSet<Vertex> {
        let mut seen = BTreeSet::new();
        self.0
            .iter()
            .copied()
            .filter(|&v| !seen.insert(v))
            .collect()
    }
}

impl TryFrom<Vec<Vertex>> for Walk {
    type Error = Error;

    fn try_from(vertices: Vec<Vertex>) -> Result<Self> {
        Self::new(vertices)
    }
}

impl core::ops::Index<usize> for Walk {
    type Output = Vertex;

    fn index(&self, position: usize) -> &Vertex {
        &self.0[position]
    }
}

/// An ordered family of `k` walks; the order fixes walk indices `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WalkDecomposition {
    walks: Vec<Walk>,
}

impl WalkDecomposition {
    pub fn new(walks: Vec<Walk>) -> Self {
        Self { walks }
    }

    /// Convenience constructor from raw vertex sequences.
    pub fn from_sequences<I, W>(sequences: I) -> Result<Self>
    where
        I: IntoIterator<Item = W>,
        W: Into<Vec<Vertex>>,
    {
        let walks = sequences
            .into_iter()
            .map(|w| Walk::new(w.into()))
            .collect::<Result<_>>()?;
        Ok(Self { walks })
    }

    /// Number of walks.
    pub fn k(&self) -> usize {
        self.walks.len()
    }

    pub fn walks(&self) -> &[Walk] {
        &self.walks
    }

    pub fn walk(&self, index: usize) -> &Walk {
        &self.walks[index]
    }

    /// Total number of vertex positions over all walks.
    pub fn total_len(&self) -> usize {
        self.walks.iter().map(Walk::len).sum()
    }

    /// Smallest `n` such that every vertex id in the decomposition is `< n`.
    pub fn vertex_bound(&self) -> usize {
        self.walks
            .iter()
            .flat_map(|w| w.vertices().iter())
            .map(|&v| v + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn into_walks(self) -> Vec<Walk> {
        self.walks
    }
}

impl From<Vec<Walk>> for WalkDecomposition {
    fn from(walks: Vec<Walk>) -> Self {
        Self::new(walks)
    }
}

/// The digraph on `n` vertices whose edges are all walk steps, deduplicated.
pub fn union_graph(w: &WalkDecomposition, n: usize) -> Result<Digraph> {
    let mut edges = Vec::new();
    for walk in w.walks() {
        for &v in walk.vertices() {
            check_vertex(v, n)?;
        }
        edges.extend(walk.steps());
    }
    Digraph::new_dedup(n, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    NotSimple,
    EdgeNotInGraph,
    EdgeRepeated,
    EdgeUncovered,
}

impl ViolationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::NotSimple => "NOT_SIMPLE",
            Self::EdgeNotInGraph => "EDGE_NOT_IN_GRAPH",
            Self::EdgeRepeated => "EDGE_REPEATED",
            Self::EdgeUncovered => "EDGE_UNCOVERED",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One reason a decomposition fails validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Violation {
    /// `vertex` occurs more than once in walk `walk`.
    NotSimple { walk: usize, vertex: Vertex },
    /// A step of walk `walk` is not an edge of the graph.
    EdgeNotInGraph { walk: usize, edge: (Vertex, Vertex) },
    /// Walk `walk` covers `edge` again after an earlier walk (or step) did.
    EdgeRepeated { walk: usize, edge: (Vertex, Vertex) },
    /// No walk covers `edge`.
    EdgeUncovered { edge: (Vertex, Vertex) },
}

impl Violation {
    pub fn kind(&self) -> ViolationKind {
        match self {
            Self::NotSimple { .. } => ViolationKind::NotSimple,
            Self::EdgeNotInGraph { .. } => ViolationKind::EdgeNotInGraph,
            Self::EdgeRepeated { .. } => ViolationKind::EdgeRepeated,
            Self::EdgeUncovered { .. } => ViolationKind::EdgeUncovered,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::NotSimple { walk, vertex } => {
                write!(f, "{} walk={walk} vertex={vertex}", self.kind())
            }
            Self::EdgeNotInGraph { walk, edge } | Self::EdgeRepeated { walk, edge } => {
                write!(f, "{} walk={walk} edge={} {}", self.kind(), edge.0, edge.1)
            }
            Self::EdgeUncovered { edge } => write!(f, "{} edge={} {}", self.kind(), edge.0, edge.1),
        }
    }
}

/// All violations found by a validator; empty means the decomposition is valid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn contains(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind() == kind)
    }
}

/// Checks that `p` partitions the edges of `g` into simple paths.
pub fn validate_path_decomposition(g: &Digraph, p: &WalkDecomposition) -> ValidationReport {
    let mut violations = Vec::new();
    let mut cover = vec![0u32; g.edge_count()];
    for (index, walk) in p.walks().iter().enumerate() {
        if walk.len() < 2 {
            continue;
        }
        violations.extend(walk.repeated_vertices().into_iter().map(|vertex| {
            Violation::NotSimple {
                walk: index,
                vertex,
            }
        }));
        for (u, v) in walk.steps() {
            match g.edge_id(u, v) {
                None => violations.push(Violation::EdgeNotInGraph {
                    walk: index,
                    edge: (u, v),
                }),
                Some(id) => {
                    cover[id] += 1;
                    if cover[id] > 1 {
                        violations.push(Violation::EdgeRepeated {
                            walk: index,
                            edge: (u, v),
                        });
                    }
                }
            }
        }
    }
    push_uncovered(g, &cover, &mut violations);
    ValidationReport { violations }
}

/// Checks that the union of the walks in `w` is exactly the edge set of `g`.
///
/// Repeated vertices and overlapping walks are allowed.
pub fn validate_walk_decomposition(g: &Digraph, w: &WalkDecomposition) -> ValidationReport {
    let mut violations = Vec::new();
    let mut cover = vec![0u32; g.edge_count()];
    for (index, walk) in w.walks().iter().enumerate() {
        for (u, v) in walk.steps() {
            match g.edge_id(u, v) {
                None => violations.push(Violation::EdgeNotInGraph {
                    walk: index,
                    edge: (u, v),
                }),
                Some(id) => cover[id] = 1,
            }
        }
    }
    push_uncovered(g, &cover, &mut violations);
    ValidationReport { violations }
}

fn push_uncovered(g: &Digraph, cover: &[u32], violations: &mut Vec<Violation>) {
    violations.extend(
        g.edges()
            .zip(cover)
            .filter(|(_, &c)| c == 0)
            .map(|(edge, _)| Violation::EdgeUncovered { edge }),
    );
}

/// `Σ_v max(0, outdeg(v) - indeg(v))`: no path decomposition of `g` is smaller.
pub fn path_number_lower_bound(g: &Digraph) -> usize {
    (0..g.n())
        .map(|v| g.degrees(v).map(|d| d.imbalance()).unwrap_or(0))
        .sum()
}
