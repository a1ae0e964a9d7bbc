use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::{Digraph, Vertex};

/// Exact path number by exhaustive search; only for small graphs.
///
/// Any partition of the edges into simple paths contains a path through the
/// lowest uncovered edge, so branching on that path's choice covers every
/// partition. Panics if `g` has more than 64 edges or 64 vertices.
pub fn brute_force_path_number(g: &Digraph) -> usize {
    assert!(
        g.edge_count() <= 64 && g.n() <= 64,
        "graph too large for brute force"
    );
    let m = g.edge_count();
    let full = if m == 0 { 0 } else { u64::MAX >> (64 - m) };
    let mut memo = BTreeMap::new();
    min_paths(g, full, &mut memo)
}

fn min_paths(g: &Digraph, remaining: u64, memo: &mut BTreeMap<u64, usize>) -> usize {
    if remaining == 0 {
        return 0;
    }
    if let Some(&known) = memo.get(&remaining) {
        return known;
    }
    let first = remaining.trailing_zeros() as usize;
    let mut candidates = Vec::new();
    for start in 0..g.n() {
        extend_paths(g, remaining, start, 1 << start, 0, first, &mut candidates);
    }
    let best = candidates
        .into_iter()
        .map(|path| 1 + min_paths(g, remaining & !path, memo))
        .min()
        .expect("the lowest edge alone is a path");
    memo.insert(remaining, best);
    best
}

/// Collects every simple path from `at` over edges in `remaining` whose edge
/// set contains edge `must`.
fn extend_paths(
    g: &Digraph,
    remaining: u64,
    at: Vertex,
    visited: u64,
    used: u64,
    must: usize,
    out: &mut Vec<u64>,
) {
    if used & (1 << must) != 0 {
        out.push(used);
    }
    for &next in g.out_neighbors(at) {
        let id = g.edge_id(at, next).expect("adjacent");
        if remaining & (1 << id) != 0 && visited & (1 << next) == 0 {
            extend_paths(
                g,
                remaining,
                next,
                visited | 1 << next,
                used | 1 << id,
                must,
                out,
            );
        }
    }
}

/// Every labelled DAG on `0..n`, for `n <= 5`.
pub fn enumerate_dags(n: usize) -> impl Iterator<Item = Digraph> {
    assert!(n <= 5, "labelled DAG enumeration is limited to n <= 5");
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    (0..total).filter_map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e);
        let g = Digraph::new(n, edges).expect("distinct non-loop pairs");
        g.is_acyclic().then_some(g)
    })
}
