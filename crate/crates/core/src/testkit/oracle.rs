use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::check_vertex;
use crate::{Digraph, Result, Vertex, WalkDecomposition};

/// Breadth-first search from `s`.
pub fn oracle_reachable(g: &Digraph, s: Vertex, t: Vertex) -> Result<bool> {
    check_vertex(s, g.n())?;
    check_vertex(t, g.n())?;
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([s]);
    seen[s] = true;
    while let Some(u) = queue.pop_front() {
        if u == t {
            return Ok(true);
        }
        for &v in g.out_neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    Ok(false)
}

/// Fewest walk switches on any `s`-`t` route, by 0-1 BFS on the occurrence
/// graph.
///
/// Nodes are `(walk, position)` pairs. Moving one position forward along a
/// walk costs 0; jumping to any other occurrence of the same vertex costs 1.
pub fn oracle_min_switches(
    w: &WalkDecomposition,
    n: usize,
    s: Vertex,
    t: Vertex,
) -> Result<Option<usize>> {
    check_vertex(s, n)?;
    check_vertex(t, n)?;
    if s == t {
        return Ok(Some(0));
    }

    // Flatten (walk, position) into a node id.
    let mut base = Vec::with_capacity(w.k());
    let mut vertex_of = Vec::new();
    for walk in w.walks() {
        base.push(vertex_of.len());
        for &v in walk.vertices() {
            check_vertex(v, n)?;
            vertex_of.push(v);
        }
    }
    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (node, &v) in vertex_of.iter().enumerate() {
        occurrences[v].push(node);
    }
    let last_of_walk: Vec<usize> = w
        .walks()
        .iter()
        .zip(&base)
        .flat_map(|(walk, &b)| core::iter::repeat_n(b + walk.len() - 1, walk.len()))
        .collect();

    let mut dist = vec![usize::MAX; vertex_of.len()];
    let mut deque = VecDeque::new();
    for &node in &occurrences[s] {
        dist[node] = 0;
        deque.push_back(node);
    }
    let mut jumped = vec![false; n];
    while let Some(node) = deque.pop_front() {
        let d = dist[node];
        let v = vertex_of[node];
        if v == t {
            return Ok(Some(d));
        }
        if node < last_of_walk[node] && dist[node + 1] > d {
            dist[node + 1] = d;
            deque.push_front(node + 1);
        }
        // Nodes leave the deque in nondecreasing distance, so the first time
        // a vertex is popped its jumps are as cheap as they will ever be.
        if !jumped[v] {
            jumped[v] = true;
            for &other in &occurrences[v] {
                if dist[other] > d + 1 {
                    dist[other] = d + 1;
                    deque.push_back(other);
                }
            }
        }
    }
    Ok(None)
}
