use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Digraph, Error, Result, Walk, WalkDecomposition};

/// Parameters of a random walk-decomposition instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InstanceSeed {
    /// Vertex count, at least 1.
    pub n: usize,
    /// Number of walks.
    pub k: usize,
    /// Maximum walk length in vertices, at least 1.
    pub max_len: usize,
    pub seed: u64,
}

impl InstanceSeed {
    pub fn new(n: usize, k: usize, max_len: usize, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInstance("n must be at least 1"));
        }
        if max_len == 0 {
            return Err(Error::InvalidInstance("max_len must be at least 1"));
        }
        Ok(Self {
            n,
            k,
            max_len,
            seed,
        })
    }
}

/// `k` random walks over `0..n`, each with a uniform length in `1..=max_len`.
///
/// Each step draws a uniform vertex and redraws while it equals the current
/// one. With `n == 1` no step is possible and every walk is a single vertex.
pub fn gen_decomposed_instance(spec: &InstanceSeed) -> WalkDecomposition {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n.max(1);
    let walks = (0..spec.k)
        .map(|_| {
            let len = if n == 1 {
                1
            } else {
                rng.random_range(1..=spec.max_len.max(1))
            };
            let mut vertices = Vec::with_capacity(len);
            let mut at = rng.random_range(0..n);
            vertices.push(at);
            while vertices.len() < len {
                let next = rng.random_range(0..n);
                if next != at {
                    at = next;
                    vertices.push(at);
                }
            }
            Walk::new(vertices).expect("generated walk has no loop step")
        })
        .collect();
    WalkDecomposition::new(walks)
}

/// Random DAG on `0..n`: each pair `i < j` becomes edge `(i, j)` with
/// probability `p`.
pub fn gen_random_dag(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Digraph::new(n, edges)
}

/// `k` simple paths over `0..n` laid end to end: path `i` runs through
/// consecutive ids and begins where path `i - 1` ends. Needs `n > k`.
///
/// Walking from vertex 0 to `n - 1` forces `k - 1` switches, and a query that
/// can never succeed (e.g. from 1 back to 0) sweeps all `k` paths.
pub fn chain_instance(n: usize, k: usize) -> Result<WalkDecomposition> {
    if k == 0 || n <= k {
        return Err(Error::InvalidInstance("chain needs k >= 1 and n > k"));
    }
    let last = n - 1;
    let walks = (0..k)
        .map(|i| {
            let from = i * last / k;
            let to = (i + 1) * last / k;
            Walk::new((from..=to).collect()).expect("consecutive ids")
        })
        .collect();
    Ok(WalkDecomposition::new(walks))
}
