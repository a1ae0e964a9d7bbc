//! Reachability from a walk decomposition using `2k` frontier registers.
//!
//! For each walk `i` the register `c[i]` holds the earliest position whose
//! vertex is known to be reachable from `s`, or nothing. Every later position
//! of that walk is then reachable too, so the `k` registers describe the whole
//! reachable set seen so far. Each round recomputes, per walk, the earliest
//! position whose vertex occurs at or after some frontier; after `l` rounds the
//! registers describe exactly the vertices reachable with at most `l` switches
//! between walks. The search stops when `t` is covered or the registers reach a
//! fixpoint.
//!
//! Only the registers and a fixed number of loop indices are held; the
//! decomposition is read in place. A round costs `O(L^2)` comparisons for total
//! decomposition length `L`, and there are at most `n` rounds.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::check_vertex;
use crate::{Error, RegisterMeter, Result, Vertex, Walk, WalkDecomposition};

/// Scratch cells live during a frontier round: `j`, `q`, `v`, `i`, `p`, `changed`.
const ADVANCE_SCRATCH: usize = 6;
/// Scratch cells for a membership sweep over all walks: walk index and position.
const SWEEP_SCRATCH: usize = 2;
/// The round counter held for the whole query.
const QUERY_SCRATCH: usize = 1;

/// Smallest position of `v` in `walk`.
pub fn earliest_occurrence(walk: &Walk, v: Vertex) -> Option<usize> {
    walk.vertices().iter().position(|&x| x == v)
}

/// Whether `v` occurs in `walk` at some position `>= start`.
pub fn occurs_from(walk: &Walk, start: usize, v: Vertex) -> Result<bool> {
    if start >= walk.len() {
        return Err(Error::PositionOutOfRange {
            start,
            len: walk.len(),
        });
    }
    Ok(occurs_from_unchecked(walk, start, v))
}

fn occurs_from_unchecked(walk: &Walk, start: usize, v: Vertex) -> bool {
    walk.vertices()[start..].contains(&v)
}

/// The `c` and `d` register banks, one slot of each per walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierRegisters {
    c: Vec<Option<usize>>,
    d: Vec<Option<usize>>,
}

impl FrontierRegisters {
    /// All registers empty.
    pub fn new(k: usize) -> Self {
        Self {
            c: vec![None; k],
            d: vec![None; k],
        }
    }

    /// Frontier registers set from explicit positions; `d` starts empty.
    pub fn from_positions(c: Vec<Option<usize>>) -> Self {
        let d = vec![None; c.len()];
        Self { c, d }
    }

    /// `c[i]` = earliest occurrence of `s` in walk `i`.
    pub fn seeded(w: &WalkDecomposition, s: Vertex) -> Self {
        Self::from_positions(
            w.walks()
                .iter()
                .map(|walk| earliest_occurrence(walk, s))
                .collect(),
        )
    }

    pub fn c(&self) -> &[Option<usize>] {
        &self.c
    }

    pub fn d(&self) -> &[Option<usize>] {
        &self.d
    }

    pub fn k(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.iter().all(Option::is_none)
    }

    /// Whether `v` occurs at or after the frontier of some walk.
    pub fn covers(&self, w: &WalkDecomposition, v: Vertex) -> bool {
        self.c
            .iter()
            .zip(w.walks())
            .any(|(c, walk)| c.is_some_and(|p| occurs_from_unchecked(walk, p, v)))
    }

    /// One round: compute every `d[j]` from the current `c`, then copy `d`
    /// into `c`. Returns whether any register changed.
    fn advance(&mut self, w: &WalkDecomposition, meter: &mut RegisterMeter) -> bool {
        assert_eq!(self.k(), w.k(), "register count must match walk count");
        meter.scoped(ADVANCE_SCRATCH, |_| {
            for (j, walk) in w.walks().iter().enumerate() {
                // Positions at or after c[j] are already covered, so d[j] <= c[j].
                let limit = self.c[j].unwrap_or(walk.len());
                self.d[j] = self.c[j];
                if let Some(q) = (0..limit).find(|&q| self.covers(w, walk[q])) {
                    self.d[j] = Some(q);
                }
            }
            let changed = self.c != self.d;
            self.c.copy_from_slice(&self.d);
            changed
        })
    }
}

/// Applies one frontier round to `regs` and returns the updated registers.
pub fn advance_frontier(w: &WalkDecomposition, regs: &FrontierRegisters) -> FrontierRegisters {
    let mut next = regs.clone();
    next.advance(w, &mut RegisterMeter::new());
    next
}

/// Outcome of a single s-t query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachResult {
    pub reachable: bool,
    /// Fewest switches between walks on any s-t path; `None` iff unreachable.
    pub min_switches: Option<usize>,
    /// Frontier rounds executed.
    pub iterations: usize,
    /// Peak index-sized working cells, registers included.
    pub peak_words: usize,
}

/// Decides whether `t` is reachable from `s` in the union graph of `w` on `n`
/// vertices.
///
/// `min_switches` is the round at which `t` was first covered (0 if `s == t`
/// or `t` follows `s` on a single walk).
pub fn decide_reachability(
    w: &WalkDecomposition,
    n: usize,
    s: Vertex,
    t: Vertex,
) -> Result<ReachResult> {
    check_vertex(s, n)?;
    check_vertex(t, n)?;
    let mut meter = RegisterMeter::new();
    if s == t {
        return Ok(ReachResult {
            reachable: true,
            min_switches: Some(0),
            iterations: 0,
            peak_words: 0,
        });
    }

    meter.claim(2 * w.k() + QUERY_SCRATCH);
    let mut regs = meter.scoped(SWEEP_SCRATCH, |_| FrontierRegisters::seeded(w, s));
    let mut iterations = 0;
    let mut found = meter.scoped(SWEEP_SCRATCH, |_| regs.covers(w, t));
    if !found && !regs.is_empty() {
        loop {
            iterations += 1;
            if !regs.advance(w, &mut meter) {
                break;
            }
            if meter.scoped(SWEEP_SCRATCH, |_| regs.covers(w, t)) {
                found = true;
                break;
            }
        }
    }
    debug_assert!(iterations <= n);

    Ok(ReachResult {
        reachable: found,
        min_switches: found.then_some(iterations),
        iterations,
        peak_words: meter.peak_words(),
    })
}
