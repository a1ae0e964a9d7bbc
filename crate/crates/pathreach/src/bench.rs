//! Raw timing sweeps of the reachability engine, written as CSV.

use std::io::{self, Write};
use std::time::{Duration, Instant};

use pathreach_core::testkit::{chain_instance, gen_decomposed_instance, InstanceSeed};
use pathreach_core::{decide_reachability, ReachResult, Result, Vertex, WalkDecomposition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CSV_HEADER: &str = "n,k,total_len,query,reachable,switches,iterations,peak_words,nanos";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    /// `k` paths laid end to end over `n` vertices.
    Chain,
    /// `k` uniform random walks over `n` vertices.
    Random,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: Family,
    pub ns: Vec<usize>,
    pub ks: Vec<usize>,
    pub max_len: usize,
    pub queries: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    pub k: usize,
    pub total_len: usize,
    pub query: (Vertex, Vertex),
    pub result: ReachResult,
    pub nanos: u128,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        let r = &self.result;
        format!(
            "{},{},{},{}-{},{},{},{},{},{}",
            self.n,
            self.k,
            self.total_len,
            self.query.0,
            self.query.1,
            r.reachable,
            r.min_switches.map(|s| s.to_string()).unwrap_or_default(),
            r.iterations,
            r.peak_words,
            self.nanos
        )
    }
}

/// Runs one query and measures its wall time.
pub fn timed_query(
    w: &WalkDecomposition,
    n: usize,
    s: Vertex,
    t: Vertex,
) -> Result<(ReachResult, Duration)> {
    let start = Instant::now();
    let result = decide_reachability(w, n, s, t)?;
    Ok((result, start.elapsed()))
}

/// Fastest of `reps` runs of the same query.
pub fn min_time(
    w: &WalkDecomposition,
    n: usize,
    s: Vertex,
    t: Vertex,
    reps: usize,
) -> Result<Duration> {
    let mut best = Duration::MAX;
    for _ in 0..reps.max(1) {
        best = best.min(timed_query(w, n, s, t)?.1);
    }
    Ok(best)
}

/// Instance for one `(n, k)` cell of the sweep, with its vertex count.
pub fn instance(config: &BenchConfig, n: usize, k: usize) -> Result<(WalkDecomposition, usize)> {
    match config.family {
        Family::Chain => Ok((chain_instance(n, k)?, n)),
        Family::Random => {
            let spec = InstanceSeed::new(
                n,
                k,
                config.max_len,
                config.seed ^ (n as u64) << 32 ^ k as u64,
            )?;
            Ok((gen_decomposed_instance(&spec), n))
        }
    }
}

/// Queries for one instance. Chains start with the full sweep `1 -> 0` and
/// the end-to-end query `0 -> n-1`; the rest are uniform random pairs.
fn queries(config: &BenchConfig, n: usize, k: usize) -> Vec<(Vertex, Vertex)> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add((n * 131 + k) as u64));
    let mut out = Vec::with_capacity(config.queries);
    if config.family == Family::Chain && n >= 2 {
        out.extend([(1, 0), (0, n - 1)]);
    }
    while out.len() < config.queries {
        out.push((rng.random_range(0..n), rng.random_range(0..n)));
    }
    out.truncate(config.queries);
    out
}

pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &n in &config.ns {
        for &k in &config.ks {
            let (w, n) = instance(config, n, k)?;
            for (s, t) in queries(config, n, k) {
                let (result, elapsed) = timed_query(&w, n, s, t)?;
                rows.push(BenchRow {
                    n,
                    k,
                    total_len: w.total_len(),
                    query: (s, t),
                    result,
                    nanos: elapsed.as_nanos(),
                });
            }
        }
    }
    Ok(rows)
}

pub fn write_csv(rows: &[BenchRow], out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.to_csv())?;
    }
    Ok(())
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let len = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / len;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / len;
    let cov: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let var: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    cov / var
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_law() {
        let points: Vec<_> = [1.0, 2.0, 4.0, 8.0]
            .iter()
            .map(|&x: &f64| (x, 3.0 * x.powi(3)))
            .collect();
        assert!((log_log_slope(&points) - 3.0).abs() < 1e-9);
    }

    #[test]
    fn chain_rows() {
        let config = BenchConfig {
            family: Family::Chain,
            ns: vec![20],
            ks: vec![4],
            max_len: 1,
            queries: 3,
            seed: 9,
        };
        let rows = run_bench(&config).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].query, (1, 0));
        assert!(!rows[0].result.reachable);
        assert_eq!(rows[0].result.iterations, 4);
        assert_eq!(rows[1].result.min_switches, Some(3));
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert!(lines.next().unwrap().starts_with("20,4,23,1-0,false,,4,"));
    }
}
