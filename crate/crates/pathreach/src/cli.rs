//! The `pathreach` command line.
//!
//! Results go to stdout, diagnostics to stderr. Exit codes: 0 for a positive
//! answer or success, 1 for a negative answer (unreachable, invalid
//! decomposition), 2 for usage and input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use pathreach_core::testkit::{
    chain_instance, gen_decomposed_instance, gen_random_dag, oracle_min_switches, oracle_reachable,
    InstanceSeed,
};
use pathreach_core::{
    decide_reachability, minimal_path_decomposition, path_number_lower_bound, union_graph,
    validate_path_decomposition, validate_walk_decomposition, Digraph, Vertex, WalkDecomposition,
};

use crate::bench::{self, BenchConfig, Family};
use crate::format::{self, FormatError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus(pub i32);

impl ExitStatus {
    pub const SUCCESS: Self = Self(0);
    pub const NEGATIVE: Self = Self(1);
    pub const ERROR: Self = Self(2);

    pub fn code(self) -> i32 {
        self.0
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pathreach",
    version,
    about = "Reachability from path and walk decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a decomposition against a graph.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        decomp: PathBuf,
        /// Require edge-disjoint simple paths (default).
        #[arg(long, conflicts_with = "walks")]
        paths: bool,
        /// Only require the union of the walks to equal the graph.
        #[arg(long)]
        walks: bool,
    },
    /// Decide reachability from a decomposition.
    Reach(QueryArgs),
    /// Like `reach`, printing only the minimum number of switches.
    MinSwitches(QueryArgs),
    /// Minimal path decomposition of a DAG.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Degree-imbalance lower bound on the path number.
    PathnumLb {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Answer a query with the reference oracles.
    Oracle {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, required_unless_present = "graph")]
        decomp: Option<PathBuf>,
        #[arg(long)]
        from: Vertex,
        #[arg(long)]
        to: Vertex,
    },
    /// Time queries and emit CSV.
    Bench {
        #[arg(long, value_enum, default_value = "chain")]
        family: Family,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
        #[arg(long, default_value_t = 30)]
        max_len: usize,
        #[arg(long, default_value_t = 4)]
        queries: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct QueryArgs {
    #[arg(long)]
    decomp: PathBuf,
    /// Graph to validate the decomposition against; defaults to its union graph.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    from: Vertex,
    #[arg(long)]
    to: Vertex,
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// Random walk decomposition.
    Walks {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random DAG in graph format.
    Dag {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// `k` paths laid end to end over `n` vertices.
    Chain {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{0}")]
    Core(#[from] pathreach_core::Error),
    #[error("decomposition does not match the graph ({0} violations)")]
    Mismatch(usize),
    #[error("cannot write output: {0}")]
    Write(#[from] std::io::Error),
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                ExitStatus::ERROR
            } else {
                let _ = write!(stdout, "{text}");
                ExitStatus::SUCCESS
            };
        }
    };
    let mut input = Input { stdin, used: false };
    match dispatch(cli.command, &mut input, stdout) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            ExitStatus::ERROR
        }
    }
}

/// Reads named files; `-` means stdin, which can be consumed once.
struct Input<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Input<'_> {
    fn read(&mut self, path: &PathBuf) -> Result<String, CliError> {
        let name = path.display().to_string();
        let read_err = |source| CliError::Read {
            path: name.clone(),
            source,
        };
        if name == "-" {
            if self.used {
                return Err(read_err(std::io::Error::other("stdin already consumed")));
            }
            self.used = true;
            let mut text = String::new();
            self.stdin.read_to_string(&mut text).map_err(read_err)?;
            Ok(text)
        } else {
            fs::read_to_string(path).map_err(read_err)
        }
    }

    fn graph(&mut self, path: &PathBuf) -> Result<Digraph, CliError> {
        let text = self.read(path)?;
        format::parse_graph(&text).map_err(|source| CliError::Format {
            path: path.display().to_string(),
            source,
        })
    }

    fn decomposition(&mut self, path: &PathBuf) -> Result<WalkDecomposition, CliError> {
        let text = self.read(path)?;
        format::parse_decomposition(&text).map_err(|source| CliError::Format {
            path: path.display().to_string(),
            source,
        })
    }

    /// The decomposition plus the vertex count queries are answered over.
    fn query_instance(
        &mut self,
        decomp: &PathBuf,
        graph: Option<&PathBuf>,
    ) -> Result<(WalkDecomposition, Digraph), CliError> {
        let w = self.decomposition(decomp)?;
        let g = match graph {
            Some(path) => {
                let g = self.graph(path)?;
                let report = validate_walk_decomposition(&g, &w);
                if !report.is_ok() {
                    return Err(CliError::Mismatch(report.violations.len()));
                }
                g
            }
            None => union_graph(&w, w.vertex_bound())?,
        };
        Ok((w, g))
    }
}

fn verdict(positive: bool) -> ExitStatus {
    if positive {
        ExitStatus::SUCCESS
    } else {
        ExitStatus::NEGATIVE
    }
}

fn dispatch(
    command: Command,
    input: &mut Input<'_>,
    out: &mut dyn Write,
) -> Result<ExitStatus, CliError> {
    match command {
        Command::Validate {
            graph,
            decomp,
            paths: _,
            walks,
        } => {
            let g = input.graph(&graph)?;
            let w = input.decomposition(&decomp)?;
            let report = if walks {
                validate_walk_decomposition(&g, &w)
            } else {
                validate_path_decomposition(&g, &w)
            };
            if report.is_ok() {
                writeln!(out, "OK")?;
            } else {
                writeln!(out, "INVALID violations={}", report.violations.len())?;
                for v in &report.violations {
                    writeln!(out, "{v}")?;
                }
            }
            Ok(verdict(report.is_ok()))
        }
        Command::Reach(q) => {
            let (w, g) = input.query_instance(&q.decomp, q.graph.as_ref())?;
            let r = decide_reachability(&w, g.n(), q.from, q.to)?;
            match r.min_switches {
                Some(switches) => writeln!(
                    out,
                    "REACHABLE switches={switches} iterations={} peak_words={}",
                    r.iterations, r.peak_words
                )?,
                None => writeln!(
                    out,
                    "UNREACHABLE iterations={} peak_words={}",
                    r.iterations, r.peak_words
                )?,
            }
            Ok(verdict(r.reachable))
        }
        Command::MinSwitches(q) => {
            let (w, g) = input.query_instance(&q.decomp, q.graph.as_ref())?;
            let r = decide_reachability(&w, g.n(), q.from, q.to)?;
            match r.min_switches {
                Some(switches) => writeln!(out, "{switches}")?,
                None => writeln!(out, "UNREACHABLE")?,
            }
            Ok(verdict(r.reachable))
        }
        Command::Decompose { graph } => {
            let g = input.graph(&graph)?;
            let d = minimal_path_decomposition(&g)?;
            out.write_all(format::write_decomposition(&d).as_bytes())?;
            Ok(ExitStatus::SUCCESS)
        }
        Command::PathnumLb { graph } => {
            let g = input.graph(&graph)?;
            writeln!(out, "{}", path_number_lower_bound(&g))?;
            Ok(ExitStatus::SUCCESS)
        }
        Command::Gen { kind } => {
            let text = match kind {
                GenKind::Walks {
                    n,
                    k,
                    max_len,
                    seed,
                } => {
                    let spec = InstanceSeed::new(n, k, max_len, seed)?;
                    format::write_decomposition(&gen_decomposed_instance(&spec))
                }
                GenKind::Dag { n, p, seed } => format::write_graph(&gen_random_dag(n, p, seed)?),
                GenKind::Chain { n, k } => format::write_decomposition(&chain_instance(n, k)?),
            };
            out.write_all(text.as_bytes())?;
            Ok(ExitStatus::SUCCESS)
        }
        Command::Oracle {
            graph,
            decomp,
            from,
            to,
        } => {
            let reachable;
            let mut switches = None;
            match decomp {
                Some(decomp) => {
                    let (w, g) = input.query_instance(&decomp, graph.as_ref())?;
                    reachable = oracle_reachable(&g, from, to)?;
                    switches = oracle_min_switches(&w, g.n(), from, to)?;
                }
                None => {
                    let g = input.graph(graph.as_ref().expect("clap requires one input"))?;
                    reachable = oracle_reachable(&g, from, to)?;
                }
            }
            match (reachable, switches) {
                (true, Some(s)) => writeln!(out, "REACHABLE switches={s}")?,
                (true, None) => writeln!(out, "REACHABLE")?,
                (false, _) => writeln!(out, "UNREACHABLE")?,
            }
            Ok(verdict(reachable))
        }
        Command::Bench {
            family,
            n,
            k,
            max_len,
            queries,
            seed,
        } => {
            let config = BenchConfig {
                family,
                ns: n,
                ks: k,
                max_len,
                queries,
                seed,
            };
            let rows = bench::run_bench(&config)?;
            bench::write_csv(&rows, out)?;
            Ok(ExitStatus::SUCCESS)
        }
    }
}
