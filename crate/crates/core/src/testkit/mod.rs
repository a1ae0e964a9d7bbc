//! Reference oracles and seeded instance generators.
//!
//! The oracles share no code with the reachability engine or the DAG
//! decomposer, so agreement between the two is meaningful evidence.
//! Generators draw from ChaCha8 seeded with `seed_from_u64`, whose output is
//! stable across platforms and releases.

mod brute;
mod gen;
mod oracle;

pub use brute::{brute_force_path_number, enumerate_dags};
pub use gen::{chain_instance, gen_decomposed_instance, gen_random_dag, InstanceSeed};
pub use oracle::{oracle_min_switches, oracle_reachable};
