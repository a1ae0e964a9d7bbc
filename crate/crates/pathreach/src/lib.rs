//! Text formats, command-line front end and benchmark harness for
//! [`pathreach_core`].

pub mod bench;
pub mod cli;
pub mod format;

pub use cli::{run, ExitStatus};
pub use format::{
    parse_decomposition, parse_graph, write_decomposition, write_graph, FormatError, LineError,
};
