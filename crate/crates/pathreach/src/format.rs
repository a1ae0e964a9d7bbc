//! Line-oriented text formats for graphs and decompositions.
//!
//! Graph files:
//!
//! ```text
//! # comment
//! n 4
//! e 0 1
//! e 1 3
//! ```
//!
//! Decomposition files hold one walk per non-blank, non-comment line, as
//! whitespace-separated vertex ids. Line order fixes walk indices.
//!
//! Both accept LF or CRLF line endings. The writers emit the canonical form:
//! no comments, LF endings, edges in lexicographic order.

use std::fmt::Write as _;

use pathreach_core::{Digraph, Vertex, Walk, WalkDecomposition};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {error}")]
    Line { line: usize, error: LineError },
    #[error("missing header line `n <N>`")]
    MissingHeader,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LineError {
    #[error("malformed line `{0}`")]
    Malformed(String),
    #[error("second header line")]
    DuplicateHeader,
    #[error("edge line before the `n <N>` header")]
    EdgeBeforeHeader,
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop edge ({0}, {0})")]
    Loop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("invalid walk: {0}")]
    Walk(pathreach_core::Error),
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n').enumerate().filter_map(|(i, raw)| {
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
        (!line.is_empty() && !line.starts_with('#')).then_some((i + 1, line))
    })
}

fn parse_id(token: &str, line: &str) -> Result<usize, LineError> {
    token
        .parse()
        .map_err(|_| LineError::Malformed(line.to_owned()))
}

pub fn parse_graph(text: &str) -> Result<Digraph, FormatError> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line_no, line) in content_lines(text) {
        let at = |error| FormatError::Line {
            line: line_no,
            error,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["n", count] => {
                if n.is_some() {
                    return Err(at(LineError::DuplicateHeader));
                }
                n = Some(parse_id(count, line).map_err(at)?);
            }
            ["e", u, v] => {
                let n = n.ok_or_else(|| at(LineError::EdgeBeforeHeader))?;
                let u = parse_id(u, line).map_err(at)?;
                let v = parse_id(v, line).map_err(at)?;
                for vertex in [u, v] {
                    if vertex >= n {
                        return Err(at(LineError::VertexOutOfRange { vertex, n }));
                    }
                }
                if u == v {
                    return Err(at(LineError::Loop(u)));
                }
                if !seen.insert((u, v)) {
                    return Err(at(LineError::DuplicateEdge(u, v)));
                }
                edges.push((u, v));
            }
            _ => return Err(at(LineError::Malformed(line.to_owned()))),
        }
    }
    let n = n.ok_or(FormatError::MissingHeader)?;
    Ok(Digraph::new(n, edges).expect("edges checked while parsing"))
}

pub fn write_graph(g: &Digraph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn parse_decomposition(text: &str) -> Result<WalkDecomposition, FormatError> {
    let walks = content_lines(text)
        .map(|(line_no, line)| {
            let at = |error| FormatError::Line {
                line: line_no,
                error,
            };
            let vertices = line
                .split_whitespace()
                .map(|token| parse_id(token, line))
                .collect::<Result<Vec<_>, _>>()
                .map_err(at)?;
            Walk::new(vertices).map_err(|e| at(LineError::Walk(e)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(WalkDecomposition::new(walks))
}

pub fn write_decomposition(w: &WalkDecomposition) -> String {
    let mut out = String::new();
    for walk in w.walks() {
        let mut first = true;
        for v in walk.vertices() {
            if !first {
                out.push(' ');
            }
            first = false;
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_examples() {
        let g = parse_graph("n 2\ne 0 1").unwrap();
        assert_eq!(g, Digraph::new(2, [(0, 1)]).unwrap());
        assert_eq!(parse_graph("n 3").unwrap(), Digraph::edgeless(3));
        assert_eq!(
            parse_graph("n 2\ne 0 0"),
            Err(FormatError::Line {
                line: 2,
                error: LineError::Loop(0)
            })
        );
    }

    #[test]
    fn graph_errors() {
        let line = |line, error| Err(FormatError::Line { line, error });
        assert_eq!(
            parse_graph("n 2\ne 0 1\ne 0 1\n"),
            line(3, LineError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            parse_graph("n 2\ne 0 2"),
            line(2, LineError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            parse_graph("e 0 1\nn 2"),
            line(1, LineError::EdgeBeforeHeader)
        );
        assert_eq!(parse_graph("n 2\nn 2"), line(2, LineError::DuplicateHeader));
        assert_eq!(
            parse_graph("n 2\ne 0 x"),
            line(2, LineError::Malformed("e 0 x".into()))
        );
        assert_eq!(
            parse_graph("n 2\nedge 0 1"),
            line(2, LineError::Malformed("edge 0 1".into()))
        );
        assert_eq!(parse_graph("# nothing\n"), Err(FormatError::MissingHeader));
    }

    #[test]
    fn comments_crlf_and_blank_lines() {
        let text = "# header comment\r\n\r\nn 3\r\n  # indented comment\r\ne 1 2\r\n\r\ne 0 1\r\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(write_graph(&g), "n 3\ne 0 1\ne 1 2\n");
    }

    #[test]
    fn decomposition_text() {
        let text = "# two walks\n1 6 7 2 3 4 5 10 9 8\r\n\n1 2 3 4 9 3 8\n";
        let w = parse_decomposition(text).unwrap();
        assert_eq!(w.k(), 2);
        assert_eq!(
            write_decomposition(&w),
            "1 6 7 2 3 4 5 10 9 8\n1 2 3 4 9 3 8\n"
        );
        assert_eq!(parse_decomposition("").unwrap().k(), 0);
        assert!(matches!(
            parse_decomposition("0 1\n2 2\n"),
            Err(FormatError::Line {
                line: 2,
                error: LineError::Walk(_)
            })
        ));
        assert!(matches!(
            parse_decomposition("0 -1\n"),
            Err(FormatError::Line {
                line: 1,
                error: LineError::Malformed(_)
            })
        ));
    }
}
