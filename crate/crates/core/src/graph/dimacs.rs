//! DIMACS `.col` reading and writing.

use std::fmt::Write;

use super::{Graph, GraphError, Vertex};

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse { line, message: message.into() }
}

/// Parses `c` comment lines, one `p edge n m` header and `e u v` edge lines.
///
/// The edge count in the header is informational; duplicated edges are merged.
pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err(line_no, "duplicate problem line"));
                }
                let kind = fields.next();
                if !matches!(kind, Some("edge") | Some("col")) {
                    return Err(parse_err(line_no, "malformed header, expected `p edge <n> <m>`"));
                }
                let count = |f: Option<&str>| f.and_then(|s| s.parse::<usize>().ok());
                let (vn, _vm) = match (count(fields.next()), count(fields.next())) {
                    (Some(a), Some(b)) => (a, b),
                    _ => return Err(parse_err(line_no, "malformed header, expected `p edge <n> <m>`")),
                };
                if fields.next().is_some() {
                    return Err(parse_err(line_no, "malformed header, trailing fields"));
                }
                n = Some(vn);
            }
            Some("e") => {
                let Some(vn) = n else {
                    return Err(parse_err(line_no, "edge line before the problem line"));
                };
                let mut endpoint = || -> Result<Vertex, GraphError> {
                    fields
                        .next()
                        .and_then(|s| s.parse::<Vertex>().ok())
                        .ok_or_else(|| parse_err(line_no, "malformed edge, expected `e <u> <v>`"))
                };
                let (u, v) = (endpoint()?, endpoint()?);
                for x in [u, v] {
                    if x == 0 || x > vn {
                        return Err(parse_err(line_no, format!("vertex {x} out of range 1..={vn}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line_no, format!("loop at vertex {u}")));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(parse_err(line_no, format!("unknown line type {other:?}"))),
            None => unreachable!("blank lines are skipped"),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `p edge <n> <m>` header"))?;
    Graph::from_edges(n, edges)
}

/// Writes `p edge n m` followed by one `e u v` line per edge, `u < v`, sorted.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}
