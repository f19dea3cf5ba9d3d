//! Human-friendly edge-list text format: first line `n m`, then `m` lines
//! `u v` with 0-based vertex ids. Anything from `#` to end of line is a
//! comment; blank lines are skipped.

use super::{Graph, GraphError};

pub fn to_edgelist(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edgelist(text: &str) -> Result<Graph, GraphError> {
    let bad = |msg: String| GraphError::BadEdgeList(msg);
    let mut lines = text.lines().filter_map(|line| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some(line)
        }
    });
    let header = lines.next().ok_or_else(|| bad("missing `n m` header".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| bad(format!("bad vertex count in header {header:?}")))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| bad(format!("bad edge count in header {header:?}")))?;
    if parts.next().is_some() {
        return Err(bad(format!("trailing tokens in header {header:?}")));
    }
    let mut g = Graph::empty(n)?;
    let mut read = 0;
    for line in lines {
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| bad(format!("bad edge line {line:?}")))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| bad(format!("bad edge line {line:?}")))?;
        if parts.next().is_some() {
            return Err(bad(format!("trailing tokens in edge line {line:?}")));
        }
        g.add_edge(u, v)?;
        read += 1;
    }
    if read != m {
        return Err(bad(format!("header declared {m} edges, found {read}")));
    }
    Ok(g)
}
