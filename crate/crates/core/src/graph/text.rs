//! Line-oriented graph text format.
//!
//! ```text
//! c optional comment lines
//! p edge <n> <m>
//! e <u> <v>
//! ```
//!
//! Ids are one-based. The writer emits `u < v`, LF endings and the edges in
//! the graph's stored order; the reader also accepts `u > v`.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        if raw.is_empty() || raw == "c" || raw.starts_with("c ") {
            continue;
        }
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.as_slice() {
            ["p", "edge", n, m] => {
                if header.is_some() {
                    return Err(parse_err(line, "second header line"));
                }
                let n = n.parse().map_err(|_| parse_err(line, "bad vertex count"))?;
                let m = m.parse().map_err(|_| parse_err(line, "bad edge count"))?;
                header = Some((n, m));
            }
            ["e", u, v] => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge before header"))?;
                let parse_id = |s: &str| -> Result<usize> {
                    let id: usize = s.parse().map_err(|_| parse_err(line, format!("bad vertex id {s:?}")))?;
                    if id == 0 || id > n {
                        return Err(parse_err(line, format!("vertex id {id} outside 1..={n}")));
                    }
                    Ok(id - 1)
                };
                edges.push((parse_id(u)?, parse_id(v)?));
            }
            _ => return Err(parse_err(line, format!("unrecognized line {raw:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing \"p edge\" header"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges)
}

/// Serializes `g`, prefixing each line of `comments` with `c `.
pub fn write(g: &Graph, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "c {line}");
        }
    }
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::named::petersen;
    use super::*;

    #[test]
    fn write_is_bit_exact() {
        let g = Graph::from_edges(3, &[(1, 0), (1, 2)]).unwrap();
        assert_eq!(write(&g, &["tiny"]), "c tiny\np edge 3 2\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn round_trip() {
        let p = petersen();
        let text = write(&p, &["petersen", "second line"]);
        assert_eq!(parse(&text).unwrap(), p);
    }

    #[test]
    fn reader_errors() {
        assert!(matches!(parse("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("p edge 2 1\ne 1 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("p edge 2 2\ne 1 2\n"), Err(Error::Parse { .. })));
        assert_eq!(parse("p edge 2 2\ne 1 2\ne 2 1\n"), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(parse("p edge 2 1\ne 2 2\n"), Err(Error::Loop(1)));
        assert!(matches!(parse("x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse("c only\n"), Err(Error::Parse { .. })));
    }
}
