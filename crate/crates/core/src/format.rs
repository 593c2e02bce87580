//! DIMACS-color style graph text format.
//!
//! ```text
//! c optional comments
//! p edge <n> <m>
//! e <u> <v>        (1-based vertex ids, m lines)
//! ```

use crate::graph::Graph;
use crate::{Error, Result};

pub fn parse_graph(input: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut declared_edges = 0usize;
    let mut seen_edges = 0usize;

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        let err = |msg: String| Error::Parse { line: line_no, msg };
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                if toks.next() != Some("edge") {
                    return Err(err("expected `p edge <n> <m>`".into()));
                }
                let n: usize = toks
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("bad vertex count".into()))?;
                declared_edges = toks
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("bad edge count".into()))?;
                graph = Some(Graph::new(n));
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| err("edge before problem line".into()))?;
                let u: usize = toks
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("bad edge endpoint".into()))?;
                let v: usize = toks
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err("bad edge endpoint".into()))?;
                if u == 0 || v == 0 {
                    return Err(err("vertex ids are 1-based".into()));
                }
                g.add_edge(u - 1, v - 1)
                    .map_err(|e| err(e.to_string()))?;
                seen_edges += 1;
            }
            Some(other) => {
                return Err(err(format!("unknown line type `{other}`")));
            }
            None => unreachable!(),
        }
    }

    let g = graph.ok_or(Error::Parse {
        line: 0,
        msg: "missing problem line".into(),
    })?;
    if seen_edges != declared_edges {
        return Err(Error::Parse {
            line: 0,
            msg: format!("problem line declares {declared_edges} edges, found {seen_edges}"),
        });
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    out.push_str(&format!("p edge {} {}\n", g.n(), edges.len()));
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_dimacs_style() {
        let text = "c a triangle plus pendant\np edge 4 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert!(g.has_edge(0, 2));
        assert!(g.has_edge(2, 3));
    }

    #[test]
    fn round_trip() {
        let g = crate::graph::small::cycle(5);
        let parsed = parse_graph(&write_graph(&g)).unwrap();
        assert_eq!(parsed.edges(), g.edges());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_graph("e 1 2\n").is_err());
        assert!(parse_graph("p edge 3 1\n").is_err()); // missing edge
        assert!(parse_graph("p edge 3 1\ne 0 1\n").is_err()); // 0 id
        assert!(parse_graph("p edge 3 1\ne 1 1\n").is_err()); // self-loop
        assert!(parse_graph("p edge 3 1\ne 1 4\n").is_err()); // out of range
        assert!(parse_graph("p col 3 0\n").is_err());
    }
}
