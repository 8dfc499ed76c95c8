//! Edge-list text format: one `u v` pair per line, 0-indexed, with `#`
//! starting a comment. The vertex count is one more than the largest
//! endpoint mentioned.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses edge-list text. Errors carry the 1-based line number.
pub fn parse(text: &str) -> Result<Graph> {
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut n: usize = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut parts = content.split_whitespace();
        let u = parse_endpoint(parts.next(), line)?;
        let v = parse_endpoint(parts.next(), line)?;
        if let Some(extra) = parts.next() {
            return Err(Error::Parse {
                line,
                msg: format!("unexpected trailing token '{extra}'"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                msg: format!("loop at vertex {u}"),
            });
        }
        n = n.max(u as usize + 1).max(v as usize + 1);
        edges.push((u, v));
    }
    let mut g = Graph::empty(n);
    for (idx, &(u, v)) in edges.iter().enumerate() {
        g.add_edge(u, v).map_err(|e| Error::Parse {
            line: idx + 1,
            msg: e.to_string(),
        })?;
    }
    Ok(g)
}

fn parse_endpoint(tok: Option<&str>, line: usize) -> Result<u32> {
    let tok = tok.ok_or(Error::Parse {
        line,
        msg: "expected two endpoints 'u v'".into(),
    })?;
    tok.parse::<u32>().map_err(|_| Error::Parse {
        line,
        msg: format!("'{tok}' is not a vertex index"),
    })
}

/// Writes a graph as edge-list text, one sorted pair per line.
pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blanks() {
        let g = parse("# a path\n0 1\n\n1 2  # middle\n2 3\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn errors_carry_line_numbers() {
        match parse("0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse("0 1\n2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse("0 0\n").is_err());
        assert!(parse("0 1 2\n").is_err());
    }

    #[test]
    fn round_trip() {
        let g = crate::graph::s_graph(9, 2, 2).unwrap();
        assert_eq!(parse(&write(&g)).unwrap(), g);
    }
}
