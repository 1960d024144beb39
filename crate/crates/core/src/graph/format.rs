//! Plain-text edge lists: a header `n m`, then one `u v` pair per line.
//! `#` starts a comment. Two comment forms carry metadata:
//! `# label <v> <name>` and `# terminals <a> <b> <c> <d>`.

use std::collections::BTreeMap;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub labels: BTreeMap<usize, String>,
    pub terminals: Option<[usize; 4]>,
}

impl GraphFile {
    pub fn new(graph: Graph) -> GraphFile {
        GraphFile { graph, labels: BTreeMap::new(), terminals: None }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| parse_err(line, format!("expected a vertex id, got {t:?}"))))
        .collect()
}

pub fn parse_graph_text(text: &str) -> Result<GraphFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels = BTreeMap::new();
    let mut terminals = None;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let (body, comment) = match raw.find('#') {
            Some(k) => (&raw[..k], Some(raw[k + 1..].trim())),
            None => (raw, None),
        };
        if let Some(c) = comment {
            let mut it = c.split_whitespace();
            match it.next() {
                Some("label") => {
                    let v = it
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| parse_err(ln, "label needs a vertex id"))?;
                    let name: Vec<&str> = it.collect();
                    labels.insert(v, name.join(" "));
                }
                Some("terminals") => {
                    let ts = numbers(ln, &it.collect::<Vec<_>>().join(" "))?;
                    let ts: [usize; 4] =
                        ts.try_into().map_err(|_| parse_err(ln, "terminals needs exactly four ids"))?;
                    terminals = Some(ts);
                }
                _ => {}
            }
        }
        let nums = numbers(ln, body)?;
        if nums.is_empty() {
            continue;
        }
        if nums.len() != 2 {
            return Err(parse_err(ln, format!("expected two numbers, got {}", nums.len())));
        }
        match header {
            None => header = Some((nums[0], nums[1])),
            Some(_) => edges.push((nums[0], nums[1])),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `n m` header"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header promises {m} edges, found {}", edges.len())));
    }
    let graph = Graph::new(n, &edges)?;
    for &v in labels.keys() {
        if v >= n {
            return Err(Error::VertexOutOfRange { v, n });
        }
    }
    if let Some(ts) = terminals {
        if let Some(&v) = ts.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { v, n });
        }
    }
    Ok(GraphFile { graph, labels, terminals })
}

/// Canonical text: header, metadata comments, edges in lexicographic order.
pub fn write_graph_text(file: &GraphFile) -> String {
    let g = &file.graph;
    let mut out = format!("{} {}\n", g.n(), g.m());
    if let Some(t) = file.terminals {
        out.push_str(&format!("# terminals {} {} {} {}\n", t[0], t[1], t[2], t[3]));
    }
    for (v, name) in &file.labels {
        out.push_str(&format!("# label {v} {name}\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# a square\n4 4\n# terminals 0 1 2 3\n# label 2 hub\n0 1\n1 2 # inline\n2 3\n0 3\n";
        let f = parse_graph_text(text).unwrap();
        assert_eq!(f.graph.m(), 4);
        assert_eq!(f.terminals, Some([0, 1, 2, 3]));
        assert_eq!(f.labels[&2], "hub");
        let again = parse_graph_text(&write_graph_text(&f)).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_graph_text("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph_text("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph_text("3 1\n0 0\n"), Err(Error::SelfLoop(0))));
        assert!(parse_graph_text("").is_err());
    }
}
