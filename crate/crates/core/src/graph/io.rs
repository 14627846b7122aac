//! Graph text formats.
//!
//! Edge list: a header line `n <count>` followed by one `u v` pair per line,
//! 0-based. DIMACS: `p edge <n> <m>` followed by `e u v` lines, 1-based, with
//! optional `c` comment lines. Blank lines and `#` comments are ignored in the
//! edge-list format. Writers emit edges sorted, so output is byte-stable.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

impl GraphFormat {
    /// `.dimacs`, `.col` and `.clq` are DIMACS; anything else is an edge list.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("dimacs" | "col" | "clq") => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" | "el" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(Error::Input(format!("unknown graph format '{other}'"))),
        }
    }
}

fn perr<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

fn parse_index(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    match tok {
        None => perr(line, format!("missing {what}")),
        Some(t) => t
            .parse::<usize>()
            .or_else(|_| perr(line, format!("invalid {what} '{t}'"))),
    }
}

fn add(b: &mut GraphBuilder, u: usize, v: usize, line: usize, shown: (usize, usize)) -> Result<()> {
    let n = b.n();
    if u >= n || v >= n {
        return perr(line, format!("edge {} {} out of range for n = {n}", shown.0, shown.1));
    }
    if u == v {
        return perr(line, format!("self-loop {} {}", shown.0, shown.1));
    }
    if b.has_edge(u, v) {
        return perr(line, format!("duplicate edge {} {}", shown.0, shown.1));
    }
    b.add_edge(u, v).map(|_| ())
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut builder: Option<GraphBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        match builder.as_mut() {
            None => {
                if toks.next() != Some("n") {
                    return perr(line, "expected header 'n <count>'");
                }
                let n = parse_index(toks.next(), line, "vertex count")?;
                if toks.next().is_some() {
                    return perr(line, "trailing tokens after header");
                }
                builder = Some(GraphBuilder::new(n));
            }
            Some(b) => {
                let u = parse_index(toks.next(), line, "endpoint")?;
                let v = parse_index(toks.next(), line, "endpoint")?;
                if toks.next().is_some() {
                    return perr(line, "trailing tokens after edge");
                }
                add(b, u, v, line, (u, v))?;
            }
        }
    }
    builder
        .map(GraphBuilder::build)
        .ok_or(Error::Parse { line: 0, msg: "missing header 'n <count>'".into() })
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut builder: Option<(GraphBuilder, usize)> = None;
    let mut seen = 0usize;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('c') || content.starts_with('#') {
            continue;
        }
        let mut toks = content.split_whitespace();
        match toks.next() {
            Some("p") => {
                if builder.is_some() {
                    return perr(line, "second problem line");
                }
                match toks.next() {
                    Some("edge" | "col") => {}
                    _ => return perr(line, "expected 'p edge <n> <m>'"),
                }
                let n = parse_index(toks.next(), line, "vertex count")?;
                let m = parse_index(toks.next(), line, "edge count")?;
                builder = Some((GraphBuilder::new(n), m));
            }
            Some("e") => {
                let Some((b, _)) = builder.as_mut() else {
                    return perr(line, "edge before problem line");
                };
                let u = parse_index(toks.next(), line, "endpoint")?;
                let v = parse_index(toks.next(), line, "endpoint")?;
                if u == 0 || v == 0 {
                    return perr(line, "DIMACS vertices are 1-based");
                }
                if toks.next().is_some() {
                    return perr(line, "trailing tokens after edge");
                }
                add(b, u - 1, v - 1, line, (u, v))?;
                seen += 1;
            }
            Some(other) => return perr(line, format!("unknown line type '{other}'")),
            None => {}
        }
    }
    let Some((b, m)) = builder else {
        return perr(0, "missing problem line 'p edge <n> <m>'");
    };
    if seen != m {
        return perr(last_line, format!("header declares {m} edges, found {seen}"));
    }
    Ok(b.build())
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn to_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

pub fn format_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => to_edge_list(g),
        GraphFormat::Dimacs => to_dimacs(g),
    }
}

pub fn read_graph(path: &Path, format: GraphFormat) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text, format)
}

pub fn write_graph(g: &Graph, path: &Path, format: GraphFormat) -> Result<()> {
    std::fs::write(path, format_graph(g, format))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn triangle_round_trip_both_formats() {
        let t = Graph::complete(3);
        for fmt in [GraphFormat::EdgeList, GraphFormat::Dimacs] {
            let back = parse_graph(&format_graph(&t, fmt), fmt).unwrap();
            assert_eq!(back, t);
        }
        assert_eq!(to_edge_list(&t), "n 3\n0 1\n0 2\n1 2\n");
        assert_eq!(to_dimacs(&t), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    }

    #[test]
    fn self_loop_is_rejected_with_line() {
        let err = parse_edge_list("n 6\n0 1\n5 5\n").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 3);
                assert!(msg.contains("self-loop"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dimacs_count_mismatch() {
        let text = "c four edges, header says three\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
        assert!(matches!(parse_dimacs(text), Err(Error::Parse { line: 6, .. })));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_edge_list("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("n 3\n0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("n 3\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list("n 3\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_dimacs("p edge 3 1\ne 0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_edge_list("# only a comment\n").is_err());
    }

    #[test]
    fn file_round_trip() {
        let dir = std::env::temp_dir().join(format!("cliquefactor-io-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("c5.dimacs");
        let g = Graph::cycle(5).unwrap();
        write_graph(&g, &path, GraphFormat::from_path(&path)).unwrap();
        assert_eq!(read_graph(&path, GraphFormat::Dimacs).unwrap(), g);
        std::fs::remove_dir_all(&dir).ok();
    }

    proptest! {
        #[test]
        fn round_trip_is_identity(n in 1usize..20, bits in proptest::collection::vec(any::<bool>(), 190)) {
            let mut b = GraphBuilder::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { b.add_edge(u, v).unwrap(); }
                    k += 1;
                }
            }
            let g = b.build();
            for fmt in [GraphFormat::EdgeList, GraphFormat::Dimacs] {
                prop_assert_eq!(&parse_graph(&format_graph(&g, fmt), fmt).unwrap(), &g);
            }
        }
    }
}
