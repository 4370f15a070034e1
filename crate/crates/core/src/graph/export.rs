//! Deterministic text renderings: Graphviz DOT and a compact adjacency list.
//!
//! The adjacency format has a header line `n <count>` followed by one line
//! per vertex, `v: w1 w2 ...`, neighbours in increasing order.

use std::fmt::Write;

use super::{GraphError, Result, SimpleGraph};

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz `graph` with vertex tags as labels.
pub fn to_dot(g: &SimpleGraph, name: &str) -> String {
    let mut out = format!("graph \"{}\" {{\n", dot_escape(name));
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", dot_escape(&g.tag(v)));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

pub fn to_adjacency_text(g: &SimpleGraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for v in 0..g.vertex_count() {
        let _ = write!(out, "{v}:");
        for w in g.neighbors(v) {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse { line, message: message.into() }
}

/// Parses the adjacency format. Edges may be listed on one or both
/// endpoints; lines for vertices without neighbours may be omitted.
pub fn parse_adjacency_text(text: &str) -> Result<SimpleGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let n: usize = header
        .strip_prefix("n ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| parse_err(first, format!("expected `n <count>`, found `{header}`")))?;
    let mut g = SimpleGraph::new(n);
    for (line, text) in lines {
        let (head, tail) = text.split_once(':').ok_or_else(|| parse_err(line, "missing `:`"))?;
        let v: usize = head.trim().parse().map_err(|_| parse_err(line, format!("bad vertex `{head}`")))?;
        for tok in tail.split_whitespace() {
            let w: usize = tok.parse().map_err(|_| parse_err(line, format!("bad neighbour `{tok}`")))?;
            g.add_edge(v, w).map_err(|e| parse_err(line, e.to_string()))?;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_output_is_stable() {
        let g = SimpleGraph::path(3).with_tags(vec!["e".into(), "x\"".into(), "y".into()]).unwrap();
        assert_eq!(
            to_dot(&g, "P3"),
            "graph \"P3\" {\n  0 [label=\"e\"];\n  1 [label=\"x\\\"\"];\n  2 [label=\"y\"];\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }

    #[test]
    fn adjacency_round_trip() {
        let g = SimpleGraph::complete_multipartite(&[1, 2, 3]);
        let text = to_adjacency_text(&g);
        assert!(text.starts_with("n 6\n0: 1 2 3 4 5\n"));
        assert_eq!(parse_adjacency_text(&text).unwrap(), g);
        let sparse = parse_adjacency_text("n 4\n# one edge\n3: 1\n").unwrap();
        assert_eq!(sparse.edges().collect::<Vec<_>>(), vec![(1, 3)]);
    }

    #[test]
    fn adjacency_errors() {
        assert!(matches!(parse_adjacency_text("4\n"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_adjacency_text("n 2\n0: 0\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_adjacency_text("n 2\n0 1\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(parse_adjacency_text("n 2\n0: 5\n"), Err(GraphError::Parse { line: 2, .. })));
    }
}
