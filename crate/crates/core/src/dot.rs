//! Graphviz output. Matching edges `x -> y` / `y -> x` are drawn as one
//! edge with `dir=both`.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::graph::{Edge, Graph, VertexId};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot<V: VertexId>(name: &str, graph: &Graph<V>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    for v in graph.vertices() {
        writeln!(out, "  {};", quote(&v.to_string())).unwrap();
    }
    let mut by_ends: BTreeMap<(&V, &V), Vec<&Edge<V>>> = BTreeMap::new();
    for e in graph.edges() {
        by_ends.entry((&e.source, &e.target)).or_default().push(e);
    }
    for (&(s, t), forward) in &by_ends {
        let backward: &[&Edge<V>] = if s == t {
            &[]
        } else {
            by_ends.get(&(t, s)).map_or(&[], Vec::as_slice)
        };
        let matched = forward.len().min(backward.len());
        // matched pairs are drawn once, from the smaller end
        if s < t {
            for (e, back) in forward.iter().zip(backward) {
                let label = format!("{} / {}", e.id, back.id);
                writeln!(
                    out,
                    "  {} -> {} [dir=both, label={}];",
                    quote(&s.to_string()),
                    quote(&t.to_string()),
                    quote(&label)
                )
                .unwrap();
            }
        }
        for e in &forward[matched..] {
            writeln!(
                out,
                "  {} -> {} [label={}];",
                quote(&s.to_string()),
                quote(&t.to_string()),
                quote(&e.id.to_string())
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph;

    #[test]
    fn symmetric_pairs_are_merged() {
        let g = graph(
            &["a", "b", "c"],
            &[
                ("u", "a", "b"),
                ("u'", "b", "a"),
                ("w", "b", "c"),
                ("l", "c", "c"),
            ],
        )
        .unwrap();
        let dot = to_dot("G", &g);
        assert!(dot.contains("\"a\" -> \"b\" [dir=both, label=\"u / u'\"];"));
        assert!(!dot.contains("\"b\" -> \"a\""));
        assert!(dot.contains("\"b\" -> \"c\" [label=\"w\"];"));
        assert!(dot.contains("\"c\" -> \"c\" [label=\"l\"];"));
        assert_eq!(dot.matches("->").count(), 3);
    }

    #[test]
    fn unmatched_parallel_edges_stay_directed() {
        let g = graph(
            &["a", "b"],
            &[("x1", "b", "a"), ("x2", "b", "a"), ("y", "a", "b")],
        )
        .unwrap();
        let dot = to_dot("G", &g);
        assert_eq!(dot.matches("dir=both").count(), 1);
        assert_eq!(dot.matches("->").count(), 2);
    }
}
