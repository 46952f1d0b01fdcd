//! Line-oriented text formats.
//!
//! Graphs, with an optional wager making them projects:
//!
//! ```text
//! graph F
//! vertex a
//! vertex b
//! edge e a b
//! wager 2
//! ```
//!
//! Bimodular graphs add `group <v> trivial|cyclic:<k>|klein|symmetric:<n>|table <n> <names..> <entries..>`
//! and `laction|raction <v> <v'> <element> <images..>`, where the images
//! list where each edge of `E(v, v')` (in id order) is sent.
//!
//! Cobordisms:
//!
//! ```text
//! cob M
//! left a1 a2
//! right b1 b2
//! pair a1 b1
//! pair L:a2 R:b2
//! circles 0
//! ```
//!
//! `#` starts a comment. A file may hold several blocks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{Display, Write};

use crate::bimodular::{ActionEntry, BimodularGraph, FiniteGroup};
use crate::cob0::{Cob0Morphism, Cob0Object};
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::graph::{Edge, EdgeId, Graph, VertexId};
use crate::int::Port;
use crate::project::Project;

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn valid_token(s: &str) -> bool {
    !s.is_empty() && s.is_ascii() && !s.chars().any(|c| c.is_ascii_control())
}

fn arity(line: usize, tokens: &[&str], n: usize) -> Result<()> {
    if tokens.len() == n {
        Ok(())
    } else {
        Err(Error::parse(
            line,
            format!("`{}` takes {} argument(s)", tokens[0], n - 1),
        ))
    }
}

#[derive(Default)]
struct RawBlock {
    name: String,
    line: usize,
    vertices: Vec<String>,
    edges: Vec<(usize, EdgeId, String, String)>,
    wager: Option<ExtNat>,
    groups: Vec<(usize, String, FiniteGroup)>,
    left: Vec<(usize, ActionEntry)>,
    right: Vec<(usize, ActionEntry)>,
}

impl RawBlock {
    fn graph(&self) -> Result<Graph<String>> {
        let known: BTreeSet<&String> = self.vertices.iter().collect();
        let mut seen = BTreeSet::new();
        for (line, id, s, t) in &self.edges {
            if !seen.insert(id) {
                return Err(Error::parse(*line, format!("duplicate edge id `{id}`")));
            }
            if let Some(v) = [s, t].into_iter().find(|v| !known.contains(v)) {
                return Err(Error::parse(
                    *line,
                    format!("edge `{id}` uses undeclared vertex `{v}`"),
                ));
            }
        }
        Graph::new(
            self.vertices.iter().cloned(),
            self.edges
                .iter()
                .map(|(_, id, s, t)| Edge::new(id.clone(), s.clone(), t.clone())),
        )
    }

    fn is_bimodular(&self) -> bool {
        !(self.groups.is_empty() && self.left.is_empty() && self.right.is_empty())
    }
}

fn parse_group(line: usize, words: &[&str]) -> Result<FiniteGroup> {
    let bad = |m: String| Error::parse(line, m);
    match words {
        ["trivial"] => Ok(FiniteGroup::trivial()),
        ["klein"] => Ok(FiniteGroup::klein_four()),
        [one] if one.starts_with("cyclic:") || one.starts_with("symmetric:") => {
            let (kind, n) = one.split_once(':').expect("checked prefix");
            let n: usize = n
                .parse()
                .map_err(|_| bad(format!("bad group order in `{one}`")))?;
            match kind {
                "cyclic" if n > 0 => Ok(FiniteGroup::cyclic(n)),
                "symmetric" if (1..=6).contains(&n) => Ok(FiniteGroup::symmetric(n)),
                _ => Err(bad(format!("unsupported group `{one}`"))),
            }
        }
        ["table", n, rest @ ..] => {
            let n: usize = n
                .parse()
                .map_err(|_| bad(format!("bad table size `{n}`")))?;
            if rest.len() != n + n * n {
                return Err(bad(format!(
                    "a table of size {n} needs {n} names and {} entries",
                    n * n
                )));
            }
            let names = rest[..n].iter().map(|s| s.to_string()).collect();
            let entries = rest[n..]
                .iter()
                .map(|x| {
                    x.parse::<usize>()
                        .map_err(|_| bad(format!("bad table entry `{x}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            let table = entries.chunks(n).map(<[usize]>::to_vec).collect();
            FiniteGroup::from_table(names, table).map_err(|e| bad(e.to_string()))
        }
        _ => Err(bad(
            "expected trivial, klein, cyclic:<k>, symmetric:<n> or table".into(),
        )),
    }
}

fn parse_blocks(text: &str) -> Result<Vec<RawBlock>> {
    let mut blocks: Vec<RawBlock> = Vec::new();
    for (line, tokens) in lines(text) {
        if tokens[0] == "graph" {
            if tokens.len() > 2 {
                return Err(Error::parse(line, "`graph` takes at most one name"));
            }
            blocks.push(RawBlock {
                name: tokens.get(1).unwrap_or(&"").to_string(),
                line,
                ..Default::default()
            });
            continue;
        }
        if blocks.is_empty() {
            blocks.push(RawBlock {
                line,
                ..Default::default()
            });
        }
        let block = blocks.last_mut().expect("a block is open");
        match tokens[0] {
            "vertex" => {
                arity(line, &tokens, 2)?;
                if !valid_token(tokens[1]) {
                    return Err(Error::parse(line, "invalid vertex id"));
                }
                block.vertices.push(tokens[1].to_owned());
            }
            "edge" => {
                arity(line, &tokens, 4)?;
                let id: EdgeId = tokens[1]
                    .parse()
                    .map_err(|e: String| Error::parse(line, e))?;
                block
                    .edges
                    .push((line, id, tokens[2].to_owned(), tokens[3].to_owned()));
            }
            "wager" => {
                arity(line, &tokens, 2)?;
                if block.wager.is_some() {
                    return Err(Error::parse(line, "wager given twice"));
                }
                block.wager = Some(
                    tokens[1]
                        .parse()
                        .map_err(|e: String| Error::parse(line, e))?,
                );
            }
            "group" => {
                if tokens.len() < 3 {
                    return Err(Error::parse(line, "`group` needs a vertex and a group"));
                }
                block
                    .groups
                    .push((line, tokens[1].to_owned(), parse_group(line, &tokens[2..])?));
            }
            "laction" | "raction" => {
                if tokens.len() < 4 {
                    return Err(Error::parse(
                        line,
                        format!("`{}` needs two vertices and an element", tokens[0]),
                    ));
                }
                let images = tokens[4..]
                    .iter()
                    .map(|t| t.parse::<EdgeId>().map_err(|e| Error::parse(line, e)))
                    .collect::<Result<Vec<_>>>()?;
                let entry = ActionEntry {
                    source: tokens[1].to_owned(),
                    target: tokens[2].to_owned(),
                    element: tokens[3].to_owned(),
                    images,
                };
                if tokens[0] == "laction" {
                    block.left.push((line, entry));
                } else {
                    block.right.push((line, entry));
                }
            }
            other => return Err(Error::parse(line, format!("unknown declaration `{other}`"))),
        }
    }
    Ok(blocks)
}

/// One `graph` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphBlock {
    pub name: String,
    pub graph: Graph<String>,
    pub wager: Option<ExtNat>,
}

impl GraphBlock {
    /// The block as a project; a missing wager counts as zero.
    pub fn project(&self) -> Project<Graph<String>> {
        Project::new(self.wager.unwrap_or_default(), self.graph.clone())
    }
}

pub fn parse_graphs(text: &str) -> Result<Vec<GraphBlock>> {
    parse_blocks(text)?
        .into_iter()
        .map(|b| {
            if b.is_bimodular() {
                return Err(Error::parse(
                    b.line,
                    "group or action declarations in a plain graph block",
                ));
            }
            Ok(GraphBlock {
                graph: b.graph()?,
                name: b.name,
                wager: b.wager,
            })
        })
        .collect()
}

pub fn parse_bimodular(text: &str) -> Result<Vec<(String, BimodularGraph)>> {
    parse_blocks(text)?
        .into_iter()
        .map(|b| {
            let graph = b.graph()?;
            let mut groups = BTreeMap::new();
            for (line, v, g) in &b.groups {
                if !graph.contains_vertex(v) {
                    return Err(Error::parse(
                        *line,
                        format!("group for undeclared vertex `{v}`"),
                    ));
                }
                if groups.insert(v.clone(), g.clone()).is_some() {
                    return Err(Error::parse(*line, format!("group for `{v}` given twice")));
                }
            }
            let left: Vec<ActionEntry> = b.left.iter().map(|(_, e)| e.clone()).collect();
            let right: Vec<ActionEntry> = b.right.iter().map(|(_, e)| e.clone()).collect();
            let bg = BimodularGraph::from_entries(graph, groups, &left, &right)
                .map_err(|e| Error::parse(b.line, e.to_string()))?;
            Ok((b.name, bg))
        })
        .collect()
}

pub fn write_graph<V: VertexId>(name: &str, graph: &Graph<V>) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name}").unwrap();
    for v in graph.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for e in graph.edges() {
        writeln!(out, "edge {} {} {}", e.id, e.source, e.target).unwrap();
    }
    out
}

pub fn write_project<V: VertexId>(name: &str, project: &Project<Graph<V>>) -> String {
    let mut out = write_graph(name, &project.graph);
    writeln!(out, "wager {}", project.wager).unwrap();
    out
}

fn write_group(out: &mut String, v: &str, g: &FiniteGroup) {
    if g.is_trivial() {
        return;
    }
    if *g == FiniteGroup::cyclic(g.order()) {
        writeln!(out, "group {v} cyclic:{}", g.order()).unwrap();
    } else if *g == FiniteGroup::klein_four() {
        writeln!(out, "group {v} klein").unwrap();
    } else {
        let entries: Vec<String> = g
            .table()
            .iter()
            .flatten()
            .map(ToString::to_string)
            .collect();
        writeln!(
            out,
            "group {v} table {} {} {}",
            g.order(),
            g.names().join(" "),
            entries.join(" ")
        )
        .unwrap();
    }
}

pub fn write_bimodular(name: &str, bg: &BimodularGraph) -> String {
    let mut out = write_graph(name, bg.graph());
    for (v, g) in bg.groups() {
        write_group(&mut out, v, g);
    }
    let (left, right) = bg.action_entries();
    for (kw, entries) in [("laction", left), ("raction", right)] {
        for e in entries {
            let images: Vec<String> = e.images.iter().map(ToString::to_string).collect();
            writeln!(
                out,
                "{kw} {} {} {} {}",
                e.source,
                e.target,
                e.element,
                images.join(" ")
            )
            .unwrap();
        }
    }
    out
}

fn resolve_point(line: usize, token: &str, left: &Cob0Object, right: &Cob0Object) -> Result<Port> {
    if let Ok(p) = token.parse::<Port>() {
        let side = if p.is_dom() { left } else { right };
        return if side.contains(p.label()) {
            Ok(p)
        } else {
            Err(Error::parse(line, format!("unknown point `{token}`")))
        };
    }
    match (left.contains(token), right.contains(token)) {
        (true, false) => Ok(Port::Dom(token.to_owned())),
        (false, true) => Ok(Port::Cod(token.to_owned())),
        (true, true) => Err(Error::parse(
            line,
            format!("`{token}` is on both sides; write L:{token} or R:{token}"),
        )),
        (false, false) => Err(Error::parse(line, format!("unknown point `{token}`"))),
    }
}

#[derive(Default)]
struct RawCob {
    name: String,
    line: usize,
    left: Cob0Object,
    right: Cob0Object,
    pairs: Vec<(usize, String, String)>,
    circles: Option<u64>,
}

/// Parses `cob` blocks into named morphisms.
pub fn parse_cobs(text: &str) -> Result<Vec<(String, Cob0Morphism)>> {
    let mut raws: Vec<RawCob> = Vec::new();
    for (line, tokens) in lines(text) {
        if tokens[0] == "cob" {
            if tokens.len() > 2 {
                return Err(Error::parse(line, "`cob` takes at most one name"));
            }
            raws.push(RawCob {
                name: tokens.get(1).unwrap_or(&"").to_string(),
                line,
                ..Default::default()
            });
            continue;
        }
        if raws.is_empty() {
            raws.push(RawCob {
                line,
                ..Default::default()
            });
        }
        let raw = raws.last_mut().expect("a block is open");
        match tokens[0] {
            "left" | "right" => {
                let side = if tokens[0] == "left" {
                    &mut raw.left
                } else {
                    &mut raw.right
                };
                for t in &tokens[1..] {
                    if !valid_token(t) || t.contains(':') {
                        return Err(Error::parse(line, format!("invalid point label `{t}`")));
                    }
                    if !side.insert(t.to_string()) {
                        return Err(Error::parse(line, format!("point `{t}` declared twice")));
                    }
                }
            }
            "pair" => {
                arity(line, &tokens, 3)?;
                raw.pairs
                    .push((line, tokens[1].to_owned(), tokens[2].to_owned()));
            }
            "circles" => {
                arity(line, &tokens, 2)?;
                let n = tokens[1]
                    .parse()
                    .map_err(|_| Error::parse(line, format!("bad circle count `{}`", tokens[1])))?;
                raw.circles = Some(n);
            }
            other => return Err(Error::parse(line, format!("unknown declaration `{other}`"))),
        }
    }
    raws.into_iter()
        .map(|raw| {
            let pairs = raw
                .pairs
                .iter()
                .map(|(line, p, q)| {
                    Ok((
                        resolve_point(*line, p, &raw.left, &raw.right)?,
                        resolve_point(*line, q, &raw.left, &raw.right)?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            let m = Cob0Morphism::new(raw.left, raw.right, pairs, raw.circles.unwrap_or(0))
                .map_err(|e| Error::parse(raw.line, e.to_string()))?;
            Ok((raw.name, m))
        })
        .collect()
}

pub fn write_cob(name: &str, m: &Cob0Morphism) -> String {
    fn join<T: Display>(xs: impl IntoIterator<Item = T>) -> String {
        xs.into_iter().map(|x| format!(" {x}")).collect()
    }
    let mut out = String::new();
    writeln!(out, "cob {name}").unwrap();
    writeln!(out, "left{}", join(m.source())).unwrap();
    writeln!(out, "right{}", join(m.target())).unwrap();
    for (p, q) in m.pairs() {
        writeln!(out, "pair {p} {q}").unwrap();
    }
    writeln!(out, "circles {}", m.circles()).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph;
    use proptest::prelude::*;

    #[test]
    fn graph_blocks() {
        let text = "# two graphs\ngraph G\nvertex a\nvertex b\nedge e a b\n\ngraph H\nvertex b\nvertex c\nedge f b c # trailing\nwager omega\n";
        let blocks = parse_graphs(text).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].name, "G");
        assert_eq!(
            blocks[0].graph,
            graph(&["a", "b"], &[("e", "a", "b")]).unwrap()
        );
        assert_eq!(blocks[1].wager, Some(ExtNat::Omega));
        assert_eq!(blocks[0].project().wager, ExtNat::ZERO);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graphs("graph G\nvertex a\nedge e a b\n").unwrap_err();
        assert_eq!(err, Error::parse(3, "edge `e` uses undeclared vertex `b`"));
        assert!(matches!(
            parse_graphs("graph G\nvertx a\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graphs("edge e a\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graphs("vertex a\nedge e a a\nedge e a a\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graphs("vertex a\ngroup a cyclic:2\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn composite_edge_ids_survive() {
        let g = graph(&["a", "c"], &[("e.f.g", "a", "c")]).unwrap();
        let back = parse_graphs(&write_graph("X", &g)).unwrap();
        assert_eq!(back[0].graph, g);
    }

    #[test]
    fn cob_blocks() {
        let text = "cob M\nleft a1 a2 a3\nright b1 b2 b3\npair a1 b3\npair a2 a3\npair R:b1 R:b2\ncircles 2\n";
        let (name, m) = parse_cobs(text).unwrap().remove(0);
        assert_eq!(name, "M");
        assert_eq!(m.circles(), 2);
        assert_eq!(
            m.partner(&Port::Dom("a1".into())),
            Some(&Port::Cod("b3".into()))
        );
        let again = parse_cobs(&write_cob("M", &m)).unwrap().remove(0).1;
        assert_eq!(again, m);
    }

    #[test]
    fn cob_errors() {
        assert!(matches!(
            parse_cobs("left x\nright x\npair x x\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_cobs("left x\nright x\npair L:x R:x\n").is_ok());
        assert!(matches!(
            parse_cobs("left a\nright b\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_cobs("left a b\npair a c\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn bimodular_blocks() {
        let text = "graph F\nvertex v\nvertex m\nedge e1 v m\nedge e2 v m\ngroup m cyclic:2\nraction v m 1 e2 e1\n";
        let (_, bg) = parse_bimodular(text).unwrap().remove(0);
        assert_eq!(bg.group("m").unwrap().order(), 2);
        let e1 = bg.edge_index(&"e1".into()).unwrap();
        let e2 = bg.edge_index(&"e2".into()).unwrap();
        assert_eq!(bg.act_right(e1, 1), e2);
        let again = parse_bimodular(&write_bimodular("F", &bg))
            .unwrap()
            .remove(0)
            .1;
        assert_eq!(again, bg);
    }

    #[test]
    fn bimodular_table_groups() {
        let s3 = FiniteGroup::symmetric(3);
        let mut out = String::new();
        write_group(&mut out, "v", &s3);
        let text = format!("vertex v\n{out}");
        let (_, bg) = parse_bimodular(&text).unwrap().remove(0);
        assert_eq!(bg.group("v"), Some(&s3));
        let klein = parse_bimodular("vertex v\ngroup v klein\n")
            .unwrap()
            .remove(0)
            .1;
        assert_eq!(klein.group("v"), Some(&FiniteGroup::klein_four()));
        assert!(parse_bimodular("vertex v\ngroup v table 2 x y 0 0 0 0\n").is_err());
    }

    fn small_graph() -> impl Strategy<Value = Graph<String>> {
        (
            1usize..5,
            prop::collection::vec((0usize..5, 0usize..5), 0..6),
        )
            .prop_map(|(n, es)| {
                let vs: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
                let edges = es.into_iter().enumerate().map(|(i, (s, t))| {
                    Edge::new(
                        EdgeId::atom(format!("e{i}")),
                        vs[s % n].clone(),
                        vs[t % n].clone(),
                    )
                });
                Graph::new(vs.clone(), edges).unwrap()
            })
    }

    proptest! {
        #[test]
        fn graph_text_round_trips(g in small_graph(), w in prop::option::of(0u64..9)) {
            let p = Project::new(w.unwrap_or(0), g);
            let back = parse_graphs(&write_project("P", &p)).unwrap();
            prop_assert_eq!(back[0].project(), p);
        }
    }
}
