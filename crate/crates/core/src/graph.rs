//! Directed multigraphs with identified edges.
//!
//! Edge identifiers are sequences of atoms. A base edge carries a single
//! atom; an edge produced by execution carries the concatenation of the
//! atoms of the edges it traverses, so results of nested executions can be
//! compared directly. The textual form joins atoms with `.`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Anything usable as a vertex identifier.
pub trait VertexId: Clone + Ord + Hash + Debug + Display + Send + Sync {}

impl<T: Clone + Ord + Hash + Debug + Display + Send + Sync> VertexId for T {}

/// Flattened edge identifier: a nonempty sequence of atoms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeId(Vec<String>);

impl EdgeId {
    /// A base edge identifier. Panics if `atom` is not a valid token.
    pub fn atom(atom: impl Into<String>) -> Self {
        let atom = atom.into();
        assert!(valid_atom(&atom), "invalid edge atom `{atom}`");
        EdgeId(vec![atom])
    }

    /// Concatenation of already flat identifiers.
    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a EdgeId>) -> Self {
        let atoms: Vec<String> = parts
            .into_iter()
            .flat_map(|p| p.0.iter().cloned())
            .collect();
        assert!(!atoms.is_empty(), "empty edge id");
        EdgeId(atoms)
    }

    pub fn atoms(&self) -> &[String] {
        &self.0
    }

    /// Drops every atom matching `erase`; `None` if nothing is left.
    pub fn erase(&self, mut erase: impl FnMut(&str) -> bool) -> Option<EdgeId> {
        let kept: Vec<String> = self.0.iter().filter(|a| !erase(a)).cloned().collect();
        (!kept.is_empty()).then_some(EdgeId(kept))
    }
}

fn valid_atom(s: &str) -> bool {
    !s.is_empty()
        && s.is_ascii()
        && !s.contains('.')
        && !s
            .chars()
            .any(|c| c.is_ascii_whitespace() || c.is_ascii_control())
}

impl Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join("."))
    }
}

impl Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeId({self})")
    }
}

// Identifiers are ordered as their textual forms.
impl Ord for EdgeId {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(i, a)| (i > 0).then_some(".").into_iter().chain([a.as_str()]));
        let rhs = other
            .0
            .iter()
            .enumerate()
            .flat_map(|(i, a)| (i > 0).then_some(".").into_iter().chain([a.as_str()]));
        lhs.flat_map(str::bytes).cmp(rhs.flat_map(str::bytes))
    }
}

impl PartialOrd for EdgeId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for EdgeId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let atoms: Vec<String> = s.split('.').map(str::to_owned).collect();
        if atoms.iter().all(|a| valid_atom(a)) {
            Ok(EdgeId(atoms))
        } else {
            Err(format!("invalid edge id `{s}`"))
        }
    }
}

impl From<&str> for EdgeId {
    fn from(s: &str) -> Self {
        s.parse().unwrap_or_else(|e| panic!("{e}"))
    }
}

/// A nested edge label, as produced by executing already-executed graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nested {
    Atom(String),
    Seq(Vec<Nested>),
}

/// Concatenates the base atoms of a nested label, depth first.
pub fn flatten(nested: &Nested) -> EdgeId {
    fn walk(n: &Nested, out: &mut Vec<String>) {
        match n {
            Nested::Atom(a) => out.push(a.clone()),
            Nested::Seq(parts) => parts.iter().for_each(|p| walk(p, out)),
        }
    }
    let mut atoms = Vec::new();
    walk(nested, &mut atoms);
    assert!(!atoms.is_empty(), "nested label without atoms");
    EdgeId(atoms)
}

impl From<&EdgeId> for Nested {
    fn from(id: &EdgeId) -> Self {
        Nested::Seq(id.0.iter().cloned().map(Nested::Atom).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge<V> {
    pub id: EdgeId,
    pub source: V,
    pub target: V,
}

impl<V> Edge<V> {
    pub fn new(id: impl Into<EdgeId>, source: V, target: V) -> Self {
        Edge {
            id: id.into(),
            source,
            target,
        }
    }
}

/// A finite directed multigraph. Edges are kept sorted by id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph<V = String> {
    vertices: BTreeSet<V>,
    edges: Vec<Edge<V>>,
}

impl<V: VertexId> Default for Graph<V> {
    fn default() -> Self {
        Graph::empty()
    }
}

impl<V: VertexId> Graph<V> {
    pub fn empty() -> Self {
        Graph {
            vertices: BTreeSet::new(),
            edges: Vec::new(),
        }
    }

    /// Validates and builds a graph. Parallel edges and self-loops are fine.
    pub fn new(
        vertices: impl IntoIterator<Item = V>,
        edges: impl IntoIterator<Item = Edge<V>>,
    ) -> Result<Self> {
        let vertices: BTreeSet<V> = vertices.into_iter().collect();
        let mut edges: Vec<Edge<V>> = edges.into_iter().collect();
        for e in &edges {
            for v in [&e.source, &e.target] {
                if !vertices.contains(v) {
                    return Err(Error::UnknownVertex {
                        edge: e.id.to_string(),
                        vertex: v.to_string(),
                    });
                }
            }
        }
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        if let Some(w) = edges.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(Error::DuplicateEdgeId(w[0].id.to_string()));
        }
        Ok(Graph { vertices, edges })
    }

    pub fn vertices(&self) -> &BTreeSet<V> {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge<V>] {
        &self.edges
    }

    pub fn edge(&self, id: &EdgeId) -> Option<&Edge<V>> {
        self.edges
            .binary_search_by(|e| e.id.cmp(id))
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn contains_vertex(&self, v: &V) -> bool {
        self.vertices.contains(v)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }

    /// Edges from `source` to `target`, in id order.
    pub fn edges_between<'a>(
        &'a self,
        source: &'a V,
        target: &'a V,
    ) -> impl Iterator<Item = &'a Edge<V>> + 'a {
        self.edges
            .iter()
            .filter(move |e| &e.source == source && &e.target == target)
    }

    /// Multiset of `(source, target)` pairs, forgetting edge ids.
    pub fn endpoint_multiset(&self) -> BTreeMap<(V, V), usize> {
        let mut out = BTreeMap::new();
        for e in &self.edges {
            *out.entry((e.source.clone(), e.target.clone())).or_insert(0) += 1;
        }
        out
    }

    /// True when every edge `x -> y` is matched by an edge `y -> x` with the
    /// same multiplicity.
    pub fn is_symmetric(&self) -> bool {
        let m = self.endpoint_multiset();
        m.iter()
            .all(|((s, t), n)| m.get(&(t.clone(), s.clone())) == Some(n))
    }

    /// Renames vertices. `rename` must be injective on the vertex set.
    pub fn map_vertices<W: VertexId>(&self, mut rename: impl FnMut(&V) -> W) -> Graph<W> {
        let vertices: BTreeSet<W> = self.vertices.iter().map(&mut rename).collect();
        assert_eq!(
            vertices.len(),
            self.vertices.len(),
            "vertex renaming is not injective"
        );
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(e.id.clone(), rename(&e.source), rename(&e.target)))
            .collect();
        Graph { vertices, edges }
    }

    /// Renames edge ids, revalidating uniqueness.
    pub fn map_edge_ids(&self, mut rename: impl FnMut(&EdgeId) -> EdgeId) -> Result<Self> {
        Graph::new(
            self.vertices.iter().cloned(),
            self.edges
                .iter()
                .map(|e| Edge::new(rename(&e.id), e.source.clone(), e.target.clone())),
        )
    }

    /// Vertices present in both graphs.
    pub fn shared_vertices(&self, other: &Graph<V>) -> BTreeSet<V> {
        self.vertices
            .intersection(&other.vertices)
            .cloned()
            .collect()
    }
}

/// Shorthand for string-labelled graphs in tests and examples.
pub fn graph(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Graph<String>> {
    Graph::new(
        vertices.iter().map(|v| v.to_string()),
        edges
            .iter()
            .map(|(id, s, t)| Edge::new(*id, s.to_string(), t.to_string())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn minimal_graph() {
        let g = graph(&["a", "b"], &[("e", "a", "b")]).unwrap();
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.edge(&"e".into()).unwrap().target, "b");
    }

    #[test]
    fn dangling_endpoint_is_rejected() {
        let err = graph(&["a"], &[("e", "a", "b")]).unwrap_err();
        assert_eq!(
            err,
            Error::UnknownVertex {
                edge: "e".into(),
                vertex: "b".into()
            }
        );
    }

    #[test]
    fn duplicate_edge_id_is_rejected() {
        let err = graph(&["a", "b"], &[("e", "a", "b"), ("e", "b", "a")]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdgeId("e".into()));
    }

    #[test]
    fn multigraphs_and_loops_are_allowed() {
        let g = graph(
            &["a", "b"],
            &[("e1", "a", "b"), ("e2", "a", "b"), ("l", "a", "a")],
        )
        .unwrap();
        assert_eq!(g.endpoint_multiset()[&("a".into(), "b".into())], 2);
        assert!(!g.is_symmetric());
    }

    #[test]
    fn flatten_examples() {
        let a = |s: &str| Nested::Atom(s.into());
        let x = Nested::Seq(vec![
            Nested::Seq(vec![a("e"), a("f")]),
            Nested::Seq(vec![a("g")]),
        ]);
        assert_eq!(flatten(&x).to_string(), "e.f.g");
        assert_eq!(
            flatten(&Nested::Seq(vec![Nested::Seq(vec![a("e")])])).to_string(),
            "e"
        );
    }

    #[test]
    fn edge_id_text_and_order() {
        let id: EdgeId = "e.f.g".parse().unwrap();
        assert_eq!(id.atoms().len(), 3);
        assert!("e..f".parse::<EdgeId>().is_err());
        assert!("e f".parse::<EdgeId>().is_err());
        // textual order: "a.b" < "ab" because '.' < 'b'
        assert!(EdgeId::from("a.b") < EdgeId::from("ab"));
        assert!(EdgeId::from("a") < EdgeId::from("a.b"));
        assert_eq!(
            EdgeId::from("x.id.y")
                .erase(|a| a == "id")
                .unwrap()
                .to_string(),
            "x.y"
        );
    }

    fn nested() -> impl Strategy<Value = Nested> {
        let leaf = "[a-e]".prop_map(Nested::Atom);
        leaf.prop_recursive(4, 24, 4, |inner| {
            prop::collection::vec(inner, 1..4).prop_map(Nested::Seq)
        })
    }

    proptest! {
        #[test]
        fn flatten_is_idempotent(x in nested()) {
            let once = flatten(&x);
            prop_assert_eq!(flatten(&Nested::from(&once)), once);
        }

        #[test]
        fn edge_id_order_matches_strings(a in "[a-c]{1,2}(\\.[a-c]{1,2}){0,2}", b in "[a-c]{1,2}(\\.[a-c]{1,2}){0,2}") {
            let (x, y) = (EdgeId::from(a.as_str()), EdgeId::from(b.as_str()));
            prop_assert_eq!(x.cmp(&y), a.cmp(&b));
        }
    }
}
