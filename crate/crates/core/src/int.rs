//! The Int construction over graphs: a morphism `A -> B` is a graph on the
//! tagged disjoint union `A + B`, composed by execution.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::alternating::Orientation;
use crate::error::{Error, Result};
use crate::execution::{execute, measure};
use crate::extnat::ExtNat;
use crate::graph::{Edge, EdgeId, Graph};

/// A boundary point tagged with its side. Printed as `L:x` / `R:x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Port {
    Dom(String),
    Cod(String),
}

impl Port {
    pub fn label(&self) -> &str {
        match self {
            Port::Dom(l) | Port::Cod(l) => l,
        }
    }

    pub fn is_dom(&self) -> bool {
        matches!(self, Port::Dom(_))
    }
}

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Port::Dom(l) => write!(f, "L:{l}"),
            Port::Cod(l) => write!(f, "R:{l}"),
        }
    }
}

impl FromStr for Port {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.split_once(':') {
            Some(("L", l)) if !l.is_empty() => Ok(Port::Dom(l.to_owned())),
            Some(("R", l)) if !l.is_empty() => Ok(Port::Cod(l.to_owned())),
            _ => Err(format!("expected `L:<id>` or `R:<id>`, got `{s}`")),
        }
    }
}

/// Vertices of the glued graph during composition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Slot {
    Outer(Port),
    Mid(String),
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Outer(p) => p.fmt(f),
            Slot::Mid(l) => write!(f, "M:{l}"),
        }
    }
}

const IDENTITY_FORWARD: &str = "id>";
const IDENTITY_BACKWARD: &str = "id<";

/// Whether an edge atom was produced by [`IntMorphism::identity`].
pub fn is_identity_atom(atom: &str) -> bool {
    atom.starts_with(IDENTITY_FORWARD) || atom.starts_with(IDENTITY_BACKWARD)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMorphism {
    domain: BTreeSet<String>,
    codomain: BTreeSet<String>,
    graph: Graph<Port>,
}

impl IntMorphism {
    pub fn new(
        domain: impl IntoIterator<Item = String>,
        codomain: impl IntoIterator<Item = String>,
        graph: Graph<Port>,
    ) -> Result<Self> {
        let domain: BTreeSet<String> = domain.into_iter().collect();
        let codomain: BTreeSet<String> = codomain.into_iter().collect();
        let expected: BTreeSet<Port> = domain
            .iter()
            .cloned()
            .map(Port::Dom)
            .chain(codomain.iter().cloned().map(Port::Cod))
            .collect();
        if graph.vertices() != &expected {
            return Err(Error::InterfaceMismatch(
                "graph vertices must be exactly the tagged domain and codomain".into(),
            ));
        }
        Ok(IntMorphism {
            domain,
            codomain,
            graph,
        })
    }

    /// Builds a morphism from `(id, source, target)` triples over ports.
    pub fn from_edges(
        domain: &[&str],
        codomain: &[&str],
        edges: &[(&str, Port, Port)],
    ) -> Result<Self> {
        let vertices = domain
            .iter()
            .map(|a| Port::Dom(a.to_string()))
            .chain(codomain.iter().map(|b| Port::Cod(b.to_string())));
        let graph = Graph::new(
            vertices,
            edges
                .iter()
                .map(|(id, s, t)| Edge::new(*id, s.clone(), t.clone())),
        )?;
        IntMorphism::new(
            domain.iter().map(|s| s.to_string()),
            codomain.iter().map(|s| s.to_string()),
            graph,
        )
    }

    /// Two edges per point, `L:a -> R:a` and back.
    pub fn identity(object: impl IntoIterator<Item = String>) -> Self {
        let object: BTreeSet<String> = object.into_iter().collect();
        let edges = object.iter().flat_map(|a| {
            [
                Edge::new(
                    EdgeId::atom(format!("{IDENTITY_FORWARD}{a}")),
                    Port::Dom(a.clone()),
                    Port::Cod(a.clone()),
                ),
                Edge::new(
                    EdgeId::atom(format!("{IDENTITY_BACKWARD}{a}")),
                    Port::Cod(a.clone()),
                    Port::Dom(a.clone()),
                ),
            ]
        });
        let vertices = object
            .iter()
            .cloned()
            .map(Port::Dom)
            .chain(object.iter().cloned().map(Port::Cod));
        let graph = Graph::new(vertices, edges).expect("identity edges are well formed");
        IntMorphism {
            domain: object.clone(),
            codomain: object,
            graph,
        }
    }

    pub fn domain(&self) -> &BTreeSet<String> {
        &self.domain
    }

    pub fn codomain(&self) -> &BTreeSet<String> {
        &self.codomain
    }

    pub fn graph(&self) -> &Graph<Port> {
        &self.graph
    }

    fn glue(&self, next: &IntMorphism) -> Result<(Graph<Slot>, Graph<Slot>)> {
        if self.codomain != next.domain {
            return Err(Error::InterfaceMismatch(format!(
                "codomain {{{}}} does not match domain {{{}}}",
                self.codomain.iter().cloned().collect::<Vec<_>>().join(" "),
                next.domain.iter().cloned().collect::<Vec<_>>().join(" ")
            )));
        }
        let left = self.graph.map_vertices(|p| match p {
            Port::Dom(_) => Slot::Outer(p.clone()),
            Port::Cod(b) => Slot::Mid(b.clone()),
        });
        let right = next.graph.map_vertices(|p| match p {
            Port::Dom(b) => Slot::Mid(b.clone()),
            Port::Cod(_) => Slot::Outer(p.clone()),
        });
        Ok((left, right))
    }

    /// Composition `self ; next` by execution along the shared interface.
    pub fn compose(&self, next: &IntMorphism) -> Result<IntMorphism> {
        let (left, right) = self.glue(next)?;
        let glued = execute(&left, &right)?;
        let graph = glued.map_vertices(|s| match s {
            Slot::Outer(p) => p.clone(),
            Slot::Mid(_) => unreachable!("interface vertices are shared by both sides"),
        });
        Ok(IntMorphism {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            graph,
        })
    }

    /// Prime cycles formed across the interface of `self ; next`.
    pub fn interface_measure(
        &self,
        next: &IntMorphism,
        orientation: Orientation,
    ) -> Result<ExtNat> {
        let (left, right) = self.glue(next)?;
        Ok(measure(&left, &right, orientation))
    }

    pub fn map_edge_ids(&self, rename: impl FnMut(&EdgeId) -> EdgeId) -> Result<IntMorphism> {
        Ok(IntMorphism {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            graph: self.graph.map_edge_ids(rename)?,
        })
    }

    /// Prefixes every atom with `prefix`, making atom sets of different
    /// morphisms disjoint.
    pub fn with_atom_prefix(&self, prefix: &str) -> IntMorphism {
        self.map_edge_ids(|id| {
            let atoms: Vec<EdgeId> = id
                .atoms()
                .iter()
                .map(|a| EdgeId::atom(format!("{prefix}{a}")))
                .collect();
            EdgeId::concat(&atoms)
        })
        .expect("prefixing preserves uniqueness")
    }

    /// Removes identity atoms from every edge id; edges consisting only of
    /// identity atoms are dropped.
    pub fn erase_identity_atoms(&self) -> Result<IntMorphism> {
        let edges: Vec<Edge<Port>> = self
            .graph
            .edges()
            .iter()
            .filter_map(|e| {
                e.id.erase(is_identity_atom)
                    .map(|id| Edge::new(id, e.source.clone(), e.target.clone()))
            })
            .collect();
        Ok(IntMorphism {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            graph: Graph::new(self.graph.vertices().iter().cloned(), edges)?,
        })
    }

    pub fn endpoint_multiset(&self) -> BTreeMap<(Port, Port), usize> {
        self.graph.endpoint_multiset()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom(s: &str) -> Port {
        Port::Dom(s.into())
    }

    fn cod(s: &str) -> Port {
        Port::Cod(s.into())
    }

    fn object(labels: &[&str]) -> Vec<String> {
        labels.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn straight_composition() {
        let f = IntMorphism::from_edges(&["a"], &["b"], &[("e", dom("a"), cod("b"))]).unwrap();
        let g = IntMorphism::from_edges(&["b"], &["c"], &[("f", dom("b"), cod("c"))]).unwrap();
        let fg = f.compose(&g).unwrap();
        let expected =
            IntMorphism::from_edges(&["a"], &["c"], &[("e.f", dom("a"), cod("c"))]).unwrap();
        assert_eq!(fg, expected);
    }

    #[test]
    fn backward_edge_does_not_cross() {
        let f = IntMorphism::from_edges(&["a"], &["b"], &[("e", cod("b"), dom("a"))]).unwrap();
        let g = IntMorphism::from_edges(&["b"], &["c"], &[("f", dom("b"), cod("c"))]).unwrap();
        let fg = f.compose(&g).unwrap();
        assert!(fg.graph().edges().is_empty());
        assert_eq!(fg.graph().vertices().len(), 2);
    }

    #[test]
    fn identity_shape() {
        assert!(IntMorphism::identity(Vec::new()).graph().is_empty());
        let id = IntMorphism::identity(object(&["a"]));
        assert_eq!(id.graph().edges().len(), 2);
        assert!(id.graph().is_symmetric());
    }

    #[test]
    fn identity_composed_with_itself() {
        let id = IntMorphism::identity(object(&["a", "b"]));
        let twice = id.compose(&id.with_atom_prefix("2")).unwrap();
        assert_eq!(twice.endpoint_multiset(), id.endpoint_multiset());
    }

    #[test]
    fn identity_laws_up_to_erasure() {
        let f = IntMorphism::from_edges(
            &["a"],
            &["b", "c"],
            &[
                ("e", dom("a"), cod("b")),
                ("k", cod("b"), cod("c")),
                ("l", cod("c"), cod("c")),
                ("m", cod("c"), dom("a")),
            ],
        )
        .unwrap();
        let right = f
            .compose(&IntMorphism::identity(object(&["b", "c"])))
            .unwrap();
        let left = IntMorphism::identity(object(&["a"])).compose(&f).unwrap();
        assert_eq!(right.endpoint_multiset(), f.endpoint_multiset());
        assert_eq!(left.endpoint_multiset(), f.endpoint_multiset());
        assert_eq!(right.erase_identity_atoms().unwrap(), f);
        assert_eq!(left.erase_identity_atoms().unwrap(), f);
    }

    #[test]
    fn interface_mismatch() {
        let f = IntMorphism::identity(object(&["a"]));
        let g = IntMorphism::identity(object(&["b"]));
        assert!(matches!(f.compose(&g), Err(Error::InterfaceMismatch(_))));
    }

    #[test]
    fn vertex_set_must_match_interface() {
        let g = Graph::new([dom("a")], []).unwrap();
        assert!(IntMorphism::new(object(&["a"]), object(&["b"]), g).is_err());
    }

    #[test]
    fn port_text() {
        assert_eq!("L:a1".parse::<Port>(), Ok(dom("a1")));
        assert_eq!(cod("b").to_string(), "R:b");
        assert!("X:a".parse::<Port>().is_err());
        assert!("L:".parse::<Port>().is_err());
    }

    #[test]
    fn yanking_spot_check() {
        // a cap on the codomain side closes with a cup on the domain side
        let cap = IntMorphism::from_edges(
            &[],
            &["x", "y"],
            &[("c1", cod("x"), cod("y")), ("c2", cod("y"), cod("x"))],
        )
        .unwrap();
        let cup = IntMorphism::from_edges(
            &["x", "y"],
            &[],
            &[("u1", dom("y"), dom("x")), ("u2", dom("x"), dom("y"))],
        )
        .unwrap();
        let closed = cap.compose(&cup).unwrap();
        assert!(closed.graph().is_empty());
        assert_eq!(
            cap.interface_measure(&cup, Orientation::Directed).unwrap(),
            ExtNat::Finite(2)
        );
        assert_eq!(
            cap.interface_measure(&cup, Orientation::Unoriented)
                .unwrap(),
            ExtNat::Finite(1)
        );
    }
}
