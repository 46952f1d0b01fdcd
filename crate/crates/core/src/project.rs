//! Projects: a wager paired with a graph.

use crate::alternating::Orientation;
use crate::error::Result;
use crate::execution::{execute, measure};
use crate::extnat::ExtNat;
use crate::graph::{Graph, VertexId};
use crate::int::IntMorphism;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Project<T = Graph<String>> {
    pub wager: ExtNat,
    pub graph: T,
}

impl<T> Project<T> {
    pub fn new(wager: impl Into<ExtNat>, graph: T) -> Self {
        Project {
            wager: wager.into(),
            graph,
        }
    }
}

impl<V: VertexId> Project<Graph<V>> {
    /// `(0, empty)`, the unit of execution.
    pub fn unit() -> Self {
        Project::new(ExtNat::ZERO, Graph::empty())
    }

    /// `(a, A) :: (b, B) = (a + b + m(A, B), A :: B)`.
    pub fn execute(&self, other: &Self, orientation: Orientation) -> Result<Self> {
        let graph = execute(&self.graph, &other.graph)?;
        let wager = self.wager + other.wager + measure(&self.graph, &other.graph, orientation);
        Ok(Project { wager, graph })
    }
}

impl Project<IntMorphism> {
    /// Composition in the Int category, with the wager picking up the cycles
    /// closed along the interface.
    pub fn compose(&self, next: &Self, orientation: Orientation) -> Result<Self> {
        let graph = self.graph.compose(&next.graph)?;
        let wager =
            self.wager + next.wager + self.graph.interface_measure(&next.graph, orientation)?;
        Ok(Project { wager, graph })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph;

    #[test]
    fn unit_on_both_sides() {
        let p = Project::new(3u64, graph(&["a", "b"], &[("e", "a", "b")]).unwrap());
        assert_eq!(
            Project::unit().execute(&p, Orientation::Directed).unwrap(),
            p
        );
        assert_eq!(
            p.execute(&Project::unit(), Orientation::Directed).unwrap(),
            p
        );
    }

    #[test]
    fn wager_picks_up_the_cycle() {
        let p = Project::new(1u64, graph(&["a", "b"], &[("e", "a", "b")]).unwrap());
        let q = Project::new(2u64, graph(&["a", "b"], &[("f", "b", "a")]).unwrap());
        let r = p.execute(&q, Orientation::Directed).unwrap();
        assert_eq!(r, Project::new(4u64, Graph::empty()));
    }

    #[test]
    fn infinite_cycles_give_omega() {
        let p = Project::new(0u64, graph(&["a", "b"], &[("e", "a", "b")]).unwrap());
        let q = Project::new(
            0u64,
            graph(&["a", "b"], &[("f1", "b", "a"), ("f2", "b", "a")]).unwrap(),
        );
        assert_eq!(
            p.execute(&q, Orientation::Directed).unwrap().wager,
            ExtNat::Omega
        );
    }
}
