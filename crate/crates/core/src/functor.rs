//! The functor from `Cob0` to the Int category of graphs, and its extension
//! to projects that remembers circles as the wager.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::alternating::Orientation;
use crate::cob0::{Cob0Morphism, Cob0Object};
use crate::error::Result;
use crate::extnat::ExtNat;
use crate::graph::{Edge, EdgeId, Graph};
use crate::int::{IntMorphism, Port};
use crate::project::Project;

/// One edge in each direction per segment; circles contribute nothing.
/// Edge ids are `x>y`.
pub fn fundamental_graph(m: &Cob0Morphism) -> IntMorphism {
    let vertices = m
        .source()
        .iter()
        .cloned()
        .map(Port::Dom)
        .chain(m.target().iter().cloned().map(Port::Cod));
    let edges = m.pairs().into_iter().flat_map(|(x, y)| {
        [
            Edge::new(EdgeId::atom(format!("{x}>{y}")), x.clone(), y.clone()),
            Edge::new(EdgeId::atom(format!("{y}>{x}")), y, x),
        ]
    });
    let graph = Graph::new(vertices, edges).expect("segments join distinct points");
    IntMorphism::new(
        m.source().iter().cloned(),
        m.target().iter().cloned(),
        graph,
    )
    .expect("vertices are the boundary")
}

/// `(fundamental graph, number of circles)`.
pub fn functor_bar(m: &Cob0Morphism) -> Project<IntMorphism> {
    Project::new(m.circles(), fundamental_graph(m))
}

/// Both sides of the two functoriality equations for one composable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorialityReport {
    /// Endpoints of the image of the glued cobordism.
    pub image_of_composite: BTreeMap<(Port, Port), usize>,
    /// Endpoints of the composite of the images.
    pub composite_of_images: BTreeMap<(Port, Port), usize>,
    pub composite_circles: u64,
    pub first_circles: u64,
    pub second_circles: u64,
    pub measure_unoriented: ExtNat,
    pub measure_directed: ExtNat,
}

impl FunctorialityReport {
    pub fn graphs_agree(&self) -> bool {
        self.image_of_composite == self.composite_of_images
    }

    /// `circles(M;N) = circles(M) + circles(N) + m_unoriented(F(M), F(N))`
    pub fn wagers_agree(&self) -> bool {
        ExtNat::from(self.composite_circles)
            == ExtNat::from(self.first_circles)
                + ExtNat::from(self.second_circles)
                + self.measure_unoriented
    }

    pub fn holds(&self) -> bool {
        self.graphs_agree() && self.wagers_agree()
    }

    /// Whether the directed and unoriented counts disagree on this pair.
    pub fn orientations_disagree(&self) -> bool {
        self.measure_directed != self.measure_unoriented
    }

    pub fn directed_is_double(&self) -> bool {
        match (self.measure_directed, self.measure_unoriented) {
            (ExtNat::Finite(d), ExtNat::Finite(u)) => d == 2 * u,
            _ => false,
        }
    }
}

pub fn check_functoriality(m: &Cob0Morphism, n: &Cob0Morphism) -> Result<FunctorialityReport> {
    let composite = m.compose(n)?;
    let fm = fundamental_graph(m);
    // the two images share atom names when the boundaries share labels
    let fn_ = fundamental_graph(n).with_atom_prefix("2/");
    let composite_of_images = fm.compose(&fn_)?;
    Ok(FunctorialityReport {
        image_of_composite: fundamental_graph(&composite).endpoint_multiset(),
        composite_of_images: composite_of_images.endpoint_multiset(),
        composite_circles: composite.circles(),
        first_circles: m.circles(),
        second_circles: n.circles(),
        measure_unoriented: fm.interface_measure(&fn_, Orientation::Unoriented)?,
        measure_directed: fm.interface_measure(&fn_, Orientation::Directed)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaithfulnessReport {
    pub hom_size: usize,
    pub distinct_images: usize,
    /// Two morphisms with the same fundamental graph, when one exists.
    pub plain_witness: Option<(Cob0Morphism, Cob0Morphism)>,
}

impl FaithfulnessReport {
    pub fn injective(&self) -> bool {
        self.hom_size == self.distinct_images
    }
}

/// Injectivity of [`functor_bar`] on the hom-set `source -> target` with at
/// most `max_circles` circles, plus a witness that the bare fundamental
/// graph forgets circles.
pub fn check_faithfulness(
    source: &Cob0Object,
    target: &Cob0Object,
    max_circles: u64,
) -> FaithfulnessReport {
    let hom = Cob0Morphism::enumerate(source, target, max_circles);
    let images: HashSet<Project<IntMorphism>> = hom.iter().map(functor_bar).collect();
    let mut by_graph: HashMap<IntMorphism, &Cob0Morphism> = HashMap::new();
    let mut plain_witness = None;
    for m in &hom {
        match by_graph.get(&fundamental_graph(m)) {
            Some(&first) if plain_witness.is_none() => {
                plain_witness = Some((first.clone(), m.clone()))
            }
            Some(_) => {}
            None => {
                by_graph.insert(fundamental_graph(m), m);
            }
        }
    }
    FaithfulnessReport {
        hom_size: hom.len(),
        distinct_images: images.len(),
        plain_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cob0::object;

    fn l(s: &str) -> Port {
        Port::Dom(s.into())
    }

    fn r(s: &str) -> Port {
        Port::Cod(s.into())
    }

    /// a1 -- b3 across, a2 -- a3 and b1 -- b2 on either side.
    fn crossing_with_caps(circles: u64) -> Cob0Morphism {
        Cob0Morphism::new(
            object(["a1", "a2", "a3"]),
            object(["b1", "b2", "b3"]),
            [(l("a1"), r("b3")), (l("a2"), l("a3")), (r("b1"), r("b2"))],
            circles,
        )
        .unwrap()
    }

    #[test]
    fn image_has_three_symmetric_pairs() {
        let g = fundamental_graph(&crossing_with_caps(2));
        let ends: Vec<(Port, Port)> = g.endpoint_multiset().into_keys().collect();
        let mut expected = vec![
            (l("a1"), r("b3")),
            (r("b3"), l("a1")),
            (l("a2"), l("a3")),
            (l("a3"), l("a2")),
            (r("b1"), r("b2")),
            (r("b2"), r("b1")),
        ];
        expected.sort();
        assert_eq!(ends, expected);
        assert!(g.graph().is_symmetric());
        assert!(g.graph().edges().iter().all(|e| e.source != e.target));
    }

    #[test]
    fn circles_are_forgotten_by_the_graph_only() {
        let with = functor_bar(&crossing_with_caps(2));
        let without = functor_bar(&crossing_with_caps(0));
        assert_eq!(with.graph, without.graph);
        assert_eq!(with.wager, ExtNat::Finite(2));
        assert_eq!(without.wager, ExtNat::ZERO);
    }

    #[test]
    fn identities_are_preserved() {
        let a = object(["x", "y"]);
        let image = functor_bar(&Cob0Morphism::identity(&a));
        assert_eq!(image.wager, ExtNat::ZERO);
        assert_eq!(
            image.graph.endpoint_multiset(),
            IntMorphism::identity(a).endpoint_multiset()
        );
        assert!(
            fundamental_graph(&Cob0Morphism::identity(&Cob0Object::new()))
                .graph()
                .is_empty()
        );
    }

    #[test]
    fn cup_cap_functoriality() {
        let m = Cob0Morphism::new(
            object(["a1", "a2"]),
            object(["b1", "b2"]),
            [(l("a1"), l("a2")), (r("b1"), r("b2"))],
            0,
        )
        .unwrap();
        let n = Cob0Morphism::new(
            object(["b1", "b2"]),
            object(["c1", "c2"]),
            [(l("b1"), l("b2")), (r("c1"), r("c2"))],
            0,
        )
        .unwrap();
        let report = check_functoriality(&m, &n).unwrap();
        assert!(report.holds());
        assert_eq!(report.composite_circles, 1);
        assert_eq!(report.measure_unoriented, ExtNat::Finite(1));
        assert_eq!(report.measure_directed, ExtNat::Finite(2));
        assert!(report.orientations_disagree());
        assert!(report.directed_is_double());
    }

    #[test]
    fn functoriality_against_identity() {
        let m = crossing_with_caps(1);
        let report = check_functoriality(&m, &Cob0Morphism::identity(m.target())).unwrap();
        assert!(report.holds());
        assert_eq!(report.measure_directed, ExtNat::ZERO);
    }

    #[test]
    fn faithfulness_small_homsets() {
        let six = check_faithfulness(&object(["a1", "a2", "a3"]), &object(["b1", "b2", "b3"]), 2);
        assert_eq!((six.hom_size, six.distinct_images), (45, 45));
        assert!(six.plain_witness.is_some());
        let two = check_faithfulness(&object(["a"]), &object(["b"]), 0);
        assert_eq!((two.hom_size, two.distinct_images), (1, 1));
        assert!(two.plain_witness.is_none());
    }
}
