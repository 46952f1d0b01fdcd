//! Execution of graphs and the prime-cycle measure.

use std::collections::BTreeSet;
use std::fmt;

use crate::alternating::{alternating_paths, prime_cycles, Orientation};
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::graph::{Edge, Graph, VertexId};

/// `left :: right`: vertices are the symmetric difference of the vertex
/// sets, edges are the alternating paths between them, identified by their
/// flattened base-edge sequences.
pub fn execute<V: VertexId>(left: &Graph<V>, right: &Graph<V>) -> Result<Graph<V>> {
    let paths = alternating_paths(left, right)?;
    let vertices: BTreeSet<V> = left
        .vertices()
        .symmetric_difference(right.vertices())
        .cloned()
        .collect();
    Graph::new(
        vertices,
        paths
            .iter()
            .map(|p| Edge::new(p.flat_id(), p.source().clone(), p.target().clone())),
    )
}

/// Number of prime alternating cycle classes, `omega` when infinite.
pub fn measure<V: VertexId>(left: &Graph<V>, right: &Graph<V>, orientation: Orientation) -> ExtNat {
    match prime_cycles(left, right, orientation) {
        Ok(classes) => ExtNat::from(classes.len()),
        Err(_) => ExtNat::Omega,
    }
}

fn require_empty_triple_intersection<V: VertexId>(
    f: &Graph<V>,
    g: &Graph<V>,
    h: &Graph<V>,
) -> Result<()> {
    let common: Vec<&V> = f
        .vertices()
        .iter()
        .filter(|v| g.contains_vertex(v) && h.contains_vertex(v))
        .collect();
    if common.is_empty() {
        Ok(())
    } else {
        let names: Vec<String> = common.iter().map(|v| v.to_string()).collect();
        Err(Error::PreconditionViolation(format!(
            "vertices shared by all three graphs: {}",
            names.join(" ")
        )))
    }
}

/// Both bracketings of a triple execution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativityReport<V> {
    /// `(F :: G) :: H`
    pub left_nested: Graph<V>,
    /// `F :: (G :: H)`
    pub right_nested: Graph<V>,
}

impl<V: VertexId> AssociativityReport<V> {
    pub fn holds(&self) -> bool {
        self.left_nested == self.right_nested
    }
}

pub fn check_associativity<V: VertexId>(
    f: &Graph<V>,
    g: &Graph<V>,
    h: &Graph<V>,
) -> Result<AssociativityReport<V>> {
    require_empty_triple_intersection(f, g, h)?;
    let left_nested = execute(&execute(f, g)?, h)?;
    let right_nested = execute(f, &execute(g, h)?)?;
    Ok(AssociativityReport {
        left_nested,
        right_nested,
    })
}

/// The four cycle counts of the trefoil identity
/// `|C(F, G::H)| + |C(G, H)| = |C(H, F::G)| + |C(F, G)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrefoilReport {
    pub orientation: Orientation,
    pub f_against_gh: u64,
    pub g_against_h: u64,
    pub h_against_fg: u64,
    pub f_against_g: u64,
}

impl TrefoilReport {
    pub fn lhs(&self) -> u64 {
        self.f_against_gh + self.g_against_h
    }

    pub fn rhs(&self) -> u64 {
        self.h_against_fg + self.f_against_g
    }

    pub fn holds(&self) -> bool {
        self.lhs() == self.rhs()
    }
}

impl fmt::Display for TrefoilReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {} {} {} + {} ({})",
            self.f_against_gh,
            self.g_against_h,
            if self.holds() { "=" } else { "!=" },
            self.h_against_fg,
            self.f_against_g,
            self.orientation
        )
    }
}

pub fn check_trefoil<V: VertexId>(
    f: &Graph<V>,
    g: &Graph<V>,
    h: &Graph<V>,
    orientation: Orientation,
) -> Result<TrefoilReport> {
    require_empty_triple_intersection(f, g, h)?;
    let gh = execute(g, h)?;
    let fg = execute(f, g)?;
    let count =
        |a: &Graph<V>, b: &Graph<V>| prime_cycles(a, b, orientation).map(|c| c.len() as u64);
    Ok(TrefoilReport {
        orientation,
        f_against_gh: count(f, &gh)?,
        g_against_h: count(g, h)?,
        h_against_fg: count(h, &fg)?,
        f_against_g: count(f, g)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph;

    fn triangle() -> (Graph, Graph, Graph) {
        (
            graph(&["x", "y"], &[("e", "x", "y")]).unwrap(),
            graph(&["y", "z"], &[("g", "y", "z")]).unwrap(),
            graph(&["z", "x"], &[("h", "z", "x")]).unwrap(),
        )
    }

    #[test]
    fn execute_straight_line() {
        let g = graph(&["a", "b"], &[("e", "a", "b")]).unwrap();
        let h = graph(&["b", "c"], &[("f", "b", "c")]).unwrap();
        let expected = graph(&["a", "c"], &[("e.f", "a", "c")]).unwrap();
        assert_eq!(execute(&g, &h).unwrap(), expected);
    }

    #[test]
    fn execute_disjoint_is_union() {
        let g = graph(&["a", "b"], &[("e", "a", "b"), ("l", "a", "a")]).unwrap();
        let h = graph(&["c"], &[("f", "c", "c")]).unwrap();
        let expected = graph(
            &["a", "b", "c"],
            &[("e", "a", "b"), ("l", "a", "a"), ("f", "c", "c")],
        )
        .unwrap();
        assert_eq!(execute(&g, &h).unwrap(), expected);
    }

    #[test]
    fn execute_closed_loop_is_empty() {
        let g = graph(&["a", "b"], &[("e", "a", "b")]).unwrap();
        let h = graph(&["a", "b"], &[("f", "b", "a")]).unwrap();
        assert_eq!(execute(&g, &h).unwrap(), Graph::empty());
    }

    #[test]
    fn empty_graph_is_a_unit() {
        let g = graph(
            &["a", "b", "c"],
            &[("e", "a", "b"), ("f", "b", "c"), ("k", "c", "c")],
        )
        .unwrap();
        assert_eq!(execute(&g, &Graph::empty()).unwrap(), g);
        assert_eq!(execute(&Graph::empty(), &g).unwrap(), g);
    }

    #[test]
    fn measures() {
        let g = graph(&["a", "b"], &[("e", "a", "b")]).unwrap();
        let h = graph(&["a", "b"], &[("f", "b", "a")]).unwrap();
        assert_eq!(measure(&g, &h, Orientation::Directed), ExtNat::Finite(1));
        assert_eq!(measure(&g, &h, Orientation::Unoriented), ExtNat::Finite(1));
        let far = graph(&["c", "d"], &[("f", "d", "c")]).unwrap();
        assert_eq!(measure(&g, &far, Orientation::Directed), ExtNat::ZERO);
        let two = graph(&["a", "b"], &[("f1", "b", "a"), ("f2", "b", "a")]).unwrap();
        assert_eq!(measure(&g, &two, Orientation::Directed), ExtNat::Omega);
    }

    #[test]
    fn associativity_on_triangle() {
        let (f, g, h) = triangle();
        let r = check_associativity(&f, &g, &h).unwrap();
        assert!(r.holds());
        assert_eq!(r.left_nested, Graph::empty());
        assert_eq!(
            execute(&f, &g).unwrap(),
            graph(&["x", "z"], &[("e.g", "x", "z")]).unwrap()
        );
    }

    #[test]
    fn associativity_with_empty_operands() {
        let (f, _, _) = triangle();
        let e = Graph::empty();
        assert!(check_associativity(&f, &e, &e).unwrap().holds());
        assert!(check_associativity(&e, &f, &e).unwrap().holds());
        assert!(check_associativity(&e, &e, &f).unwrap().holds());
    }

    #[test]
    fn triple_intersection_is_rejected() {
        let f = graph(&["x"], &[]).unwrap();
        assert!(matches!(
            check_associativity(&f, &f, &f),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(matches!(
            check_trefoil(&f, &f, &f, Orientation::Directed),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn trefoil_on_triangle() {
        let (f, g, h) = triangle();
        let r = check_trefoil(&f, &g, &h, Orientation::Directed).unwrap();
        assert_eq!(
            (r.f_against_gh, r.g_against_h, r.h_against_fg, r.f_against_g),
            (1, 0, 1, 0)
        );
        assert!(r.holds());
    }

    #[test]
    fn trefoil_with_empty_third() {
        let f = graph(&["a", "b"], &[("e", "a", "b")]).unwrap();
        let g = graph(&["a", "b"], &[("f", "b", "a")]).unwrap();
        let r = check_trefoil(&f, &g, &Graph::empty(), Orientation::Directed).unwrap();
        assert_eq!(
            (r.f_against_gh, r.g_against_h, r.h_against_fg, r.f_against_g),
            (1, 0, 0, 1)
        );
        assert!(r.holds());
    }

    #[test]
    fn execution_is_symmetric() {
        let g = graph(&["a", "b", "m"], &[("e", "a", "m"), ("e2", "m", "b")]).unwrap();
        let h = graph(&["m", "c"], &[("f", "m", "c"), ("f2", "c", "m")]).unwrap();
        assert_eq!(execute(&g, &h).unwrap(), execute(&h, &g).unwrap());
    }
}
