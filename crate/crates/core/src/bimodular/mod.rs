//! Bimodular graphs: every vertex carries a finite group, the group of the
//! source acts on the left of each edge set `E(v, v')` and the group of the
//! target acts on the right. Composition identifies `(e . b, e')` with
//! `(e, b . e')` for `b` in the group of the junction vertex.

mod group;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

pub use group::FiniteGroup;

use crate::alternating::{alternating_paths, Side};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, Graph};

/// One explicitly given permutation of an edge set `E(source, target)`.
/// `images[i]` is the image of the i-th edge of the set in id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionEntry {
    pub source: String,
    pub target: String,
    pub element: String,
    pub images: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimodularGraph {
    graph: Graph<String>,
    groups: BTreeMap<String, FiniteGroup>,
    // left[e][g]: edge index of g . e
    left: Vec<Vec<usize>>,
    // right[e][h]: edge index of e . h
    right: Vec<Vec<usize>>,
}

impl BimodularGraph {
    /// Trivial groups everywhere.
    pub fn trivial(graph: Graph<String>) -> Self {
        let n = graph.edges().len();
        let groups = graph
            .vertices()
            .iter()
            .map(|v| (v.clone(), FiniteGroup::trivial()))
            .collect();
        BimodularGraph {
            graph,
            groups,
            left: (0..n).map(|e| vec![e]).collect(),
            right: (0..n).map(|e| vec![e]).collect(),
        }
    }

    /// Builds from full action tables and validates the action and
    /// commutation laws. Vertices missing from `groups` get the trivial
    /// group.
    pub fn from_tables(
        graph: Graph<String>,
        mut groups: BTreeMap<String, FiniteGroup>,
        left: Vec<Vec<usize>>,
        right: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if let Some(v) = groups.keys().find(|v| !graph.contains_vertex(v)) {
            return Err(Error::InvalidGroup(format!(
                "group given for unknown vertex `{v}`"
            )));
        }
        for v in graph.vertices() {
            groups.entry(v.clone()).or_insert_with(FiniteGroup::trivial);
        }
        let g = BimodularGraph {
            graph,
            groups,
            left,
            right,
        };
        g.validate()?;
        Ok(g)
    }

    /// Builds from per-element permutations; elements without an entry act
    /// as the identity.
    pub fn from_entries(
        graph: Graph<String>,
        groups: BTreeMap<String, FiniteGroup>,
        left: &[ActionEntry],
        right: &[ActionEntry],
    ) -> Result<Self> {
        let trivial = FiniteGroup::trivial();
        let group_of = |v: &String| groups.get(v).unwrap_or(&trivial);
        let n = graph.edges().len();
        let mut left_table: Vec<Vec<usize>> = (0..n)
            .map(|e| vec![e; group_of(&graph.edges()[e].source).order()])
            .collect();
        let mut right_table: Vec<Vec<usize>> = (0..n)
            .map(|e| vec![e; group_of(&graph.edges()[e].target).order()])
            .collect();
        for (entries, table, on_source) in [
            (left, &mut left_table, true),
            (right, &mut right_table, false),
        ] {
            for entry in entries {
                let acting = if on_source {
                    &entry.source
                } else {
                    &entry.target
                };
                let group = group_of(acting);
                let element = group.element(&entry.element).ok_or_else(|| {
                    Error::InvalidAction(format!(
                        "`{}` is not an element of the group at `{acting}`",
                        entry.element
                    ))
                })?;
                let set = edge_set(&graph, &entry.source, &entry.target);
                if set.len() != entry.images.len() {
                    return Err(Error::InvalidAction(format!(
                        "action on E({}, {}) lists {} images for {} edges",
                        entry.source,
                        entry.target,
                        entry.images.len(),
                        set.len()
                    )));
                }
                for (&e, image) in set.iter().zip(&entry.images) {
                    let j = set
                        .iter()
                        .copied()
                        .find(|&j| &graph.edges()[j].id == image)
                        .ok_or_else(|| {
                            Error::InvalidAction(format!(
                                "`{image}` is not in E({}, {})",
                                entry.source, entry.target
                            ))
                        })?;
                    table[e][element] = j;
                }
            }
        }
        BimodularGraph::from_tables(graph, groups, left_table, right_table)
    }

    fn validate(&self) -> Result<()> {
        let edges = self.graph.edges();
        let bad = |msg: String| Err(Error::InvalidAction(msg));
        for (e, edge) in edges.iter().enumerate() {
            let gs = &self.groups[&edge.source];
            let gt = &self.groups[&edge.target];
            if self.left.get(e).map(Vec::len) != Some(gs.order())
                || self.right.get(e).map(Vec::len) != Some(gt.order())
            {
                return bad(format!(
                    "action tables of `{}` have the wrong size",
                    edge.id
                ));
            }
            for &j in self.left[e].iter().chain(&self.right[e]) {
                let image = edges.get(j);
                if image.is_none_or(|x| x.source != edge.source || x.target != edge.target) {
                    return bad(format!("an action moves `{}` out of its edge set", edge.id));
                }
            }
            if self.left[e][gs.identity()] != e || self.right[e][gt.identity()] != e {
                return bad(format!("identity does not fix `{}`", edge.id));
            }
            for g in gs.elements() {
                for h in gs.elements() {
                    if self.left[self.left[e][h]][g] != self.left[e][gs.mul(g, h)] {
                        return bad(format!("left action law fails at `{}`", edge.id));
                    }
                }
            }
            for g in gt.elements() {
                for h in gt.elements() {
                    if self.right[self.right[e][g]][h] != self.right[e][gt.mul(g, h)] {
                        return bad(format!("right action law fails at `{}`", edge.id));
                    }
                }
            }
            for g in gs.elements() {
                for h in gt.elements() {
                    if self.right[self.left[e][g]][h] != self.left[self.right[e][h]][g] {
                        return bad(format!(
                            "left and right actions do not commute at `{}`",
                            edge.id
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &Graph<String> {
        &self.graph
    }

    pub fn group(&self, v: &str) -> Option<&FiniteGroup> {
        self.groups.get(v)
    }

    pub fn groups(&self) -> &BTreeMap<String, FiniteGroup> {
        &self.groups
    }

    /// `g . e` by edge index.
    pub fn act_left(&self, g: usize, e: usize) -> usize {
        self.left[e][g]
    }

    /// `e . h` by edge index.
    pub fn act_right(&self, e: usize, h: usize) -> usize {
        self.right[e][h]
    }

    pub fn edge_index(&self, id: &EdgeId) -> Option<usize> {
        self.graph.edges().binary_search_by(|e| e.id.cmp(id)).ok()
    }

    /// Permutation entries of every non-identity element, for printing.
    pub fn action_entries(&self) -> (Vec<ActionEntry>, Vec<ActionEntry>) {
        let mut sets: BTreeMap<(&String, &String), Vec<usize>> = BTreeMap::new();
        for (i, e) in self.graph.edges().iter().enumerate() {
            sets.entry((&e.source, &e.target)).or_default().push(i);
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for ((s, t), set) in sets {
            for (vertex, table, out) in [(s, &self.left, &mut left), (t, &self.right, &mut right)] {
                let group = &self.groups[vertex];
                for g in group
                    .elements()
                    .filter(|&g| set.iter().any(|&e| table[e][g] != e))
                {
                    out.push(ActionEntry {
                        source: s.clone(),
                        target: t.clone(),
                        element: group.name(g).to_owned(),
                        images: set
                            .iter()
                            .map(|&e| self.graph.edges()[table[e][g]].id.clone())
                            .collect(),
                    });
                }
            }
        }
        (left, right)
    }
}

fn edge_set(graph: &Graph<String>, source: &str, target: &str) -> Vec<usize> {
    graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.source == source && e.target == target)
        .map(|(i, _)| i)
        .collect()
}

fn check_compatible(f: &BimodularGraph, g: &BimodularGraph) -> Result<()> {
    for v in f.graph.shared_vertices(&g.graph) {
        if f.groups[&v] != g.groups[&v] {
            return Err(Error::IncompatibleGroups(format!(
                "the groups at `{v}` differ"
            )));
        }
    }
    for (i, e) in f.graph.edges().iter().enumerate() {
        if let Some(j) = g.edge_index(&e.id) {
            let other = &g.graph.edges()[j];
            let same_tables =
                |a: &[usize], b: &[usize], fa: &BimodularGraph, fb: &BimodularGraph| {
                    a.iter()
                        .zip(b)
                        .all(|(&x, &y)| fa.graph.edges()[x].id == fb.graph.edges()[y].id)
                };
            if other.source != e.source
                || other.target != e.target
                || !same_tables(&f.left[i], &g.left[j], f, g)
                || !same_tables(&f.right[i], &g.right[j], f, g)
            {
                return Err(Error::IncompatibleActions(format!(
                    "edge `{}` is given differently in the two graphs",
                    e.id
                )));
            }
        }
    }
    Ok(())
}

/// A path as the side of its first edge plus edge indices.
type PathKey = (Side, Vec<usize>);

struct Pair<'a> {
    f: &'a BimodularGraph,
    g: &'a BimodularGraph,
}

impl<'a> Pair<'a> {
    fn of(&self, side: Side) -> &'a BimodularGraph {
        match side {
            Side::Left => self.f,
            Side::Right => self.g,
        }
    }

    fn side_at(key: &PathKey, i: usize) -> Side {
        if i.is_multiple_of(2) {
            key.0
        } else {
            key.0.other()
        }
    }

    fn edge(&self, key: &PathKey, i: usize) -> &'a Edge<String> {
        &self.of(Self::side_at(key, i)).graph.edges()[key.1[i]]
    }

    /// The group at the i-th junction (target of the i-th edge).
    fn junction_group(&self, key: &PathKey, i: usize) -> &'a FiniteGroup {
        let bg = self.of(Self::side_at(key, i));
        &bg.groups[&self.edge(key, i).target]
    }

    /// Identification at junction `i` by `b`: `(e . b, b^-1 . e')`.
    fn act_at_junction(&self, key: &PathKey, i: usize, b: usize) -> PathKey {
        let group = self.junction_group(key, i);
        let mut edges = key.1.clone();
        edges[i] = self.of(Self::side_at(key, i)).act_right(edges[i], b);
        edges[i + 1] = self
            .of(Self::side_at(key, i + 1))
            .act_left(group.inv(b), edges[i + 1]);
        (key.0, edges)
    }

    fn act_left_end(&self, key: &PathKey, g: usize) -> PathKey {
        let mut edges = key.1.clone();
        edges[0] = self.of(key.0).act_left(g, edges[0]);
        (key.0, edges)
    }

    fn act_right_end(&self, key: &PathKey, h: usize) -> PathKey {
        let last = key.1.len() - 1;
        let mut edges = key.1.clone();
        edges[last] = self.of(Self::side_at(key, last)).act_right(edges[last], h);
        (key.0, edges)
    }

    fn flat_id(&self, key: &PathKey) -> EdgeId {
        EdgeId::concat((0..key.1.len()).map(|i| &self.edge(key, i).id))
    }

    fn group_at(&self, v: &String) -> &'a FiniteGroup {
        self.f
            .groups
            .get(v)
            .or_else(|| self.g.groups.get(v))
            .expect("vertex of one of the graphs")
    }
}

/// Orbits of a set of paths under the junction identifications.
struct Orbits {
    paths: Vec<PathKey>,
    orbit_of: HashMap<PathKey, usize>,
    representatives: Vec<PathKey>,
}

impl Orbits {
    fn compute(pair: &Pair<'_>, paths: Vec<PathKey>) -> Result<Self> {
        let mut orbit_of: HashMap<PathKey, usize> = HashMap::new();
        let mut members: Vec<Vec<PathKey>> = Vec::new();
        let known: BTreeSet<&PathKey> = paths.iter().collect();
        for p in &paths {
            if orbit_of.contains_key(p) {
                continue;
            }
            let id = members.len();
            let mut orbit = vec![p.clone()];
            orbit_of.insert(p.clone(), id);
            let mut queue = VecDeque::from([p.clone()]);
            while let Some(q) = queue.pop_front() {
                for i in 0..q.1.len() - 1 {
                    for b in pair.junction_group(&q, i).elements() {
                        let r = pair.act_at_junction(&q, i, b);
                        if !known.contains(&r) {
                            return Err(Error::InvalidAction(
                                "an identification leaves the path set".into(),
                            ));
                        }
                        if !orbit_of.contains_key(&r) {
                            orbit_of.insert(r.clone(), id);
                            orbit.push(r.clone());
                            queue.push_back(r);
                        }
                    }
                }
            }
            members.push(orbit);
        }
        let representatives = members
            .iter()
            .map(|orbit| {
                orbit
                    .iter()
                    .min_by_key(|k| pair.flat_id(k))
                    .expect("orbits are nonempty")
                    .clone()
            })
            .collect();
        Ok(Orbits {
            paths,
            orbit_of,
            representatives,
        })
    }

    /// The quotient as a bimodular graph with the descended end actions.
    fn quotient(&self, pair: &Pair<'_>, vertices: BTreeSet<String>) -> Result<BimodularGraph> {
        let reps: Vec<(EdgeId, &PathKey)> = self
            .representatives
            .iter()
            .map(|k| (pair.flat_id(k), k))
            .collect();
        let graph = Graph::new(
            vertices.iter().cloned(),
            reps.iter().map(|(id, k)| {
                let last = k.1.len() - 1;
                Edge::new(
                    id.clone(),
                    pair.edge(k, 0).source.clone(),
                    pair.edge(k, last).target.clone(),
                )
            }),
        )?;
        // graph edges are sorted by id; map orbit number -> edge index
        let index_of_orbit: Vec<usize> = reps
            .iter()
            .map(|(id, _)| {
                graph
                    .edges()
                    .binary_search_by(|e| e.id.cmp(id))
                    .expect("edge present")
            })
            .collect();
        let mut orbit_of_index = vec![0; reps.len()];
        for (orbit, &idx) in index_of_orbit.iter().enumerate() {
            orbit_of_index[idx] = orbit;
        }
        let mut left = Vec::with_capacity(reps.len());
        let mut right = Vec::with_capacity(reps.len());
        for &orbit in &orbit_of_index {
            let k = reps[orbit].1;
            let e = graph.edges()[index_of_orbit[orbit]].clone();
            left.push(
                pair.group_at(&e.source)
                    .elements()
                    .map(|g| index_of_orbit[self.orbit_of[&pair.act_left_end(k, g)]])
                    .collect(),
            );
            right.push(
                pair.group_at(&e.target)
                    .elements()
                    .map(|h| index_of_orbit[self.orbit_of[&pair.act_right_end(k, h)]])
                    .collect(),
            );
        }
        let groups = vertices
            .iter()
            .map(|v| (v.clone(), pair.group_at(v).clone()))
            .collect();
        BimodularGraph::from_tables(graph, groups, left, right)
    }
}

fn keys_of_paths(f: &BimodularGraph, g: &BimodularGraph) -> Result<Vec<PathKey>> {
    let paths = alternating_paths(&f.graph, &g.graph)?;
    Ok(paths
        .iter()
        .map(|p| {
            let side = p.steps()[0].side;
            let edges = p
                .steps()
                .iter()
                .map(|s| {
                    let owner = if s.side == Side::Left { f } else { g };
                    owner
                        .edge_index(&s.edge)
                        .expect("path edge belongs to its graph")
                })
                .collect();
            (side, edges)
        })
        .collect())
}

/// Length-two composition: `F`-edge then `G`-edge through a shared vertex,
/// up to the identification by the middle group.
pub fn bimod_compose2(f: &BimodularGraph, g: &BimodularGraph) -> Result<BimodularGraph> {
    check_compatible(f, g)?;
    let pair = Pair { f, g };
    let mut paths = Vec::new();
    for (i, e) in f.graph.edges().iter().enumerate() {
        if !g.graph.contains_vertex(&e.target) {
            continue;
        }
        for (j, _) in g
            .graph
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, x)| x.source == e.target)
        {
            paths.push((Side::Left, vec![i, j]));
        }
    }
    let orbits = Orbits::compute(&pair, paths)?;
    let vertices = f
        .graph
        .vertices()
        .union(g.graph.vertices())
        .cloned()
        .collect();
    orbits.quotient(&pair, vertices)
}

/// Execution: alternating paths between boundary vertices, up to the
/// identification at every junction.
pub fn bimod_execute(f: &BimodularGraph, g: &BimodularGraph) -> Result<BimodularGraph> {
    check_compatible(f, g)?;
    let pair = Pair { f, g };
    let orbits = Orbits::compute(&pair, keys_of_paths(f, g)?)?;
    let vertices = f
        .graph
        .vertices()
        .symmetric_difference(g.graph.vertices())
        .cloned()
        .collect();
    orbits.quotient(&pair, vertices)
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WellDefinedReport {
    pub paths: usize,
    pub orbits: usize,
    /// Junction identifications that left the computed orbit.
    pub junction_violations: usize,
    /// End actions whose result depends on the chosen representative.
    pub descent_violations: usize,
}

impl WellDefinedReport {
    pub fn holds(&self) -> bool {
        self.junction_violations == 0 && self.descent_violations == 0
    }
}

/// Exhaustively checks that the quotient in [`bimod_execute`] does not
/// depend on representatives.
pub fn check_well_defined(f: &BimodularGraph, g: &BimodularGraph) -> Result<WellDefinedReport> {
    check_compatible(f, g)?;
    let pair = Pair { f, g };
    let orbits = Orbits::compute(&pair, keys_of_paths(f, g)?)?;
    let mut report = WellDefinedReport {
        paths: orbits.paths.len(),
        orbits: orbits.representatives.len(),
        ..Default::default()
    };
    for p in &orbits.paths {
        let home = orbits.orbit_of[p];
        for i in 0..p.1.len() - 1 {
            for b in pair.junction_group(p, i).elements() {
                if orbits.orbit_of.get(&pair.act_at_junction(p, i, b)) != Some(&home) {
                    report.junction_violations += 1;
                }
            }
        }
        let rep = &orbits.representatives[home];
        let last = p.1.len() - 1;
        for g_ in pair.group_at(&pair.edge(p, 0).source).elements() {
            if orbits.orbit_of.get(&pair.act_left_end(p, g_))
                != orbits.orbit_of.get(&pair.act_left_end(rep, g_))
            {
                report.descent_violations += 1;
            }
        }
        for h in pair.group_at(&pair.edge(p, last).target).elements() {
            if orbits.orbit_of.get(&pair.act_right_end(p, h))
                != orbits.orbit_of.get(&pair.act_right_end(rep, h))
            {
                report.descent_violations += 1;
            }
        }
    }
    Ok(report)
}
