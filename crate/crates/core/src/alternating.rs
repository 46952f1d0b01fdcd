//! Alternating paths and cycles between two graphs.
//!
//! Everything here goes through the derived graph: its nodes are the edges
//! of both graphs and it has an arc `e -> e'` whenever `e` ends where `e'`
//! starts and the two edges come from different graphs. Walks in the derived
//! graph are exactly the alternating paths.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, Graph, VertexId};

/// Which graph of an interacting pair an edge belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// One edge of an alternating path, tagged with its graph. Ordered by edge id
/// first so canonical forms follow the textual order of ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub edge: EdgeId,
    pub side: Side,
}

/// Whether cycle classes are taken up to rotation only, or up to rotation
/// and reversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Orientation {
    #[default]
    Directed,
    Unoriented,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Directed => "directed",
            Orientation::Unoriented => "unoriented",
        })
    }
}

impl FromStr for Orientation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "directed" => Ok(Orientation::Directed),
            "unoriented" => Ok(Orientation::Unoriented),
            _ => Err(format!(
                "unknown orientation `{s}` (expected directed|unoriented)"
            )),
        }
    }
}

/// An alternating path of length at least one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path<V> {
    steps: Vec<Step>,
    source: V,
    target: V,
}

impl<V: VertexId> Path<V> {
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn source(&self) -> &V {
        &self.source
    }

    pub fn target(&self) -> &V {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The concatenated base-edge sequence.
    pub fn flat_id(&self) -> EdgeId {
        EdgeId::concat(self.steps.iter().map(|s| &s.edge))
    }
}

/// A class of prime alternating cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleClass {
    /// A traversal of the cycle, starting at its least step.
    pub representative: Vec<Step>,
    /// Least rotation of the representative (or of its reversal, in
    /// unoriented mode, whichever is smaller).
    pub canonical: Vec<Step>,
    pub orientation: Orientation,
}

impl CycleClass {
    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }

    pub fn flat_id(&self) -> EdgeId {
        EdgeId::concat(self.canonical.iter().map(|s| &s.edge))
    }
}

/// Index of the lexicographically least rotation.
pub fn least_rotation<T: Ord>(seq: &[T]) -> usize {
    let n = seq.len();
    (0..n)
        .min_by(|&i, &j| {
            let a = seq[i..].iter().chain(&seq[..i]);
            let b = seq[j..].iter().chain(&seq[..j]);
            a.cmp(b)
        })
        .unwrap_or(0)
}

pub fn rotate<T: Clone>(seq: &[T], k: usize) -> Vec<T> {
    if seq.is_empty() {
        return Vec::new();
    }
    let k = k % seq.len();
    seq[k..].iter().chain(&seq[..k]).cloned().collect()
}

/// True when `seq` is not `rho^k` for any `k > 1`.
pub fn is_primitive<T: Eq>(seq: &[T]) -> bool {
    let n = seq.len();
    (1..n)
        .filter(|d| n.is_multiple_of(*d))
        .all(|d| (d..n).any(|i| seq[i] != seq[i - d]))
}

pub fn canonical_directed(cycle: &[Step]) -> Vec<Step> {
    rotate(cycle, least_rotation(cycle))
}

/// Canonical form up to rotation and reversal, given the reversed traversal
/// when one exists.
pub fn canonical_unoriented(cycle: &[Step], reversal: Option<&[Step]>) -> Vec<Step> {
    let forward = canonical_directed(cycle);
    match reversal {
        Some(rev) => forward.min(canonical_directed(rev)),
        None => forward,
    }
}

/// Enumeration device: nodes are the edges of both graphs.
#[derive(Debug, Clone)]
pub struct DerivedGraph<'a, V> {
    left: &'a Graph<V>,
    right: &'a Graph<V>,
    nodes: Vec<(Side, usize)>,
    succ: Vec<Vec<usize>>,
    initial: Vec<bool>,
    terminal: Vec<bool>,
}

pub fn derived_graph<'a, V: VertexId>(
    left: &'a Graph<V>,
    right: &'a Graph<V>,
) -> DerivedGraph<'a, V> {
    DerivedGraph::new(left, right)
}

impl<'a, V: VertexId> DerivedGraph<'a, V> {
    pub fn new(left: &'a Graph<V>, right: &'a Graph<V>) -> Self {
        let nodes: Vec<(Side, usize)> = (0..left.edges().len())
            .map(|i| (Side::Left, i))
            .chain((0..right.edges().len()).map(|i| (Side::Right, i)))
            .collect();
        let offset = left.edges().len();
        let index = |side: Side, i: usize| match side {
            Side::Left => i,
            Side::Right => offset + i,
        };

        let mut by_source: [BTreeMap<&V, Vec<usize>>; 2] = [BTreeMap::new(), BTreeMap::new()];
        for (side, g) in [(Side::Left, left), (Side::Right, right)] {
            for (i, e) in g.edges().iter().enumerate() {
                by_source[side as usize]
                    .entry(&e.source)
                    .or_default()
                    .push(index(side, i));
            }
        }

        let in_both = |v: &V| left.contains_vertex(v) && right.contains_vertex(v);
        let mut succ = Vec::with_capacity(nodes.len());
        let mut initial = Vec::with_capacity(nodes.len());
        let mut terminal = Vec::with_capacity(nodes.len());
        for &(side, i) in &nodes {
            let e = Self::edge_of(left, right, side, i);
            succ.push(
                by_source[side.other() as usize]
                    .get(&e.target)
                    .cloned()
                    .unwrap_or_default(),
            );
            initial.push(!in_both(&e.source));
            terminal.push(!in_both(&e.target));
        }
        DerivedGraph {
            left,
            right,
            nodes,
            succ,
            initial,
            terminal,
        }
    }

    fn edge_of(left: &'a Graph<V>, right: &'a Graph<V>, side: Side, i: usize) -> &'a Edge<V> {
        match side {
            Side::Left => &left.edges()[i],
            Side::Right => &right.edges()[i],
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge(&self, node: usize) -> &'a Edge<V> {
        let (side, i) = self.nodes[node];
        Self::edge_of(self.left, self.right, side, i)
    }

    pub fn step(&self, node: usize) -> Step {
        Step {
            edge: self.edge(node).id.clone(),
            side: self.nodes[node].0,
        }
    }

    pub fn successors(&self, node: usize) -> &[usize] {
        &self.succ[node]
    }

    pub fn is_initial(&self, node: usize) -> bool {
        self.initial[node]
    }

    pub fn is_final(&self, node: usize) -> bool {
        self.terminal[node]
    }

    /// All arcs as pairs of tagged edge ids.
    pub fn arcs(&self) -> Vec<(Step, Step)> {
        let mut out: Vec<(Step, Step)> = (0..self.node_count())
            .flat_map(|n| self.succ[n].iter().map(move |&m| (n, m)))
            .map(|(n, m)| (self.step(n), self.step(m)))
            .collect();
        out.sort();
        out
    }

    pub fn initial_steps(&self) -> Vec<Step> {
        self.marked(&self.initial)
    }

    pub fn final_steps(&self) -> Vec<Step> {
        self.marked(&self.terminal)
    }

    fn marked(&self, marks: &[bool]) -> Vec<Step> {
        let mut out: Vec<Step> = (0..self.node_count())
            .filter(|&n| marks[n])
            .map(|n| self.step(n))
            .collect();
        out.sort();
        out
    }

    /// Strongly connected components of the subgraph induced by `keep`.
    fn components(&self, keep: &[bool]) -> Vec<Vec<usize>> {
        let mut g: DiGraph<(), ()> = DiGraph::with_capacity(self.node_count(), 0);
        for _ in 0..self.node_count() {
            g.add_node(());
        }
        for n in (0..self.node_count()).filter(|&n| keep[n]) {
            for &m in self.succ[n].iter().filter(|&&m| keep[m]) {
                g.add_edge(NodeIndex::new(n), NodeIndex::new(m), ());
            }
        }
        tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c
                    .into_iter()
                    .map(NodeIndex::index)
                    .filter(|&n| keep[n])
                    .collect();
                c.sort_unstable();
                c
            })
            .filter(|c| !c.is_empty())
            .collect()
    }

    fn reach(&self, from: impl Iterator<Item = usize>, forward: bool) -> Vec<bool> {
        let mut pred = vec![Vec::new(); self.node_count()];
        if !forward {
            for n in 0..self.node_count() {
                for &m in &self.succ[n] {
                    pred[m].push(n);
                }
            }
        }
        let mut seen = vec![false; self.node_count()];
        let mut queue: VecDeque<usize> = from.collect();
        for &n in &queue {
            seen[n] = true;
        }
        while let Some(n) = queue.pop_front() {
            let next = if forward { &self.succ[n] } else { &pred[n] };
            for &m in next {
                if !seen[m] {
                    seen[m] = true;
                    queue.push_back(m);
                }
            }
        }
        seen
    }

    /// Nodes lying on some walk from an initial node to a final node.
    fn useful(&self) -> Vec<bool> {
        let fwd = self.reach((0..self.node_count()).filter(|&n| self.initial[n]), true);
        let bwd = self.reach((0..self.node_count()).filter(|&n| self.terminal[n]), false);
        fwd.iter().zip(&bwd).map(|(a, b)| *a && *b).collect()
    }

    /// A closed walk through `start` inside `component`.
    fn cycle_through(&self, start: usize, component: &BTreeSet<usize>) -> Vec<usize> {
        let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = VecDeque::from([start]);
        while let Some(n) = queue.pop_front() {
            for &m in self.succ[n].iter().filter(|m| component.contains(m)) {
                if m == start {
                    let mut cycle = vec![n];
                    let mut cur = n;
                    while cur != start {
                        cur = parent[&cur];
                        cycle.push(cur);
                    }
                    cycle.reverse();
                    return cycle;
                }
                if let std::collections::btree_map::Entry::Vacant(slot) = parent.entry(m) {
                    slot.insert(n);
                    queue.push_back(m);
                }
            }
        }
        unreachable!("node {start} is not on a cycle of its component")
    }

    /// Alternating paths with both endpoints outside the shared vertices.
    pub fn path_set(&self) -> Result<Vec<Path<V>>> {
        let useful = self.useful();
        for comp in self.components(&useful) {
            if comp.len() > 1 {
                let members: BTreeSet<usize> = comp.iter().copied().collect();
                let cycle = self.cycle_through(comp[0], &members);
                return Err(Error::InfinitePathSet {
                    witness: cycle.into_iter().map(|n| self.edge(n).id.clone()).collect(),
                });
            }
        }

        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in (0..self.node_count()).filter(|&n| self.initial[n] && useful[n]) {
            self.walk(start, &useful, &mut stack, &mut out);
        }
        out.sort_by_key(|p: &Path<V>| p.flat_id());
        Ok(out)
    }

    fn walk(&self, node: usize, useful: &[bool], stack: &mut Vec<usize>, out: &mut Vec<Path<V>>) {
        stack.push(node);
        if self.terminal[node] {
            let path = Path {
                steps: stack.iter().map(|&n| self.step(n)).collect(),
                source: self.edge(stack[0]).source.clone(),
                target: self.edge(node).target.clone(),
            };
            debug_assert!(self.is_alternating(stack));
            out.push(path);
        }
        for &m in self.succ[node].iter().filter(|&&m| useful[m]) {
            self.walk(m, useful, stack, out);
        }
        stack.pop();
    }

    fn is_alternating(&self, walk: &[usize]) -> bool {
        walk.windows(2).all(|w| {
            self.nodes[w[0]].0 != self.nodes[w[1]].0
                && self.edge(w[0]).target == self.edge(w[1]).source
        })
    }

    /// Prime alternating cycle classes.
    pub fn cycle_classes(&self, orientation: Orientation) -> Result<Vec<CycleClass>> {
        let all = vec![true; self.node_count()];
        let mut directed = Vec::new();
        for comp in self.components(&all) {
            if comp.len() < 2 {
                continue;
            }
            let members: BTreeSet<usize> = comp.iter().copied().collect();
            let inner_arcs: usize = comp
                .iter()
                .map(|&n| self.succ[n].iter().filter(|m| members.contains(m)).count())
                .sum();
            if inner_arcs > comp.len() {
                return Err(Error::InfiniteCycleSet {
                    witness: comp.iter().map(|&n| self.edge(n).id.clone()).collect(),
                });
            }
            let cycle = self.cycle_through(comp[0], &members);
            debug_assert_eq!(cycle.len(), comp.len());
            debug_assert!(self.is_alternating(&cycle));
            directed.push(cycle);
        }

        let mut classes: BTreeMap<Vec<Step>, CycleClass> = BTreeMap::new();
        for cycle in directed {
            let steps: Vec<Step> = cycle.iter().map(|&n| self.step(n)).collect();
            let representative = canonical_directed(&steps);
            let canonical = match orientation {
                Orientation::Directed => representative.clone(),
                Orientation::Unoriented => {
                    let reversal = self
                        .reversal(&cycle)
                        .map(|r| r.into_iter().map(|n| self.step(n)).collect::<Vec<_>>());
                    canonical_unoriented(&steps, reversal.as_deref())
                }
            };
            debug_assert!(is_primitive(&canonical));
            classes.entry(canonical.clone()).or_insert(CycleClass {
                representative,
                canonical,
                orientation,
            });
        }
        Ok(classes.into_values().collect())
    }

    /// Converse of a node: the k-th edge `t -> s` of the same graph for the
    /// k-th edge `s -> t` (edges between a fixed pair taken in id order).
    fn converse(&self, node: usize) -> Option<usize> {
        let (side, i) = self.nodes[node];
        let g = match side {
            Side::Left => self.left,
            Side::Right => self.right,
        };
        let e = &g.edges()[i];
        let rank = g
            .edges_between(&e.source, &e.target)
            .position(|x| x.id == e.id)?;
        let back = g.edges_between(&e.target, &e.source).nth(rank)?;
        let j = g.edges().iter().position(|x| x.id == back.id)?;
        Some(match side {
            Side::Left => j,
            Side::Right => self.left.edges().len() + j,
        })
    }

    /// The reversed traversal of a closed walk, through converse edges.
    fn reversal(&self, cycle: &[usize]) -> Option<Vec<usize>> {
        cycle.iter().rev().map(|&n| self.converse(n)).collect()
    }
}

/// Alternating paths between `left` and `right` whose source and target lie
/// in the symmetric difference of the vertex sets.
pub fn alternating_paths<V: VertexId>(left: &Graph<V>, right: &Graph<V>) -> Result<Vec<Path<V>>> {
    DerivedGraph::new(left, right).path_set()
}

/// Classes of prime alternating cycles between `left` and `right`.
pub fn prime_cycles<V: VertexId>(
    left: &Graph<V>,
    right: &Graph<V>,
    orientation: Orientation,
) -> Result<Vec<CycleClass>> {
    DerivedGraph::new(left, right).cycle_classes(orientation)
}
