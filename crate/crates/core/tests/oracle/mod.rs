//! Brute-force reference implementations, written directly from the
//! definitions and sharing no code with the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use trefoil::cob0::Cob0Morphism;
use trefoil::int::Port;
use trefoil::Graph;

/// An edge of either graph: (id, source, target, side).
type RawEdge = (String, String, String, u8);

fn raw_edges(g: &Graph<String>, h: &Graph<String>) -> Vec<RawEdge> {
    let side = |graph: &Graph<String>, k: u8| {
        graph
            .edges()
            .iter()
            .map(move |e| (e.id.to_string(), e.source.clone(), e.target.clone(), k))
            .collect::<Vec<_>>()
    };
    let mut out = side(g, 0);
    out.extend(side(h, 1));
    out
}

fn boundary(g: &Graph<String>, h: &Graph<String>) -> BTreeSet<String> {
    g.vertices()
        .symmetric_difference(h.vertices())
        .cloned()
        .collect()
}

fn follows(a: &RawEdge, b: &RawEdge) -> bool {
    a.3 != b.3 && a.2 == b.1
}

#[derive(Debug, PartialEq, Eq)]
pub enum Paths {
    Infinite,
    /// (dotted id, source, target) of every path.
    Finite(BTreeSet<(String, String, String)>),
}

/// Paths are infinite exactly when some boundary-to-boundary alternating
/// walk is longer than the number of edges; when one exists there is also
/// one of length at most three times that bound.
pub fn paths(g: &Graph<String>, h: &Graph<String>) -> Paths {
    let edges = raw_edges(g, h);
    let delta = boundary(g, h);
    let n = edges.len();
    let mut live: Vec<bool> = edges.iter().map(|e| delta.contains(&e.1)).collect();
    for len in 1..=3 * n {
        if len > n
            && edges
                .iter()
                .zip(&live)
                .any(|(e, &l)| l && delta.contains(&e.2))
        {
            return Paths::Infinite;
        }
        live = edges
            .iter()
            .map(|b| edges.iter().zip(&live).any(|(a, &l)| l && follows(a, b)))
            .collect();
    }
    let mut found = BTreeSet::new();
    let mut stack: Vec<Vec<usize>> = (0..n)
        .filter(|&i| delta.contains(&edges[i].1))
        .map(|i| vec![i])
        .collect();
    while let Some(walk) = stack.pop() {
        let last = &edges[*walk.last().unwrap()];
        if delta.contains(&last.2) {
            let id = walk
                .iter()
                .map(|&i| edges[i].0.as_str())
                .collect::<Vec<_>>()
                .join(".");
            found.insert((id, edges[walk[0]].1.clone(), last.2.clone()));
        }
        if walk.len() < n {
            for (j, next_edge) in edges.iter().enumerate() {
                if follows(last, next_edge) {
                    let mut next = walk.clone();
                    next.push(j);
                    stack.push(next);
                }
            }
        }
    }
    Paths::Finite(found)
}

#[derive(Debug, PartialEq, Eq)]
pub enum Cycles {
    Infinite,
    /// Each simple closed alternating walk, rotated to start at its least id.
    Finite(BTreeSet<String>),
}

/// Prime cycles are infinite exactly when two distinct simple cycles share
/// an edge; otherwise they are the simple cycles.
pub fn cycles(g: &Graph<String>, h: &Graph<String>) -> Cycles {
    let edges = raw_edges(g, h);
    let n = edges.len();
    let mut simple: Vec<Vec<usize>> = Vec::new();
    fn extend(edges: &[RawEdge], start: usize, walk: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = &edges[*walk.last().unwrap()];
        if follows(last, &edges[start]) {
            out.push(walk.clone());
        }
        for j in start + 1..edges.len() {
            if !walk.contains(&j) && follows(last, &edges[j]) {
                walk.push(j);
                extend(edges, start, walk, out);
                walk.pop();
            }
        }
    }
    for s in 0..n {
        extend(&edges, s, &mut vec![s], &mut simple);
    }
    let mut uses = vec![0usize; n];
    for c in &simple {
        for &e in c {
            uses[e] += 1;
        }
    }
    if uses.iter().any(|&u| u > 1) {
        return Cycles::Infinite;
    }
    Cycles::Finite(
        simple
            .iter()
            .map(|c| {
                let ids: Vec<&str> = c.iter().map(|&i| edges[i].0.as_str()).collect();
                let k = (0..ids.len()).min_by_key(|&k| ids[k]).unwrap();
                let rotated: Vec<&str> = ids[k..].iter().chain(&ids[..k]).copied().collect();
                rotated.join(".")
            })
            .collect(),
    )
}

/// Composition by connected components of the glued point set.
/// Returns the composite's pairs (each as a sorted pair) and circle count.
pub fn glue(m: &Cob0Morphism, n: &Cob0Morphism) -> (BTreeSet<(Port, Port)>, u64) {
    // points: 0 = left of m, 1 = middle, 2 = right of n
    let mut parent: BTreeMap<(u8, String), (u8, String)> = BTreeMap::new();
    fn find(parent: &mut BTreeMap<(u8, String), (u8, String)>, x: (u8, String)) -> (u8, String) {
        let p = parent.entry(x.clone()).or_insert_with(|| x.clone()).clone();
        if p == x {
            x
        } else {
            let root = find(parent, p);
            parent.insert(x, root.clone());
            root
        }
    }
    let node = |port: &Port, offset: u8| match port {
        Port::Dom(x) => (offset, x.clone()),
        Port::Cod(x) => (offset + 1, x.clone()),
    };
    for (morphism, offset) in [(m, 0u8), (n, 1u8)] {
        for (p, q) in morphism.pairs() {
            let (a, b) = (
                find(&mut parent, node(&p, offset)),
                find(&mut parent, node(&q, offset)),
            );
            parent.insert(a, b);
        }
    }
    let all: Vec<(u8, String)> = parent.keys().cloned().collect();
    let mut components: BTreeMap<(u8, String), Vec<(u8, String)>> = BTreeMap::new();
    for x in all {
        let r = find(&mut parent, x.clone());
        components.entry(r).or_default().push(x);
    }
    let mut pairs = BTreeSet::new();
    let mut closed = 0;
    for members in components.values() {
        let outer: Vec<Port> = members
            .iter()
            .filter_map(|(k, x)| match k {
                0 => Some(Port::Dom(x.clone())),
                2 => Some(Port::Cod(x.clone())),
                _ => None,
            })
            .collect();
        match outer.as_slice() {
            [] => closed += 1,
            [p, q] => {
                pairs.insert(if p < q {
                    (p.clone(), q.clone())
                } else {
                    (q.clone(), p.clone())
                });
            }
            other => panic!("component with {} boundary points", other.len()),
        }
    }
    (pairs, m.circles() + n.circles() + closed)
}

/// (2k - 1)!!, the number of perfect matchings on 2k points.
pub fn matchings(points: usize) -> usize {
    if points % 2 == 1 {
        return 0;
    }
    (1..points).step_by(2).product()
}
