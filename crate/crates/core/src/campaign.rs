//! Seeded random and exhaustive verification campaigns.
//!
//! Every random trial draws from its own ChaCha stream keyed by
//! `(seed, trial index)`, so results do not depend on scheduling and trials
//! run in parallel. Reports aggregate in trial order.

use std::collections::BTreeMap;
use std::fmt::{self, Write};
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::alternating::Orientation;
use crate::bimodular::{bimod_execute, check_well_defined, BimodularGraph, FiniteGroup};
use crate::cob0::{Cob0Morphism, Cob0Object};
use crate::error::{Error, Result};
use crate::execution::{check_associativity, check_trefoil, execute};
use crate::format::{write_bimodular, write_cob, write_graph};
use crate::functor::{check_faithfulness, check_functoriality};
use crate::graph::{Edge, EdgeId, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Assoc,
    Trefoil,
    Cob0Laws,
    Functor,
    Faithful,
    BimodDegeneracy,
    BimodWellDefined,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::Assoc,
        Property::Trefoil,
        Property::Cob0Laws,
        Property::Functor,
        Property::Faithful,
        Property::BimodDegeneracy,
        Property::BimodWellDefined,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Assoc => "assoc",
            Property::Trefoil => "trefoil",
            Property::Cob0Laws => "cob0-laws",
            Property::Functor => "functor",
            Property::Faithful => "faithful",
            Property::BimodDegeneracy => "bimod-degeneracy",
            Property::BimodWellDefined => "bimod-well-defined",
        }
    }

    /// Default sizes for this property's campaign.
    pub fn default_config(self) -> Config {
        let base = Config::default();
        match self {
            Property::Cob0Laws => Config {
                exhaustive_bound: 3,
                max_circles: 1,
                ..base
            },
            Property::Functor => Config {
                exhaustive_bound: 3,
                max_circles: 2,
                ..base
            },
            Property::Faithful => Config {
                exhaustive_bound: 6,
                max_circles: 2,
                ..base
            },
            Property::BimodDegeneracy => Config {
                trials: 500,
                ..base
            },
            Property::BimodWellDefined => Config {
                trials: 500,
                max_vertices: 4,
                max_edges: 6,
                ..base
            },
            Property::Assoc | Property::Trefoil => base,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    pub trials: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Largest object size (or, for faithfulness, largest `|A| + |B|`).
    pub exhaustive_bound: usize,
    pub max_circles: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            trials: 1000,
            max_vertices: 8,
            max_edges: 8,
            exhaustive_bound: 3,
            max_circles: 1,
        }
    }
}

/// Result of one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The instance hit an infinite path or cycle set.
    Skip,
    /// Violation, with the replayable instance and a description.
    Fail {
        instance: String,
        detail: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub property: Property,
    pub trials: usize,
    pub skipped: usize,
    pub failures: usize,
    /// The first failing instance, in the instance file formats.
    pub counterexample: Option<String>,
    pub detail: Option<String>,
    /// Extra named statistics, printed in order.
    pub stats: Vec<(String, String)>,
}

impl Report {
    fn from_outcomes(property: Property, outcomes: Vec<Outcome>) -> Self {
        let mut report = Report {
            property,
            trials: outcomes.len(),
            skipped: 0,
            failures: 0,
            counterexample: None,
            detail: None,
            stats: Vec::new(),
        };
        for o in outcomes {
            match o {
                Outcome::Pass => {}
                Outcome::Skip => report.skipped += 1,
                Outcome::Fail { instance, detail } => {
                    report.failures += 1;
                    if report.counterexample.is_none() {
                        report.counterexample = Some(instance);
                        report.detail = Some(detail);
                    }
                }
            }
        }
        report
    }

    pub fn checked(&self) -> usize {
        self.trials - self.skipped
    }

    pub fn verdict(&self) -> Verdict {
        if self.failures == 0 {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn skip_rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.skipped as f64 / self.trials as f64
        }
    }

    pub fn stat(&self, key: &str) -> Option<&str> {
        self.stats
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "property: {}", self.property).unwrap();
        writeln!(out, "trials:   {}", self.trials).unwrap();
        writeln!(out, "checked:  {}", self.checked()).unwrap();
        writeln!(
            out,
            "skipped:  {} ({:.1}%)",
            self.skipped,
            100.0 * self.skip_rate()
        )
        .unwrap();
        for (k, v) in &self.stats {
            writeln!(out, "{k}: {v}").unwrap();
        }
        writeln!(out, "failures: {}", self.failures).unwrap();
        writeln!(
            out,
            "verdict:  {}",
            if self.verdict() == Verdict::Pass {
                "PASS"
            } else {
                "FAIL"
            }
        )
        .unwrap();
        if let (Some(inst), Some(detail)) = (&self.counterexample, &self.detail) {
            writeln!(out, "# counterexample: {detail}").unwrap();
            out.push_str(inst);
        }
        out
    }

    /// One `key=value` per line.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        writeln!(out, "property={}", self.property).unwrap();
        writeln!(out, "trials={}", self.trials).unwrap();
        writeln!(out, "checked={}", self.checked()).unwrap();
        writeln!(out, "skipped={}", self.skipped).unwrap();
        for (k, v) in &self.stats {
            writeln!(out, "{k}={v}").unwrap();
        }
        writeln!(out, "failures={}", self.failures).unwrap();
        writeln!(
            out,
            "verdict={}",
            if self.verdict() == Verdict::Pass {
                "pass"
            } else {
                "fail"
            }
        )
        .unwrap();
        if let Some(detail) = &self.detail {
            writeln!(out, "detail={detail}").unwrap();
        }
        out
    }
}

/// The generator for trial `index` of a campaign seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Three graphs over a shared vertex universe in which no vertex belongs to
/// all three. Edge ids are `f<i>`, `g<i>`, `h<i>`.
pub fn random_triple(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    max_edges: usize,
) -> [Graph<String>; 3] {
    const MEMBERSHIPS: [[bool; 3]; 6] = [
        [true, false, false],
        [false, true, false],
        [false, false, true],
        [true, true, false],
        [false, true, true],
        [true, false, true],
    ];
    let n = rng.random_range(1..=max_vertices.max(1));
    let membership: Vec<[bool; 3]> = (0..n)
        .map(|_| MEMBERSHIPS[rng.random_range(0..MEMBERSHIPS.len())])
        .collect();
    ["f", "g", "h"]
        .iter()
        .enumerate()
        .map(|(k, prefix)| {
            let vs: Vec<String> = (0..n)
                .filter(|&v| membership[v][k])
                .map(|v| format!("v{v}"))
                .collect();
            random_edges(rng, &vs, max_edges, prefix)
        })
        .collect::<Vec<_>>()
        .try_into()
        .expect("three graphs")
}

fn random_edges(
    rng: &mut ChaCha8Rng,
    vertices: &[String],
    max_edges: usize,
    prefix: &str,
) -> Graph<String> {
    let m = if vertices.is_empty() {
        0
    } else {
        rng.random_range(0..=max_edges)
    };
    let edges: Vec<Edge<String>> = (0..m)
        .map(|i| {
            let s = vertices[rng.random_range(0..vertices.len())].clone();
            let t = vertices[rng.random_range(0..vertices.len())].clone();
            Edge::new(EdgeId::atom(format!("{prefix}{i}")), s, t)
        })
        .collect();
    Graph::new(vertices.iter().cloned(), edges).expect("generated graph is valid")
}

/// Two graphs over at most `max_vertices` vertices, each vertex in one or
/// both graphs.
pub fn random_pair(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    max_edges: usize,
) -> [Graph<String>; 2] {
    let n = rng.random_range(1..=max_vertices.max(1));
    let membership: Vec<u8> = (0..n).map(|_| rng.random_range(0..3u8)).collect();
    let side = |k: u8| -> Vec<String> {
        (0..n)
            .filter(|&v| membership[v] == k || membership[v] == 2)
            .map(|v| format!("v{v}"))
            .collect()
    };
    let (left, right) = (side(0), side(1));
    [
        random_edges(rng, &left, max_edges, "g"),
        random_edges(rng, &right, max_edges, "h"),
    ]
}

fn triple_instance(graphs: &[&Graph<String>]) -> String {
    graphs
        .iter()
        .zip(["F", "G", "H"])
        .map(|(g, name)| write_graph(name, g))
        .collect::<Vec<_>>()
        .join("\n")
}

fn classify<T>(
    result: Result<T>,
    instance: impl FnOnce() -> String,
    ok: impl FnOnce(T) -> Option<String>,
) -> Outcome {
    match result {
        Ok(value) => match ok(value) {
            None => Outcome::Pass,
            Some(detail) => Outcome::Fail {
                instance: instance(),
                detail,
            },
        },
        Err(e) if e.is_infinite() => Outcome::Skip,
        Err(e) => Outcome::Fail {
            instance: instance(),
            detail: e.to_string(),
        },
    }
}

pub fn assoc_instance(f: &Graph<String>, g: &Graph<String>, h: &Graph<String>) -> Outcome {
    classify(
        check_associativity(f, g, h),
        || triple_instance(&[f, g, h]),
        |r| {
            (!r.holds()).then(|| {
                format!(
                    "(F::G)::H has {} edges, F::(G::H) has {}",
                    r.left_nested.edges().len(),
                    r.right_nested.edges().len()
                )
            })
        },
    )
}

pub fn trefoil_instance(f: &Graph<String>, g: &Graph<String>, h: &Graph<String>) -> Outcome {
    classify(
        check_trefoil(f, g, h, Orientation::Directed),
        || triple_instance(&[f, g, h]),
        |r| (!r.holds()).then(|| format!("cycle counts {r}")),
    )
}

fn run_random<F>(property: Property, cfg: &Config, trial: F) -> Report
where
    F: Fn(&mut ChaCha8Rng) -> Outcome + Sync,
{
    let outcomes: Vec<Outcome> = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|i| trial(&mut trial_rng(cfg.seed, i)))
        .collect();
    Report::from_outcomes(property, outcomes)
}

/// Point set `{p1, .., pk}`; objects of equal size coincide.
pub fn standard_object(size: usize) -> Cob0Object {
    (1..=size).map(|i| format!("p{i}")).collect()
}

fn homs(bound: usize, max_circles: u64) -> BTreeMap<(usize, usize), Vec<Cob0Morphism>> {
    let mut out = BTreeMap::new();
    for a in 0..=bound {
        for b in 0..=bound {
            out.insert(
                (a, b),
                Cob0Morphism::enumerate(&standard_object(a), &standard_object(b), max_circles),
            );
        }
    }
    out
}

fn cob_instance(ms: &[&Cob0Morphism]) -> String {
    ms.iter()
        .zip(["M", "N", "P"])
        .map(|(m, name)| write_cob(name, m))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn cob0_laws_instance(m: &Cob0Morphism, n: &Cob0Morphism, p: &Cob0Morphism) -> Outcome {
    let result = (|| -> Result<Option<String>> {
        let lhs = m.compose(n)?.compose(p)?;
        let rhs = m.compose(&n.compose(p)?)?;
        if lhs != rhs {
            return Ok(Some("(M;N);P differs from M;(N;P)".into()));
        }
        Ok(None)
    })();
    classify(result, || cob_instance(&[m, n, p]), |x| x)
}

fn unit_instance(m: &Cob0Morphism) -> Outcome {
    let result = (|| -> Result<Option<String>> {
        let right = m.compose(&Cob0Morphism::identity(m.target()))?;
        let left = Cob0Morphism::identity(m.source()).compose(m)?;
        Ok((right != *m || left != *m).then(|| "identity law fails".to_owned()))
    })();
    classify(result, || cob_instance(&[m]), |x| x)
}

fn cob0_laws(cfg: &Config) -> Report {
    let homs = homs(cfg.exhaustive_bound, cfg.max_circles);
    let k = cfg.exhaustive_bound + 1;
    let quads: Vec<[usize; 4]> = (0..k * k * k * k)
        .map(|i| [i / (k * k * k), i / (k * k) % k, i / k % k, i % k])
        .collect();
    let mut outcomes: Vec<Outcome> = quads
        .par_iter()
        .flat_map_iter(|[a, b, c, d]| {
            let (ms, ns, ps) = (&homs[&(*a, *b)], &homs[&(*b, *c)], &homs[&(*c, *d)]);
            ms.iter()
                .flat_map(move |m| {
                    ns.iter()
                        .flat_map(move |n| ps.iter().map(move |p| cob0_laws_instance(m, n, p)))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let triples = outcomes.len();
    outcomes.extend(homs.values().flatten().map(unit_instance));
    let mut report = Report::from_outcomes(Property::Cob0Laws, outcomes);
    report
        .stats
        .push(("composable_triples".into(), triples.to_string()));
    report.stats.push((
        "morphisms".into(),
        homs.values().map(Vec::len).sum::<usize>().to_string(),
    ));
    report
}

pub fn functor_instance(m: &Cob0Morphism, n: &Cob0Morphism) -> Outcome {
    classify(
        check_functoriality(m, n),
        || cob_instance(&[m, n]),
        |r| {
            if !r.graphs_agree() {
                Some("image of the composite differs from the composite of images".into())
            } else if !r.wagers_agree() {
                Some(format!(
                    "circles {} != {} + {} + {}",
                    r.composite_circles, r.first_circles, r.second_circles, r.measure_unoriented
                ))
            } else if !r.directed_is_double() {
                Some(format!(
                    "directed measure {} is not twice the unoriented measure {}",
                    r.measure_directed, r.measure_unoriented
                ))
            } else {
                None
            }
        },
    )
}

fn functor(cfg: &Config) -> Report {
    let homs = homs(cfg.exhaustive_bound, cfg.max_circles);
    let pairs: Vec<(&Cob0Morphism, &Cob0Morphism)> = homs
        .iter()
        .flat_map(|(&(_, b), ms)| {
            let homs = &homs;
            ms.iter().flat_map(move |m| {
                (0..=cfg.exhaustive_bound)
                    .flat_map(move |c| homs[&(b, c)].iter().map(move |n| (m, n)))
            })
        })
        .collect();
    let checked: Vec<(Outcome, bool)> = pairs
        .par_iter()
        .map(|(m, n)| {
            let disagree = check_functoriality(m, n)
                .map(|r| r.orientations_disagree())
                .unwrap_or(false);
            (functor_instance(m, n), disagree)
        })
        .collect();
    let disagreements = checked.iter().filter(|(_, d)| *d).count();
    let mut report = Report::from_outcomes(
        Property::Functor,
        checked.into_iter().map(|(o, _)| o).collect(),
    );
    report.stats.push((
        "orientation_disagreements".into(),
        disagreements.to_string(),
    ));
    report
}

fn faithful(cfg: &Config) -> Report {
    let bound = cfg.exhaustive_bound;
    let splits: Vec<(usize, usize)> = (0..=bound)
        .flat_map(|a| (0..=bound - a).map(move |b| (a, b)))
        .collect();
    let mut outcomes = Vec::new();
    let mut stats = Vec::new();
    for &(a, b) in &splits {
        let source: Cob0Object = (1..=a).map(|i| format!("a{i}")).collect();
        let target: Cob0Object = (1..=b).map(|i| format!("b{i}")).collect();
        let r = check_faithfulness(&source, &target, cfg.max_circles);
        let needs_witness = cfg.max_circles >= 1 && r.hom_size > 0;
        let outcome = if !r.injective() {
            Outcome::Fail {
                instance: format!("# hom-set {a} -> {b}\n"),
                detail: format!(
                    "{} morphisms but {} distinct images",
                    r.hom_size, r.distinct_images
                ),
            }
        } else if needs_witness && r.plain_witness.is_none() {
            Outcome::Fail {
                instance: format!("# hom-set {a} -> {b}\n"),
                detail: "no pair identified by the bare fundamental graph".into(),
            }
        } else {
            Outcome::Pass
        };
        outcomes.push(outcome);
        if r.hom_size > 0 {
            stats.push((format!("images_{a}+{b}"), r.distinct_images.to_string()));
        }
    }
    let mut report = Report::from_outcomes(Property::Faithful, outcomes);
    report.stats = stats;
    report
}

fn bimod_pair_instance(f: &BimodularGraph, g: &BimodularGraph) -> String {
    format!("{}\n{}", write_bimodular("F", f), write_bimodular("G", g))
}

pub fn bimod_degeneracy_instance(f: &Graph<String>, g: &Graph<String>) -> Outcome {
    let (bf, bg) = (
        BimodularGraph::trivial(f.clone()),
        BimodularGraph::trivial(g.clone()),
    );
    let result = (|| -> Result<bool> { Ok(bimod_execute(&bf, &bg)?.graph() == &execute(f, g)?) })();
    classify(
        result,
        || bimod_pair_instance(&bf, &bg),
        |same| (!same).then(|| "quotient differs from plain execution".into()),
    )
}

pub fn bimod_well_defined_instance(f: &BimodularGraph, g: &BimodularGraph) -> Outcome {
    classify(
        check_well_defined(f, g),
        || bimod_pair_instance(f, g),
        |r| {
            (!r.holds()).then(|| {
                format!(
                    "{} junction and {} descent violations",
                    r.junction_violations, r.descent_violations
                )
            })
        },
    )
}

/// Small groups: trivial, Z2, Z3, Z4 and the Klein group.
fn random_group(rng: &mut ChaCha8Rng) -> FiniteGroup {
    match rng.random_range(0..5) {
        0 => FiniteGroup::trivial(),
        1 => FiniteGroup::cyclic(2),
        2 => FiniteGroup::cyclic(3),
        3 => FiniteGroup::cyclic(4),
        _ => FiniteGroup::klein_four(),
    }
}

/// A random bimodular graph whose edge sets are unions of fixed points,
/// regular left orbits, regular right orbits and regular two-sided orbits.
fn random_bimodular(
    rng: &mut ChaCha8Rng,
    vertices: &[String],
    groups: &BTreeMap<String, FiniteGroup>,
    max_edges: usize,
    prefix: &str,
) -> BimodularGraph {
    // per edge: (id, source, target, left images by element, right images by element) in local numbering
    type Planned = (String, String, String, Vec<usize>, Vec<usize>);
    let mut planned: Vec<Planned> = Vec::new();
    let budget = if vertices.is_empty() {
        0
    } else {
        rng.random_range(0..=max_edges)
    };
    while planned.len() < budget {
        let s = vertices[rng.random_range(0..vertices.len())].clone();
        let t = vertices[rng.random_range(0..vertices.len())].clone();
        let (gs, gt) = (&groups[&s], &groups[&t]);
        let room = budget - planned.len();
        let kind = rng.random_range(0..4);
        let (nl, nr) = match kind {
            1 if gs.order() <= room => (gs.order(), 1),
            2 if gt.order() <= room => (1, gt.order()),
            3 if gs.order() * gt.order() <= room => (gs.order(), gt.order()),
            _ => (1, 1),
        };
        let base = planned.len();
        let at = |i: usize, j: usize| base + i * nr + j;
        for i in 0..nl {
            for j in 0..nr {
                let left = gs
                    .elements()
                    .map(|x| {
                        if nl == 1 {
                            at(i, j)
                        } else {
                            at(gs.mul(x, i), j)
                        }
                    })
                    .collect();
                let right = gt
                    .elements()
                    .map(|y| {
                        if nr == 1 {
                            at(i, j)
                        } else {
                            at(i, gt.mul(j, y))
                        }
                    })
                    .collect();
                planned.push((
                    format!("{prefix}{}", at(i, j)),
                    s.clone(),
                    t.clone(),
                    left,
                    right,
                ));
            }
        }
    }
    let graph = Graph::new(
        vertices.iter().cloned(),
        planned
            .iter()
            .map(|(id, s, t, _, _)| Edge::new(EdgeId::atom(id.clone()), s.clone(), t.clone())),
    )
    .expect("generated graph is valid");
    let index: Vec<usize> = planned
        .iter()
        .map(|(id, ..)| {
            graph
                .edges()
                .binary_search_by(|e| e.id.cmp(&EdgeId::atom(id.clone())))
                .expect("edge present")
        })
        .collect();
    let mut left = vec![Vec::new(); planned.len()];
    let mut right = vec![Vec::new(); planned.len()];
    for (k, (_, _, _, l, r)) in planned.iter().enumerate() {
        left[index[k]] = l.iter().map(|&x| index[x]).collect();
        right[index[k]] = r.iter().map(|&x| index[x]).collect();
    }
    let groups = vertices
        .iter()
        .map(|v| (v.clone(), groups[v].clone()))
        .collect();
    BimodularGraph::from_tables(graph, groups, left, right)
        .expect("regular blocks give commuting actions")
}

/// Two bimodular graphs sharing some vertices, with one group per vertex.
pub fn random_bimodular_pair(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    max_edges: usize,
) -> [BimodularGraph; 2] {
    let n = rng.random_range(1..=max_vertices.max(1));
    let membership: Vec<u8> = (0..n).map(|_| rng.random_range(0..3u8)).collect();
    let groups: BTreeMap<String, FiniteGroup> = (0..n)
        .map(|v| (format!("v{v}"), random_group(rng)))
        .collect();
    let side = |k: u8| -> Vec<String> {
        (0..n)
            .filter(|&v| membership[v] == k || membership[v] == 2)
            .map(|v| format!("v{v}"))
            .collect()
    };
    let (left, right) = (side(0), side(1));
    [
        random_bimodular(rng, &left, &groups, max_edges, "f"),
        random_bimodular(rng, &right, &groups, max_edges, "g"),
    ]
}

/// Runs the campaign for `property`.
pub fn run(property: Property, cfg: &Config) -> Report {
    match property {
        Property::Assoc => run_random(property, cfg, |rng| {
            let [f, g, h] = random_triple(rng, cfg.max_vertices, cfg.max_edges);
            assoc_instance(&f, &g, &h)
        }),
        Property::Trefoil => run_random(property, cfg, |rng| {
            let [f, g, h] = random_triple(rng, cfg.max_vertices, cfg.max_edges);
            trefoil_instance(&f, &g, &h)
        }),
        Property::Cob0Laws => cob0_laws(cfg),
        Property::Functor => functor(cfg),
        Property::Faithful => faithful(cfg),
        Property::BimodDegeneracy => run_random(property, cfg, |rng| {
            let [f, g] = random_pair(rng, cfg.max_vertices, cfg.max_edges);
            bimod_degeneracy_instance(&f, &g)
        }),
        Property::BimodWellDefined => run_random(property, cfg, |rng| {
            let [f, g] = random_bimodular_pair(rng, cfg.max_vertices, cfg.max_edges);
            bimod_well_defined_instance(&f, &g)
        }),
    }
}

/// Re-runs a property on instances read back from a counterexample file.
pub fn replay(property: Property, text: &str) -> Result<Report> {
    use crate::format::{parse_bimodular, parse_cobs, parse_graphs};
    let want = |n: usize, got: usize| {
        if n == got {
            Ok(())
        } else {
            Err(Error::PreconditionViolation(format!(
                "{property} replay needs {n} blocks, found {got}"
            )))
        }
    };
    let outcome = match property {
        Property::Assoc | Property::Trefoil | Property::BimodDegeneracy => {
            let blocks = parse_graphs(text)?;
            let graphs: Vec<&Graph<String>> = blocks.iter().map(|b| &b.graph).collect();
            match property {
                Property::Assoc => {
                    want(3, graphs.len())?;
                    assoc_instance(graphs[0], graphs[1], graphs[2])
                }
                Property::Trefoil => {
                    want(3, graphs.len())?;
                    trefoil_instance(graphs[0], graphs[1], graphs[2])
                }
                _ => {
                    want(2, graphs.len())?;
                    bimod_degeneracy_instance(graphs[0], graphs[1])
                }
            }
        }
        Property::Cob0Laws | Property::Functor => {
            let cobs = parse_cobs(text)?;
            match (property, cobs.as_slice()) {
                (Property::Functor, [(_, m), (_, n)]) => functor_instance(m, n),
                (Property::Cob0Laws, [(_, m), (_, n), (_, p)]) => cob0_laws_instance(m, n, p),
                (Property::Cob0Laws, [(_, m)]) => unit_instance(m),
                _ => {
                    return Err(Error::PreconditionViolation(format!(
                        "unexpected number of cob blocks for {property}"
                    )))
                }
            }
        }
        Property::BimodWellDefined => {
            let graphs = parse_bimodular(text)?;
            want(2, graphs.len())?;
            bimod_well_defined_instance(&graphs[0].1, &graphs[1].1)
        }
        Property::Faithful => {
            return Err(Error::PreconditionViolation(
                "faithfulness is checked on whole hom-sets; use --exhaustive-bound".into(),
            ))
        }
    };
    Ok(Report::from_outcomes(property, vec![outcome]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>(), Ok(p));
        }
        assert!("nope".parse::<Property>().is_err());
    }

    #[test]
    fn trial_streams_are_independent_of_order() {
        let a: u64 = trial_rng(7, 3).random();
        let _ = trial_rng(7, 2).random::<u64>();
        let b: u64 = trial_rng(7, 3).random();
        assert_eq!(a, b);
        assert_ne!(a, trial_rng(7, 4).random::<u64>());
    }

    #[test]
    fn random_triples_avoid_triple_intersection() {
        for i in 0..200 {
            let [f, g, h] = random_triple(&mut trial_rng(1, i), 8, 8);
            assert!(f
                .vertices()
                .iter()
                .all(|v| !(g.contains_vertex(v) && h.contains_vertex(v))));
        }
    }

    #[test]
    fn random_bimodular_pairs_are_compatible() {
        for i in 0..100 {
            let [f, g] = random_bimodular_pair(&mut trial_rng(5, i), 4, 6);
            assert!(f.graph().edges().len() <= 6 && g.graph().edges().len() <= 6);
            for v in f.graph().shared_vertices(g.graph()) {
                assert_eq!(f.group(&v), g.group(&v));
            }
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = Config {
            seed: 99,
            trials: 50,
            ..Config::default()
        };
        assert_eq!(run(Property::Assoc, &cfg), run(Property::Assoc, &cfg));
    }

    #[test]
    fn replay_counts_infinite_instances_as_skips() {
        let text = "graph F\nvertex p\nvertex q\nvertex a\nvertex b\nedge in p a\nedge x b a\nedge out b q\ngraph G\nvertex a\nvertex b\nedge y a b\ngraph H\n";
        let report = replay(Property::Assoc, text).unwrap();
        assert_eq!((report.trials, report.skipped, report.failures), (1, 1, 0));
    }

    #[test]
    fn serialized_instances_replay_to_the_same_outcome() {
        for i in 0..40 {
            let [f, g, h] = random_triple(&mut trial_rng(3, i), 5, 5);
            let r = replay(Property::Trefoil, &triple_instance(&[&f, &g, &h])).unwrap();
            assert_eq!(
                r.skipped == 1,
                trefoil_instance(&f, &g, &h) == Outcome::Skip
            );
            let [bf, bg] = random_bimodular_pair(&mut trial_rng(3, i), 4, 6);
            let r = replay(Property::BimodWellDefined, &bimod_pair_instance(&bf, &bg)).unwrap();
            assert_eq!(
                r.skipped == 1,
                bimod_well_defined_instance(&bf, &bg) == Outcome::Skip
            );
            assert_eq!(r.failures, 0);
        }
        let m = Cob0Morphism::enumerate(&standard_object(2), &standard_object(2), 1);
        let r = replay(Property::Functor, &cob_instance(&[&m[1], &m[4]])).unwrap();
        assert_eq!((r.trials, r.failures), (1, 0));
    }
}
