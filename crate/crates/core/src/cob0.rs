//! The cobordism category `Cob0`, combinatorially.
//!
//! A 1-dimensional cobordism between finite point sets is determined up to
//! diffeomorphism by how its segments pair up the boundary points and by how
//! many closed circles it has. Gluing chases chains of segments through the
//! shared boundary; chains that close up become new circles.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::int::Port;

/// A finite set of point labels.
pub type Cob0Object = BTreeSet<String>;

pub fn object<S: AsRef<str>>(labels: impl IntoIterator<Item = S>) -> Cob0Object {
    labels.into_iter().map(|s| s.as_ref().to_owned()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cob0Morphism {
    source: Cob0Object,
    target: Cob0Object,
    partner: BTreeMap<Port, Port>,
    circles: u64,
}

/// Which factor of a composite a segment comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    First,
    Second,
}

/// A segment of one factor, traversed `from -> to` (ports in that factor's
/// own coordinates).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub part: Part,
    pub from: Port,
    pub to: Port,
}

/// The alternating chain of segments realizing one composite segment.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlternatingDecomposition {
    pub segments: Vec<Segment>,
}

impl AlternatingDecomposition {
    pub fn tags(&self) -> Vec<Part> {
        self.segments.iter().map(|s| s.part).collect()
    }

    pub fn alternates(&self) -> bool {
        self.segments.windows(2).all(|w| w[0].part != w[1].part)
    }
}

fn boundary(source: &Cob0Object, target: &Cob0Object) -> BTreeSet<Port> {
    source
        .iter()
        .cloned()
        .map(Port::Dom)
        .chain(target.iter().cloned().map(Port::Cod))
        .collect()
}

impl Cob0Morphism {
    pub fn new(
        source: Cob0Object,
        target: Cob0Object,
        pairs: impl IntoIterator<Item = (Port, Port)>,
        circles: u64,
    ) -> Result<Self> {
        let points = boundary(&source, &target);
        let mut partner = BTreeMap::new();
        for (x, y) in pairs {
            if x == y {
                return Err(Error::InvalidMatching(format!(
                    "segment from {x} to itself"
                )));
            }
            for p in [&x, &y] {
                if !points.contains(p) {
                    return Err(Error::InvalidMatching(format!(
                        "{p} is not a boundary point"
                    )));
                }
                if partner.contains_key(p) {
                    return Err(Error::InvalidMatching(format!("{p} is paired twice")));
                }
            }
            partner.insert(x.clone(), y.clone());
            partner.insert(y, x);
        }
        if let Some(p) = points.iter().find(|p| !partner.contains_key(*p)) {
            return Err(Error::InvalidMatching(format!("{p} is not paired")));
        }
        Ok(Cob0Morphism {
            source,
            target,
            partner,
            circles,
        })
    }

    /// Straight segments `L:a -- R:a`, no circles.
    pub fn identity(object: &Cob0Object) -> Self {
        let pairs = object
            .iter()
            .map(|a| (Port::Dom(a.clone()), Port::Cod(a.clone())));
        Cob0Morphism::new(object.clone(), object.clone(), pairs, 0)
            .expect("identity is a perfect matching")
    }

    pub fn source(&self) -> &Cob0Object {
        &self.source
    }

    pub fn target(&self) -> &Cob0Object {
        &self.target
    }

    pub fn circles(&self) -> u64 {
        self.circles
    }

    pub fn with_circles(&self, circles: u64) -> Self {
        Cob0Morphism {
            circles,
            ..self.clone()
        }
    }

    pub fn partner(&self, p: &Port) -> Option<&Port> {
        self.partner.get(p)
    }

    /// Each segment once, as `(x, y)` with `x < y`.
    pub fn pairs(&self) -> Vec<(Port, Port)> {
        self.partner
            .iter()
            .filter(|(x, y)| x < y)
            .map(|(x, y)| (x.clone(), y.clone()))
            .collect()
    }

    fn factor<'a>(&'a self, next: &'a Cob0Morphism, part: Part) -> &'a Cob0Morphism {
        match part {
            Part::First => self,
            Part::Second => next,
        }
    }

    /// Follows segments from `start` until leaving through the outer
    /// boundary, or until coming back to `start` on a closed chain.
    fn chase(&self, next: &Cob0Morphism, start: (Part, Port)) -> (Vec<Segment>, Option<Port>) {
        let mut segments = Vec::new();
        let mut cur = start.clone();
        loop {
            let to = self.factor(next, cur.0).partner[&cur.1].clone();
            segments.push(Segment {
                part: cur.0,
                from: cur.1.clone(),
                to: to.clone(),
            });
            cur = match (cur.0, to) {
                (Part::First, Port::Dom(a)) => return (segments, Some(Port::Dom(a))),
                (Part::Second, Port::Cod(c)) => return (segments, Some(Port::Cod(c))),
                (Part::First, Port::Cod(b)) => (Part::Second, Port::Dom(b)),
                (Part::Second, Port::Dom(b)) => (Part::First, Port::Cod(b)),
            };
            if cur == start {
                return (segments, None);
            }
        }
    }

    fn check_composable(&self, next: &Cob0Morphism) -> Result<()> {
        if self.target == next.source {
            Ok(())
        } else {
            Err(Error::InterfaceMismatch(format!(
                "target {{{}}} does not match source {{{}}}",
                self.target.iter().cloned().collect::<Vec<_>>().join(" "),
                next.source.iter().cloned().collect::<Vec<_>>().join(" ")
            )))
        }
    }

    /// Number of closed chains created by gluing along the shared boundary.
    pub fn closed_chains(&self, next: &Cob0Morphism) -> Result<u64> {
        self.check_composable(next)?;
        let mut seen: BTreeSet<&String> = BTreeSet::new();
        // points of the middle boundary reached from the outside
        for start in self.outer_starts(next) {
            let (segments, _) = self.chase(next, start);
            for s in segments.iter().filter(|s| s.part == Part::First) {
                for p in [&s.from, &s.to] {
                    if let Port::Cod(b) = p {
                        seen.insert(self.target.get(b).expect("middle point"));
                    }
                }
            }
        }
        let mut closed = 0;
        for b in &self.target {
            if seen.contains(b) {
                continue;
            }
            let (segments, end) = self.chase(next, (Part::First, Port::Cod(b.clone())));
            debug_assert!(end.is_none());
            for s in segments.iter().filter(|s| s.part == Part::First) {
                for p in [&s.from, &s.to] {
                    if let Port::Cod(x) = p {
                        seen.insert(self.target.get(x).expect("middle point"));
                    }
                }
            }
            closed += 1;
        }
        Ok(closed)
    }

    fn outer_starts(&self, next: &Cob0Morphism) -> Vec<(Part, Port)> {
        self.source
            .iter()
            .map(|a| (Part::First, Port::Dom(a.clone())))
            .chain(
                next.target
                    .iter()
                    .map(|c| (Part::Second, Port::Cod(c.clone()))),
            )
            .collect()
    }

    /// Gluing along the shared boundary.
    pub fn compose(&self, next: &Cob0Morphism) -> Result<Cob0Morphism> {
        self.check_composable(next)?;
        let mut pairs = Vec::new();
        for start in self.outer_starts(next) {
            let from = start.1.clone();
            let (_, end) = self.chase(next, start);
            let to = end.expect("chains from the outer boundary leave through it");
            if from < to {
                pairs.push((from, to));
            }
        }
        let created = self.closed_chains(next)?;
        Cob0Morphism::new(
            self.source.clone(),
            next.target.clone(),
            pairs,
            self.circles + next.circles + created,
        )
    }

    /// The chain of segments of `self` and `next` realizing the composite
    /// segment `{x, y}`, read from `x`.
    pub fn decompose_segment(
        &self,
        next: &Cob0Morphism,
        pair: (&Port, &Port),
    ) -> Result<AlternatingDecomposition> {
        let composite = self.compose(next)?;
        let (x, y) = pair;
        if composite.partner(x) != Some(y) {
            return Err(Error::NotAComposite(format!(
                "{{{x}, {y}}} is not a segment of the composite"
            )));
        }
        let start = match x {
            Port::Dom(_) => (Part::First, x.clone()),
            Port::Cod(_) => (Part::Second, x.clone()),
        };
        let (segments, end) = self.chase(next, start);
        debug_assert_eq!(end.as_ref(), Some(y));
        Ok(AlternatingDecomposition { segments })
    }

    /// Every morphism `source -> target` with at most `max_circles` circles.
    pub fn enumerate(
        source: &Cob0Object,
        target: &Cob0Object,
        max_circles: u64,
    ) -> Vec<Cob0Morphism> {
        let points: Vec<Port> = boundary(source, target).into_iter().collect();
        if points.len() % 2 == 1 {
            return Vec::new();
        }
        let mut matchings = Vec::new();
        perfect_matchings(&points, &mut Vec::new(), &mut matchings);
        matchings
            .into_iter()
            .flat_map(|pairs| {
                (0..=max_circles).map(move |n| {
                    Cob0Morphism::new(source.clone(), target.clone(), pairs.clone(), n)
                        .expect("enumerated matching is perfect")
                })
            })
            .collect()
    }
}

fn perfect_matchings(
    rest: &[Port],
    current: &mut Vec<(Port, Port)>,
    out: &mut Vec<Vec<(Port, Port)>>,
) {
    let Some((first, tail)) = rest.split_first() else {
        out.push(current.clone());
        return;
    };
    for i in 0..tail.len() {
        current.push((first.clone(), tail[i].clone()));
        let remaining: Vec<Port> = tail[..i].iter().chain(&tail[i + 1..]).cloned().collect();
        perfect_matchings(&remaining, current, out);
        current.pop();
    }
}
