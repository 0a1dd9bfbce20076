//! Brute-force reference implementations and the graph enumeration harness
//! used for differential testing.
//!
//! Nothing here shares code paths with the decision procedure beyond the
//! graph value type: membership in 𝒮 is tested by literal backtracking over
//! vertex bitmasks, and forbidden patterns by trying every vertex ordering.
//!
//! Exhaustive runs default to the label alphabet `{2, 3}`: for membership in
//! 𝒮 and for every witness pattern only "absent", "labeled 2" and "labeled
//! more than 2" matter, so larger labels add no new cases.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::decider::{decide_lerf, find_witness, WitnessKind, WitnessPattern};
use crate::error::{Error, Result};
use crate::graph::{ArtinGraph, EdgeLabel, VertexId};
use crate::spherical::classify_irreducible;

/// Largest graph the backtracking oracles accept.
pub const ORACLE_MAX_VERTICES: usize = 12;

/// Largest number of graphs an exhaustive enumeration may produce.
pub const EXHAUSTIVE_LIMIT: u128 = 100_000_000;

/// Labels an enumeration may draw from (absence is always included).
pub const ENUM_LABELS: [u32; 4] = [2, 3, 4, 5];

fn guard(g: &ArtinGraph) -> Result<()> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if g.vertex_count() > ORACLE_MAX_VERTICES {
        return Err(Error::TooLarge {
            size: g.vertex_count(),
            limit: ORACLE_MAX_VERTICES,
        });
    }
    Ok(())
}

type Mask = u16;

fn members(mask: Mask) -> impl Iterator<Item = usize> {
    (0..16).filter(move |i| mask & (1 << i) != 0)
}

fn adjacent(g: &ArtinGraph, i: usize, j: usize) -> bool {
    g.label_at(i, j).is_some()
}

/// Splits `mask` into its connected components.
fn components(g: &ArtinGraph, mask: Mask) -> Vec<Mask> {
    let mut rest = mask;
    let mut out = Vec::new();
    while rest != 0 {
        let mut comp: Mask = rest & rest.wrapping_neg();
        loop {
            let grown = members(comp).fold(comp, |acc, i| {
                acc | members(rest)
                    .filter(|&j| adjacent(g, i, j))
                    .fold(0, |m, j| m | 1 << j)
            });
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

fn apexes(g: &ArtinGraph, mask: Mask) -> Vec<usize> {
    members(mask)
        .filter(|&u| members(mask).all(|v| v == u || g.is_two_adjacent_at(u, v)))
        .collect()
}

/// Which quantifier to apply over apex choices.
#[derive(Clone, Copy)]
enum ApexRule {
    Some,
    Every,
}

fn in_s(g: &ArtinGraph, mask: Mask, rule: ApexRule, memo: &mut HashMap<Mask, bool>) -> bool {
    if mask.count_ones() <= 2 {
        return true;
    }
    if let Some(&known) = memo.get(&mask) {
        return known;
    }
    let parts = components(g, mask);
    let answer = if parts.len() > 1 {
        parts.into_iter().all(|p| in_s(g, p, rule, memo))
    } else {
        let candidates = apexes(g, mask);
        match rule {
            ApexRule::Some => candidates
                .into_iter()
                .any(|u| in_s(g, mask & !(1 << u), rule, memo)),
            ApexRule::Every => {
                !candidates.is_empty()
                    && candidates
                        .into_iter()
                        .all(|u| in_s(g, mask & !(1 << u), rule, memo))
            }
        }
    };
    memo.insert(mask, answer);
    answer
}

fn full_mask(g: &ArtinGraph) -> Mask {
    ((1u32 << g.vertex_count()) - 1) as Mask
}

/// Membership in 𝒮 straight from the definition, trying every apex.
#[allow(non_snake_case)]
pub fn oracle_in_S(g: &ArtinGraph) -> Result<bool> {
    guard(g)?;
    Ok(in_s(g, full_mask(g), ApexRule::Some, &mut HashMap::new()))
}

/// Like [`oracle_in_S`], but every apex choice at every step must succeed.
pub fn every_apex_order_succeeds(g: &ArtinGraph) -> Result<bool> {
    guard(g)?;
    Ok(in_s(g, full_mask(g), ApexRule::Every, &mut HashMap::new()))
}

const PERMUTATIONS_OF_4: [[usize; 4]; 24] = {
    let mut out = [[0; 4]; 24];
    let mut k = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut c = 0;
            while c < 4 {
                if a != b && a != c && b != c {
                    out[k] = [a, b, c, 6 - a - b - c];
                    k += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
};

/// Least vertex ordering (lexicographically, by position) under which the
/// four positions form an induced path, resp. cycle, of `adj`.
fn least_ordering<F>(adj: F, quad: [usize; 4], closed: bool) -> Option<[usize; 4]>
where
    F: Fn(usize, usize) -> bool,
{
    PERMUTATIONS_OF_4
        .iter()
        .map(|p| p.map(|k| quad[k]))
        .filter(|o| {
            (0..4).all(|x| {
                (x + 1..4).all(|y| {
                    let consecutive = y == x + 1 || (closed && x == 0 && y == 3);
                    adj(o[x], o[y]) == consecutive
                })
            })
        })
        .min()
}

/// Every forbidden configuration in `g`: all three-vertex witnesses in
/// subset order, then every 4-subset whose 2-skeleton is a path or a square.
pub fn exhaustive_witness(g: &ArtinGraph) -> Result<Vec<WitnessPattern>> {
    guard(g)?;
    let n = g.vertex_count();
    let name = |i: usize| g.vertices()[i].clone();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let sub = g.induced_by_indices(&[a, b, c]);
                let twos = sub.edges().filter(|(_, _, m)| m.is_two()).count();
                if sub.is_connected() && twos <= 1 {
                    out.push(WitnessPattern {
                        kind: WitnessKind::ThreeVertex,
                        vertices: vec![name(a), name(b), name(c)],
                    });
                }
            }
        }
    }
    let two = |i: usize, j: usize| g.is_two_adjacent_at(i, j);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    let found = least_ordering(two, quad, false)
                        .map(|o| (WitnessKind::TwoSkeletonP4, o))
                        .or_else(|| {
                            least_ordering(two, quad, true).map(|o| (WitnessKind::TwoSkeletonC4, o))
                        });
                    if let Some((kind, order)) = found {
                        out.push(WitnessPattern {
                            kind,
                            vertices: order.iter().map(|&i| name(i)).collect(),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// No induced path of length three and no induced square in the 2-skeleton.
pub fn is_trivially_perfect(g: &ArtinGraph) -> bool {
    let n = g.vertex_count();
    let two = |i: usize, j: usize| g.is_two_adjacent_at(i, j);
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            (b + 1..n).all(|c| {
                (c + 1..n).all(|d| {
                    let quad = [a, b, c, d];
                    least_ordering(two, quad, false).is_none()
                        && least_ordering(two, quad, true).is_none()
                })
            })
        })
    })
}

/// Irreducible spherical vertex sets by scanning every subset, in
/// size-then-lexicographic order.
pub fn spherical_subsets_brute_force(g: &ArtinGraph) -> Result<Vec<Vec<VertexId>>> {
    const LIMIT: usize = 15;
    let n = g.vertex_count();
    if n > LIMIT {
        return Err(Error::TooLarge {
            size: n,
            limit: LIMIT,
        });
    }
    let mut found: Vec<Vec<usize>> = (1u32..(1 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>())
        .filter(|set| classify_irreducible(&g.induced_by_indices(set)).is_ok())
        .collect();
    found.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(found
        .into_iter()
        .map(|set| set.into_iter().map(|i| g.vertices()[i].clone()).collect())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumMode {
    Exhaustive,
    Random { samples: usize, seed: u64 },
}

/// Which labeled graphs on `v1..vn` to generate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphEnumSpec {
    pub n: usize,
    pub labels: Vec<u32>,
    pub mode: EnumMode,
}

impl GraphEnumSpec {
    pub fn exhaustive(n: usize, labels: &[u32]) -> Self {
        GraphEnumSpec {
            n,
            labels: labels.to_vec(),
            mode: EnumMode::Exhaustive,
        }
    }

    pub fn random(n: usize, labels: &[u32], samples: usize, seed: u64) -> Self {
        GraphEnumSpec {
            n,
            labels: labels.to_vec(),
            mode: EnumMode::Random { samples, seed },
        }
    }

    fn pairs(&self) -> u32 {
        (self.n * self.n.saturating_sub(1) / 2) as u32
    }

    /// Number of graphs the spec produces.
    pub fn count(&self) -> u128 {
        match self.mode {
            EnumMode::Exhaustive => (self.labels.len() as u128 + 1).saturating_pow(self.pairs()),
            EnumMode::Random { samples, .. } => samples as u128,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Enumeration("n must be at least 1".into()));
        }
        if self.labels.is_empty() {
            return Err(Error::Enumeration("label alphabet is empty".into()));
        }
        let mut seen = self.labels.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.labels.len() {
            return Err(Error::Enumeration("repeated label".into()));
        }
        if let Some(m) = self.labels.iter().find(|m| !ENUM_LABELS.contains(m)) {
            return Err(Error::Enumeration(format!("label {m} not in {{2,3,4,5}}")));
        }
        if self.mode == EnumMode::Exhaustive && self.count() > EXHAUSTIVE_LIMIT {
            return Err(Error::Enumeration(format!(
                "{} graphs exceeds the exhaustive limit of {EXHAUSTIVE_LIMIT}",
                self.count()
            )));
        }
        Ok(())
    }
}

enum Source {
    Odometer {
        digits: Vec<usize>,
        done: bool,
    },
    Random {
        rng: Box<ChaCha8Rng>,
        remaining: usize,
    },
}

/// Stream of graphs described by a [`GraphEnumSpec`].
pub struct GraphStream {
    names: Vec<VertexId>,
    pairs: Vec<(usize, usize)>,
    labels: Vec<EdgeLabel>,
    source: Source,
}

impl GraphStream {
    fn build(&self, states: impl Iterator<Item = usize>) -> ArtinGraph {
        let edges: Vec<_> = self
            .pairs
            .iter()
            .zip(states)
            .filter(|&(_, s)| s > 0)
            .map(|(&(i, j), s)| {
                (
                    self.names[i].clone(),
                    self.names[j].clone(),
                    self.labels[s - 1],
                )
            })
            .collect();
        ArtinGraph::new(self.names.iter().cloned(), edges).expect("generated graphs are valid")
    }
}

impl Iterator for GraphStream {
    type Item = ArtinGraph;

    fn next(&mut self) -> Option<ArtinGraph> {
        let base = self.labels.len() + 1;
        match &mut self.source {
            Source::Odometer { digits, done } => {
                if *done {
                    return None;
                }
                let current = digits.clone();
                // first pair turns fastest
                *done = true;
                for d in digits.iter_mut() {
                    *d += 1;
                    if *d < base {
                        *done = false;
                        break;
                    }
                    *d = 0;
                }
                Some(self.build(current.into_iter()))
            }
            Source::Random { rng, remaining } => {
                if *remaining == 0 {
                    return None;
                }
                *remaining -= 1;
                let states: Vec<usize> = (0..self.pairs.len())
                    .map(|_| {
                        if rng.gen_bool(0.5) {
                            0
                        } else {
                            1 + rng.gen_range(0..base - 1)
                        }
                    })
                    .collect();
                Some(self.build(states.into_iter()))
            }
        }
    }
}

/// Graphs on `v1..vn`: every assignment of "absent" or a label to each pair
/// (odometer order, pair `(v1,v2)` fastest), or seeded random samples where
/// each pair is absent with probability 1/2 and otherwise uniformly labeled.
pub fn enumerate_graphs(spec: &GraphEnumSpec) -> Result<GraphStream> {
    spec.validate()?;
    let names = (1..=spec.n)
        .map(|i| VertexId::new(format!("v{i}")))
        .collect::<Result<Vec<_>>>()?;
    let pairs = (0..spec.n)
        .flat_map(|i| (i + 1..spec.n).map(move |j| (i, j)))
        .collect::<Vec<_>>();
    let labels = spec
        .labels
        .iter()
        .map(|&m| EdgeLabel::new(m))
        .collect::<Result<Vec<_>>>()?;
    let source = match spec.mode {
        EnumMode::Exhaustive => Source::Odometer {
            digits: vec![0; pairs.len()],
            done: false,
        },
        EnumMode::Random { samples, seed } => Source::Random {
            rng: Box::new(ChaCha8Rng::seed_from_u64(seed)),
            remaining: samples,
        },
    };
    Ok(GraphStream {
        names,
        pairs,
        labels,
        source,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub graph: ArtinGraph,
    pub decide_lerf: bool,
    pub oracle_in_s: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferentialReport {
    pub spec: GraphEnumSpec,
    pub total: u64,
    pub agreements: u64,
    pub disagreements: Vec<Disagreement>,
    pub witness_gap_count: u64,
    /// NotInS graphs for which no witness pattern was found.
    pub witness_gap: Vec<ArtinGraph>,
}

/// Runs the decider and the oracle side by side over an enumeration.
#[allow(non_snake_case)]
pub fn differential_in_S(spec: &GraphEnumSpec) -> Result<DifferentialReport> {
    if spec.n > ORACLE_MAX_VERTICES {
        return Err(Error::TooLarge {
            size: spec.n,
            limit: ORACLE_MAX_VERTICES,
        });
    }
    let mut report = DifferentialReport {
        spec: spec.clone(),
        total: 0,
        agreements: 0,
        disagreements: Vec::new(),
        witness_gap_count: 0,
        witness_gap: Vec::new(),
    };
    for g in enumerate_graphs(spec)? {
        report.total += 1;
        let decided = decide_lerf(&g)?.is_lerf();
        let expected = oracle_in_S(&g)?;
        if decided == expected {
            report.agreements += 1;
        } else {
            report.disagreements.push(Disagreement {
                graph: g.clone(),
                decide_lerf: decided,
                oracle_in_s: expected,
            });
        }
        if !decided && find_witness(&g).is_none() {
            report.witness_gap_count += 1;
            report.witness_gap.push(g);
        }
    }
    Ok(report)
}
