//! Recognition of spherical (finite type) Artin graphs.
//!
//! A labeled graph is spherical when it is complete and every connected
//! component of its Coxeter diagram (the edges labeled `>= 3`) is one of the
//! irreducible finite types `A_n, B_n, D_n, E_6..E_8, F_4, H_3, H_4, I_2(p)`.
//! Diagrams are matched structurally: a path is read off as its label
//! sequence, a tree with one branch vertex by its three arm lengths.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::graph::{components_by, ArtinGraph, EdgeLabel, VertexId};
use crate::quad::triples;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
    I2,
}

/// An irreducible spherical type such as `B_4` or `I_2(7)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IrreducibleType {
    family: Family,
    rank: u32,
    parameter: Option<u32>,
}

impl IrreducibleType {
    /// Returns `None` for combinations outside the catalog, e.g. `D_3` or `I_2(4)`.
    pub fn new(family: Family, rank: u32, parameter: Option<u32>) -> Option<Self> {
        let valid = match family {
            Family::A => rank >= 1 && parameter.is_none(),
            Family::B => rank >= 2 && parameter.is_none(),
            Family::D => rank >= 4 && parameter.is_none(),
            Family::E => (6..=8).contains(&rank) && parameter.is_none(),
            Family::F => rank == 4 && parameter.is_none(),
            Family::H => (3..=4).contains(&rank) && parameter.is_none(),
            Family::I2 => rank == 2 && parameter.is_some_and(|p| p >= 5),
        };
        valid.then_some(IrreducibleType {
            family,
            rank,
            parameter,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn parameter(&self) -> Option<u32> {
        self.parameter
    }

    fn known(family: Family, rank: usize) -> Self {
        IrreducibleType::new(family, rank as u32, None).expect("rank checked by caller")
    }

    /// The catalog diagram as a complete Artin graph on `s1..sn`: diagram
    /// edges carry their Coxeter labels, every other pair is labeled 2.
    pub fn catalog_graph(&self) -> ArtinGraph {
        let n = self.rank as usize;
        let path = |len: usize| {
            (1..len)
                .map(|i| (i - 1, i, 3))
                .collect::<Vec<(usize, usize, u32)>>()
        };
        let diagram = match self.family {
            Family::A => path(n),
            Family::B => {
                let mut d = path(n);
                d.last_mut().expect("rank >= 2").2 = 4;
                d
            }
            Family::D => {
                let mut d = path(n - 1);
                d.push((n - 3, n - 1, 3));
                d
            }
            Family::E => {
                let mut d = path(n - 1);
                d.push((2, n - 1, 3));
                d
            }
            Family::F => vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
            Family::H => {
                let mut d = path(n);
                d[0].2 = 5;
                d
            }
            Family::I2 => vec![(0, 1, self.parameter.expect("I2 has a parameter"))],
        };
        let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = diagram
                    .iter()
                    .find(|&&(a, b, _)| (a, b) == (i, j) || (b, a) == (i, j))
                    .map_or(2, |&(_, _, m)| m);
                edges.push((names[i].as_str(), names[j].as_str(), m));
            }
        }
        let isolated: Vec<&str> = names.iter().map(String::as_str).collect();
        ArtinGraph::from_labeled_edges(&isolated, &edges).expect("catalog graphs are well formed")
    }
}

impl fmt::Display for IrreducibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.parameter) {
            (Family::I2, Some(p)) => write!(f, "I2({p})"),
            (family, _) => write!(f, "{:?}{}", family, self.rank),
        }
    }
}

/// Why a graph is not irreducible spherical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NotIrreducibleSpherical {
    Empty,
    NotComplete(VertexId, VertexId),
    DiagramDisconnected,
    NotInCatalog,
}

impl fmt::Display for NotIrreducibleSpherical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "empty graph"),
            Self::NotComplete(u, v) => write!(f, "{u} and {v} are not adjacent"),
            Self::DiagramDisconnected => write!(f, "Coxeter diagram is disconnected"),
            Self::NotInCatalog => write!(f, "Coxeter diagram is not of finite type"),
        }
    }
}

fn first_missing_edge(g: &ArtinGraph) -> Option<(VertexId, VertexId)> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| g.label_at(i, j).is_none())
        .map(|(i, j)| (g.vertices()[i].clone(), g.vertices()[j].clone()))
}

fn diagram_label(g: &ArtinGraph, i: usize, j: usize) -> Option<u32> {
    g.label_at(i, j).map(EdgeLabel::get).filter(|&m| m >= 3)
}

/// Components of the Coxeter diagram, as position sets sorted by least member.
fn diagram_components(g: &ArtinGraph) -> Vec<Vec<usize>> {
    components_by(g.vertex_count(), |i, j| diagram_label(g, i, j).is_some())
}

/// Matches a graph against the irreducible catalog.
pub fn classify_irreducible(g: &ArtinGraph) -> Result<IrreducibleType, NotIrreducibleSpherical> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(NotIrreducibleSpherical::Empty);
    }
    if let Some((u, v)) = first_missing_edge(g) {
        return Err(NotIrreducibleSpherical::NotComplete(u, v));
    }
    if diagram_components(g).len() > 1 {
        return Err(NotIrreducibleSpherical::DiagramDisconnected);
    }
    if n == 1 {
        return Ok(IrreducibleType::known(Family::A, 1));
    }

    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| diagram_label(g, i, j).is_some())
                .collect()
        })
        .collect();
    let edge_count: usize = neighbours.iter().map(Vec::len).sum::<usize>() / 2;
    // connected with n - 1 edges: a tree
    if edge_count != n - 1 || neighbours.iter().any(|nb| nb.len() > 3) {
        return Err(NotIrreducibleSpherical::NotInCatalog);
    }
    let branches: Vec<usize> = (0..n).filter(|&i| neighbours[i].len() == 3).collect();
    match branches.as_slice() {
        [] => classify_path(g, &neighbours),
        &[centre] => classify_branched(g, &neighbours, centre),
        _ => Err(NotIrreducibleSpherical::NotInCatalog),
    }
}

fn classify_path(
    g: &ArtinGraph,
    neighbours: &[Vec<usize>],
) -> Result<IrreducibleType, NotIrreducibleSpherical> {
    let n = neighbours.len();
    let start = (0..n)
        .find(|&i| neighbours[i].len() == 1)
        .expect("a path has an end");
    let mut labels = Vec::with_capacity(n - 1);
    let (mut prev, mut cur) = (usize::MAX, start);
    while let Some(&next) = neighbours[cur].iter().find(|&&j| j != prev) {
        labels.push(diagram_label(g, cur, next).expect("diagram edge"));
        prev = cur;
        cur = next;
    }
    let odd: Vec<(usize, u32)> = labels
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, m)| m != 3)
        .collect();
    let at_end = |k: usize| k == 0 || k + 1 == labels.len();
    let ty = match odd.as_slice() {
        [] => IrreducibleType::new(Family::A, n as u32, None),
        &[(_, m)] if n == 2 => match m {
            4 => IrreducibleType::new(Family::B, 2, None),
            _ => IrreducibleType::new(Family::I2, 2, Some(m)),
        },
        &[(k, 4)] if at_end(k) => IrreducibleType::new(Family::B, n as u32, None),
        &[(1, 4)] if n == 4 => IrreducibleType::new(Family::F, 4, None),
        &[(k, 5)] if at_end(k) => IrreducibleType::new(Family::H, n as u32, None),
        _ => None,
    };
    ty.ok_or(NotIrreducibleSpherical::NotInCatalog)
}

fn classify_branched(
    g: &ArtinGraph,
    neighbours: &[Vec<usize>],
    centre: usize,
) -> Result<IrreducibleType, NotIrreducibleSpherical> {
    let n = neighbours.len();
    let all_three = (0..n).all(|i| {
        neighbours[i]
            .iter()
            .all(|&j| diagram_label(g, i, j) == Some(3))
    });
    if !all_three {
        return Err(NotIrreducibleSpherical::NotInCatalog);
    }
    let mut arms: Vec<usize> = neighbours[centre]
        .iter()
        .map(|&first| {
            let (mut prev, mut cur, mut len) = (centre, first, 1);
            while let Some(&next) = neighbours[cur].iter().find(|&&j| j != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => Ok(IrreducibleType::known(Family::D, n)),
        [1, 2, 2..=4] => Ok(IrreducibleType::known(Family::E, n)),
        _ => Err(NotIrreducibleSpherical::NotInCatalog),
    }
}

/// One irreducible factor of a reducible spherical graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphericalFactor {
    pub vertices: Vec<VertexId>,
    pub ty: IrreducibleType,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NotSpherical {
    Empty,
    NotComplete(VertexId, VertexId),
    Factor {
        vertices: Vec<VertexId>,
        reason: NotIrreducibleSpherical,
    },
}

impl fmt::Display for NotSpherical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "empty graph"),
            Self::NotComplete(u, v) => write!(f, "{u} and {v} are not adjacent"),
            Self::Factor { vertices, reason } => {
                write!(f, "component {{{}}}: {reason}", join(vertices))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SphericalClass {
    Irreducible(IrreducibleType),
    /// Factors in least-vertex order; distinct factors commute.
    Reducible(Vec<SphericalFactor>),
    NotSpherical(NotSpherical),
}

impl SphericalClass {
    pub fn is_spherical(&self) -> bool {
        !matches!(self, SphericalClass::NotSpherical(_))
    }
}

impl fmt::Display for SphericalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Irreducible(ty) => write!(f, "irreducible {ty}"),
            Self::Reducible(factors) => {
                let parts: Vec<String> = factors
                    .iter()
                    .map(|fac| format!("{}{{{}}}", fac.ty, join(&fac.vertices)))
                    .collect();
                write!(f, "reducible {}", parts.join(" x "))
            }
            Self::NotSpherical(reason) => write!(f, "not spherical: {reason}"),
        }
    }
}

fn join(vertices: &[VertexId]) -> String {
    vertices
        .iter()
        .map(VertexId::as_str)
        .collect::<Vec<_>>()
        .join(",")
}

/// Splits a graph into irreducible spherical factors when it is spherical.
pub fn classify_spherical(g: &ArtinGraph) -> SphericalClass {
    if g.is_empty() {
        return SphericalClass::NotSpherical(NotSpherical::Empty);
    }
    if let Some((u, v)) = first_missing_edge(g) {
        return SphericalClass::NotSpherical(NotSpherical::NotComplete(u, v));
    }
    let mut factors = Vec::new();
    for component in diagram_components(g) {
        let sub = g.induced_by_indices(&component);
        match classify_irreducible(&sub) {
            Ok(ty) => factors.push(SphericalFactor {
                vertices: sub.vertices().to_vec(),
                ty,
            }),
            Err(reason) => {
                return SphericalClass::NotSpherical(NotSpherical::Factor {
                    vertices: sub.vertices().to_vec(),
                    reason,
                })
            }
        }
    }
    if factors.len() == 1 {
        SphericalClass::Irreducible(factors[0].ty)
    } else {
        SphericalClass::Reducible(factors)
    }
}

/// Least triangle labeled `(2, m, n)` with `m, n >= 3` and `1/m + 1/n > 1/2`.
pub fn locally_reducible_violation(g: &ArtinGraph) -> Option<[VertexId; 3]> {
    let half = Ratio::new(1u64, 2);
    triples(g.vertex_count())
        .find(|&[i, j, k]| {
            let labels = [g.label_at(i, j), g.label_at(j, k), g.label_at(i, k)];
            let Some(mut labels) = labels
                .iter()
                .map(|m| m.map(|m| u64::from(m.get())))
                .collect::<Option<Vec<u64>>>()
            else {
                return false;
            };
            labels.sort_unstable();
            match labels.as_slice() {
                &[2, m, n] if m >= 3 => Ratio::new(1, m) + Ratio::new(1, n) > half,
                _ => false,
            }
        })
        .map(|t| t.map(|i| g.vertices()[i].clone()))
}

pub fn is_locally_reducible(g: &ArtinGraph) -> bool {
    locally_reducible_violation(g).is_none()
}

/// A clause under which the Generalized Tits Conjecture is known to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GtcClause {
    NoLabel3,
    LocallyReducible,
    IrreducibleSphericalNotE,
}

impl fmt::Display for GtcClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::NoLabel3 => "no_label_3",
            Self::LocallyReducible => "locally_reducible",
            Self::IrreducibleSphericalNotE => "irreducible_spherical_not_e",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GtcStatus {
    clauses: BTreeSet<GtcClause>,
    conjectural: bool,
}

impl GtcStatus {
    pub fn clauses(&self) -> &BTreeSet<GtcClause> {
        &self.clauses
    }

    /// No known clause applies.
    pub fn conjectural(&self) -> bool {
        self.conjectural
    }
}

pub fn gtc_status(g: &ArtinGraph) -> GtcStatus {
    let mut clauses = BTreeSet::new();
    if g.edges().all(|(_, _, m)| m.get() != 3) {
        clauses.insert(GtcClause::NoLabel3);
    }
    if is_locally_reducible(g) {
        clauses.insert(GtcClause::LocallyReducible);
    }
    if classify_irreducible(g).is_ok_and(|ty| ty.family() != Family::E) {
        clauses.insert(GtcClause::IrreducibleSphericalNotE);
    }
    let conjectural = clauses.is_empty();
    GtcStatus {
        clauses,
        conjectural,
    }
}
