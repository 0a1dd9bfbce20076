//! Membership in the class 𝒮 of graphs obtained from graphs with at most two
//! vertices by disjoint unions and 2-cones, which is exactly the class of
//! labeled graphs whose Artin group is LERF.
//!
//! [`decide_lerf`] returns a [`Certificate`] either way. A positive answer
//! carries a [`ConstructionTree`] that rebuilds the input; a negative answer
//! carries a connected full subgraph on at least three vertices with no vertex
//! 2-adjacent to all others, plus the sequence of apex removals and component
//! selections that leads to it. Both are checked by [`verify_certificate`]
//! without re-running the decision procedure.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{ArtinGraph, VertexId};
use crate::quad::{classify_quad, quadruples, triples, QuadShape};

/// How a graph in 𝒮 is assembled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionTree {
    /// A graph on one or two vertices.
    Leaf(ArtinGraph),
    /// Disjoint union of at least two parts, sorted by least vertex.
    FreeProduct(Vec<ConstructionTree>),
    /// 2-cone over `child` with apex `apex`.
    Cone {
        apex: VertexId,
        child: Box<ConstructionTree>,
    },
}

impl ConstructionTree {
    /// Rebuilds the graph this tree describes.
    pub fn replay(&self) -> Result<ArtinGraph> {
        match self {
            ConstructionTree::Leaf(g) => Ok(g.clone()),
            ConstructionTree::FreeProduct(children) => {
                children.iter().try_fold(ArtinGraph::empty(), |acc, child| {
                    acc.disjoint_union(&child.replay()?)
                })
            }
            ConstructionTree::Cone { apex, child } => child.replay()?.cone2(apex),
        }
    }

    /// Least vertex name occurring in the tree.
    fn least_vertex(&self) -> Option<&VertexId> {
        match self {
            ConstructionTree::Leaf(g) => g.vertices().first(),
            ConstructionTree::FreeProduct(children) => {
                children.iter().filter_map(|c| c.least_vertex()).min()
            }
            ConstructionTree::Cone { apex, child } => {
                Some(child.least_vertex().map_or(apex, |v| v.min(apex)))
            }
        }
    }

    /// Checks the shape constraints that replay alone does not: leaf sizes,
    /// fan-out of free products, and their ordering.
    fn check_shape(&self) -> std::result::Result<(), VerificationFailure> {
        match self {
            ConstructionTree::Leaf(g) => {
                if (1..=2).contains(&g.vertex_count()) {
                    Ok(())
                } else {
                    Err(VerificationFailure::MalformedTree(format!(
                        "leaf with {} vertices",
                        g.vertex_count()
                    )))
                }
            }
            ConstructionTree::FreeProduct(children) => {
                if children.len() < 2 {
                    return Err(VerificationFailure::MalformedTree(
                        "free product with fewer than two factors".into(),
                    ));
                }
                let keys: Vec<_> = children.iter().map(|c| c.least_vertex()).collect();
                if keys.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(VerificationFailure::MalformedTree(
                        "free product factors out of order".into(),
                    ));
                }
                children.iter().try_for_each(ConstructionTree::check_shape)
            }
            ConstructionTree::Cone { child, .. } => child.check_shape(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessKind {
    /// Connected full subgraph on three vertices with at most one 2-edge.
    ThreeVertex,
    /// Four vertices whose induced 2-skeleton is a path of length three.
    TwoSkeletonP4,
    /// Four vertices whose induced 2-skeleton is a square.
    TwoSkeletonC4,
}

impl WitnessKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessKind::ThreeVertex => "three_vertex",
            WitnessKind::TwoSkeletonP4 => "two_skeleton_p4",
            WitnessKind::TwoSkeletonC4 => "two_skeleton_c4",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "three_vertex" => Some(WitnessKind::ThreeVertex),
            "two_skeleton_p4" => Some(WitnessKind::TwoSkeletonP4),
            "two_skeleton_c4" => Some(WitnessKind::TwoSkeletonC4),
            _ => None,
        }
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A full subgraph whose special subgroup is known not to be LERF.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WitnessPattern {
    pub kind: WitnessKind,
    /// Three vertices in name order, or four in path/cycle order.
    pub vertices: Vec<VertexId>,
}

impl WitnessPattern {
    /// Checks the pattern against `g`, returning a description of the first
    /// violated condition.
    pub fn check(&self, g: &ArtinGraph) -> std::result::Result<(), String> {
        let idx = self
            .vertices
            .iter()
            .map(|v| {
                g.index_of(v.as_str())
                    .ok_or_else(|| format!("unknown vertex {v}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let mut distinct = idx.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != idx.len() {
            return Err("repeated vertex".into());
        }
        match self.kind {
            WitnessKind::ThreeVertex => {
                let [a, b, c] = idx[..] else {
                    return Err("three_vertex needs 3 vertices".into());
                };
                let sub = g.induced_by_indices(&[a, b, c]);
                if !sub.is_connected() {
                    return Err("three_vertex subgraph is disconnected".into());
                }
                if sub.edges().filter(|(_, _, m)| m.is_two()).count() > 1 {
                    return Err("three_vertex subgraph has two edges labeled 2".into());
                }
                Ok(())
            }
            WitnessKind::TwoSkeletonP4 | WitnessKind::TwoSkeletonC4 => {
                let &[a, b, c, d] = &idx[..] else {
                    return Err(format!("{} needs 4 vertices", self.kind));
                };
                let listed = [a, b, c, d];
                let closing = self.kind == WitnessKind::TwoSkeletonC4;
                for x in 0..4 {
                    for y in x + 1..4 {
                        let consecutive = y == x + 1 || (closing && x == 0 && y == 3);
                        if g.is_two_adjacent_at(listed[x], listed[y]) != consecutive {
                            return Err(format!(
                                "2-skeleton on {} is not a {} in the listed order",
                                self.vertices
                                    .iter()
                                    .map(VertexId::as_str)
                                    .collect::<Vec<_>>()
                                    .join(","),
                                if closing { "square" } else { "path" }
                            ));
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

/// One step from the input graph towards the non-LERF core.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TrailStep {
    /// Delete a vertex of the current Z(Γ).
    RemoveApex(VertexId),
    /// Restrict to a connected component.
    TakeComponent(Vec<VertexId>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NonLerfCore {
    pub core: Vec<VertexId>,
    pub trail: Vec<TrailStep>,
    pub witness: Option<WitnessPattern>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    InS(ConstructionTree),
    NotInS(NonLerfCore),
}

impl Certificate {
    pub fn is_lerf(&self) -> bool {
        matches!(self, Certificate::InS(_))
    }
}

/// Decides whether `g` lies in 𝒮, always stripping the least apex first.
pub fn decide_lerf(g: &ArtinGraph) -> Result<Certificate> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(decide(g))
}

fn decide(g: &ArtinGraph) -> Certificate {
    let components = g.component_indices();
    if components.len() > 1 {
        let mut children = Vec::with_capacity(components.len());
        for component in components {
            let part = g.induced_by_indices(&component);
            match decide(&part) {
                Certificate::InS(tree) => children.push(tree),
                Certificate::NotInS(mut core) => {
                    core.trail
                        .insert(0, TrailStep::TakeComponent(part.vertices().to_vec()));
                    return Certificate::NotInS(core);
                }
            }
        }
        return Certificate::InS(ConstructionTree::FreeProduct(children));
    }
    if g.vertex_count() <= 2 {
        return Certificate::InS(ConstructionTree::Leaf(g.clone()));
    }
    let Some(&apex) = g.center_indices().first() else {
        return Certificate::NotInS(NonLerfCore {
            core: g.vertices().to_vec(),
            trail: Vec::new(),
            witness: find_witness(g),
        });
    };
    let apex = g.vertices()[apex].clone();
    let rest = g.without_vertex(&apex).expect("apex is a vertex");
    match decide(&rest) {
        Certificate::InS(child) => Certificate::InS(ConstructionTree::Cone {
            apex,
            child: Box::new(child),
        }),
        Certificate::NotInS(mut core) => {
            core.trail.insert(0, TrailStep::RemoveApex(apex));
            Certificate::NotInS(core)
        }
    }
}

fn three_vertex_at(g: &ArtinGraph, [a, b, c]: [usize; 3]) -> bool {
    let labels = [g.label_at(a, b), g.label_at(b, c), g.label_at(a, c)];
    let present = labels.iter().flatten().count();
    let twos = labels.iter().flatten().filter(|m| m.is_two()).count();
    // three vertices are connected iff at least two of the pairs are adjacent
    present >= 2 && twos <= 1
}

/// First forbidden configuration in scan order: 3-subsets, then 4-subsets,
/// each in lexicographic order. `None` does not imply membership in 𝒮.
pub fn find_witness(g: &ArtinGraph) -> Option<WitnessPattern> {
    let n = g.vertex_count();
    let name = |i: usize| g.vertices()[i].clone();
    if let Some(t) = triples(n).find(|&t| three_vertex_at(g, t)) {
        return Some(WitnessPattern {
            kind: WitnessKind::ThreeVertex,
            vertices: t.iter().map(|&i| name(i)).collect(),
        });
    }
    quadruples(n).find_map(|q| {
        classify_quad(|i, j| g.is_two_adjacent_at(i, j), q).map(|(shape, order)| WitnessPattern {
            kind: match shape {
                QuadShape::Path => WitnessKind::TwoSkeletonP4,
                QuadShape::Cycle => WitnessKind::TwoSkeletonC4,
            },
            vertices: order.iter().map(|&i| name(i)).collect(),
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerificationFailure {
    ReplayMismatch,
    MalformedTree(String),
    NotAnApex(VertexId),
    NotAComponent(Vec<VertexId>),
    UnknownVertex(VertexId),
    CoreMismatch,
    CoreTooSmall(usize),
    CoreDisconnected,
    CoreHasApex(VertexId),
    BadWitness(String),
}

impl fmt::Display for VerificationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ReplayMismatch => write!(f, "replay mismatch"),
            Self::MalformedTree(why) => write!(f, "malformed tree: {why}"),
            Self::NotAnApex(v) => write!(
                f,
                "trail removes {v}, which is not in Z of the current graph"
            ),
            Self::NotAComponent(vs) => write!(
                f,
                "trail takes {{{}}}, which is not a connected component",
                vs.iter()
                    .map(VertexId::as_str)
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            Self::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            Self::CoreMismatch => write!(f, "core does not match the end of the trail"),
            Self::CoreTooSmall(n) => write!(f, "core has {n} vertices, need at least 3"),
            Self::CoreDisconnected => write!(f, "core is disconnected"),
            Self::CoreHasApex(v) => write!(f, "core has {v} in Z"),
            Self::BadWitness(why) => write!(f, "invalid witness: {why}"),
        }
    }
}

/// Checks a certificate against `g` by replay.
pub fn verify_certificate(
    g: &ArtinGraph,
    certificate: &Certificate,
) -> std::result::Result<(), VerificationFailure> {
    match certificate {
        Certificate::InS(tree) => {
            tree.check_shape()?;
            match tree.replay() {
                Ok(rebuilt) if &rebuilt == g => Ok(()),
                _ => Err(VerificationFailure::ReplayMismatch),
            }
        }
        Certificate::NotInS(core) => verify_core(g, core),
    }
}

fn verify_core(g: &ArtinGraph, core: &NonLerfCore) -> std::result::Result<(), VerificationFailure> {
    let mut current = g.clone();
    for step in &core.trail {
        current = match step {
            TrailStep::RemoveApex(u) => {
                let Some(i) = current.index_of(u.as_str()) else {
                    return Err(VerificationFailure::UnknownVertex(u.clone()));
                };
                if !current.center_indices().contains(&i) {
                    return Err(VerificationFailure::NotAnApex(u.clone()));
                }
                current.without_vertex(u).expect("vertex checked above")
            }
            TrailStep::TakeComponent(part) => {
                if !current.connected_components().contains(part) {
                    return Err(VerificationFailure::NotAComponent(part.clone()));
                }
                current
                    .induced_subgraph(part)
                    .expect("component of current graph")
            }
        };
    }
    if current.vertices() != core.core.as_slice() {
        return Err(VerificationFailure::CoreMismatch);
    }
    if current.vertex_count() < 3 {
        return Err(VerificationFailure::CoreTooSmall(current.vertex_count()));
    }
    if !current.is_connected() {
        return Err(VerificationFailure::CoreDisconnected);
    }
    if let Some(v) = current.center_vertices().into_iter().next() {
        return Err(VerificationFailure::CoreHasApex(v));
    }
    if let Some(w) = &core.witness {
        w.check(g).map_err(VerificationFailure::BadWitness)?;
    }
    Ok(())
}

/// Group-theoretic reading of a construction tree: `Z` for a vertex,
/// `Art2(m)` for an edge (`Z x Z` when `m = 2`), `*` for free products and
/// `x Z` for 2-cones.
pub fn decomposition_expression(tree: &ConstructionTree) -> String {
    match tree {
        ConstructionTree::Leaf(g) => match g.vertex_count() {
            1 => "Z".to_string(),
            _ => match g.edges().next() {
                Some((_, _, m)) if m.is_two() => "Z x Z".to_string(),
                Some((_, _, m)) => format!("Art2({m})"),
                None => "(Z * Z)".to_string(),
            },
        },
        ConstructionTree::FreeProduct(children) => {
            let parts: Vec<String> = children.iter().map(decomposition_expression).collect();
            format!("({})", parts.join(" * "))
        }
        ConstructionTree::Cone { child, .. } => {
            format!("({} x Z)", decomposition_expression(child))
        }
    }
}
