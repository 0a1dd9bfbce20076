//! Irreducible spherical full subgraphs and the right-angled Artin group
//! R(A) predicted by the Generalized Tits Conjecture.
//!
//! R(A) has one generator `z{…}` per irreducible spherical full subgraph Σ,
//! and `z_Σ`, `z_Λ` commute when one subgraph strictly contains the other or
//! every pair of distinct vertices `a ∈ Σ`, `b ∈ Λ` is 2-adjacent.

use std::collections::BTreeSet;

use crate::graph::{ArtinGraph, RaagGraph, VertexId};
use crate::quad::{classify_quad, quadruples, QuadShape};
use crate::spherical::{classify_irreducible, IrreducibleType};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalSubgraph {
    /// Vertices in name order.
    pub vertices: Vec<VertexId>,
    pub ty: IrreducibleType,
}

impl SphericalSubgraph {
    /// Generator name `z{v1,v2,…}`.
    pub fn generator_name(&self) -> String {
        generator_name(&self.vertices)
    }
}

pub fn generator_name(vertices: &[VertexId]) -> String {
    let inner: Vec<&str> = vertices.iter().map(VertexId::as_str).collect();
    format!("z{{{}}}", inner.join(","))
}

/// Report form of a generator name: singletons print bare.
pub fn display_name(generator: &str) -> &str {
    generator
        .strip_prefix("z{")
        .and_then(|s| s.strip_suffix('}'))
        .filter(|s| !s.contains(','))
        .unwrap_or(generator)
}

/// The irreducible spherical full subgraphs of a graph, ordered by size and
/// then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SphericalSubgraphSet {
    pub members: Vec<SphericalSubgraph>,
}

impl SphericalSubgraphSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn vertex_sets(&self) -> Vec<Vec<&str>> {
        self.members
            .iter()
            .map(|m| m.vertices.iter().map(VertexId::as_str).collect())
            .collect()
    }
}

/// Grows irreducible spherical vertex sets one vertex at a time.
///
/// Every connected subdiagram of a finite type diagram is again of finite
/// type, and a tree always has a leaf whose removal keeps it connected, so
/// each member is reached from a member one vertex smaller by adding a
/// diagram neighbour.
pub fn enumerate_spherical_subgraphs(g: &ArtinGraph) -> SphericalSubgraphSet {
    let n = g.vertex_count();
    let mut members = Vec::new();
    let mut level: BTreeSet<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for set in &level {
            let sub = g.induced_by_indices(set);
            let ty = classify_irreducible(&sub).expect("level members are irreducible spherical");
            members.push(SphericalSubgraph {
                vertices: sub.vertices().to_vec(),
                ty,
            });
            for candidate in 0..n {
                if set.contains(&candidate) || !extends_clique(g, set, candidate) {
                    continue;
                }
                let mut grown = set.clone();
                grown.push(candidate);
                grown.sort_unstable();
                if next.contains(&grown) {
                    continue;
                }
                if classify_irreducible(&g.induced_by_indices(&grown)).is_ok() {
                    next.insert(grown);
                }
            }
        }
        level = next;
    }
    SphericalSubgraphSet { members }
}

/// `candidate` is adjacent to every member of `set` and joined to at least
/// one of them by a diagram edge (label `>= 3`).
fn extends_clique(g: &ArtinGraph, set: &[usize], candidate: usize) -> bool {
    let mut touches_diagram = false;
    for &i in set {
        match g.label_at(i, candidate) {
            None => return false,
            Some(m) if !m.is_two() => touches_diagram = true,
            Some(_) => {}
        }
    }
    touches_diagram
}

/// Every pair of distinct vertices `a ∈ s1`, `b ∈ s2` is 2-adjacent.
pub fn commuting_pair(g: &ArtinGraph, s1: &[VertexId], s2: &[VertexId]) -> bool {
    s1.iter().all(|a| {
        s2.iter()
            .all(|b| a == b || g.two_adjacent(a, b).unwrap_or(false))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaagPresentation {
    pub members: SphericalSubgraphSet,
    /// Generator `i` corresponds to `members.members[i]`.
    pub graph: RaagGraph,
}

/// Builds R(A) for the Artin group of `g`.
pub fn build_r(g: &ArtinGraph) -> RaagPresentation {
    let members = enumerate_spherical_subgraphs(g);
    let sets: Vec<BTreeSet<&VertexId>> = members
        .members
        .iter()
        .map(|m| m.vertices.iter().collect())
        .collect();
    let mut edges = Vec::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let nested = sets[i].is_subset(&sets[j]) || sets[j].is_subset(&sets[i]);
            if nested
                || commuting_pair(
                    g,
                    &members.members[i].vertices,
                    &members.members[j].vertices,
                )
            {
                edges.push((i, j));
            }
        }
    }
    let names = members
        .members
        .iter()
        .map(SphericalSubgraph::generator_name)
        .collect();
    let graph = RaagGraph::new(names, edges).expect("distinct subsets have distinct names");
    RaagPresentation { members, graph }
}

/// A full path of length three or a full square in a RAAG graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenSubgraph {
    pub shape: QuadShape,
    /// Generator names in path or cycle order.
    pub vertices: [String; 4],
}

/// Least 4-subset (in vertex order) inducing a path of length three or a
/// square.
pub fn raag_lerf_obstruction(r: &RaagGraph) -> Option<ForbiddenSubgraph> {
    quadruples(r.vertex_count()).find_map(|q| {
        classify_quad(|i, j| r.adjacent_at(i, j), q).map(|(shape, order)| ForbiddenSubgraph {
            shape,
            vertices: order.map(|i| r.vertices()[i].clone()),
        })
    })
}

/// A RAAG is LERF iff its graph has no full path of length three and no
/// full square.
pub fn raag_is_lerf(r: &RaagGraph) -> bool {
    raag_lerf_obstruction(r).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spherical::Family;

    fn g(edges: &[(&str, &str, u32)]) -> ArtinGraph {
        ArtinGraph::from_labeled_edges(&[], edges).unwrap()
    }

    fn ids(names: &[&str]) -> Vec<VertexId> {
        names.iter().map(|n| VertexId::new(*n).unwrap()).collect()
    }

    #[test]
    fn generator_names() {
        assert_eq!(generator_name(&ids(&["a", "b"])), "z{a,b}");
        assert_eq!(display_name("z{a}"), "a");
        assert_eq!(display_name("z{a,b}"), "z{a,b}");
        assert_eq!(display_name("plain"), "plain");
    }

    #[test]
    fn triangle_without_twos() {
        let tri = g(&[("a", "b", 3), ("b", "c", 4), ("a", "c", 5)]);
        let set = enumerate_spherical_subgraphs(&tri);
        assert_eq!(
            set.vertex_sets(),
            vec![
                vec!["a"],
                vec!["b"],
                vec!["c"],
                vec!["a", "b"],
                vec!["a", "c"],
                vec!["b", "c"],
            ]
        );
    }

    #[test]
    fn path_with_one_two() {
        let path = g(&[("a", "b", 3), ("b", "c", 2)]);
        let set = enumerate_spherical_subgraphs(&path);
        assert_eq!(
            set.vertex_sets(),
            vec![vec!["a"], vec!["b"], vec!["c"], vec!["a", "b"]]
        );
    }

    #[test]
    fn a3_triangle_members() {
        let tri = g(&[("a", "b", 3), ("b", "c", 3), ("a", "c", 2)]);
        let set = enumerate_spherical_subgraphs(&tri);
        assert_eq!(
            set.vertex_sets(),
            vec![
                vec!["a"],
                vec!["b"],
                vec!["c"],
                vec!["a", "b"],
                vec!["b", "c"],
                vec!["a", "b", "c"],
            ]
        );
        let last = set.members.last().unwrap();
        assert_eq!(last.ty.family(), Family::A);
        assert_eq!(last.ty.rank(), 3);
        assert!(!set.vertex_sets().contains(&vec!["a", "c"]));
    }

    #[test]
    fn commuting_pairs() {
        let tri = g(&[("a", "b", 3), ("b", "c", 2), ("a", "c", 2)]);
        assert!(commuting_pair(&tri, &ids(&["b"]), &ids(&["c"])));
        assert!(!commuting_pair(&tri, &ids(&["a", "b"]), &ids(&["b", "c"])));
        assert!(commuting_pair(&tri, &ids(&["a"]), &ids(&["a"])));
    }

    #[test]
    fn raag_criterion() {
        let p4 = g(&[("a", "b", 2), ("b", "c", 2), ("c", "d", 2)]).two_skeleton();
        let hit = raag_lerf_obstruction(&p4).unwrap();
        assert_eq!(hit.shape, QuadShape::Path);
        assert_eq!(hit.vertices, ["a", "b", "c", "d"].map(String::from));

        let c4 = g(&[("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("a", "d", 2)]).two_skeleton();
        assert_eq!(raag_lerf_obstruction(&c4).unwrap().shape, QuadShape::Cycle);

        let k4 = g(&[
            ("a", "b", 2),
            ("a", "c", 2),
            ("a", "d", 2),
            ("b", "c", 2),
            ("b", "d", 2),
            ("c", "d", 2),
        ])
        .two_skeleton();
        assert!(raag_is_lerf(&k4));
    }
}
