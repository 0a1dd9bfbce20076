//! Edge-labeled simplicial graphs.
//!
//! An [`ArtinGraph`] stores its vertices in lexicographic name order together
//! with a symmetric label matrix. A missing edge stands for the label ∞, so
//! every stored label is a finite integer `>= 2`. Equality is by names and
//! labeled edges; nothing in this crate compares graphs up to isomorphism.

use std::borrow::Borrow;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Name of a vertex (and of the corresponding Artin generator).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        let valid =
            !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_');
        if valid {
            Ok(VertexId(name))
        } else {
            Err(Error::InvalidVertexName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for VertexId {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        VertexId::new(value)
    }
}

impl TryFrom<&str> for VertexId {
    type Error = Error;

    fn try_from(value: &str) -> Result<Self> {
        VertexId::new(value)
    }
}

impl From<VertexId> for String {
    fn from(value: VertexId) -> Self {
        value.0
    }
}

impl Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Finite edge label `m >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct EdgeLabel(u32);

impl EdgeLabel {
    /// The commuting label.
    pub const TWO: EdgeLabel = EdgeLabel(2);

    pub fn new(m: u32) -> Result<Self> {
        if m >= 2 {
            Ok(EdgeLabel(m))
        } else {
            Err(Error::InvalidLabel(m.into()))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_two(self) -> bool {
        self.0 == 2
    }
}

impl TryFrom<u32> for EdgeLabel {
    type Error = Error;

    fn try_from(value: u32) -> Result<Self> {
        EdgeLabel::new(value)
    }
}

impl From<EdgeLabel> for u32 {
    fn from(value: EdgeLabel) -> Self {
        value.0
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Finite simplicial graph with edges labeled by integers `>= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ArtinGraph {
    vertices: Vec<VertexId>,
    labels: Vec<Option<EdgeLabel>>,
}

impl ArtinGraph {
    pub fn empty() -> Self {
        ArtinGraph::default()
    }

    /// Builds a graph from declared vertices and labeled edges. Every edge
    /// endpoint must be declared.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId, EdgeLabel)>,
    {
        let mut sorted: Vec<VertexId> = vertices.into_iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].to_string()));
        }
        let mut graph = ArtinGraph::edgeless(sorted);
        for (u, v, m) in edges {
            graph.insert_edge(&u, &v, m)?;
        }
        Ok(graph)
    }

    /// Builds a graph from string data; edge endpoints are declared implicitly.
    ///
    /// ```
    /// use artin_lerf::ArtinGraph;
    /// let g = ArtinGraph::from_labeled_edges(&["d"], &[("a", "b", 3), ("b", "c", 2)]).unwrap();
    /// assert_eq!(g.vertex_count(), 4);
    /// ```
    pub fn from_labeled_edges(isolated: &[&str], edges: &[(&str, &str, u32)]) -> Result<Self> {
        let mut names = BTreeSet::new();
        for name in isolated {
            names.insert(VertexId::new(*name)?);
        }
        let mut labeled = Vec::with_capacity(edges.len());
        for &(u, v, m) in edges {
            let (u, v) = (VertexId::new(u)?, VertexId::new(v)?);
            names.insert(u.clone());
            names.insert(v.clone());
            labeled.push((u, v, EdgeLabel::new(m)?));
        }
        ArtinGraph::new(names, labeled)
    }

    fn edgeless(vertices: Vec<VertexId>) -> Self {
        let n = vertices.len();
        ArtinGraph {
            vertices,
            labels: vec![None; n * n],
        }
    }

    fn insert_edge(&mut self, u: &VertexId, v: &VertexId, m: EdgeLabel) -> Result<()> {
        let i = self.require(u)?;
        let j = self.require(v)?;
        if i == j {
            return Err(Error::Loop(u.to_string()));
        }
        if self.label_at(i, j).is_some() {
            let (a, b) = if i < j { (u, v) } else { (v, u) };
            return Err(Error::DuplicateEdge(a.to_string(), b.to_string()));
        }
        self.set_label(i, j, Some(m));
        Ok(())
    }

    fn set_label(&mut self, i: usize, j: usize, m: Option<EdgeLabel>) {
        let n = self.vertices.len();
        self.labels[i * n + j] = m;
        self.labels[j * n + i] = m;
    }

    fn require(&self, v: &VertexId) -> Result<usize> {
        self.index_of(v.as_str())
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: &str) -> bool {
        self.index_of(v).is_some()
    }

    /// Position of `v` in [`ArtinGraph::vertices`].
    pub fn index_of(&self, v: &str) -> Option<usize> {
        self.vertices
            .binary_search_by(|probe| probe.as_str().cmp(v))
            .ok()
    }

    /// Label between the vertices at positions `i` and `j`; `None` means ∞.
    pub fn label_at(&self, i: usize, j: usize) -> Option<EdgeLabel> {
        self.labels[i * self.vertices.len() + j]
    }

    pub fn is_two_adjacent_at(&self, i: usize, j: usize) -> bool {
        self.label_at(i, j).is_some_and(EdgeLabel::is_two)
    }

    /// Label of the edge `{u, v}`, `None` when the vertices are not adjacent.
    pub fn label(&self, u: &VertexId, v: &VertexId) -> Result<Option<EdgeLabel>> {
        let (i, j) = (self.require(u)?, self.require(v)?);
        Ok(if i == j { None } else { self.label_at(i, j) })
    }

    /// Edges as `(u, v, m)` with `u < v`, ordered by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexId, &VertexId, EdgeLabel)> + '_ {
        let n = self.vertices.len();
        (0..n).flat_map(move |i| {
            (i + 1..n).filter_map(move |j| {
                self.label_at(i, j)
                    .map(|m| (&self.vertices[i], &self.vertices[j], m))
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// Every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.label_at(i, j).is_some()))
    }

    /// Full subgraph on the given vertex positions (duplicates ignored).
    pub fn induced_by_indices(&self, indices: &[usize]) -> ArtinGraph {
        let mut idx: Vec<usize> = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let mut sub = ArtinGraph::edgeless(idx.iter().map(|&i| self.vertices[i].clone()).collect());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().skip(a + 1) {
                sub.set_label(a, b, self.label_at(i, j));
            }
        }
        sub
    }

    /// Full subgraph on `s`: every edge of `self` with both ends in `s`.
    pub fn induced_subgraph<'a, I>(&self, s: I) -> Result<ArtinGraph>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let idx = s
            .into_iter()
            .map(|v| self.require(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.induced_by_indices(&idx))
    }

    /// Full subgraph on every vertex except `v`.
    pub fn without_vertex(&self, v: &VertexId) -> Result<ArtinGraph> {
        let skip = self.require(v)?;
        let keep: Vec<usize> = (0..self.vertices.len()).filter(|&i| i != skip).collect();
        Ok(self.induced_by_indices(&keep))
    }

    /// Connected components as position sets, sorted by least member.
    pub fn component_indices(&self) -> Vec<Vec<usize>> {
        components_by(self.vertices.len(), |i, j| self.label_at(i, j).is_some())
    }

    /// Connected components sorted by least vertex name.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        self.component_indices()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.vertices[i].clone()).collect())
            .collect()
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_indices().len() <= 1
    }

    /// `u` and `v` are joined by an edge labeled 2.
    pub fn two_adjacent(&self, u: &VertexId, v: &VertexId) -> Result<bool> {
        let (i, j) = (self.require(u)?, self.require(v)?);
        if i == j {
            return Err(Error::SameVertex(u.to_string()));
        }
        Ok(self.is_two_adjacent_at(i, j))
    }

    pub fn center_indices(&self) -> Vec<usize> {
        let n = self.vertices.len();
        (0..n)
            .filter(|&u| (0..n).all(|v| v == u || self.is_two_adjacent_at(u, v)))
            .collect()
    }

    /// Z(Γ): vertices 2-adjacent to every other vertex.
    pub fn center_vertices(&self) -> Vec<VertexId> {
        self.center_indices()
            .into_iter()
            .map(|i| self.vertices[i].clone())
            .collect()
    }

    /// Unlabeled graph of the 2-labeled edges, on the same vertex set.
    pub fn two_skeleton(&self) -> RaagGraph {
        let n = self.vertices.len();
        let mut adjacency = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                adjacency[i * n + j] = i != j && self.is_two_adjacent_at(i, j);
            }
        }
        RaagGraph {
            names: self.vertices.iter().map(|v| v.to_string()).collect(),
            adjacency,
        }
    }

    /// 2-cone with apex `apex`: the new vertex is 2-adjacent to every old one.
    pub fn cone2(&self, apex: &VertexId) -> Result<ArtinGraph> {
        if self.contains(apex.as_str()) {
            return Err(Error::ApexPresent(apex.to_string()));
        }
        let edges = self
            .edges()
            .map(|(u, v, m)| (u.clone(), v.clone(), m))
            .chain(
                self.vertices
                    .iter()
                    .map(|v| (apex.clone(), v.clone(), EdgeLabel::TWO)),
            )
            .collect::<Vec<_>>();
        let vertices = self.vertices.iter().cloned().chain(Some(apex.clone()));
        ArtinGraph::new(vertices, edges)
    }

    pub fn disjoint_union(&self, other: &ArtinGraph) -> Result<ArtinGraph> {
        if let Some(v) = other.vertices.iter().find(|v| self.contains(v.as_str())) {
            return Err(Error::NameCollision(v.to_string()));
        }
        let edges = self
            .edges()
            .chain(other.edges())
            .map(|(u, v, m)| (u.clone(), v.clone(), m))
            .collect::<Vec<_>>();
        let vertices = self.vertices.iter().chain(&other.vertices).cloned();
        ArtinGraph::new(vertices, edges)
    }
}

impl Serialize for ArtinGraph {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let edges: Vec<(&VertexId, &VertexId, EdgeLabel)> = self.edges().collect();
        let mut st = serializer.serialize_struct("ArtinGraph", 2)?;
        st.serialize_field("vertices", &self.vertices)?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

/// Unlabeled simplicial graph on named generators, in a fixed vertex order.
///
/// Generator names are free-form strings (R(A) uses names like `z{a,b}`).
/// Equality ignores the vertex order and compares name sets and edge sets.
#[derive(Debug, Clone, Default)]
pub struct RaagGraph {
    names: Vec<String>,
    adjacency: Vec<bool>,
}

impl RaagGraph {
    /// Builds a graph from generator names and edges given by position.
    pub fn new(
        names: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for name in &names {
            if name.is_empty() {
                return Err(Error::InvalidVertexName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        let n = names.len();
        let mut adjacency = vec![false; n * n];
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::UnknownVertex(format!("#{}", i.max(j))));
            }
            if i == j {
                return Err(Error::Loop(names[i].clone()));
            }
            adjacency[i * n + j] = true;
            adjacency[j * n + i] = true;
        }
        Ok(RaagGraph { names, adjacency })
    }

    pub fn vertices(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn adjacent_at(&self, i: usize, j: usize) -> bool {
        self.adjacency[i * self.names.len() + j]
    }

    pub fn adjacent(&self, u: &str, v: &str) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adjacent_at(i, j),
            _ => false,
        }
    }

    /// Edges by position, `i < j`, in row order.
    pub fn edge_indices(&self) -> Vec<(usize, usize)> {
        let n = self.names.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacent_at(i, j))
            .collect()
    }

    /// Edges as name pairs, each pair in vertex order.
    pub fn edges(&self) -> Vec<(&str, &str)> {
        self.edge_indices()
            .into_iter()
            .map(|(i, j)| (self.names[i].as_str(), self.names[j].as_str()))
            .collect()
    }

    pub fn induced_by_indices(&self, indices: &[usize]) -> RaagGraph {
        let names = indices.iter().map(|&i| self.names[i].clone()).collect();
        let mut edges = Vec::new();
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate().skip(a + 1) {
                if self.adjacent_at(i, j) {
                    edges.push((a, b));
                }
            }
        }
        RaagGraph::new(names, edges).expect("sub-selection of a valid graph")
    }

    /// The right-angled Artin graph: every edge labeled 2. Names must be
    /// valid vertex names.
    pub fn to_artin_graph(&self) -> Result<ArtinGraph> {
        let vertices = self
            .names
            .iter()
            .map(|n| VertexId::new(n.as_str()))
            .collect::<Result<Vec<_>>>()?;
        let edges = self
            .edge_indices()
            .into_iter()
            .map(|(i, j)| (vertices[i].clone(), vertices[j].clone(), EdgeLabel::TWO))
            .collect::<Vec<_>>();
        ArtinGraph::new(vertices, edges)
    }

    fn edge_name_set(&self) -> BTreeSet<(&str, &str)> {
        self.edges()
            .into_iter()
            .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect()
    }
}

impl PartialEq for RaagGraph {
    fn eq(&self, other: &Self) -> bool {
        let mine: BTreeSet<&String> = self.names.iter().collect();
        let theirs: BTreeSet<&String> = other.names.iter().collect();
        mine == theirs && self.edge_name_set() == other.edge_name_set()
    }
}

impl Eq for RaagGraph {}

/// Components of the graph on `0..n` with the given adjacency, each sorted,
/// in order of least member.
pub(crate) fn components_by(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut component = Vec::new();
        while let Some(i) = stack.pop() {
            component.push(i);
            for (j, done) in seen.iter_mut().enumerate() {
                if !*done && adjacent(i, j) {
                    *done = true;
                    stack.push(j);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(isolated: &[&str], edges: &[(&str, &str, u32)]) -> ArtinGraph {
        ArtinGraph::from_labeled_edges(isolated, edges).unwrap()
    }

    fn ids(names: &[&str]) -> Vec<VertexId> {
        names.iter().map(|n| VertexId::new(*n).unwrap()).collect()
    }

    fn v(name: &str) -> VertexId {
        VertexId::new(name).unwrap()
    }

    #[test]
    fn vertex_names_are_validated() {
        assert!(VertexId::new("v_1A").is_ok());
        assert!(VertexId::new("").is_err());
        assert!(VertexId::new("a-b").is_err());
        assert!(VertexId::new("z{a}").is_err());
    }

    #[test]
    fn labels_below_two_are_rejected() {
        assert_eq!(EdgeLabel::new(1), Err(Error::InvalidLabel(1)));
        assert!(EdgeLabel::new(0).is_err());
        assert_eq!(EdgeLabel::new(2).unwrap(), EdgeLabel::TWO);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            ArtinGraph::from_labeled_edges(&[], &[("a", "a", 2)]),
            Err(Error::Loop("a".into()))
        );
        assert_eq!(
            ArtinGraph::from_labeled_edges(&[], &[("a", "b", 2), ("b", "a", 3)]),
            Err(Error::DuplicateEdge("a".into(), "b".into()))
        );
        assert_eq!(
            ArtinGraph::new(ids(&["a"]), vec![(v("a"), v("b"), EdgeLabel::TWO)]),
            Err(Error::UnknownVertex("b".into()))
        );
        assert_eq!(
            ArtinGraph::new(ids(&["a", "a"]), vec![]),
            Err(Error::DuplicateVertex("a".into()))
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let tri = g(&[], &[("a", "b", 3), ("b", "c", 2), ("a", "c", 2)]);
        assert_eq!(
            tri.induced_subgraph(&ids(&["a", "b"])).unwrap(),
            g(&[], &[("a", "b", 3)])
        );
        assert_eq!(tri.induced_subgraph(tri.vertices()).unwrap(), tri);

        let path = g(&[], &[("a", "b", 3), ("b", "c", 2)]);
        let ac = path.induced_subgraph(&ids(&["a", "c"])).unwrap();
        assert_eq!(ac, g(&["a", "c"], &[]));
        assert_eq!(ac.edge_count(), 0);

        assert_eq!(
            path.induced_subgraph(&ids(&["a", "q"])),
            Err(Error::UnknownVertex("q".into()))
        );
    }

    #[test]
    fn components_examples() {
        let path = g(&[], &[("a", "b", 2), ("b", "c", 5)]);
        assert_eq!(path.connected_components(), vec![ids(&["a", "b", "c"])]);
        let split = g(&["c"], &[("a", "b", 3)]);
        assert_eq!(
            split.connected_components(),
            vec![ids(&["a", "b"]), ids(&["c"])]
        );
        assert!(ArtinGraph::empty().connected_components().is_empty());
    }

    #[test]
    fn components_sorted_by_least_member() {
        let graph = g(&[], &[("a", "z", 2), ("b", "c", 2)]);
        assert_eq!(
            graph.connected_components(),
            vec![ids(&["a", "z"]), ids(&["b", "c"])]
        );
    }

    #[test]
    fn two_adjacency() {
        assert!(g(&[], &[("a", "b", 2)])
            .two_adjacent(&v("a"), &v("b"))
            .unwrap());
        assert!(!g(&[], &[("a", "b", 3)])
            .two_adjacent(&v("a"), &v("b"))
            .unwrap());
        assert!(!g(&["a", "b"], &[]).two_adjacent(&v("a"), &v("b")).unwrap());
        assert_eq!(
            g(&["a"], &[]).two_adjacent(&v("a"), &v("a")),
            Err(Error::SameVertex("a".into()))
        );
    }

    #[test]
    fn center_examples() {
        let tri = g(&[], &[("a", "b", 4), ("a", "c", 2), ("b", "c", 2)]);
        assert_eq!(tri.center_vertices(), ids(&["c"]));
        let p4 = g(&[], &[("a", "b", 2), ("b", "c", 2), ("c", "d", 2)]);
        assert!(p4.center_vertices().is_empty());
        let k3 = g(&[], &[("a", "b", 2), ("a", "c", 2), ("b", "c", 2)]);
        assert_eq!(k3.center_vertices(), ids(&["a", "b", "c"]));
        assert_eq!(g(&["x"], &[]).center_vertices(), ids(&["x"]));
    }

    #[test]
    fn two_skeleton_examples() {
        let tri = g(&[], &[("a", "b", 3), ("b", "c", 3), ("a", "c", 2)]);
        let sk = tri.two_skeleton();
        assert_eq!(sk.edges(), vec![("a", "c")]);

        let raag = g(&[], &[("a", "b", 2), ("b", "c", 2)]);
        assert_eq!(raag.two_skeleton().to_artin_graph().unwrap(), raag);

        let square = g(
            &[],
            &[
                ("x", "u", 2),
                ("u", "y", 2),
                ("y", "v", 2),
                ("v", "x", 2),
                ("u", "v", 3),
                ("x", "y", 7),
            ],
        );
        let sk = square.two_skeleton();
        let c4 = g(
            &[],
            &[("x", "u", 2), ("u", "y", 2), ("y", "v", 2), ("v", "x", 2)],
        );
        assert_eq!(sk, c4.two_skeleton());
        assert_eq!(sk.edges().len(), 4);
    }

    #[test]
    fn cone_examples() {
        let edge = g(&[], &[("a", "b", 5)]);
        assert_eq!(
            edge.cone2(&v("c")).unwrap(),
            g(&[], &[("a", "b", 5), ("a", "c", 2), ("b", "c", 2)])
        );
        assert_eq!(ArtinGraph::empty().cone2(&v("c")).unwrap(), g(&["c"], &[]));
        assert_eq!(
            g(&["a", "b"], &[]).cone2(&v("c")).unwrap(),
            g(&[], &[("a", "c", 2), ("c", "b", 2)])
        );
        assert_eq!(edge.cone2(&v("a")), Err(Error::ApexPresent("a".into())));
    }

    #[test]
    fn union_examples() {
        let a = g(&["a"], &[]);
        let b = g(&["b"], &[]);
        assert_eq!(a.disjoint_union(&b).unwrap(), g(&["a", "b"], &[]));
        let ab = g(&[], &[("a", "b", 3)]);
        let u = ab.disjoint_union(&g(&["c"], &[])).unwrap();
        assert_eq!(u.vertex_count(), 3);
        assert_eq!(u.edge_count(), 1);
        assert_eq!(ab.disjoint_union(&ArtinGraph::empty()).unwrap(), ab);
        assert_eq!(ab.disjoint_union(&a), Err(Error::NameCollision("a".into())));
    }

    #[test]
    fn raag_equality_ignores_order() {
        let x = RaagGraph::new(vec!["a".into(), "b".into()], [(0, 1)]).unwrap();
        let y = RaagGraph::new(vec!["b".into(), "a".into()], [(1, 0)]).unwrap();
        assert_eq!(x, y);
        assert!(RaagGraph::new(vec!["a".into(), "a".into()], []).is_err());
    }
}
