#![allow(dead_code)]

use artin_lerf::{ArtinGraph, EdgeLabel, VertexId};
use proptest::prelude::*;

pub fn g(isolated: &[&str], edges: &[(&str, &str, u32)]) -> ArtinGraph {
    ArtinGraph::from_labeled_edges(isolated, edges).unwrap()
}

pub fn v(name: &str) -> VertexId {
    VertexId::new(name).unwrap()
}

/// Graph on `v0..v{n-1}` from one state per pair (0 = absent, else the label).
pub fn from_states(n: usize, states: &[u32]) -> ArtinGraph {
    let names: Vec<VertexId> = (0..n).map(|i| v(&format!("v{i}"))).collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if states[k] != 0 {
                edges.push((
                    names[i].clone(),
                    names[j].clone(),
                    EdgeLabel::new(states[k]).unwrap(),
                ));
            }
            k += 1;
        }
    }
    ArtinGraph::new(names, edges).unwrap()
}

/// Random labeled graphs with `min..=max` vertices; each pair is absent or
/// carries one of `labels`.
pub fn arb_graph(
    min: usize,
    max: usize,
    labels: &'static [u32],
) -> impl Strategy<Value = ArtinGraph> {
    (min..=max).prop_flat_map(move |n| {
        let pairs = n * n.saturating_sub(1) / 2;
        let mut choices = vec![0u32];
        choices.extend_from_slice(labels);
        proptest::collection::vec(proptest::sample::select(choices), pairs)
            .prop_map(move |states| from_states(n, &states))
    })
}
