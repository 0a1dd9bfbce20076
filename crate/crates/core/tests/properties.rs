mod common;

use std::collections::BTreeSet;

use artin_lerf::cli::{certificate_from_json, certificate_to_json, parse_graph, serialize_graph};
use artin_lerf::gtc::{build_r, enumerate_spherical_subgraphs, raag_is_lerf};
use artin_lerf::oracle::{
    every_apex_order_succeeds, exhaustive_witness, is_trivially_perfect, oracle_in_S,
    spherical_subsets_brute_force,
};
use artin_lerf::spherical::{classify_irreducible, classify_spherical, SphericalClass};
use artin_lerf::{
    decide_lerf, find_witness, verify_certificate, ArtinGraph, Certificate, VertexId,
};
use common::{arb_graph, from_states, v};
use proptest::prelude::*;

fn subset(g: &ArtinGraph, mask: u32) -> Vec<VertexId> {
    g.vertices()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, x)| x.clone())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn induced_subgraphs_compose(graph in arb_graph(1, 8, &[2, 3, 5]), s in any::<u32>(), t in any::<u32>()) {
        let outer = subset(&graph, s);
        let inner = subset(&graph, s & t);
        let step = graph.induced_subgraph(&outer).unwrap().induced_subgraph(&inner).unwrap();
        prop_assert_eq!(step, graph.induced_subgraph(&inner).unwrap());
    }

    #[test]
    fn cone_then_delete_apex(graph in arb_graph(0, 7, &[2, 3, 4])) {
        let apex = v("apex");
        let coned = graph.cone2(&apex).unwrap();
        prop_assert!(coned.center_vertices().contains(&apex));
        prop_assert_eq!(coned.without_vertex(&apex).unwrap(), graph);
    }

    #[test]
    fn skeleton_commutes_with_restriction(graph in arb_graph(1, 8, &[2, 3]), s in any::<u32>()) {
        let part = subset(&graph, s);
        let restricted = graph.induced_subgraph(&part).unwrap().two_skeleton();
        let sk = graph.two_skeleton();
        let idx: Vec<usize> = part.iter().map(|x| sk.index_of(x.as_str()).unwrap()).collect();
        prop_assert_eq!(restricted, sk.induced_by_indices(&idx));
    }

    #[test]
    fn components_partition(graph in arb_graph(0, 9, &[2, 3])) {
        let parts = graph.connected_components();
        let all: Vec<VertexId> = parts.iter().flatten().cloned().collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), all.len());
        prop_assert_eq!(sorted.as_slice(), graph.vertices());
        for part in &parts {
            prop_assert!(graph.induced_subgraph(part).unwrap().is_connected());
        }
        for (u, w, _) in graph.edges() {
            prop_assert!(parts.iter().any(|p| p.contains(u) && p.contains(w)));
        }
        let leasts: Vec<&VertexId> = parts.iter().map(|p| &p[0]).collect();
        prop_assert!(leasts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn decider_matches_oracle_and_verifies(graph in arb_graph(1, 9, &[2, 3, 4, 7])) {
        let cert = decide_lerf(&graph).unwrap();
        prop_assert_eq!(cert.is_lerf(), oracle_in_S(&graph).unwrap());
        prop_assert_eq!(verify_certificate(&graph, &cert), Ok(()));
        let (reread, _) = certificate_from_json(&certificate_to_json(&cert)).unwrap();
        prop_assert_eq!(&reread, &cert);
    }

    #[test]
    fn membership_is_hereditary(graph in arb_graph(1, 8, &[2, 3]), s in any::<u32>()) {
        let part = subset(&graph, s);
        prop_assume!(!part.is_empty());
        if decide_lerf(&graph).unwrap().is_lerf() {
            let sub = graph.induced_subgraph(&part).unwrap();
            prop_assert!(decide_lerf(&sub).unwrap().is_lerf());
        }
    }

    #[test]
    fn witnesses_are_sound_and_first(graph in arb_graph(1, 7, &[2, 3])) {
        let all = exhaustive_witness(&graph).unwrap();
        let first = find_witness(&graph);
        prop_assert_eq!(first.as_ref(), all.first());
        for w in &all {
            prop_assert_eq!(w.check(&graph), Ok(()));
        }
        if decide_lerf(&graph).unwrap().is_lerf() {
            prop_assert!(all.is_empty());
        }
    }

    #[test]
    fn spherical_enumeration_matches_brute_force(graph in arb_graph(1, 6, &[2, 3, 4, 5])) {
        let fast: Vec<Vec<VertexId>> = enumerate_spherical_subgraphs(&graph)
            .members
            .into_iter()
            .map(|m| m.vertices)
            .collect();
        prop_assert_eq!(fast, spherical_subsets_brute_force(&graph).unwrap());
    }

    #[test]
    fn singletons_of_r_form_the_two_skeleton(graph in arb_graph(1, 6, &[2, 3, 4, 5])) {
        let r = build_r(&graph);
        let singles: Vec<usize> = (0..r.members.len())
            .filter(|&i| r.members.members[i].vertices.len() == 1)
            .collect();
        let sub = r.graph.induced_by_indices(&singles);
        let renamed: BTreeSet<(String, String)> = sub
            .edges()
            .into_iter()
            .map(|(a, b)| (a[2..a.len() - 1].to_string(), b[2..b.len() - 1].to_string()))
            .collect();
        let skeleton: BTreeSet<(String, String)> = graph
            .two_skeleton()
            .edges()
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        prop_assert_eq!(singles.len(), graph.vertex_count());
        prop_assert_eq!(renamed, skeleton);
    }

    #[test]
    fn irreducible_implies_spherical_irreducible(graph in arb_graph(1, 5, &[2, 3, 4, 5, 6])) {
        if let Ok(ty) = classify_irreducible(&graph) {
            prop_assert_eq!(classify_spherical(&graph), SphericalClass::Irreducible(ty));
        }
    }

    #[test]
    fn spherical_class_ignores_names(states in proptest::collection::vec(proptest::sample::select(vec![2u32, 3, 4, 5]), 10)) {
        let graph = from_states(5, &states);
        // reversing the name order relabels v_i as w_{4-i}
        let mut edges = Vec::new();
        for (a, b, m) in graph.edges() {
            let flip = |x: &VertexId| format!("w{}", 4 - x.as_str()[1..].parse::<usize>().unwrap());
            edges.push((flip(a), flip(b), m.get()));
        }
        let refs: Vec<(&str, &str, u32)> = edges.iter().map(|(a, b, m)| (a.as_str(), b.as_str(), *m)).collect();
        let renamed = ArtinGraph::from_labeled_edges(&[], &refs).unwrap();
        let types = |c: SphericalClass| -> Option<Vec<String>> {
            match c {
                SphericalClass::Irreducible(t) => Some(vec![t.to_string()]),
                SphericalClass::Reducible(f) => {
                    let mut t: Vec<String> = f.iter().map(|x| x.ty.to_string()).collect();
                    t.sort();
                    Some(t)
                }
                SphericalClass::NotSpherical(_) => None,
            }
        };
        prop_assert_eq!(types(classify_spherical(&graph)), types(classify_spherical(&renamed)));
    }

    #[test]
    fn graph_file_round_trip(graph in arb_graph(0, 8, &[2, 3, 4, 5, 11])) {
        prop_assert_eq!(parse_graph(&serialize_graph(&graph)).unwrap(), graph);
    }
}

#[test]
fn apex_choice_never_matters_up_to_five_vertices() {
    for n in 1..=5usize {
        let pairs = n * (n - 1) / 2;
        for code in 0..3u32.pow(pairs as u32) {
            let states: Vec<u32> = (0..pairs)
                .map(|k| [0, 2, 3][(code / 3u32.pow(k as u32) % 3) as usize])
                .collect();
            let graph = from_states(n, &states);
            if let Certificate::InS(_) = decide_lerf(&graph).unwrap() {
                assert!(every_apex_order_succeeds(&graph).unwrap(), "{graph:?}");
            }
        }
    }
}

#[test]
fn raag_criterion_agrees_with_decider_on_all_two_graphs() {
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0..(1u32 << pairs) {
            let states: Vec<u32> = (0..pairs)
                .map(|k| if mask & (1 << k) != 0 { 2 } else { 0 })
                .collect();
            let graph = from_states(n, &states);
            let decided = decide_lerf(&graph).unwrap().is_lerf();
            assert_eq!(raag_is_lerf(&graph.two_skeleton()), decided);
            assert_eq!(is_trivially_perfect(&graph), decided);
        }
    }
}

/// Trivially perfect graphs are built from single vertices by disjoint
/// unions and adding a universal vertex.
fn union_and_universal(graph: &ArtinGraph) -> bool {
    if graph.vertex_count() <= 1 {
        return true;
    }
    let parts = graph.connected_components();
    if parts.len() > 1 {
        return parts
            .iter()
            .all(|p| union_and_universal(&graph.induced_subgraph(p).unwrap()));
    }
    graph
        .center_vertices()
        .first()
        .is_some_and(|u| union_and_universal(&graph.without_vertex(u).unwrap()))
}

#[test]
fn all_two_oracle_is_the_trivially_perfect_construction() {
    for n in 1..=6usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0..(1u32 << pairs) {
            let states: Vec<u32> = (0..pairs)
                .map(|k| if mask & (1 << k) != 0 { 2 } else { 0 })
                .collect();
            let graph = from_states(n, &states);
            assert_eq!(oracle_in_S(&graph).unwrap(), union_and_universal(&graph));
        }
    }
}

#[test]
fn r_of_a_raag_is_the_raag() {
    let graph = common::g(
        &["e"],
        &[("a", "b", 2), ("b", "c", 2), ("c", "d", 2), ("a", "d", 2)],
    );
    let r = build_r(&graph);
    assert!(r.members.members.iter().all(|m| m.vertices.len() == 1));
    let names: Vec<&str> = r.graph.vertices().iter().map(String::as_str).collect();
    assert_eq!(names, ["z{a}", "z{b}", "z{c}", "z{d}", "z{e}"]);
    let edges: Vec<(&str, &str)> = r.graph.edges();
    assert_eq!(
        edges,
        vec![
            ("z{a}", "z{b}"),
            ("z{a}", "z{d}"),
            ("z{b}", "z{c}"),
            ("z{c}", "z{d}")
        ]
    );
}

#[test]
fn spherical_enumeration_exhaustive_up_to_four_vertices() {
    // labels {2,3,4,5} plus absence on every pair
    for n in 1..=4usize {
        let pairs = n * (n - 1) / 2;
        for code in 0..5u32.pow(pairs as u32) {
            let states: Vec<u32> = (0..pairs)
                .map(|k| [0, 2, 3, 4, 5][(code / 5u32.pow(k as u32) % 5) as usize])
                .collect();
            let graph = from_states(n, &states);
            let fast: Vec<Vec<VertexId>> = enumerate_spherical_subgraphs(&graph)
                .members
                .into_iter()
                .map(|m| m.vertices)
                .collect();
            assert_eq!(
                fast,
                spherical_subsets_brute_force(&graph).unwrap(),
                "{graph:?}"
            );
        }
    }
}
