//! Property suites for the graph core: canonical-form correctness (checked
//! exhaustively against permutation brute force at tiny orders), graph6
//! round-trips, the rho identity, and block decomposition facts.

mod common;

use common::{isomorphic_by_brute_force, labeled_graphs, pair_list};
use modcycles::graph::{
    block_decomposition, canonical_form, from_graph6, to_graph6, Graph,
};
use modcycles::naive;
use proptest::prelude::*;
use std::collections::BTreeMap;

/// Canonical equality must coincide with isomorphism. Exhaustive at n <= 6:
/// every labeled graph is grouped by canonical form; representatives of
/// equal forms must be isomorphic, and representatives of distinct forms
/// must not be.
#[test]
fn canonical_form_decides_isomorphism_exhaustively() {
    for n in 1..=6 {
        let mut groups: BTreeMap<String, Vec<Graph>> = BTreeMap::new();
        for g in labeled_graphs(n) {
            groups
                .entry(canonical_form(&g).into_graph6())
                .or_default()
                .push(g);
        }
        for members in groups.values() {
            let rep = &members[0];
            for other in &members[1..] {
                assert!(
                    isomorphic_by_brute_force(rep, other),
                    "same form, not isomorphic: {rep:?} vs {other:?}"
                );
            }
            // The canonical form decodes to a member of the class.
            let decoded = from_graph6(to_graph6(&rep.permuted(
                &modcycles::graph::canonical_labeling(rep).0,
            )).as_str())
            .unwrap();
            assert!(isomorphic_by_brute_force(rep, &decoded));
        }
        let reps: Vec<&Graph> = groups.values().map(|m| &m[0]).collect();
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(
                    !isomorphic_by_brute_force(a, b),
                    "different forms, isomorphic: {a:?} vs {b:?}"
                );
            }
        }
    }
}

/// Strategy: a random graph on 1..=max_n vertices as (n, edge mask).
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << m)).prop_map(|(n, mask)| {
            let pairs = pair_list(n);
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).expect("pairs in range")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_is_relabeling_invariant(g in arb_graph(10), seed in any::<u64>()) {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(seed);
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            perm.swap(i, j);
        }
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.permuted(&perm)));
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(12)) {
        let enc = to_graph6(&g);
        let back = from_graph6(&enc).unwrap();
        prop_assert_eq!(g, back);
    }

    #[test]
    fn rho_complement_identity(g in arb_graph(8), mask in 0u8..) {
        let us: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let rho = g.rho(&us).unwrap();
        let mut rest = Graph::empty(g.n()).unwrap();
        for (u, v) in g.edges() {
            if !us.contains(&u) && !us.contains(&v) {
                rest.add_edge(u, v).unwrap();
            }
        }
        prop_assert_eq!(rho + rest.edge_count(), g.edge_count());
    }
}

/// The rho identity, exhaustively for n <= 5 over all graphs and subsets.
#[test]
fn rho_identity_exhaustive_small() {
    for n in 1..=5 {
        for g in labeled_graphs(n) {
            for mask in 0u32..(1 << n) {
                let us: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let rho = g.rho(&us).unwrap();
                let removed_edges = g
                    .edges()
                    .iter()
                    .filter(|&&(u, v)| !us.contains(&u) && !us.contains(&v))
                    .count();
                assert_eq!(rho + removed_edges, g.edge_count());
            }
        }
    }
}

#[test]
fn graph6_round_trip_exhaustive_up_to_5() {
    for n in 0..=5 {
        if n == 0 {
            let g = Graph::empty(0).unwrap();
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
            continue;
        }
        for g in labeled_graphs(n) {
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}

#[test]
fn blocks_partition_edges_and_are_two_connected() {
    // Every graph on up to 6 vertices: blocks cover each edge once; each
    // block is 2-connected or a single edge; a vertex is a cut vertex iff
    // it lies in at least two blocks.
    for n in 1..=6 {
        for g in labeled_graphs(n) {
            let dec = block_decomposition(&g);
            let mut covered: Vec<(usize, usize)> = Vec::new();
            for i in 0..dec.blocks.len() {
                let edges = dec.block_edges(&g, i);
                let sub = dec.block_subgraph(&g, i);
                assert!(
                    edges.len() == 1 || naive::is_two_connected(&sub),
                    "block {i} of {g:?} is neither an edge nor 2-connected"
                );
                covered.extend(edges);
            }
            covered.sort_unstable();
            assert_eq!(covered, g.edges(), "edge partition failed for {g:?}");
            for v in 0..n {
                let in_blocks = dec.blocks.iter().filter(|b| b.contains(&v)).count();
                assert_eq!(
                    dec.cut_vertices.contains(&v),
                    in_blocks >= 2,
                    "cut-vertex criterion failed at {v} in {g:?}"
                );
            }
        }
    }
}
