//! Oracle-trust suites: the production detector against the subset brute
//! force, the small-order equivalence with 4-cycle-freeness, monotonicity,
//! and witness validity.

mod common;

use common::labeled_graphs;
use modcycles::cycles::{
    enumerate_cycles, has_cycle_mod, has_cycle_mod_through_edge, has_cycle_mod_with,
    DetectOptions, ResidueClass,
};
use modcycles::graph::{canonical_form, Graph};
use modcycles::naive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;

/// One representative per isomorphism class on `n` vertices, by walking
/// every labeled graph and deduplicating on canonical form.
fn class_representatives(n: usize) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for g in labeled_graphs(n) {
        if seen.insert(canonical_form(&g)) {
            reps.push(g);
        }
    }
    reps
}

#[test]
fn detector_matches_subset_brute_force_exhaustively() {
    let classes: [(usize, usize); 3] = [(0, 4), (0, 2), (1, 3)];
    for n in 1..=7 {
        let reps = class_representatives(n);
        // Sanity anchor: the number of graphs on n vertices up to
        // isomorphism is a well-known sequence.
        let expected_classes = [1, 1, 2, 4, 11, 34, 156, 1044][n];
        assert_eq!(reps.len(), expected_classes, "class count at n = {n}");
        for (ell, k) in classes {
            let rc = ResidueClass::new(ell, k).unwrap();
            for g in &reps {
                let fast = has_cycle_mod(g, &rc).expect("small graph").is_some();
                let slow = naive::has_cycle_mod_by_subsets(g, &rc);
                assert_eq!(fast, slow, "disagreement at n={n}, rc={rc}, g={g:?}");
            }
        }
    }
}

#[test]
fn below_eight_vertices_it_is_exactly_c4_freeness() {
    // With fewer than 8 vertices the only possible cycle length divisible
    // by four is 4 itself.
    let rc = ResidueClass::zero_mod_four();
    for n in 1..=7 {
        for g in class_representatives(n) {
            let has_mod4 = has_cycle_mod(&g, &rc).expect("small graph").is_some();
            let has_c4 = enumerate_cycles(&g, 1_000_000)
                .expect("small graph")
                .iter()
                .any(|c| c.len() == 4);
            assert_eq!(has_mod4, has_c4, "n={n}, g={g:?}");
        }
    }
}

#[test]
fn detection_is_monotone_under_edge_addition() {
    let rc = ResidueClass::zero_mod_four();
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..1000 {
        let n = rng.random_range(4..=9);
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(0.35) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        // Build a random proper subgraph h of g.
        let mut h = g.clone();
        for (u, v) in g.edges() {
            if rng.random_bool(0.3) {
                h.remove_edge(u, v);
            }
        }
        let sub = has_cycle_mod(&h, &rc).expect("small").is_some();
        let full = has_cycle_mod(&g, &rc).expect("small").is_some();
        if sub {
            assert!(full, "cycle vanished when edges were added: h={h:?}, g={g:?}");
        }
    }
}

#[test]
fn every_witness_validates_against_its_host() {
    let mut rng = StdRng::seed_from_u64(7);
    let classes = [
        ResidueClass::new(0, 4).unwrap(),
        ResidueClass::new(2, 4).unwrap(),
        ResidueClass::new(1, 2).unwrap(),
    ];
    for _ in 0..500 {
        let n = rng.random_range(3..=9);
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(0.4) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        for rc in &classes {
            if let Some(w) = has_cycle_mod(&g, rc).expect("small graph") {
                assert!(w.is_cycle_of(&g));
                assert!(rc.matches(w.len()));
            }
        }
    }
}

#[test]
fn euler_fast_path_is_sound_and_consistent() {
    // Wherever e > 3n - 6, the detector must find a witness, and the
    // fast-path flag must not change any decision.
    let rc = ResidueClass::zero_mod_four();
    let mut rng = StdRng::seed_from_u64(42);
    let mut dense_seen = 0;
    for _ in 0..1000 {
        let n = rng.random_range(4..=8);
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(0.8) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let plain = has_cycle_mod(&g, &rc).expect("small graph");
        let fast = has_cycle_mod_with(
            &g,
            &rc,
            &DetectOptions { euler_fast_path: true, ..DetectOptions::default() },
        )
        .expect("small graph");
        assert_eq!(plain, fast, "fast path changed a decision on {g:?}");
        if g.n() >= 3 && g.edge_count() > 3 * g.n() - 6 {
            dense_seen += 1;
            assert!(plain.is_some(), "dense graph with no witness: {g:?}");
        }
    }
    assert!(dense_seen > 100, "sampler produced too few dense graphs");
}

#[test]
fn through_edge_agrees_with_restricted_enumeration() {
    // The fixed 8-vertex extremal block plus each possible extra edge:
    // the through-edge query must agree with filtering the full
    // enumeration down to cycles using that edge.
    let rc = ResidueClass::zero_mod_four();
    let l8 = modcycles::gadgets::build_l8();
    let non_edges = l8.non_edges();
    assert_eq!(non_edges.len(), 17);
    for (u, v) in non_edges {
        let g = l8.with_edge(u, v).unwrap();
        let via_query = has_cycle_mod_through_edge(&g, u, v, &rc)
            .expect("small graph")
            .is_some();
        let via_enumeration = enumerate_cycles(&g, 1_000_000)
            .expect("small graph")
            .iter()
            .any(|c| {
                let vs = c.vertices();
                let uses_edge = (0..vs.len()).any(|i| {
                    let a = vs[i];
                    let b = vs[(i + 1) % vs.len()];
                    (a, b) == (u, v) || (b, a) == (u, v)
                });
                uses_edge && rc.matches(c.len())
            });
        assert_eq!(via_query, via_enumeration, "edge ({u}, {v})");
    }
}

#[test]
fn histograms_are_relabeling_invariant() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.random_range(3..=8);
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(0.5) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.random_range(0..=i);
            perm.swap(i, j);
        }
        let h1 = modcycles::cycles::residue_histogram(&g, 4, 1_000_000).unwrap();
        let h2 =
            modcycles::cycles::residue_histogram(&g.permuted(&perm), 4, 1_000_000).unwrap();
        assert_eq!(h1, h2);
    }
}
