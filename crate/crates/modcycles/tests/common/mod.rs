//! Shared helpers for the integration suites: labeled-graph enumeration and
//! permutation search, used as ground truth against the library's faster
//! machinery.

use modcycles::graph::Graph;

/// All vertex pairs of an n-vertex graph, the mask bit order used by
/// [`labeled_graphs`].
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect()
}

/// Iterator over every labeled graph on `n` vertices (all 2^(n choose 2)).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = pair_list(n);
    let m = pairs.len();
    assert!(m <= 25, "labeled enumeration needs a tiny order");
    (0u32..(1 << m)).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs are in range")
    })
}

/// Exhaustive isomorphism test by trying every permutation.
pub fn isomorphic_by_brute_force(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v]))
    })
}

fn permutations(perm: &mut Vec<usize>, at: usize, found: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if at == perm.len() {
        return found(perm);
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        if permutations(perm, at + 1, found) {
            perm.swap(at, i);
            return true;
        }
        perm.swap(at, i);
    }
    false
}
