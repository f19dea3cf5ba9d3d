//! Slow reference implementations, kept deliberately independent of the
//! production enumeration path. These are the second opinion that the
//! fast detector and the search engine are checked against: cycles are
//! found by trying every vertex subset and every cyclic ordering of it,
//! and maxima are found by labeled backtracking with no isomorphism
//! machinery at all. Only usable at very small orders.

use crate::cycles::ResidueClass;
use crate::graph::Graph;

/// Lengths of all simple cycles, found by brute force over vertex subsets
/// and Hamiltonian orderings of each subset. Sorted ascending.
pub fn cycle_lengths_by_subsets(g: &Graph) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 16, "subset brute force is for tiny graphs");
    let mut lengths = Vec::new();
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < 3 {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        // Fix the smallest vertex first; halve by direction.
        let first = verts[0];
        let rest = &verts[1..];
        let mut perm: Vec<usize> = rest.to_vec();
        permute(&mut perm, 0, &mut |p| {
            if p[0] > p[p.len() - 1] {
                return;
            }
            let mut cyc = Vec::with_capacity(k);
            cyc.push(first);
            cyc.extend_from_slice(p);
            if (0..k).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % k])) {
                lengths.push(k);
            }
        });
    }
    lengths.sort_unstable();
    lengths
}

fn permute<F: FnMut(&[usize])>(items: &mut Vec<usize>, at: usize, f: &mut F) {
    if at == items.len() {
        if !items.is_empty() {
            f(items);
        }
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, f);
        items.swap(at, i);
    }
}

/// Does the graph contain a simple cycle with length in `rc`? Subset brute
/// force; the independent cross-check for the production detector.
pub fn has_cycle_mod_by_subsets(g: &Graph, rc: &ResidueClass) -> bool {
    cycle_lengths_by_subsets(g).into_iter().any(|len| rc.matches(len))
}

/// 2-connectivity by definition: connected, at least 3 vertices, and no
/// single vertex deletion disconnects the rest.
pub fn is_two_connected(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || !g.is_connected() {
        return false;
    }
    (0..n).all(|v| g.components_excluding(1 << v).len() == 1)
}

/// Maximum edge count over labeled bipartite graphs on `n` vertices with no
/// cycle of length 0 mod 4: backtracking over every bipartition and every
/// cross-edge subset, pruned only by the remaining-edges bound. Independent
/// of the isomorph-free search engine.
pub fn max_edges_bipartite_no_zero_mod4(n: usize) -> usize {
    assert!(n >= 1 && n <= 12, "labeled backtracking oracle is for tiny orders");
    if n == 1 {
        return 0;
    }
    let rc = ResidueClass::zero_mod_four();
    let mut best = 0usize;
    // Vertex 0 always on side 0; other assignments enumerate bipartitions.
    for colmask in 0u32..(1 << (n - 1)) {
        let side = |v: usize| v > 0 && colmask >> (v - 1) & 1 == 1;
        let allowed: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&(u, v)| side(u) != side(v))
            .collect();
        let mut g = Graph::empty(n).expect("small order");
        descend(&mut g, &allowed, 0, 0, &rc, &mut best);
    }
    best
}

fn descend(
    g: &mut Graph,
    allowed: &[(usize, usize)],
    at: usize,
    count: usize,
    rc: &ResidueClass,
    best: &mut usize,
) {
    if count + (allowed.len() - at) <= *best {
        return;
    }
    if at == allowed.len() {
        *best = (*best).max(count);
        return;
    }
    let (u, v) = allowed[at];
    if !adds_bad_path(g, u, v, rc) {
        g.add_edge(u, v).expect("allowed edge");
        descend(g, allowed, at + 1, count + 1, rc, best);
        g.remove_edge(u, v);
    }
    descend(g, allowed, at + 1, count, rc, best);
}

/// Simple-path parity probe: is there a u-v path whose length would close a
/// cycle in `rc` if the edge (u, v) were added? Written directly against the
/// adjacency masks so it shares nothing with the production detector.
fn adds_bad_path(g: &Graph, u: usize, v: usize, rc: &ResidueClass) -> bool {
    fn walk(g: &Graph, cur: usize, target: usize, used: u64, len: usize, rc: &ResidueClass) -> bool {
        if cur == target {
            return rc.matches(len + 1);
        }
        for w in g.neighbors(cur) {
            if used >> w & 1 == 0 && walk(g, w, target, used | (1 << w), len + 1, rc) {
                return true;
            }
        }
        false
    }
    walk(g, u, v, 1 << u, 0, rc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_by_subsets() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(cycle_lengths_by_subsets(&k4), vec![3, 3, 3, 3, 4, 4, 4]);
        assert!(has_cycle_mod_by_subsets(&k4, &ResidueClass::zero_mod_four()));
    }

    #[test]
    fn c5_by_subsets() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(cycle_lengths_by_subsets(&c5), vec![5]);
        assert!(!has_cycle_mod_by_subsets(&c5, &ResidueClass::zero_mod_four()));
    }

    #[test]
    fn two_connectivity() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(is_two_connected(&c4));
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!is_two_connected(&path));
        let bowtie =
            Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!is_two_connected(&bowtie));
    }

    #[test]
    fn tiny_bipartite_maxima() {
        assert_eq!(max_edges_bipartite_no_zero_mod4(4), 3);
        assert_eq!(max_edges_bipartite_no_zero_mod4(5), 4);
        assert_eq!(max_edges_bipartite_no_zero_mod4(6), 6);
    }
}
