//! Canonical labeling by iterated partition refinement with individualization
//! and backtracking. Two graphs are isomorphic iff their canonical forms are
//! byte-equal; the guarantee comes from exploring the full refinement tree
//! (with the usual duplicate-leaf pruning), not from hashing.

use super::{to_graph6, Graph};
use std::collections::HashMap;

/// Canonical serialization of a graph: the graph6 encoding of its
/// canonically relabeled copy. Byte equality decides isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_graph6(&self) -> &str {
        &self.0
    }

    pub fn into_graph6(self) -> String {
        self.0
    }
}

/// Canonical form alone; see [`canonical_labeling`] for the permutation too.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).1
}

/// Returns `(lab, form)` where `lab[v]` is the canonical position of vertex
/// `v` and `form` is the graph6 of `g.permuted(&lab)`.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, CanonicalForm) {
    let n = g.n();
    if n == 0 {
        return (Vec::new(), CanonicalForm(to_graph6(g)));
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors_mask(v)).collect();
    let mut cells = vec![(0..n).collect::<Vec<usize>>()];
    refine(&mut cells, &adj);
    let mut ctx = Ctx {
        adj: &adj,
        n,
        best: None,
        best_lab: Vec::new(),
        seen: HashMap::new(),
        path: Vec::new(),
    };
    search(&mut ctx, &cells);
    let lab = ctx.best_lab;
    let form = CanonicalForm(to_graph6(&g.permuted(&lab)));
    (lab, form)
}

struct Ctx<'a> {
    adj: &'a [u64],
    n: usize,
    best: Option<Vec<u64>>,
    best_lab: Vec<usize>,
    seen: HashMap<Vec<u64>, Vec<usize>>,
    path: Vec<usize>,
}

/// Splits cells by neighbor counts against every cell until equitable.
fn refine(cells: &mut Vec<Vec<usize>>, adj: &[u64]) {
    'restart: loop {
        let masks: Vec<u64> = cells.iter().map(|c| cell_mask(c)).collect();
        for ci in 0..cells.len() {
            if cells[ci].len() <= 1 {
                continue;
            }
            for &mask in &masks {
                let counts: Vec<u32> = cells[ci]
                    .iter()
                    .map(|&v| (adj[v] & mask).count_ones())
                    .collect();
                if counts.iter().any(|&c| c != counts[0]) {
                    // Stable split, subcells ordered by ascending count.
                    let mut groups: std::collections::BTreeMap<u32, Vec<usize>> =
                        std::collections::BTreeMap::new();
                    for (i, &v) in cells[ci].iter().enumerate() {
                        groups.entry(counts[i]).or_default().push(v);
                    }
                    let replacement: Vec<Vec<usize>> = groups.into_values().collect();
                    cells.splice(ci..=ci, replacement);
                    continue 'restart;
                }
            }
        }
        return;
    }
}

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0u64, |m, &v| m | (1 << v))
}

/// Explores the individualization tree. Returns `Some(d)` to signal that the
/// ancestor at depth `d` should move on to its next child.
fn search(ctx: &mut Ctx, cells: &[Vec<usize>]) -> Option<usize> {
    // Target: first smallest cell with at least two vertices.
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() >= 2)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);

    let Some(ti) = target else {
        return handle_leaf(ctx, cells);
    };

    let my_depth = ctx.path.len();
    let branch = cells[ti].clone();
    for v in branch {
        let mut child: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
        for (i, c) in cells.iter().enumerate() {
            if i == ti {
                child.push(vec![v]);
                child.push(c.iter().copied().filter(|&u| u != v).collect());
            } else {
                child.push(c.clone());
            }
        }
        refine(&mut child, ctx.adj);
        ctx.path.push(v);
        let signal = search(ctx, &child);
        ctx.path.pop();
        if let Some(d) = signal {
            if d < my_depth {
                return Some(d);
            }
            // d == my_depth: skip the remaining subtree of this child only.
        }
    }
    None
}

fn handle_leaf(ctx: &mut Ctx, cells: &[Vec<usize>]) -> Option<usize> {
    let n = ctx.n;
    let mut lab = vec![0usize; n];
    for (pos, cell) in cells.iter().enumerate() {
        lab[cell[0]] = pos;
    }
    // Column-major upper-triangle bits, earliest pair in the highest bit,
    // so Vec<u64> ordering equals bitstring ordering.
    let nbits = n * (n - 1) / 2;
    let mut image = vec![0u64; nbits.div_ceil(64).max(1)];
    let mut orig_at = vec![0usize; n];
    for (v, &p) in lab.iter().enumerate() {
        orig_at[p] = v;
    }
    let mut b = 0;
    for j in 1..n {
        for i in 0..j {
            if ctx.adj[orig_at[i]] >> orig_at[j] & 1 == 1 {
                image[b / 64] |= 1u64 << (63 - b % 64);
            }
            b += 1;
        }
    }
    if ctx.best.as_ref().is_none_or(|best| image > *best) {
        ctx.best = Some(image.clone());
        ctx.best_lab = lab;
    }
    match ctx.seen.entry(image) {
        std::collections::hash_map::Entry::Occupied(prev) => {
            // Same image seen on another branch: an automorphism maps that
            // branch to this one, so back up to the fork point.
            let prior = prev.get();
            let d = ctx
                .path
                .iter()
                .zip(prior.iter())
                .position(|(a, b)| a != b)
                .unwrap_or(prior.len().min(ctx.path.len()));
            Some(d)
        }
        std::collections::hash_map::Entry::Vacant(slot) => {
            slot.insert(ctx.path.clone());
            None
        }
    }
}
