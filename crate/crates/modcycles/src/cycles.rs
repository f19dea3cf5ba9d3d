//! Simple-cycle enumeration and detection by length residue class.
//!
//! The enumerator is a back-edge DFS with canonical start-vertex
//! normalization: every simple cycle is reported exactly once, written with
//! its smallest vertex first and its smaller neighbor second, in a
//! deterministic order. Decision queries short-circuit on the first witness;
//! a `None` answer always means a completed enumeration, never a truncated
//! one — truncation is an explicit error.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default ceiling on enumerated cycles (and on path probes for the
/// through-edge query). Exceeding it is an error, never silent truncation.
pub const DEFAULT_CYCLE_CAP: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    /// The enumeration budget ran out. `partial` holds whatever was found
    /// before the cap (only populated by [`enumerate_cycles`]); it must not
    /// be used to justify a "no cycle" answer.
    #[error("cycle enumeration cap of {cap} exceeded")]
    CapExceeded { cap: u64, partial: Vec<CycleWitness> },
    #[error("edge ({u}, {v}) is not present in the graph")]
    EdgeAbsent { u: usize, v: usize },
    #[error("invalid residue class {ell} mod {k}: need k >= 2 and ell < k")]
    BadResidue { ell: usize, k: usize },
}

/// A residue class `ell mod k` of cycle lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueClass {
    ell: usize,
    k: usize,
}

impl ResidueClass {
    pub fn new(ell: usize, k: usize) -> Result<Self, CycleError> {
        if k < 2 || ell >= k {
            return Err(CycleError::BadResidue { ell, k });
        }
        Ok(ResidueClass { ell, k })
    }

    /// The class this library is mostly about: length divisible by four.
    pub fn zero_mod_four() -> Self {
        ResidueClass { ell: 0, k: 4 }
    }

    pub fn residue(&self) -> usize {
        self.ell
    }

    pub fn modulus(&self) -> usize {
        self.k
    }

    pub fn matches(&self, length: usize) -> bool {
        length % self.k == self.ell
    }
}

impl std::fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} mod {}", self.ell, self.k)
    }
}

/// A concrete simple cycle: the vertex sequence in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleWitness {
    vertices: Vec<usize>,
}

impl CycleWitness {
    /// Normalizes an arbitrary cyclic vertex sequence: smallest vertex
    /// first, then the direction that puts its smaller neighbor second.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        assert!(vertices.len() >= 3, "a cycle has at least 3 vertices");
        let min_pos = (0..vertices.len())
            .min_by_key(|&i| vertices[i])
            .expect("nonempty");
        vertices.rotate_left(min_pos);
        if vertices[1] > vertices[vertices.len() - 1] {
            vertices[1..].reverse();
        }
        CycleWitness { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True iff this is a genuine simple cycle of `g`: all vertices
    /// distinct and consecutive ones (cyclically) adjacent.
    pub fn is_cycle_of(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.len() < 3 {
            return false;
        }
        let mut seen = 0u64;
        for &v in vs {
            if v >= g.n() || seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        (0..vs.len()).all(|i| g.has_edge(vs[i], vs[(i + 1) % vs.len()]))
    }
}

impl std::fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", strs.join(" "))
    }
}

/// Counts of simple cycles per length residue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueHistogram {
    pub k: usize,
    pub counts: Vec<u64>,
    pub total: u64,
}

/// Options for [`has_cycle_mod_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DetectOptions {
    pub cap: u64,
    /// When the target class is 0 mod 4 and `e > 3n - 6` (so the graph is
    /// dense enough to be non-planar, which forces such a cycle), ignore the
    /// cap: the first witness in DFS order exists and will be found. This
    /// never changes a decision, only turns a possible cap error into a yes.
    pub euler_fast_path: bool,
}

impl Default for DetectOptions {
    fn default() -> Self {
        DetectOptions { cap: DEFAULT_CYCLE_CAP, euler_fast_path: false }
    }
}

/// DFS over all simple cycles; calls `f` once per cycle with the path slice
/// (smallest vertex first, smaller neighbor second). `f` returns `false` to
/// stop early. Returns the number of cycles visited, or `None` if the
/// visitor stopped the walk.
fn visit_cycles<F: FnMut(&[usize]) -> bool>(g: &Graph, cap: u64, f: F) -> Result<u64, u64> {
    struct Walk<'a, F> {
        g: &'a Graph,
        path: Vec<usize>,
        used: u64,
        count: u64,
        cap: u64,
        f: F,
    }
    enum Stop {
        Visitor,
        Cap,
    }
    impl<F: FnMut(&[usize]) -> bool> Walk<'_, F> {
        fn go(&mut self, s: usize, v: usize) -> Result<(), Stop> {
            let mask = self.g.neighbors_mask(v);
            if mask >> s & 1 == 1 && self.path.len() >= 3 && self.path[1] < v {
                if self.count >= self.cap {
                    return Err(Stop::Cap);
                }
                self.count += 1;
                if !(self.f)(&self.path) {
                    return Err(Stop::Visitor);
                }
            }
            let mut rest = mask & !self.used;
            // Only extend through vertices above the start: each cycle is
            // then generated exactly once from its smallest vertex.
            rest &= !((1u64 << s) | ((1u64 << s) - 1));
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                self.path.push(u);
                self.used |= 1 << u;
                let r = self.go(s, u);
                self.path.pop();
                self.used &= !(1u64 << u);
                r?;
            }
            Ok(())
        }
    }
    let mut w = Walk { g, path: Vec::new(), used: 0, count: 0, cap, f };
    for s in 0..g.n() {
        w.path.clear();
        w.path.push(s);
        w.used = 1 << s;
        match w.go(s, s) {
            Ok(()) => {}
            Err(Stop::Visitor) => return Err(w.count),
            Err(Stop::Cap) => return Err(w.count),
        }
    }
    Ok(w.count)
}

/// All simple cycles, each exactly once, in deterministic DFS order.
pub fn enumerate_cycles(g: &Graph, cap: u64) -> Result<Vec<CycleWitness>, CycleError> {
    let mut out = Vec::new();
    let mut capped = false;
    let r = visit_cycles(g, cap, |path| {
        out.push(CycleWitness { vertices: path.to_vec() });
        true
    });
    if r.is_err() {
        capped = true;
    }
    if capped {
        Err(CycleError::CapExceeded { cap, partial: out })
    } else {
        Ok(out)
    }
}

/// Is there a simple cycle of length in `rc`? Returns the first witness in
/// enumeration order, or a certified `None` after complete enumeration.
pub fn has_cycle_mod(g: &Graph, rc: &ResidueClass) -> Result<Option<CycleWitness>, CycleError> {
    has_cycle_mod_with(g, rc, &DetectOptions::default())
}

pub fn has_cycle_mod_with(
    g: &Graph,
    rc: &ResidueClass,
    opts: &DetectOptions,
) -> Result<Option<CycleWitness>, CycleError> {
    let mut cap = opts.cap;
    if opts.euler_fast_path
        && *rc == ResidueClass::zero_mod_four()
        && g.n() >= 3
        && g.edge_count() > 3 * g.n() - 6
    {
        // Existence is guaranteed, so the DFS may run to its first hit.
        cap = u64::MAX;
    }
    let mut found: Option<CycleWitness> = None;
    let r = visit_cycles(g, cap, |path| {
        if rc.matches(path.len()) {
            found = Some(CycleWitness { vertices: path.to_vec() });
            false
        } else {
            true
        }
    });
    match (r, found) {
        (_, Some(w)) => Ok(Some(w)),
        (Ok(_), None) => Ok(None),
        (Err(_), None) => Err(CycleError::CapExceeded { cap, partial: Vec::new() }),
    }
}

/// Per-residue counts of all simple cycle lengths mod `k`.
pub fn residue_histogram(g: &Graph, k: usize, cap: u64) -> Result<ResidueHistogram, CycleError> {
    if k < 2 {
        return Err(CycleError::BadResidue { ell: 0, k });
    }
    let mut counts = vec![0u64; k];
    let total = visit_cycles(g, cap, |path| {
        counts[path.len() % k] += 1;
        true
    })
    .map_err(|_| CycleError::CapExceeded { cap, partial: Vec::new() })?;
    Ok(ResidueHistogram { k, counts, total })
}

/// Is there a simple cycle through the edge `(u, v)` with length in `rc`?
/// Enumerates simple `u`-`v` paths avoiding the edge itself and tests
/// `path length + 1` against the class.
pub fn has_cycle_mod_through_edge(
    g: &Graph,
    u: usize,
    v: usize,
    rc: &ResidueClass,
) -> Result<Option<CycleWitness>, CycleError> {
    if !g.has_edge(u, v) {
        return Err(CycleError::EdgeAbsent { u, v });
    }
    let mut probes = 0u64;
    let mut stack = Vec::new();
    let found = paths_dfs(g, u, v, (u, v), &mut (1u64 << u), &mut stack, rc, &mut probes);
    match found {
        PathSearch::Found(mut path) => {
            // stack holds u..v exclusive of v itself; rebuild the cycle.
            path.push(v);
            let mut cyc = vec![u];
            cyc.extend(path);
            Ok(Some(CycleWitness::new(cyc)))
        }
        PathSearch::Exhausted => Ok(None),
        PathSearch::Capped => {
            Err(CycleError::CapExceeded { cap: DEFAULT_CYCLE_CAP, partial: Vec::new() })
        }
    }
}

enum PathSearch {
    Found(Vec<usize>),
    Exhausted,
    Capped,
}

#[allow(clippy::too_many_arguments)]
fn paths_dfs(
    g: &Graph,
    cur: usize,
    target: usize,
    skip_edge: (usize, usize),
    used: &mut u64,
    stack: &mut Vec<usize>,
    rc: &ResidueClass,
    probes: &mut u64,
) -> PathSearch {
    for w in g.neighbors(cur) {
        let is_skipped = (cur, w) == skip_edge || (w, cur) == skip_edge;
        if is_skipped {
            continue;
        }
        if w == target {
            *probes += 1;
            if *probes > DEFAULT_CYCLE_CAP {
                return PathSearch::Capped;
            }
            // Path u..cur plus edge cur-target: length = stack.len() + 1,
            // closing edge makes the cycle one longer.
            if rc.matches(stack.len() + 2) {
                return PathSearch::Found(stack.clone());
            }
            continue;
        }
        if *used >> w & 1 == 1 {
            continue;
        }
        *used |= 1 << w;
        stack.push(w);
        let r = paths_dfs(g, w, target, skip_edge, used, stack, rc, probes);
        stack.pop();
        *used &= !(1u64 << w);
        match r {
            PathSearch::Exhausted => {}
            other => return other,
        }
    }
    PathSearch::Exhausted
}

/// Would adding the (absent) edge `(u, v)` create a cycle of length in `rc`?
/// Used by the search engine to prune augmentations without building copies.
pub(crate) fn adding_edge_creates_cycle_mod(g: &Graph, u: usize, v: usize, rc: &ResidueClass) -> bool {
    let mut probes = 0u64;
    let mut stack = Vec::new();
    matches!(
        paths_dfs(g, u, v, (u, v), &mut (1u64 << u), &mut stack, rc, &mut probes),
        PathSearch::Found(_)
    )
}

/// Would adding the edge `(u, v)` create an odd cycle, i.e. break
/// bipartiteness? BFS 2-coloring of the component containing `u`.
pub(crate) fn adding_edge_creates_odd_cycle(g: &Graph, u: usize, v: usize) -> bool {
    let mut color = vec![u8::MAX; g.n()];
    color[u] = 0;
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(w) = queue.pop_front() {
        for x in g.neighbors(w) {
            if color[x] == u8::MAX {
                color[x] = 1 - color[w];
                queue.push_back(x);
            }
        }
    }
    color[v] == 0
}

/// A minimum-length witness of the class, or a certified `None`.
pub fn shortest_cycle_mod(
    g: &Graph,
    rc: &ResidueClass,
) -> Result<Option<CycleWitness>, CycleError> {
    let mut best: Option<CycleWitness> = None;
    let cap = DEFAULT_CYCLE_CAP;
    let r = visit_cycles(g, cap, |path| {
        if rc.matches(path.len()) && best.as_ref().is_none_or(|b| path.len() < b.len()) {
            best = Some(CycleWitness { vertices: path.to_vec() });
        }
        true
    });
    match r {
        Ok(_) => Ok(best),
        Err(_) => Err(CycleError::CapExceeded { cap, partial: Vec::new() }),
    }
}
