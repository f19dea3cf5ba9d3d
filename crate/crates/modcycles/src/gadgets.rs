//! Parameterized builders for the constructions the library studies: theta
//! graphs, adjustable paths, odd necklaces, parity-classified K4
//! subdivisions, the two terminal blocks T1 and T2, the fixed extremal
//! blocks L8 and L13, the extremal family G_n, the 2-cut switching
//! transformation, and bridge geometry (span and crossing) on cycles.
//!
//! Every builder labels vertices deterministically, so repeated calls
//! produce byte-identical graphs.

use crate::cycles::CycleWitness;
use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("invalid gadget parameters: {0}")]
    InvalidSpec(String),
    #[error("{{{x}, {y}}} is not a 2-cut of the graph")]
    NotACut { x: usize, y: usize },
    #[error("the given vertex set is not a component of g - {{x, y}}")]
    NotAComponent,
    #[error("not a bridge of the cycle: {0}")]
    NotABridge(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(msg: impl Into<String>) -> GadgetError {
    GadgetError::InvalidSpec(msg.into())
}

// ---------------------------------------------------------------------------
// Theta graphs
// ---------------------------------------------------------------------------

/// Three internally disjoint x-y paths of the given lengths. At most one
/// length may be 1 (two direct edges would be parallel).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaSpec {
    pub lengths: [usize; 3],
}

#[derive(Debug, Clone)]
pub struct ThetaGraph {
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
    pub lengths: [usize; 3],
}

impl ThetaSpec {
    pub fn validate(&self) -> Result<(), GadgetError> {
        if self.lengths.iter().any(|&l| l == 0) {
            return Err(invalid("theta path lengths must be at least 1"));
        }
        if self.lengths.iter().filter(|&&l| l == 1).count() > 1 {
            return Err(invalid("at most one theta path may have length 1"));
        }
        Ok(())
    }

    pub fn all_even(&self) -> bool {
        self.lengths.iter().all(|&l| l % 2 == 0)
    }
}

/// Builds the theta graph with `x = 0`, `y = 1`; internal vertices of the
/// three paths are numbered consecutively from 2.
pub fn build_theta(spec: &ThetaSpec) -> Result<ThetaGraph, GadgetError> {
    spec.validate()?;
    let n = spec.lengths.iter().sum::<usize>() - 1;
    let mut g = Graph::empty(n)?;
    let (x, y) = (0, 1);
    let mut next = 2;
    for &len in &spec.lengths {
        add_path_between(&mut g, x, y, len, &mut next)?;
    }
    debug_assert_eq!(g.edge_count(), spec.lengths.iter().sum::<usize>());
    Ok(ThetaGraph { graph: g, x, y, lengths: spec.lengths })
}

/// Connects `a` to `b` with a path of `len` edges, taking `len - 1` fresh
/// internal labels from `next`.
fn add_path_between(
    g: &mut Graph,
    a: usize,
    b: usize,
    len: usize,
    next: &mut usize,
) -> Result<(), GraphError> {
    let mut prev = a;
    for _ in 0..len - 1 {
        g.add_edge(prev, *next)?;
        prev = *next;
        *next += 1;
    }
    g.add_edge(prev, b)
}

// ---------------------------------------------------------------------------
// Adjustable paths
// ---------------------------------------------------------------------------

/// An odd cycle with two disjoint (possibly trivial) tails hanging from it.
/// The two ends are then joined by paths of both parities: the tails plus
/// either arc of the odd cycle between the attachment points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjustablePathSpec {
    /// Length of the tail ending at `x` (0 puts `x` on the cycle).
    pub tail1: usize,
    /// Odd cycle length, at least 3.
    pub cycle_len: usize,
    /// Length of the tail ending at `y` (0 puts `y` on the cycle).
    pub tail2: usize,
    /// Cycle distance between the two attachment points, `1..cycle_len`.
    /// A zero gap would merge the attachments and lose one parity, so it
    /// is rejected.
    pub attach_gap: usize,
}

#[derive(Debug, Clone)]
pub struct AdjustablePath {
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
    /// Minimum even and odd x-y path lengths.
    pub min_even_path: usize,
    pub min_odd_path: usize,
}

impl AdjustablePathSpec {
    pub fn validate(&self) -> Result<(), GadgetError> {
        if self.cycle_len < 3 || self.cycle_len % 2 == 0 {
            return Err(invalid(format!(
                "adjustable path needs an odd cycle of length >= 3, got {}",
                self.cycle_len
            )));
        }
        if self.attach_gap == 0 || self.attach_gap >= self.cycle_len {
            return Err(invalid(format!(
                "attachment gap must be in 1..{}, got {}",
                self.cycle_len, self.attach_gap
            )));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.cycle_len + self.tail1 + self.tail2
    }
}

/// Cycle vertices are `0..cycle_len` (ring order), the first tail occupies
/// the next `tail1` labels ending at `x`, the second the following `tail2`
/// labels ending at `y`. With trivial tails, `x` is cycle vertex 0 and `y`
/// is cycle vertex `attach_gap`.
pub fn build_adjustable_path(spec: &AdjustablePathSpec) -> Result<AdjustablePath, GadgetError> {
    spec.validate()?;
    let m = spec.cycle_len;
    let n = spec.order();
    let mut g = Graph::empty(n)?;
    for i in 0..m {
        g.add_edge(i, (i + 1) % m)?;
    }
    let a1 = 0;
    let a2 = spec.attach_gap;
    let mut next = m;
    let x = attach_tail(&mut g, a1, spec.tail1, &mut next)?;
    let y = attach_tail(&mut g, a2, spec.tail2, &mut next)?;
    let arc_a = spec.attach_gap;
    let arc_b = m - spec.attach_gap;
    let (even_arc, odd_arc) = if arc_a % 2 == 0 { (arc_a, arc_b) } else { (arc_b, arc_a) };
    Ok(AdjustablePath {
        graph: g,
        x,
        y,
        min_even_path: spec.tail1 + spec.tail2 + even_arc,
        min_odd_path: spec.tail1 + spec.tail2 + odd_arc,
    })
}

/// Grows a tail of `len` edges from `at`; returns the far end (or `at` for
/// a trivial tail).
fn attach_tail(
    g: &mut Graph,
    at: usize,
    len: usize,
    next: &mut usize,
) -> Result<usize, GraphError> {
    let mut prev = at;
    for _ in 0..len {
        g.add_edge(prev, *next)?;
        prev = *next;
        *next += 1;
    }
    Ok(prev)
}

// ---------------------------------------------------------------------------
// Odd necklaces
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct Necklace {
    pub graph: Graph,
    /// The three junction vertices the adjustable paths are chained through.
    pub junctions: [usize; 3],
    /// Vertex set of each chained adjustable path (including its two
    /// junctions), sorted ascending.
    pub parts: [Vec<usize>; 3],
}

/// Chains three adjustable paths cyclically: R1 from x1 to x2, R2 from x2 to
/// x3, R3 from x3 back to x1, sharing only the junctions.
pub fn build_necklace(
    r1: &AdjustablePathSpec,
    r2: &AdjustablePathSpec,
    r3: &AdjustablePathSpec,
) -> Result<Necklace, GadgetError> {
    let specs = [r1, r2, r3];
    for s in &specs {
        s.validate()?;
    }
    let n = specs.iter().map(|s| s.order()).sum::<usize>() - 3;
    let mut g = Graph::empty(n)?;
    let mut junctions = [0usize; 3];
    let mut parts: [Vec<usize>; 3] = Default::default();
    let mut next = 0usize;
    // First chain each path with fresh labels, remembering its (x, y);
    // junction i is path i's x, and path i's y is identified with
    // junction i+1 by construction order.
    let mut prev_y: Option<usize> = None;
    let mut first_x = 0;
    for (i, spec) in specs.iter().enumerate() {
        let part = build_adjustable_path(spec)?;
        let pn = part.graph.n();
        // Map part labels into the assembly: x reuses the previous y.
        let mut map = vec![usize::MAX; pn];
        if let Some(py) = prev_y {
            map[part.x] = py;
        }
        if i == 2 {
            map[part.y] = first_x;
        }
        for v in 0..pn {
            if map[v] == usize::MAX {
                map[v] = next;
                next += 1;
            }
        }
        for (u, v) in part.graph.edges() {
            g.add_edge(map[u], map[v])?;
        }
        if i == 0 {
            first_x = map[part.x];
        }
        junctions[i] = map[part.x];
        prev_y = Some(map[part.y]);
        let mut members = map;
        members.sort_unstable();
        parts[i] = members;
    }
    Ok(Necklace { graph: g, junctions, parts })
}

// ---------------------------------------------------------------------------
// K4 subdivisions
// ---------------------------------------------------------------------------

/// Path lengths replacing the six K4 edges, indexed in the fixed order
/// (0,1), (0,2), (0,3), (1,2), (1,3), (2,3) over branch vertices 0..4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct K4SubdivisionSpec {
    pub lengths: [usize; 6],
}

pub const K4_EDGE_ORDER: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Parity patterns a K4 subdivision can realize: all paths of some triangle
/// of the K4 even/odd, or all paths of some 4-cycle even/odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ParityPattern {
    TriangleEven,
    TriangleOdd,
    FourCycleEven,
    FourCycleOdd,
}

#[derive(Debug, Clone)]
pub struct K4Subdivision {
    pub graph: Graph,
    pub branch_vertices: [usize; 4],
    /// All parity patterns realized, sorted; empty when no triangle or
    /// 4-cycle of the K4 is parity-pure.
    pub patterns: Vec<ParityPattern>,
}

impl K4SubdivisionSpec {
    pub fn validate(&self) -> Result<(), GadgetError> {
        if self.lengths.iter().any(|&l| l == 0) {
            return Err(invalid("subdivision path lengths must be at least 1"));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        4 + self.lengths.iter().map(|&l| l - 1).sum::<usize>()
    }

    /// Triangles of K4 as index triples into [`K4_EDGE_ORDER`].
    const TRIANGLES: [[usize; 3]; 4] = [[0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5]];
    /// 4-cycles of K4 as index quadruples into [`K4_EDGE_ORDER`].
    const FOUR_CYCLES: [[usize; 4]; 3] = [[0, 3, 5, 2], [0, 4, 5, 1], [1, 3, 4, 2]];

    pub fn patterns(&self) -> Vec<ParityPattern> {
        let mut out = Vec::new();
        let even = |idx: &[usize]| idx.iter().all(|&i| self.lengths[i] % 2 == 0);
        let odd = |idx: &[usize]| idx.iter().all(|&i| self.lengths[i] % 2 == 1);
        if Self::TRIANGLES.iter().any(|t| even(t)) {
            out.push(ParityPattern::TriangleEven);
        }
        if Self::TRIANGLES.iter().any(|t| odd(t)) {
            out.push(ParityPattern::TriangleOdd);
        }
        if Self::FOUR_CYCLES.iter().any(|c| even(c)) {
            out.push(ParityPattern::FourCycleEven);
        }
        if Self::FOUR_CYCLES.iter().any(|c| odd(c)) {
            out.push(ParityPattern::FourCycleOdd);
        }
        out
    }
}

/// Branch vertices are 0..4; internal path vertices take labels from 4 up,
/// path by path in [`K4_EDGE_ORDER`].
pub fn build_k4_subdivision(spec: &K4SubdivisionSpec) -> Result<K4Subdivision, GadgetError> {
    spec.validate()?;
    let mut g = Graph::empty(spec.order())?;
    let mut next = 4;
    for (i, &(a, b)) in K4_EDGE_ORDER.iter().enumerate() {
        add_path_between(&mut g, a, b, spec.lengths[i], &mut next)?;
    }
    Ok(K4Subdivision { graph: g, branch_vertices: [0, 1, 2, 3], patterns: spec.patterns() })
}

// ---------------------------------------------------------------------------
// T1, T2, L8, L13, G_n
// ---------------------------------------------------------------------------

/// A graph with two designated terminal vertices.
#[derive(Debug, Clone)]
pub struct MarkedPair {
    pub graph: Graph,
    pub x: usize,
    pub y: usize,
}

/// The triangle with two marked vertices.
pub fn build_t1() -> MarkedPair {
    let graph = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).expect("triangle");
    MarkedPair { graph, x: 0, y: 1 }
}

/// A 6-cycle 0..6 with the chord 1-5 joining the two neighbors of `x = 0`
/// (a chord of span 2); `y = 3` sits at distance 3 from `x`. Its cycles
/// have lengths 3, 5, and 6, and it offers x-y paths of lengths 3 and 4.
pub fn build_t2() -> MarkedPair {
    let graph =
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 5)])
            .expect("6-cycle with chord");
    MarkedPair { graph, x: 0, y: 3 }
}

/// The fixed 8-vertex, 11-edge extremal block.
pub fn build_l8() -> Graph {
    Graph::from_edges(
        8,
        [
            (0, 1),
            (0, 2),
            (0, 4),
            (2, 3),
            (2, 4),
            (3, 6),
            (1, 6),
            (4, 5),
            (5, 6),
            (4, 7),
            (5, 7),
        ],
    )
    .expect("fixed edge list")
}

/// The fixed 13-vertex, 19-edge extremal block: two T2 gadgets
/// T2(x1=0, y1=3) on 0..6 and T2(x2=6, y2=9) on 6..12, a center vertex 12,
/// and the five connector edges y1-y2, y1-c, c-x2, x1-c, c-y2.
pub fn build_l13() -> Graph {
    let mut edges = Vec::new();
    for base in [0usize, 6] {
        edges.extend([
            (base, base + 1),
            (base + 1, base + 2),
            (base + 2, base + 3),
            (base + 3, base + 4),
            (base + 4, base + 5),
            (base + 5, base),
            (base + 1, base + 5),
        ]);
    }
    edges.extend([(3, 9), (3, 12), (12, 6), (0, 12), (12, 9)]);
    Graph::from_edges(13, edges).expect("fixed edge list")
}

/// The division chain behind the block structure of G_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnDecomposition {
    pub n: usize,
    pub q1: usize,
    pub r1: usize,
    pub q2: usize,
    pub r2: usize,
    pub q3: usize,
    pub r3: usize,
}

pub fn gn_decomposition(n: usize) -> Result<GnDecomposition, GadgetError> {
    if n < 2 {
        return Err(invalid(format!("G_n is defined for n >= 2, got {n}")));
    }
    let (q1, r1) = ((n - 1) / 12, (n - 1) % 12);
    let (q2, r2) = (r1 / 7, r1 % 7);
    let (q3, r3) = (r2 / 2, r2 % 2);
    Ok(GnDecomposition { n, q1, r1, q2, r2, q3, r3 })
}

impl GnDecomposition {
    pub fn block_count(&self) -> usize {
        self.q1 + self.q2 + self.q3 + self.r3
    }
}

/// The extremal construction: a chain of `q1` L13 blocks, `q2` L8 blocks,
/// `q3` triangles and `r3` single edges, consecutive blocks sharing one cut
/// vertex. Each new block is glued by identifying its lowest-labeled vertex
/// with the previous block's next-lowest vertex, so the chain and hence the
/// whole graph is reproducible. Has exactly `floor(19(n-1)/12)` edges and no
/// cycle of length 0 mod 4.
pub fn build_gn(n: usize) -> Result<Graph, GadgetError> {
    let dec = gn_decomposition(n)?;
    let k2 = Graph::from_edges(2, [(0, 1)]).expect("edge");
    let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).expect("triangle");
    let mut blocks: Vec<Graph> = Vec::new();
    for _ in 0..dec.q1 {
        blocks.push(build_l13());
    }
    for _ in 0..dec.q2 {
        blocks.push(build_l8());
    }
    for _ in 0..dec.q3 {
        blocks.push(k3.clone());
    }
    for _ in 0..dec.r3 {
        blocks.push(k2.clone());
    }
    let mut g = Graph::empty(n)?;
    let mut next = 0usize;
    // glue_at: global vertex the next block's local 0 is identified with.
    let mut glue_at: Option<usize> = None;
    for block in &blocks {
        let bn = block.n();
        let mut map = vec![usize::MAX; bn];
        let mut exit_local = 0;
        if let Some(at) = glue_at {
            map[0] = at;
            exit_local = 1;
        }
        for v in 0..bn {
            if map[v] == usize::MAX {
                map[v] = next;
                next += 1;
            }
        }
        for (u, v) in block.edges() {
            g.add_edge(map[u], map[v])?;
        }
        glue_at = Some(map[exit_local]);
    }
    debug_assert_eq!(next, n, "block chain covers exactly n vertices");
    Ok(g)
}

// ---------------------------------------------------------------------------
// Switching at a 2-cut
// ---------------------------------------------------------------------------

/// Exchanges, inside one component `side` of `g - {x, y}`, every attachment
/// to `x` with an attachment to `y` and vice versa. Preserves the edge count
/// and the existence of cycles of length 0 mod 4; applying it twice with the
/// same arguments restores the original graph.
pub fn switch_at_2cut(
    g: &Graph,
    x: usize,
    y: usize,
    side: &[usize],
) -> Result<Graph, GadgetError> {
    if x >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: x, n: g.n() }.into());
    }
    if y >= g.n() || x == y {
        return Err(GraphError::VertexOutOfRange { vertex: y, n: g.n() }.into());
    }
    let comps = g.components_excluding((1 << x) | (1 << y));
    if comps.len() < 2 {
        return Err(GadgetError::NotACut { x, y });
    }
    let mut sorted_side = side.to_vec();
    sorted_side.sort_unstable();
    sorted_side.dedup();
    if !comps.contains(&sorted_side) {
        return Err(GadgetError::NotAComponent);
    }
    let mut out = g.clone();
    for &z in &sorted_side {
        let had_x = g.has_edge(z, x);
        let had_y = g.has_edge(z, y);
        out.remove_edge(z, x);
        out.remove_edge(z, y);
        if had_y {
            out.add_edge(z, x)?;
        }
        if had_x {
            out.add_edge(z, y)?;
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Bridges: span and crossing
// ---------------------------------------------------------------------------

/// Checks the bridge condition for the path `p` (vertex sequence) against
/// the cycle `c` in `g`: nontrivial, consecutive vertices adjacent and all
/// distinct, edge-disjoint from the cycle, endpoints on the cycle, internal
/// vertices off it. Returns the cycle positions of the two endpoints.
fn validate_bridge(g: &Graph, c: &CycleWitness, p: &[usize]) -> Result<(usize, usize), GadgetError> {
    let bad = |msg: &str| GadgetError::NotABridge(msg.to_string());
    if !c.is_cycle_of(g) {
        return Err(bad("host cycle is not a cycle of the graph"));
    }
    if p.len() < 2 {
        return Err(bad("a bridge is a nontrivial path"));
    }
    let mut seen = 0u64;
    for &v in p {
        if v >= g.n() {
            return Err(bad("path vertex out of range"));
        }
        if seen >> v & 1 == 1 {
            return Err(bad("path repeats a vertex"));
        }
        seen |= 1 << v;
    }
    let on_cycle = |v: usize| c.vertices().iter().position(|&u| u == v);
    let cyc_len = c.len();
    for w in p.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(bad("path uses a missing edge"));
        }
        if let (Some(i), Some(j)) = (on_cycle(w[0]), on_cycle(w[1])) {
            let d = (i + cyc_len - j) % cyc_len;
            if d == 1 || d == cyc_len - 1 {
                return Err(bad("path shares an edge with the cycle"));
            }
        }
    }
    let first = on_cycle(p[0]).ok_or_else(|| bad("endpoint not on the cycle"))?;
    let last = on_cycle(p[p.len() - 1]).ok_or_else(|| bad("endpoint not on the cycle"))?;
    for &v in &p[1..p.len() - 1] {
        if on_cycle(v).is_some() {
            return Err(bad("internal vertex lies on the cycle"));
        }
    }
    Ok((first, last))
}

/// The span of the bridge `p` on the cycle `c`: the shorter of the two arc
/// lengths between its endpoints. Always at most half the cycle length.
pub fn bridge_span(g: &Graph, c: &CycleWitness, p: &[usize]) -> Result<usize, GadgetError> {
    let (i, j) = validate_bridge(g, c, p)?;
    let d = (j + c.len() - i) % c.len();
    Ok(d.min(c.len() - d))
}

/// Whether two vertex-disjoint bridges interleave around the cycle. Bridges
/// sharing a vertex are never crossed.
pub fn bridges_crossed(
    g: &Graph,
    c: &CycleWitness,
    p1: &[usize],
    p2: &[usize],
) -> Result<bool, GadgetError> {
    let (a1, b1) = validate_bridge(g, c, p1)?;
    let (a2, b2) = validate_bridge(g, c, p2)?;
    if p1.iter().any(|v| p2.contains(v)) {
        return Ok(false);
    }
    // Normalize positions relative to a1 along the cycle orientation;
    // crossed iff exactly one endpoint of p2 falls strictly inside the
    // arc from a1 to b1.
    let m = c.len();
    let rel = |p: usize| (p + m - a1) % m;
    let split = rel(b1);
    let inside = |p: usize| {
        let r = rel(p);
        r > 0 && r < split
    };
    Ok(inside(a2) != inside(b2))
}
