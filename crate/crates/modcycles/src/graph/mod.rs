//! Simple undirected graphs on at most 64 vertices.
//!
//! Vertices are `0..n` and adjacency is kept as one 64-bit mask per vertex,
//! so edge tests are constant time. Graphs are immutable in normal use;
//! the search engine works on explicit copies via [`Graph::with_edge`].

mod blocks;
mod canon;
mod edgelist;
mod graph6;

pub use blocks::{block_decomposition, BlockDecomposition};
pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use edgelist::{from_edgelist, to_edgelist};
pub use graph6::{from_graph6, to_graph6};

use thiserror::Error;

/// Hard cap on the graph order. One `u64` adjacency word per vertex.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("malformed graph6: {0}")]
    BadGraph6(String),
    #[error("malformed edge list: {0}")]
    BadEdgeList(String),
}

/// A simple undirected graph: no loops, no parallel edges, vertex ids `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// out-of-range endpoints and self-loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    /// Copy with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Copy with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbor mask of `v` (bit `u` set iff `{u,v}` is an edge).
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above_u = if u + 1 >= 64 { 0 } else { !0u64 << (u + 1) };
            for v in BitIter(self.adj[u] & above_u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Non-edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("permutation stays in range");
        }
        g
    }

    /// Vertex sets of connected components, each sorted, ordered by smallest member.
    /// Vertices in `excluded` (bit mask) are treated as deleted.
    pub fn components_excluding(&self, excluded: u64) -> Vec<Vec<usize>> {
        let mut seen = excluded;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = 1u64 << s;
            while frontier != 0 {
                let mut next = 0u64;
                for v in BitIter(frontier) {
                    next |= self.adj[v] & !seen & !comp;
                }
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            comps.push(BitIter(comp).collect());
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_excluding(0)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Number of edges incident to at least one vertex of `us`.
    /// Satisfies `rho(U) + e(G - U) = e(G)`.
    pub fn rho(&self, us: &[usize]) -> Result<usize, GraphError> {
        let mut mask = 0u64;
        for &u in us {
            self.check_vertex(u)?;
            mask |= 1 << u;
        }
        let mut count = 0;
        for (u, v) in self.edges() {
            if mask >> u & 1 == 1 || mask >> v & 1 == 1 {
                count += 1;
            }
        }
        Ok(count)
    }

    /// All pairs `{x, y}` whose removal disconnects the graph, sorted
    /// lexicographically. Requires a connected input.
    pub fn find_2cuts(&self) -> Result<Vec<(usize, usize)>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut cuts = Vec::new();
        for x in 0..self.n {
            for y in x + 1..self.n {
                let excluded = (1u64 << x) | (1u64 << y);
                if self.components_excluding(excluded).len() >= 2 {
                    cuts.push((x, y));
                }
            }
        }
        Ok(cuts)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, e={}, {:?})", self.n, self.edge_count(), self.edges())
    }
}

/// Iterates set bit positions of a u64, ascending.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}
