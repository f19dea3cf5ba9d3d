//! Biconnected decomposition: the blocks (maximal 2-connected subgraphs and
//! bridge edges) and cut vertices of a graph, via the classic low-link DFS.

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, each sorted ascending; blocks ordered by
    /// smallest contained vertex, ties broken lexicographically. Every edge
    /// lies in exactly one block. Isolated vertices belong to no block.
    pub blocks: Vec<Vec<usize>>,
    /// Vertices lying in at least two blocks, sorted ascending.
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    /// Edges of block `i`: since two blocks share at most one vertex, these
    /// are exactly the edges induced on the block's vertex set.
    pub fn block_edges(&self, g: &Graph, i: usize) -> Vec<(usize, usize)> {
        let vs = &self.blocks[i];
        let mut out = Vec::new();
        for (a, &u) in vs.iter().enumerate() {
            for &v in &vs[a + 1..] {
                if g.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The block `i` as a standalone graph with vertices relabeled `0..k`
    /// in sorted order of their original ids.
    pub fn block_subgraph(&self, g: &Graph, i: usize) -> Graph {
        let vs = &self.blocks[i];
        let index = |u: usize| vs.binary_search(&u).expect("vertex is in block");
        Graph::from_edges(
            vs.len(),
            self.block_edges(g, i).into_iter().map(|(u, v)| (index(u), index(v))),
        )
        .expect("block subgraph is valid")
    }
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    fn dfs(
        g: &Graph,
        v: usize,
        parent: Option<usize>,
        disc: &mut [usize],
        low: &mut [usize],
        timer: &mut usize,
        edge_stack: &mut Vec<(usize, usize)>,
        blocks: &mut Vec<Vec<usize>>,
    ) {
        disc[v] = *timer;
        low[v] = *timer;
        *timer += 1;
        let mut skipped_parent = false;
        for w in g.neighbors(v) {
            if Some(w) == parent && !skipped_parent {
                // One parent edge only; simple graphs have no parallels anyway.
                skipped_parent = true;
                continue;
            }
            if disc[w] == usize::MAX {
                edge_stack.push((v, w));
                dfs(g, w, Some(v), disc, low, timer, edge_stack, blocks);
                low[v] = low[v].min(low[w]);
                if low[w] >= disc[v] {
                    // v separates the subtree at w: pop one block.
                    let mut verts = 0u64;
                    while let Some(&(a, b)) = edge_stack.last() {
                        edge_stack.pop();
                        verts |= (1 << a) | (1 << b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    blocks.push(super::BitIter(verts).collect());
                }
            } else if disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        }
    }

    for root in 0..n {
        if disc[root] == usize::MAX {
            dfs(g, root, None, &mut disc, &mut low, &mut timer, &mut edge_stack, &mut blocks);
        }
    }

    blocks.sort();
    let mut seen_once = 0u64;
    let mut cut = 0u64;
    for b in &blocks {
        for &v in b {
            if seen_once >> v & 1 == 1 {
                cut |= 1 << v;
            }
            seen_once |= 1 << v;
        }
    }
    BlockDecomposition {
        blocks,
        cut_vertices: super::BitIter(cut).collect(),
    }
}
