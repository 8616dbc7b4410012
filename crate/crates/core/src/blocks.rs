//! Biconnected components, cut vertices, the block tree and block distance.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Cycle,
    CutEdge,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
    pub kind: BlockKind,
}

impl Block {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Blocks are numbered by their smallest edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<VertexId>,
}

/// Edge sets of the blocks of `g`, each sorted, ordered by smallest edge.
/// Works on disconnected graphs too; isolated vertices contribute nothing.
pub fn block_decomposition_parts(g: &Graph) -> Vec<Vec<EdgeId>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, edge used to enter it, next neighbor index)
        let mut frames: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(frame) = frames.last_mut() {
            let (v, via, idx) = *frame;
            if idx < g.degree(v) {
                frame.2 += 1;
                let (w, e) = g.neighbors(v)[idx];
                if Some(e) == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let (Some(&(parent, _, _)), Some(tree_edge)) = (frames.last(), via) {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == tree_edge {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.sort();
    blocks
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut membership = vec![0usize; g.vertex_count()];
    let blocks: Vec<Block> = block_decomposition_parts(g)
        .into_iter()
        .map(|edges| {
            let mut vertices: Vec<VertexId> = edges
                .iter()
                .flat_map(|&e| {
                    let (a, b) = g.endpoints(e);
                    [a, b]
                })
                .collect();
            vertices.sort_unstable();
            vertices.dedup();
            for &v in &vertices {
                membership[v] += 1;
            }
            let kind = classify(g, &edges, &vertices);
            Block { edges, vertices, kind }
        })
        .collect();
    let cut_vertices = (0..g.vertex_count()).filter(|&v| membership[v] >= 2).collect();
    Ok(BlockDecomposition { blocks, cut_vertices })
}

fn classify(g: &Graph, edges: &[EdgeId], vertices: &[VertexId]) -> BlockKind {
    if edges.len() == 1 {
        return BlockKind::CutEdge;
    }
    // a block is connected; it is a cycle iff every vertex has degree 2 inside it
    let mut deg = vec![0usize; vertices.len()];
    for &e in edges {
        let (a, b) = g.endpoints(e);
        deg[vertices.binary_search(&a).unwrap()] += 1;
        deg[vertices.binary_search(&b).unwrap()] += 1;
    }
    if edges.len() >= 3 && deg.iter().all(|&d| d == 2) {
        BlockKind::Cycle
    } else {
        BlockKind::Other
    }
}

impl BlockDecomposition {
    /// Ids of the blocks containing `v`.
    pub fn blocks_at(&self, v: VertexId) -> Vec<usize> {
        (0..self.blocks.len()).filter(|&b| self.blocks[b].contains_vertex(v)).collect()
    }

    pub fn block_tree(&self) -> BlockTree {
        let nb = self.blocks.len();
        let mut adjacency = vec![Vec::new(); nb + self.cut_vertices.len()];
        for (i, &v) in self.cut_vertices.iter().enumerate() {
            let node = nb + i;
            for b in self.blocks_at(v) {
                adjacency[b].push(node);
                adjacency[node].push(b);
            }
        }
        BlockTree { block_count: nb, cut_vertices: self.cut_vertices.clone(), adjacency }
    }
}

/// Bipartite tree on blocks (nodes `0..block_count`) and cut vertices
/// (nodes `block_count..`), with a block joined to every cut vertex it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTree {
    block_count: usize,
    cut_vertices: Vec<VertexId>,
    adjacency: Vec<Vec<usize>>,
}

impl BlockTree {
    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_block(&self, node: usize) -> bool {
        node < self.block_count
    }

    /// Graph vertex of a cut-vertex node.
    pub fn cut_vertex(&self, node: usize) -> VertexId {
        self.cut_vertices[node - self.block_count]
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    /// Tree edges as `(block id, cut vertex)` pairs.
    pub fn edges(&self) -> Vec<(usize, VertexId)> {
        (0..self.block_count)
            .flat_map(|b| self.adjacency[b].iter().map(move |&c| (b, c)))
            .map(|(b, c)| (b, self.cut_vertex(c)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn bfs(&self, from: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.node_count()];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Number of block nodes strictly inside the tree path between two blocks.
    pub fn block_distance(&self, b1: usize, b2: usize) -> Result<usize> {
        for b in [b1, b2] {
            if b >= self.block_count {
                return Err(Error::UnknownBlock(b));
            }
        }
        if b1 == b2 {
            return Ok(0);
        }
        let hops = self.bfs(b1)[b2];
        if hops == usize::MAX {
            return Err(Error::Disconnected);
        }
        Ok(internal_blocks(hops))
    }

    /// Largest block distance over all block pairs, via a two-sweep diameter.
    pub fn max_block_distance(&self) -> usize {
        if self.block_count == 0 {
            return 0;
        }
        let farthest_block = |dist: &[usize]| {
            (0..self.block_count)
                .filter(|&b| dist[b] != usize::MAX)
                .max_by_key(|&b| (dist[b], std::cmp::Reverse(b)))
                .unwrap()
        };
        let first = self.bfs(0);
        let end = farthest_block(&first);
        let second = self.bfs(end);
        let other = farthest_block(&second);
        internal_blocks(second[other])
    }
}

fn internal_blocks(hops: usize) -> usize {
    // block - cut - block - cut - block: hops = 2(d + 1)
    (hops / 2).saturating_sub(1)
}

/// Convenience: block distance between blocks of `g`.
pub fn block_distance(t: &BlockTree, b1: usize, b2: usize) -> Result<usize> {
    t.block_distance(b1, b2)
}

pub fn max_block_distance(t: &BlockTree) -> usize {
    t.max_block_distance()
}
