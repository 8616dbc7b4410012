//! Largest circuit degree of an odd cactus without enumerating circuits.
//!
//! In a connected graph whose blocks are all odd cycles, every circuit is a pair
//! of distinct blocks plus the path between them. That path is forced through the
//! block-tree path joining the two blocks, and inside each intermediate block it
//! may take either arc between the entry and exit cut vertices. Its degree is
//! `(|B1| + |B2|)/2 + Σ max(arc, |B| − arc)` over intermediate blocks `B`.
//!
//! Values below are kept doubled so they stay integral: an end block contributes
//! `|B|`, an intermediate block `2·max(arc, |B| − arc)`.

use std::collections::{HashMap, VecDeque};

use crate::blocks::{block_decomposition, BlockDecomposition, BlockKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CactusOptimum {
    pub degree: i64,
    /// Blocks realising the maximum, when the graph has at least two blocks.
    pub witness: Option<(usize, usize)>,
}

/// Doubled chain value together with the block the chain ends in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Chain {
    value: i64,
    end: usize,
}

impl Chain {
    fn extend(self, by: i64) -> Chain {
        Chain { value: self.value + by, end: self.end }
    }
}

fn better(a: Option<Chain>, b: Chain) -> Option<Chain> {
    match a {
        Some(a) if a.value >= b.value => Some(a),
        _ => Some(b),
    }
}

pub fn max_circuit_degree_cactus(g: &Graph) -> Result<i64> {
    odd_cactus_optimum(g).map(|o| o.degree)
}

pub fn odd_cactus_optimum(g: &Graph) -> Result<CactusOptimum> {
    let d = block_decomposition(g)?;
    for (i, b) in d.blocks.iter().enumerate() {
        if b.kind != BlockKind::Cycle || b.len() % 2 == 0 {
            return Err(Error::NotOddCactus { block: i });
        }
    }
    if d.blocks.len() < 2 {
        return Ok(CactusOptimum { degree: 0, witness: None });
    }
    let tree = RootedTree::new(g, &d);
    let best = tree.best_pair();
    Ok(CactusOptimum { degree: best.0 / 2, witness: Some(best.1) })
}

struct RootedTree {
    sizes: Vec<i64>,
    /// Position of each vertex along its block's cycle.
    positions: Vec<HashMap<VertexId, usize>>,
    /// For each block: parent cut vertex (none for block 0) and child cut vertices.
    block_parent: Vec<Option<VertexId>>,
    block_children: Vec<Vec<VertexId>>,
    /// For each cut vertex: parent block and child blocks.
    cut_parent: HashMap<VertexId, usize>,
    cut_children: HashMap<VertexId, Vec<usize>>,
    /// Cut vertices in top-down order.
    cut_order: Vec<VertexId>,
    /// Blocks in top-down order.
    block_order: Vec<usize>,
}

impl RootedTree {
    fn new(g: &Graph, d: &BlockDecomposition) -> Self {
        let nb = d.blocks.len();
        let sizes = d.blocks.iter().map(|b| b.len() as i64).collect();
        let positions = d
            .blocks
            .iter()
            .map(|b| cycle_positions(g, &b.edges))
            .collect();
        let mut blocks_at: HashMap<VertexId, Vec<usize>> = HashMap::new();
        for &v in &d.cut_vertices {
            blocks_at.insert(v, d.blocks_at(v));
        }

        let mut block_parent = vec![None; nb];
        let mut block_children = vec![Vec::new(); nb];
        let mut cut_parent = HashMap::new();
        let mut cut_children: HashMap<VertexId, Vec<usize>> = HashMap::new();
        let mut cut_order = Vec::new();
        let mut block_order = vec![0];
        let mut visited = vec![false; nb];
        visited[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(b) = queue.pop_front() {
            for &v in &d.blocks[b].vertices {
                if Some(v) == block_parent[b] || !blocks_at.contains_key(&v) {
                    continue;
                }
                block_children[b].push(v);
                cut_parent.insert(v, b);
                cut_order.push(v);
                let kids: Vec<usize> = blocks_at[&v].iter().copied().filter(|&k| k != b).collect();
                for &k in &kids {
                    debug_assert!(!visited[k], "block tree has a cycle");
                    visited[k] = true;
                    block_parent[k] = Some(v);
                    block_order.push(k);
                    queue.push_back(k);
                }
                cut_children.insert(v, kids);
            }
        }
        RootedTree {
            sizes,
            positions,
            block_parent,
            block_children,
            cut_parent,
            cut_children,
            cut_order,
            block_order,
        }
    }

    /// Doubled length of the longer arc of block `b` between `x` and `y`.
    fn through(&self, b: usize, x: VertexId, y: VertexId) -> i64 {
        let (px, py) = (self.positions[b][&x] as i64, self.positions[b][&y] as i64);
        let arc = (px - py).abs();
        2 * arc.max(self.sizes[b] - arc)
    }

    fn end(&self, b: usize) -> Chain {
        Chain { value: self.sizes[b], end: b }
    }

    /// Returns the doubled best value and its pair of end blocks.
    fn best_pair(&self) -> (i64, (usize, usize)) {
        let nb = self.sizes.len();

        // down[b]: best chain entering b from its parent cut vertex and ending in b's subtree
        let mut down: Vec<Option<Chain>> = vec![None; nb];
        // best_below[v]: best down value over the child blocks of cut vertex v
        let mut best_below: HashMap<VertexId, Chain> = HashMap::new();
        for &b in self.block_order.iter().rev() {
            let mut best = Some(self.end(b));
            if let Some(p) = self.block_parent[b] {
                for &c in &self.block_children[b] {
                    best = better(best, best_below[&c].extend(self.through(b, p, c)));
                }
            }
            down[b] = best;
            if let Some(p) = self.block_parent[b] {
                let chain = best.unwrap();
                best_below
                    .entry(p)
                    .and_modify(|cur| {
                        if chain.value > cur.value {
                            *cur = chain
                        }
                    })
                    .or_insert(chain);
            }
        }

        // up[v]: best chain leaving cut vertex v through its parent block, away from v's subtree
        let mut up: HashMap<VertexId, Chain> = HashMap::new();
        for &v in &self.cut_order {
            let p = self.cut_parent[&v];
            let mut best = Some(self.end(p));
            for &c in &self.block_children[p] {
                if c != v {
                    best = better(best, best_below[&c].extend(self.through(p, v, c)));
                }
            }
            if let Some(q) = self.block_parent[p] {
                // from q, anywhere except back into p
                let mut beyond = up.get(&q).copied();
                for &k in &self.cut_children[&q] {
                    if k != p {
                        beyond = better(beyond, down[k].unwrap());
                    }
                }
                if let Some(chain) = beyond {
                    best = better(best, chain.extend(self.through(p, v, q)));
                }
            }
            up.insert(v, best.unwrap());
        }

        // every pair of blocks meets at some cut vertex on its tree path
        let mut answer: Option<(i64, (usize, usize))> = None;
        for &v in &self.cut_order {
            let mut options: Vec<Chain> = self.cut_children[&v].iter().map(|&k| down[k].unwrap()).collect();
            options.push(up[&v]);
            options.sort_by(|a, b| b.value.cmp(&a.value).then(a.end.cmp(&b.end)));
            let (a, b) = (options[0], options[1]);
            let total = a.value + b.value;
            if answer.is_none_or(|(best, _)| total > best) {
                answer = Some((total, (a.end.min(b.end), a.end.max(b.end))));
            }
        }
        answer.expect("at least two blocks imply a cut vertex")
    }
}

fn cycle_positions(g: &Graph, edges: &[usize]) -> HashMap<VertexId, usize> {
    let mut adj: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
    for &e in edges {
        let (a, b) = g.endpoints(e);
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let start = *adj.keys().min().unwrap();
    let mut positions = HashMap::new();
    let (mut prev, mut at) = (usize::MAX, start);
    for i in 0..edges.len() {
        positions.insert(at, i);
        let next = adj[&at].iter().copied().find(|&w| w != prev).unwrap();
        prev = at;
        at = next;
    }
    positions
}
