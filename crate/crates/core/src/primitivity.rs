//! Primitive subgraphs and the Graver basis of a graph read off from them.

use std::collections::BTreeSet;
use std::fmt;

use crate::blocks::{block_decomposition, BlockKind};
use crate::error::{Error, Result};
use crate::graph::{eulerian_trail, EdgeId, Graph};
use crate::graver::GraverSet;
use crate::grn::{build_grn, GrnParams};
use crate::limits::Limits;
use crate::toric::{binomial_of_walk, doubled_graph, Binomial, SignedVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    EvenCycle,
    ValidBlockStructure,
    NoEdges,
    /// A single block that is not an even cycle.
    Biconnected,
    BadBlock { block: usize, kind: BlockKind, len: usize },
    CutVertexBlockCount { vertex: String, blocks: usize },
    /// Cyclic edge totals of the two parts at a cut vertex, at least one even.
    EvenPart { vertex: String, totals: (usize, usize) },
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::EvenCycle => write!(f, "even cycle"),
            Reason::ValidBlockStructure => write!(f, "valid block structure"),
            Reason::NoEdges => write!(f, "no edges"),
            Reason::Biconnected => write!(f, "biconnected but not an even cycle"),
            Reason::BadBlock { block, kind, len } => {
                write!(f, "block {block} ({len} edges) is neither a cycle nor a cut edge ({kind:?})")
            }
            Reason::CutVertexBlockCount { vertex, blocks } => {
                write!(f, "cut vertex {vertex} lies in {blocks} blocks")
            }
            Reason::EvenPart { vertex, totals: (a, b) } => {
                write!(f, "cut vertex {vertex} splits the cyclic edges into parts of {a} and {b}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitivityVerdict {
    pub primitive: bool,
    pub reason: Reason,
}

impl PrimitivityVerdict {
    fn yes(reason: Reason) -> Self {
        PrimitivityVerdict { primitive: true, reason }
    }

    fn no(reason: Reason) -> Self {
        PrimitivityVerdict { primitive: false, reason }
    }
}

/// Whether the connected graph `w` is the support of a primitive walk.
pub fn is_primitive_subgraph(w: &Graph) -> Result<PrimitivityVerdict> {
    if !w.is_connected() {
        return Err(Error::Disconnected);
    }
    if w.edge_count() == 0 {
        return Ok(PrimitivityVerdict::no(Reason::NoEdges));
    }
    let d = block_decomposition(w)?;
    if d.blocks.len() == 1 {
        let b = &d.blocks[0];
        return Ok(if b.kind == BlockKind::Cycle && b.len() % 2 == 0 {
            PrimitivityVerdict::yes(Reason::EvenCycle)
        } else {
            PrimitivityVerdict::no(Reason::Biconnected)
        });
    }
    for (i, b) in d.blocks.iter().enumerate() {
        if b.kind == BlockKind::Other {
            return Ok(PrimitivityVerdict::no(Reason::BadBlock { block: i, kind: b.kind, len: b.len() }));
        }
    }
    for &v in &d.cut_vertices {
        let count = d.blocks_at(v).len();
        if count != 2 {
            let vertex = w.label(v).to_owned();
            return Ok(PrimitivityVerdict::no(Reason::CutVertexBlockCount { vertex, blocks: count }));
        }
    }

    // Root the block tree at block 0; a cut vertex with exactly two blocks has one
    // child block, whose subtree is one part and the rest is the other.
    let tree = d.block_tree();
    let weight = |node: usize| match tree.is_block(node) {
        true if d.blocks[node].kind == BlockKind::Cycle => d.blocks[node].len(),
        _ => 0,
    };
    let total: usize = (0..d.blocks.len()).map(weight).sum();
    let mut parent = vec![usize::MAX; tree.node_count()];
    let mut order = vec![0];
    parent[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let node = order[i];
        i += 1;
        for &next in tree.neighbors(node) {
            if parent[next] == usize::MAX {
                parent[next] = node;
                order.push(next);
            }
        }
    }
    let mut below: Vec<usize> = (0..tree.node_count()).map(weight).collect();
    for &node in order.iter().skip(1).rev() {
        below[parent[node]] += below[node];
    }
    for (node, &inside) in below.iter().enumerate().skip(tree.block_count()) {
        let totals = (total - inside, inside);
        if totals.0.is_multiple_of(2) || totals.1.is_multiple_of(2) {
            let vertex = w.label(tree.cut_vertex(node)).to_owned();
            return Ok(PrimitivityVerdict::no(Reason::EvenPart { vertex, totals }));
        }
    }
    Ok(PrimitivityVerdict::yes(Reason::ValidBlockStructure))
}

/// The binomial of an Eulerian trail of `W′`, with `w` a primitive subgraph.
fn subgraph_binomial(w: &Graph) -> Result<Binomial> {
    let trail = eulerian_trail(&doubled_graph(w)?)?;
    binomial_of_walk(&trail, w)
}

/// The Graver basis of the toric ideal of `g`, one binomial per primitive subgraph.
pub fn graver_from_graph(g: &Graph, limits: &Limits) -> Result<GraverSet> {
    let mut out = BTreeSet::new();
    let mut seen = 0usize;
    let mut visit = |edges: &[EdgeId]| -> Result<()> {
        seen += 1;
        if seen > limits.max_subgraphs {
            return Err(Error::CapExceeded { what: "connected subgraphs", cap: limits.max_subgraphs });
        }
        let (w, parents) = g.edge_subgraph(edges)?;
        if !is_primitive_subgraph(&w)?.primitive {
            return Ok(());
        }
        let local = subgraph_binomial(&w)?;
        let mut lifted = SignedVector::zeros(g.edge_count());
        for (k, &x) in local.exponents().iter().enumerate() {
            lifted.0[parents[k]] = x;
        }
        out.insert(Binomial::new(lifted)?);
        Ok(())
    };
    for_each_connected_edge_set(g, &mut visit)?;
    Ok(out.into_iter().collect())
}

/// Calls `visit` once for every nonempty connected edge set of `g`.
fn for_each_connected_edge_set(
    g: &Graph,
    visit: &mut dyn FnMut(&[EdgeId]) -> Result<()>,
) -> Result<()> {
    let m = g.edge_count();
    for first in 0..m {
        // edges below `first` are never used, so each set is produced from its smallest edge
        let mut state = vec![Mark::Free; m];
        state[..first].fill(Mark::Out);
        state[first] = Mark::In;
        let mut chosen = vec![first];
        grow(g, &mut state, &mut chosen, visit)?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mark {
    Free,
    In,
    Out,
}

fn grow(
    g: &Graph,
    state: &mut [Mark],
    chosen: &mut Vec<EdgeId>,
    visit: &mut dyn FnMut(&[EdgeId]) -> Result<()>,
) -> Result<()> {
    let frontier = chosen.iter().find_map(|&e| {
        let (a, b) = g.endpoints(e);
        [a, b].into_iter().find_map(|v| {
            g.neighbors(v).iter().map(|&(_, f)| f).find(|&f| state[f] == Mark::Free)
        })
    });
    let Some(f) = frontier else {
        return visit(chosen);
    };
    state[f] = Mark::In;
    chosen.push(f);
    grow(g, state, chosen, visit)?;
    chosen.pop();
    state[f] = Mark::Out;
    grow(g, state, chosen, visit)?;
    state[f] = Mark::Free;
    Ok(())
}

/// The binomial of an Eulerian trail of `G_r^n`.
pub fn grn_primitive_binomial(n: usize, r: usize) -> Result<Binomial> {
    if r == 0 {
        return Err(Error::InvalidParams("r = 0 gives an odd cycle, which has no binomial".into()));
    }
    subgraph_binomial(&build_grn(GrnParams::new(n, r)?))
}
