use std::collections::BTreeSet;

use super::{EdgeId, Graph, VertexId};
use crate::blocks::block_decomposition_parts;
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    All,
}

impl Parity {
    fn admits(self, len: usize) -> bool {
        match self {
            Parity::Even => len.is_multiple_of(2),
            Parity::Odd => len % 2 == 1,
            Parity::All => true,
        }
    }
}

/// A simple cycle: vertices in traversal order starting from the smallest id,
/// edges as a sorted id set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
}

impl Cycle {
    /// Builds the cycle through `vertices` in the given cyclic order.
    pub fn from_vertices(g: &Graph, vertices: &[VertexId]) -> Result<Cycle> {
        let k = vertices.len();
        if k < 3 {
            return Err(Error::InvalidWalk(format!("a cycle needs at least 3 vertices, got {k}")));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != k {
            return Err(Error::InvalidWalk("cycle repeats a vertex".into()));
        }
        let mut edges = Vec::with_capacity(k);
        for i in 0..k {
            let (a, b) = (vertices[i], vertices[(i + 1) % k]);
            g.check_vertex(a)?;
            let e = g
                .edge_between(a, b)
                .ok_or_else(|| Error::InvalidWalk(format!("no edge {}-{}", g.label(a), g.label(b))))?;
            edges.push(e);
        }
        edges.sort_unstable();
        let start = (0..k).min_by_key(|&i| vertices[i]).unwrap();
        let mut order: Vec<VertexId> = (0..k).map(|i| vertices[(start + i) % k]).collect();
        // fix the direction so equal cycles compare equal
        if order[1] > order[k - 1] {
            order[1..].reverse();
        }
        Ok(Cycle { edges, vertices: order })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Edge sequence going once around the cycle starting and ending at `x`.
    pub fn walk_from(&self, g: &Graph, x: VertexId) -> Result<Vec<EdgeId>> {
        let k = self.vertices.len();
        let pos = self
            .vertices
            .iter()
            .position(|&v| v == x)
            .ok_or_else(|| Error::InvalidWalk(format!("vertex {} is not on the cycle", g.label(x))))?;
        Ok((0..k)
            .map(|i| {
                let a = self.vertices[(pos + i) % k];
                let b = self.vertices[(pos + i + 1) % k];
                g.edge_between(a, b).expect("cycle edges exist")
            })
            .collect())
    }
}

/// A simple path, vertices and edges in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// All simple cycles matching `parity`, sorted by edge set.
///
/// Every simple cycle lies inside one block, so the search runs block by block.
/// Fails when the total number of simple cycles exceeds `limits.max_cycles`.
pub fn enumerate_cycles(g: &Graph, parity: Parity, limits: &Limits) -> Result<Vec<Cycle>> {
    let mut found = 0usize;
    let mut out = Vec::new();
    for block in block_decomposition_parts(g) {
        if block.len() < 3 {
            continue;
        }
        let mut members: Vec<VertexId> = block
            .iter()
            .flat_map(|&e| {
                let (a, b) = g.endpoints(e);
                [a, b]
            })
            .collect();
        members.sort_unstable();
        members.dedup();
        let in_block: BTreeSet<EdgeId> = block.iter().copied().collect();
        for &start in &members {
            cycles_from(g, start, &in_block, |path| {
                found += 1;
                if found > limits.max_cycles {
                    return Err(Error::CapExceeded { what: "simple cycle", cap: limits.max_cycles });
                }
                if parity.admits(path.len()) {
                    out.push(Cycle::from_vertices(g, path)?);
                }
                Ok(())
            })?;
        }
    }
    out.sort();
    Ok(out)
}

/// Cycles whose smallest vertex is `start`, each reported in one direction.
fn cycles_from(
    g: &Graph,
    start: VertexId,
    allowed: &BTreeSet<EdgeId>,
    mut emit: impl FnMut(&[VertexId]) -> Result<()>,
) -> Result<()> {
    let mut on_path = vec![false; g.vertex_count()];
    let mut path = vec![start];
    on_path[start] = true;
    // per depth: index into the neighbor list of the path vertex at that depth
    let mut cursor = vec![0usize];
    while let Some(&v) = path.last() {
        let depth = path.len() - 1;
        let nbrs = g.neighbors(v);
        if cursor[depth] == nbrs.len() {
            on_path[v] = false;
            path.pop();
            cursor.pop();
            continue;
        }
        let (w, e) = nbrs[cursor[depth]];
        cursor[depth] += 1;
        if !allowed.contains(&e) {
            continue;
        }
        if w == start {
            if path.len() >= 3 && path[1] < path[path.len() - 1] {
                emit(&path)?;
            }
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            cursor.push(0);
        }
    }
    Ok(())
}

/// Simple paths from a vertex of `c1` to a vertex of `c2` whose internal vertices
/// avoid both cycles, in lexicographic edge-id order.
pub fn connecting_paths(g: &Graph, c1: &Cycle, c2: &Cycle) -> Result<Vec<Path>> {
    let n = g.vertex_count();
    let mut on_c1 = vec![false; n];
    let mut on_c2 = vec![false; n];
    for &v in &c1.vertices {
        g.check_vertex(v)?;
        on_c1[v] = true;
    }
    for &v in &c2.vertices {
        g.check_vertex(v)?;
        if on_c1[v] {
            return Err(Error::CyclesNotDisjoint);
        }
        on_c2[v] = true;
    }

    // internal vertices must reach c2 without touching either cycle
    let mut useful = vec![false; n];
    let mut stack: Vec<VertexId> = Vec::new();
    for &v in &c2.vertices {
        for &(w, _) in g.neighbors(v) {
            if !on_c1[w] && !on_c2[w] && !useful[w] {
                useful[w] = true;
                stack.push(w);
            }
        }
    }
    while let Some(v) = stack.pop() {
        for &(w, _) in g.neighbors(v) {
            if !on_c1[w] && !on_c2[w] && !useful[w] {
                useful[w] = true;
                stack.push(w);
            }
        }
    }

    let mut out = Vec::new();
    let mut starts = c1.vertices.clone();
    starts.sort_unstable();
    for x in starts {
        let mut vertices = vec![x];
        let mut edges = Vec::new();
        let mut visited = vec![false; n];
        visited[x] = true;
        extend_paths(g, &on_c2, &useful, &mut visited, &mut vertices, &mut edges, &mut out);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn extend_paths(
    g: &Graph,
    target: &[bool],
    useful: &[bool],
    visited: &mut [bool],
    vertices: &mut Vec<VertexId>,
    edges: &mut Vec<EdgeId>,
    out: &mut Vec<Path>,
) {
    let v = *vertices.last().unwrap();
    for &(w, e) in g.neighbors(v) {
        if target[w] {
            let mut p = Path { edges: edges.clone(), vertices: vertices.clone() };
            p.edges.push(e);
            p.vertices.push(w);
            out.push(p);
        } else if useful[w] && !visited[w] {
            visited[w] = true;
            vertices.push(w);
            edges.push(e);
            extend_paths(g, target, useful, visited, vertices, edges, out);
            edges.pop();
            vertices.pop();
            visited[w] = false;
        }
    }
}
