use super::{EdgeId, Graph, VertexId};
use crate::error::{Error, Result};

/// A closed walk given by its start vertex and edge sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    start: VertexId,
    edges: Vec<EdgeId>,
    vertices: Vec<VertexId>,
}

impl ClosedWalk {
    pub fn new(g: &Graph, start: VertexId, edges: Vec<EdgeId>) -> Result<Self> {
        g.check_vertex(start)?;
        let mut vertices = Vec::with_capacity(edges.len() + 1);
        vertices.push(start);
        let mut at = start;
        for (i, &e) in edges.iter().enumerate() {
            g.check_edge(e)?;
            let (a, b) = g.endpoints(e);
            at = if a == at {
                b
            } else if b == at {
                a
            } else {
                return Err(Error::InvalidWalk(format!(
                    "edge {} at position {} does not touch vertex {}",
                    e,
                    i + 1,
                    g.label(at)
                )));
            };
            vertices.push(at);
        }
        if at != start {
            return Err(Error::InvalidWalk(format!(
                "walk ends at {} instead of {}",
                g.label(at),
                g.label(start)
            )));
        }
        Ok(ClosedWalk { start, edges, vertices })
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Implied vertex sequence; first and last entries are the start vertex.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.edges.len().is_multiple_of(2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiEdge {
    pub ends: (VertexId, VertexId),
    pub origin: EdgeId,
}

/// A graph in which selected edges are present twice (the doubled cut edges).
#[derive(Debug, Clone)]
pub struct MultiGraph {
    base: Graph,
    edges: Vec<MultiEdge>,
    adjacency: Vec<Vec<(VertexId, usize)>>,
}

impl MultiGraph {
    /// Copies `base`, adding a second copy of every edge listed in `doubled`.
    /// The copy immediately follows its original in edge order.
    pub fn with_doubled(base: &Graph, doubled: &[EdgeId]) -> Result<Self> {
        let mut twice = vec![false; base.edge_count()];
        for &e in doubled {
            base.check_edge(e)?;
            twice[e] = true;
        }
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); base.vertex_count()];
        for (origin, &(u, v)) in base.edges().iter().enumerate() {
            let copies = if twice[origin] { 2 } else { 1 };
            for _ in 0..copies {
                let id = edges.len();
                edges.push(MultiEdge { ends: (u, v), origin });
                adjacency[u].push((v, id));
                adjacency[v].push((u, id));
            }
        }
        Ok(MultiGraph { base: base.clone(), edges, adjacency })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn multiplicity(&self, origin: EdgeId) -> usize {
        self.edges.iter().filter(|e| e.origin == origin).count()
    }
}

/// Closed Eulerian trail by Hierholzer's algorithm, expressed over the edges of
/// the underlying simple graph (a doubled edge appears twice).
///
/// The trail starts at the first endpoint of edge 0 and, at every vertex, leaves
/// through the unused incident edge of smallest id.
pub fn eulerian_trail(m: &MultiGraph) -> Result<ClosedWalk> {
    let g = m.base();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for v in 0..m.vertex_count() {
        if m.degree(v) % 2 == 1 {
            return Err(Error::OddDegree(g.label(v).to_owned(), m.degree(v)));
        }
    }
    let Some(first) = m.edges.first() else {
        return ClosedWalk::new(g, 0, Vec::new())
            .map_err(|_| Error::InvalidWalk("graph has no vertices".into()));
    };
    let start = first.ends.0;
    let mut used = vec![false; m.edge_count()];
    let mut next = vec![0usize; m.vertex_count()];
    let mut stack: Vec<(VertexId, Option<usize>)> = vec![(start, None)];
    let mut circuit: Vec<Option<usize>> = Vec::with_capacity(m.edge_count() + 1);
    while let Some(&(v, _)) = stack.last() {
        let adj = &m.adjacency[v];
        while next[v] < adj.len() && used[adj[next[v]].1] {
            next[v] += 1;
        }
        if next[v] < adj.len() {
            let (w, e) = adj[next[v]];
            used[e] = true;
            stack.push((w, Some(e)));
        } else {
            let (_, e) = stack.pop().unwrap();
            circuit.push(e);
        }
    }
    circuit.reverse();
    let edges: Vec<EdgeId> = circuit.into_iter().flatten().map(|e| m.edges[e].origin).collect();
    ClosedWalk::new(g, start, edges)
}
