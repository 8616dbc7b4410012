//! Finite simple graphs with stable vertex and edge indexing.
//!
//! Edge ids are the column order of the toric configuration built from a
//! graph, so every operation here preserves insertion order.

mod cycles;
mod ops;
mod walk;

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub use cycles::{connecting_paths, enumerate_cycles, Cycle, Parity, Path};
pub use ops::{add_cycle, cycle_graph, graph_sum};
pub use walk::{eulerian_trail, ClosedWalk, MultiEdge, MultiGraph};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Default)]
pub struct Graph {
    labels: Vec<String>,
    lookup: HashMap<String, VertexId>,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<VertexId> {
        let label = label.into();
        if self.lookup.contains_key(&label) {
            return Err(Error::DuplicateLabel(label));
        }
        let id = self.labels.len();
        self.lookup.insert(label.clone(), id);
        self.labels.push(label);
        self.adjacency.push(Vec::new());
        Ok(id)
    }

    /// Id of `label`, adding the vertex if it is new.
    pub fn ensure_vertex(&mut self, label: &str) -> VertexId {
        match self.lookup.get(label) {
            Some(&v) => v,
            None => self.add_vertex(label).expect("label checked absent"),
        }
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(self.labels[u].clone()));
        }
        if self.edge_between(u, v).is_some() {
            return Err(Error::ParallelEdge(self.labels[u].clone(), self.labels[v].clone()));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adjacency[u].push((v, id));
        self.adjacency[v].push((u, id));
        Ok(id)
    }

    pub fn add_edge_by_label(&mut self, a: &str, b: &str) -> Result<EdgeId> {
        let u = self.ensure_vertex(a);
        let v = self.ensure_vertex(b);
        self.add_edge(u, v)
    }

    pub fn from_edges(pairs: &[(&str, &str)]) -> Result<Self> {
        let mut g = Graph::new();
        for (a, b) in pairs {
            g.add_edge_by_label(a, b)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.lookup.get(label).copied()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Incident `(neighbor, edge)` pairs of `v` in edge insertion order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let (small, other) = if self.adjacency[u].len() <= self.adjacency[v].len() { (u, v) } else { (v, u) };
        self.adjacency[small].iter().find(|&&(w, _)| w == other).map(|&(_, e)| e)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.labels.len() {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::InvalidEdge(e))
        }
    }

    /// Connected in the usual sense; the empty and one-vertex graphs count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// The subgraph spanned by `edges`, together with the parent id of each of its edges.
    ///
    /// Edges keep ascending parent-id order; vertices appear in first-appearance order.
    pub fn edge_subgraph(&self, edges: &[EdgeId]) -> Result<(Graph, Vec<EdgeId>)> {
        let mut ids: Vec<EdgeId> = edges.to_vec();
        ids.sort_unstable();
        ids.dedup();
        let mut sub = Graph::new();
        for &e in &ids {
            self.check_edge(e)?;
            let (u, v) = self.edges[e];
            sub.add_edge_by_label(&self.labels[u], &self.labels[v])?;
        }
        Ok((sub, ids))
    }

    /// Reads the edge-list text format: one `label1 label2` per line, `#` starts a
    /// comment, blank lines are skipped. A line with a single label declares a vertex,
    /// which is how isolated vertices and explicit vertex orders are written.
    pub fn parse(text: &str) -> Result<Self> {
        let mut g = Graph::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let err = |e: Error| Error::Parse { line: i + 1, msg: e.to_string() };
            match tokens.as_slice() {
                [a] => {
                    g.ensure_vertex(a);
                }
                [a, b] => {
                    g.add_edge_by_label(a, b).map_err(err)?;
                }
                _ => {
                    return Err(Error::Parse {
                        line: i + 1,
                        msg: format!("expected `label1 label2`, got `{line}`"),
                    })
                }
            }
        }
        Ok(g)
    }

    /// Writes the edge-list format. Vertex declarations are emitted only when the
    /// edge list alone would not reproduce the vertex order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.first_appearance_ordered() {
            for label in &self.labels {
                let _ = writeln!(out, "{label}");
            }
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        out
    }

    fn first_appearance_ordered(&self) -> bool {
        let mut next = 0;
        for &(u, v) in &self.edges {
            for w in [u, v] {
                if w == next {
                    next += 1;
                } else if w > next {
                    return false;
                }
            }
        }
        next == self.vertex_count()
    }
}
