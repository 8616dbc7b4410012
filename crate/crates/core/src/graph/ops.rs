use super::{Graph, VertexId};
use crate::error::{Error, Result};

/// The cycle on `n ≥ 3` vertices labelled `prefix.0 … prefix.(n-1)`.
pub fn cycle_graph(n: usize, prefix: &str) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidCycleLength(n));
    }
    let mut g = Graph::new();
    for i in 0..n {
        g.add_vertex(format!("{prefix}.{i}"))?;
    }
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
    }
    Ok(g)
}

/// Union of `g1` and `g2` with `v ∈ g1` and `u ∈ g2` identified.
///
/// The merged vertex keeps the label of `v`; all other labels of `g2` must be
/// absent from `g1`. Vertices and edges of `g1` come first, in their original order.
pub fn graph_sum(g1: &Graph, g2: &Graph, v: VertexId, u: VertexId) -> Result<Graph> {
    g1.check_vertex(v)?;
    g2.check_vertex(u)?;
    let mut out = g1.clone();
    let mut map = vec![usize::MAX; g2.vertex_count()];
    map[u] = v;
    for (w, label) in g2.labels().iter().enumerate() {
        if w != u {
            map[w] = out.add_vertex(label.clone())?;
        }
    }
    for &(a, b) in g2.edges() {
        out.add_edge(map[a], map[b])?;
    }
    Ok(out)
}

/// Adds an odd `n`-cycle at `v`. The new vertices are labelled `v/s.1 … v/s.(n-1)`
/// where `s` is the smallest step tag not already used at `v`.
pub fn add_cycle(g: &Graph, v: VertexId, n: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let base = g.label(v);
    let step = (1..)
        .find(|s| g.vertex(&format!("{base}/{s}.1")).is_none())
        .expect("unbounded search");
    let mut out = g.clone();
    out.attach_cycle(v, n, step)?;
    Ok(out)
}

impl Graph {
    /// In-place [`add_cycle`] with an explicit step tag; returns the new vertices.
    pub fn attach_cycle(&mut self, v: VertexId, n: usize, step: usize) -> Result<Vec<VertexId>> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::InvalidCycleLength(n));
        }
        self.check_vertex(v)?;
        let base = self.label(v).to_owned();
        let fresh: Vec<String> = (1..n).map(|i| format!("{base}/{step}.{i}")).collect();
        if let Some(taken) = fresh.iter().find(|l| self.vertex(l).is_some()) {
            return Err(Error::DuplicateLabel(taken.clone()));
        }
        let mut ring = vec![v];
        for label in fresh {
            ring.push(self.add_vertex(label)?);
        }
        for i in 0..n {
            self.add_edge(ring[i], ring[(i + 1) % n])?;
        }
        ring.remove(0);
        Ok(ring)
    }
}
