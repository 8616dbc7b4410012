//! Circuits of a graph's toric ideal from its subgraph structure: even cycles,
//! two odd cycles sharing one vertex, and two disjoint odd cycles joined by a path.

mod cactus;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{connecting_paths, enumerate_cycles, ClosedWalk, Cycle, EdgeId, Graph, Parity, Path, VertexId};
use crate::limits::Limits;
use crate::toric::{binomial_of_walk, Binomial};

pub use cactus::{max_circuit_degree_cactus, odd_cactus_optimum, CactusOptimum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CircuitKind {
    EvenCycle,
    TwoOddCyclesOneVertex,
    TwoOddCyclesPath,
}

impl CircuitKind {
    pub fn tag(self) -> &'static str {
        match self {
            CircuitKind::EvenCycle => "even-cycle",
            CircuitKind::TwoOddCyclesOneVertex => "two-odd-cycles-one-vertex",
            CircuitKind::TwoOddCyclesPath => "two-odd-cycles-path",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitSubgraph {
    pub kind: CircuitKind,
    pub cycle1: Cycle,
    pub cycle2: Option<Cycle>,
    pub path: Option<Path>,
}

impl CircuitSubgraph {
    /// Sorted edge multiset of the subgraph, path edges counted once.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut all = self.cycle1.edges.clone();
        if let Some(c) = &self.cycle2 {
            all.extend(&c.edges);
        }
        if let Some(p) = &self.path {
            all.extend(&p.edges);
        }
        all.sort_unstable();
        all
    }

    pub fn signature(&self) -> (Vec<EdgeId>, CircuitKind) {
        (self.edges(), self.kind)
    }

    /// `|C|/2` for an even cycle, `(|C1| + |C2|)/2 + |path|` otherwise.
    pub fn expected_degree(&self) -> i64 {
        let c2 = self.cycle2.as_ref().map_or(0, Cycle::len);
        let p = self.path.as_ref().map_or(0, Path::len);
        ((self.cycle1.len() + c2) / 2 + p) as i64
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidCircuit(msg.to_owned()));
        for c in std::iter::once(&self.cycle1).chain(&self.cycle2) {
            let rebuilt = Cycle::from_vertices(g, &c.vertices).map_err(|e| Error::InvalidCircuit(e.to_string()))?;
            if rebuilt.edges != c.edges {
                return bad("cycle edges do not match its vertices");
            }
        }
        match (self.kind, &self.cycle2, &self.path) {
            (CircuitKind::EvenCycle, None, None) => {
                if self.cycle1.is_odd() {
                    return bad("even-cycle circuit on an odd cycle");
                }
            }
            (CircuitKind::TwoOddCyclesOneVertex, Some(c2), None) => {
                if !self.cycle1.is_odd() || !c2.is_odd() {
                    return bad("both cycles must be odd");
                }
                if shared_vertices(&self.cycle1, c2).len() != 1 {
                    return bad("cycles must share exactly one vertex");
                }
            }
            (CircuitKind::TwoOddCyclesPath, Some(c2), Some(p)) => {
                if !self.cycle1.is_odd() || !c2.is_odd() {
                    return bad("both cycles must be odd");
                }
                if !shared_vertices(&self.cycle1, c2).is_empty() {
                    return bad("cycles must be vertex-disjoint");
                }
                if p.is_empty() || p.vertices.len() != p.edges.len() + 1 {
                    return bad("path must have at least one edge");
                }
                let (x, y) = (p.vertices[0], *p.vertices.last().unwrap());
                if !self.cycle1.contains_vertex(x) || !c2.contains_vertex(y) {
                    return bad("path endpoints must lie on the two cycles");
                }
                let inner = &p.vertices[1..p.vertices.len() - 1];
                if inner.iter().any(|&v| self.cycle1.contains_vertex(v) || c2.contains_vertex(v)) {
                    return bad("path interior must avoid both cycles");
                }
                let mut seen = inner.to_vec();
                seen.sort_unstable();
                seen.dedup();
                if seen.len() != inner.len() {
                    return bad("path repeats a vertex");
                }
                for (i, &e) in p.edges.iter().enumerate() {
                    g.check_edge(e)?;
                    if g.edge_between(p.vertices[i], p.vertices[i + 1]) != Some(e) {
                        return bad("path edge does not join consecutive vertices");
                    }
                }
            }
            _ => return bad("parts do not match the circuit kind"),
        }
        Ok(())
    }

    /// Closed walk around the subgraph whose binomial is the circuit.
    pub fn walk(&self, g: &Graph) -> Result<ClosedWalk> {
        self.validate(g)?;
        let (start, edges) = match (&self.cycle2, &self.path) {
            (None, _) => {
                let x = self.cycle1.vertices[0];
                (x, self.cycle1.walk_from(g, x)?)
            }
            (Some(c2), None) => {
                let x = shared_vertices(&self.cycle1, c2)[0];
                let mut e = self.cycle1.walk_from(g, x)?;
                e.extend(c2.walk_from(g, x)?);
                (x, e)
            }
            (Some(c2), Some(p)) => {
                let (x, y) = (p.vertices[0], *p.vertices.last().unwrap());
                let mut e = self.cycle1.walk_from(g, x)?;
                e.extend(&p.edges);
                e.extend(c2.walk_from(g, y)?);
                e.extend(p.edges.iter().rev());
                (x, e)
            }
        };
        ClosedWalk::new(g, start, edges)
    }
}

fn shared_vertices(a: &Cycle, b: &Cycle) -> Vec<VertexId> {
    a.vertices.iter().copied().filter(|&v| b.contains_vertex(v)).collect()
}

/// Every circuit subgraph of `g`, sorted and deduplicated by signature.
pub fn enumerate_circuit_subgraphs(g: &Graph, limits: &Limits) -> Result<Vec<CircuitSubgraph>> {
    let cycles = enumerate_cycles(g, Parity::All, limits)?;
    let mut found: BTreeMap<(Vec<EdgeId>, CircuitKind), CircuitSubgraph> = BTreeMap::new();
    let mut keep = |c: CircuitSubgraph| {
        found.entry(c.signature()).or_insert(c);
    };
    let (odd, even): (Vec<&Cycle>, Vec<&Cycle>) = cycles.iter().partition(|c| c.is_odd());
    for c in even {
        keep(CircuitSubgraph { kind: CircuitKind::EvenCycle, cycle1: c.clone(), cycle2: None, path: None });
    }
    for (i, c1) in odd.iter().enumerate() {
        for c2 in &odd[i + 1..] {
            match shared_vertices(c1, c2).len() {
                0 => {
                    for p in connecting_paths(g, c1, c2)? {
                        keep(CircuitSubgraph {
                            kind: CircuitKind::TwoOddCyclesPath,
                            cycle1: (*c1).clone(),
                            cycle2: Some((*c2).clone()),
                            path: Some(p),
                        });
                    }
                }
                1 => keep(CircuitSubgraph {
                    kind: CircuitKind::TwoOddCyclesOneVertex,
                    cycle1: (*c1).clone(),
                    cycle2: Some((*c2).clone()),
                    path: None,
                }),
                _ => {}
            }
        }
    }
    Ok(found.into_values().collect())
}

/// The circuit binomial of `c`: ±1 alternating around each cycle and ±2 alternating
/// along the path, with the path edge at the first cycle negative before the
/// canonical sign is applied.
pub fn circuit_binomial(c: &CircuitSubgraph, g: &Graph) -> Result<Binomial> {
    let b = binomial_of_walk(&c.walk(g)?, g)?;
    if b.degree() != c.expected_degree() {
        return Err(Error::InvalidCircuit(format!(
            "binomial degree {} differs from the subgraph formula {}",
            b.degree(),
            c.expected_degree()
        )));
    }
    Ok(b)
}

/// Largest circuit degree by full enumeration; 0 when there are no circuits.
/// Graph circuits have index 1, so this is also the largest true degree.
pub fn max_circuit_degree(g: &Graph, limits: &Limits) -> Result<i64> {
    enumerate_circuit_subgraphs(g, limits)?
        .iter()
        .map(|c| circuit_binomial(c, g).map(|b| b.degree()))
        .try_fold(0, |best, d| d.map(|d| best.max(d)))
}
