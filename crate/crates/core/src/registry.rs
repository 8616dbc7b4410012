//! Named, runtime-selectable algorithm variants.

use crate::circuits::{max_circuit_degree, max_circuit_degree_cactus};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graver::{graver_completion, GraverSet};
use crate::limits::Limits;
use crate::primitivity::graver_from_graph;
use crate::toric::{incidence_configuration, ToricConfiguration};

pub enum GraverInput<'a> {
    Graph(&'a Graph),
    Matrix(&'a ToricConfiguration),
}

pub trait GraverEngine: Sync {
    fn name(&self) -> &'static str;
    fn graver(&self, input: GraverInput<'_>, limits: &Limits) -> Result<GraverSet>;
}

/// Reads the Graver basis off the primitive subgraphs of a graph.
pub struct GraphEngine;

impl GraverEngine for GraphEngine {
    fn name(&self) -> &'static str {
        "graph"
    }

    fn graver(&self, input: GraverInput<'_>, limits: &Limits) -> Result<GraverSet> {
        match input {
            GraverInput::Graph(g) => graver_from_graph(g, limits),
            GraverInput::Matrix(_) => Err(Error::Unsupported("the graph engine needs a graph".into())),
        }
    }
}

/// Lattice completion; accepts any non-negative configuration.
pub struct CompletionEngine;

impl GraverEngine for CompletionEngine {
    fn name(&self) -> &'static str {
        "completion"
    }

    fn graver(&self, input: GraverInput<'_>, limits: &Limits) -> Result<GraverSet> {
        match input {
            GraverInput::Graph(g) => graver_completion(&incidence_configuration(g), limits),
            GraverInput::Matrix(a) => graver_completion(a, limits),
        }
    }
}

pub trait CircuitDegreeStrategy: Sync {
    fn name(&self) -> &'static str;
    fn max_degree(&self, g: &Graph, limits: &Limits) -> Result<i64>;
}

/// Enumerates every circuit subgraph.
pub struct EnumerateStrategy;

impl CircuitDegreeStrategy for EnumerateStrategy {
    fn name(&self) -> &'static str {
        "enumerate"
    }

    fn max_degree(&self, g: &Graph, limits: &Limits) -> Result<i64> {
        max_circuit_degree(g, limits)
    }
}

/// Block-tree dynamic programme, odd cacti only.
pub struct CactusStrategy;

impl CircuitDegreeStrategy for CactusStrategy {
    fn name(&self) -> &'static str {
        "cactus"
    }

    fn max_degree(&self, g: &Graph, _limits: &Limits) -> Result<i64> {
        max_circuit_degree_cactus(g)
    }
}

static GRAVER_ENGINES: &[&dyn GraverEngine] = &[&GraphEngine, &CompletionEngine];
static CIRCUIT_STRATEGIES: &[&dyn CircuitDegreeStrategy] = &[&EnumerateStrategy, &CactusStrategy];

pub fn graver_engine(name: &str) -> Result<&'static dyn GraverEngine> {
    GRAVER_ENGINES
        .iter()
        .copied()
        .find(|e| e.name() == name)
        .ok_or_else(|| Error::Unsupported(format!("unknown Graver engine {name:?}")))
}

pub fn graver_engine_names() -> Vec<&'static str> {
    GRAVER_ENGINES.iter().map(|e| e.name()).collect()
}

pub fn circuit_strategy(name: &str) -> Result<&'static dyn CircuitDegreeStrategy> {
    CIRCUIT_STRATEGIES
        .iter()
        .copied()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::Unsupported(format!("unknown circuit strategy {name:?}")))
}

pub fn circuit_strategy_names() -> Vec<&'static str> {
    CIRCUIT_STRATEGIES.iter().map(|s| s.name()).collect()
}
