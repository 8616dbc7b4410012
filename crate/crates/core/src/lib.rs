//! Toric ideals of graphs: circuits, Graver bases, circuit indices, and the
//! odd cactus family whose Graver degrees outgrow every circuit degree.

pub mod blocks;
pub mod circuits;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod graver;
pub mod grn;
pub mod lattice;
pub mod limits;
pub mod primitivity;
pub mod registry;
pub mod toric;

pub use error::{Error, Result};
pub use graph::Graph;
pub use limits::Limits;
pub use toric::{Binomial, SignedVector, ToricConfiguration};
