//! Enumeration caps.
//!
//! Every exponential enumeration in the crate is bounded, and exceeding a
//! bound is reported as [`Error::CapExceeded`] instead of a truncated answer.
//! The caps can be overridden through a single environment variable,
//! [`LIMITS_ENV`], holding comma-separated `key=value` pairs, e.g.
//! `GRAPHTORIC_LIMITS=cycles=5000000,insertions=200000`.

use crate::error::{Error, Result};

pub const LIMITS_ENV: &str = "GRAPHTORIC_LIMITS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of simple cycles (`cycles`).
    pub max_cycles: usize,
    /// Maximum number of connected edge subsets visited by the subgraph sweep (`subgraphs`).
    pub max_subgraphs: usize,
    /// Maximum number of insertions into the completion working set (`insertions`).
    pub max_insertions: usize,
    /// Maximum number of column subsets examined by brute-force circuits (`subsets`).
    pub max_support_subsets: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_cycles: 1_000_000,
            max_subgraphs: 1 << 20,
            max_insertions: 1_000_000,
            max_support_subsets: 1_000_000,
        }
    }
}

impl Limits {
    pub fn parse(text: &str) -> Result<Self> {
        let mut limits = Limits::default();
        for (i, item) in text.split(',').map(str::trim).filter(|s| !s.is_empty()).enumerate() {
            let bad = |msg: String| Error::Parse { line: i + 1, msg };
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got `{item}`")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| bad(format!("`{value}` is not a non-negative integer")))?;
            match key.trim() {
                "cycles" => limits.max_cycles = value,
                "subgraphs" => limits.max_subgraphs = value,
                "insertions" => limits.max_insertions = value,
                "subsets" => limits.max_support_subsets = value,
                other => return Err(bad(format!("unknown limit `{other}`"))),
            }
        }
        Ok(limits)
    }

    /// Defaults overridden by [`LIMITS_ENV`] when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(LIMITS_ENV) {
            Ok(text) => Limits::parse(&text),
            Err(_) => Ok(Limits::default()),
        }
    }
}
