//! Small named graphs used throughout the tests and exposed on the command line.

use crate::graph::Graph;
use crate::grn::{build_grn, GrnParams};

pub const FIXTURE_NAMES: &[&str] = &[
    "triangle",
    "square",
    "bowtie",
    "two-triangles-bridge",
    "square-pendant-triangle",
    "K4",
    "K33",
    "G1_3",
    "G2_3",
];

fn parse(text: &str) -> Graph {
    Graph::parse(text).expect("fixture text is valid")
}

pub fn triangle() -> Graph {
    parse("a b\nb c\nc a\n")
}

pub fn square() -> Graph {
    parse("a b\nb c\nc d\nd a\n")
}

/// Two triangles sharing the vertex `c`.
pub fn bowtie() -> Graph {
    parse("a b\nb c\nc a\nc d\nd e\ne c\n")
}

/// Triangles `abc` and `def` joined by the bridge `c-d`.
pub fn two_triangles_bridge() -> Graph {
    parse("a b\nb c\nc a\nc d\nd e\ne f\nf d\n")
}

/// The square `abcd` with a triangle `aef` hanging off `a`.
pub fn square_pendant_triangle() -> Graph {
    parse("a b\nb c\nc d\nd a\na e\ne f\nf a\n")
}

pub fn k4() -> Graph {
    parse("a b\na c\na d\nb c\nb d\nc d\n")
}

pub fn k33() -> Graph {
    parse("a1 b1\na1 b2\na1 b3\na2 b1\na2 b2\na2 b3\na3 b1\na3 b2\na3 b3\n")
}

pub fn g1_3() -> Graph {
    build_grn(GrnParams::new(3, 1).unwrap())
}

pub fn g2_3() -> Graph {
    build_grn(GrnParams::new(3, 2).unwrap())
}

pub fn fixture(name: &str) -> Option<Graph> {
    Some(match name {
        "triangle" => triangle(),
        "square" => square(),
        "bowtie" => bowtie(),
        "two-triangles-bridge" => two_triangles_bridge(),
        "square-pendant-triangle" => square_pendant_triangle(),
        "K4" => k4(),
        "K33" => k33(),
        "G1_3" => g1_3(),
        "G2_3" => g2_3(),
        _ => return None,
    })
}

/// Every fixture, in [`FIXTURE_NAMES`] order.
pub fn corpus() -> Vec<(&'static str, Graph)> {
    FIXTURE_NAMES.iter().map(|&n| (n, fixture(n).unwrap())).collect()
}
