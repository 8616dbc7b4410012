//! Toric configurations, signed exponent vectors and binomials.
//!
//! A binomial `x^u - x^v` is stored as the single vector `u - v`; `u` and `v`
//! are recovered as its positive and negative parts.

use std::fmt;

use crate::blocks::{block_decomposition, BlockKind};
use crate::error::{Error, Result};
use crate::graph::{ClosedWalk, Graph, MultiGraph};

/// Integer matrix whose columns are the generators `a_1, …, a_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricConfiguration {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl ToricConfiguration {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch { expected: cols, found: bad.len() });
        }
        Ok(ToricConfiguration { rows: rows.len(), cols, entries: rows.concat() })
    }

    /// Configuration whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<i64>]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::LengthMismatch { expected: rows, found: bad.len() });
        }
        let mut entries = vec![0; rows * columns.len()];
        for (j, col) in columns.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                entries[i * columns.len() + j] = x;
            }
        }
        Ok(ToricConfiguration { rows, cols: columns.len(), entries })
    }

    /// Matrix text format: a `rows cols` header, then the entries in row-major order.
    /// Whitespace and line breaks between entries are free; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut tokens = text.lines().enumerate().flat_map(|(i, line)| {
            line.split('#').next().unwrap_or("").split_whitespace().map(move |t| (i + 1, t))
        });
        let mut next_num = |what: &str| -> Result<(usize, i64)> {
            let (line, tok) = tokens.next().ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unexpected end of input, expected {what}"),
            })?;
            tok.parse::<i64>()
                .map(|x| (line, x))
                .map_err(|_| Error::Parse { line, msg: format!("`{tok}` is not an integer") })
        };
        let (line, rows) = next_num("row count")?;
        let (_, cols) = next_num("column count")?;
        if rows < 0 || cols < 0 {
            return Err(Error::Parse { line, msg: "dimensions must be non-negative".into() });
        }
        let (rows, cols) = (rows as usize, cols as usize);
        let mut entries = Vec::with_capacity(rows * cols);
        for _ in 0..rows * cols {
            entries.push(next_num("matrix entry")?.1);
        }
        if let Some((line, tok)) = tokens.next() {
            return Err(Error::Parse { line, msg: format!("trailing token `{tok}`") });
        }
        Ok(ToricConfiguration { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j)).collect()).collect()
    }

    /// Configuration restricted to the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            entries.extend(cols.iter().map(|&j| self.get(i, j)));
        }
        ToricConfiguration { rows: self.rows, cols: cols.len(), entries }
    }

    /// `A · u` with overflow checking.
    pub fn apply(&self, u: &[i64]) -> Result<Vec<i64>> {
        if u.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: u.len() });
        }
        (0..self.rows)
            .map(|i| {
                u.iter().enumerate().try_fold(0i64, |acc, (j, &x)| {
                    self.get(i, j).checked_mul(x).and_then(|p| acc.checked_add(p)).ok_or(Error::Overflow)
                })
            })
            .collect()
    }

    pub fn annihilates(&self, u: &[i64]) -> Result<bool> {
        Ok(self.apply(u)?.iter().all(|&x| x == 0))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0)
    }
}

/// The configuration `A_G`: one row per vertex, column `e = {i, j}` equal to `v_i + v_j`.
pub fn incidence_configuration(g: &Graph) -> ToricConfiguration {
    let cols = g.edge_count();
    let mut entries = vec![0; g.vertex_count() * cols];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        entries[u * cols + e] = 1;
        entries[v * cols + e] = 1;
    }
    ToricConfiguration { rows: g.vertex_count(), cols, entries }
}

/// `deg_A(x^u) = A · u` for a monomial exponent `u ≥ 0`.
pub fn a_degree(u: &[i64], a: &ToricConfiguration) -> Result<Vec<i64>> {
    if u.iter().any(|&x| x < 0) {
        return Err(Error::NegativeExponent);
    }
    a.apply(u)
}

/// Integer vector over the columns of a configuration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedVector(pub Vec<i64>);

impl SignedVector {
    pub fn zeros(len: usize) -> Self {
        SignedVector(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `u⁺`
    pub fn positive(&self) -> Vec<i64> {
        self.0.iter().map(|&x| x.max(0)).collect()
    }

    /// `u⁻`, as a non-negative vector.
    pub fn negative(&self) -> Vec<i64> {
        self.0.iter().map(|&x| (-x).max(0)).collect()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    /// Sum of the positive entries.
    pub fn degree(&self) -> i64 {
        self.0.iter().filter(|&&x| x > 0).sum()
    }

    /// `self ⊑ other`: same sign pattern where `self` is nonzero, and no larger in absolute value.
    pub fn conformally_leq(&self, other: &SignedVector) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || (a > 0 && b >= a) || (a < 0 && b <= a))
    }

    pub fn neg(&self) -> SignedVector {
        SignedVector(self.0.iter().map(|&x| -x).collect())
    }

    pub fn checked_add(&self, other: &SignedVector) -> Result<SignedVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(SignedVector)
    }

    pub fn checked_sub(&self, other: &SignedVector) -> Result<SignedVector> {
        self.checked_add(&other.neg())
    }

    /// The vector or its negation, whichever has its first nonzero entry positive.
    pub fn canonical(&self) -> SignedVector {
        match self.0.iter().find(|&&x| x != 0) {
            Some(&x) if x < 0 => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.0.iter().find(|&&x| x != 0).is_none_or(|&x| x > 0)
    }
}

/// A nonzero binomial in canonical sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial(SignedVector);

impl Binomial {
    pub fn new(v: SignedVector) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::ZeroBinomial);
        }
        Ok(Binomial(v.canonical()))
    }

    pub fn from_entries(entries: Vec<i64>) -> Result<Self> {
        Binomial::new(SignedVector(entries))
    }

    pub fn vector(&self) -> &SignedVector {
        &self.0
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0 .0
    }

    pub fn degree(&self) -> i64 {
        self.0.degree()
    }

    pub fn support(&self) -> Vec<usize> {
        self.0.support()
    }

    /// Display with variables named `<prefix><column+1>`, e.g. `e1*e3 - e2*e4`.
    pub fn display_with(&self, prefix: &str) -> String {
        let monomial = |part: Vec<i64>| {
            let factors: Vec<String> = part
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(j, &x)| if x == 1 { format!("{prefix}{}", j + 1) } else { format!("{prefix}{}^{x}", j + 1) })
                .collect();
            if factors.is_empty() {
                "1".to_owned()
            } else {
                factors.join("*")
            }
        };
        format!("{} - {}", monomial(self.0.positive()), monomial(self.0.negative()))
    }

    /// Machine format: a JSON list of `[column, exponent]` pairs over the support,
    /// columns numbered from 1 as in the display format.
    pub fn to_json(&self) -> String {
        let pairs: Vec<(usize, i64)> = self.support().into_iter().map(|j| (j + 1, self.exponents()[j])).collect();
        serde_json::to_string(&pairs).expect("plain integers serialize")
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("e"))
    }
}

/// Exponent vector of an even closed walk: edges in odd positions count +1,
/// edges in even positions count −1.
pub fn walk_exponents(w: &ClosedWalk, g: &Graph) -> Result<SignedVector> {
    if !w.is_even() {
        return Err(Error::OddWalk(w.len()));
    }
    let mut v = vec![0i64; g.edge_count()];
    for (i, &e) in w.edges().iter().enumerate() {
        g.check_edge(e)?;
        let step = if i % 2 == 0 { 1 } else { -1 };
        v[e] = v[e].checked_add(step).ok_or(Error::Overflow)?;
    }
    Ok(SignedVector(v))
}

/// The walk binomial `B_w = E⁺(w) − E⁻(w)`, canonically signed.
pub fn binomial_of_walk(w: &ClosedWalk, g: &Graph) -> Result<Binomial> {
    Binomial::new(walk_exponents(w, g)?)
}

pub fn degree(b: &Binomial) -> i64 {
    b.degree()
}

/// `W′`: the connected graph `w` with every cut edge doubled.
pub fn doubled_graph(w: &Graph) -> Result<MultiGraph> {
    let decomposition = block_decomposition(w)?;
    let bridges: Vec<usize> = decomposition
        .blocks
        .iter()
        .filter(|b| b.kind == BlockKind::CutEdge)
        .map(|b| b.edges[0])
        .collect();
    MultiGraph::with_doubled(w, &bridges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::eulerian_trail;

    #[test]
    fn incidence_matrices() {
        let t = incidence_configuration(&fixtures::triangle());
        assert_eq!((t.rows(), t.cols()), (3, 3));
        assert!((0..3).all(|j| t.column(j).iter().sum::<i64>() == 2));

        let sq = incidence_configuration(&fixtures::square());
        assert!(sq.annihilates(&[1, -1, 1, -1]).unwrap());

        let e = incidence_configuration(&Graph::from_edges(&[("a", "b")]).unwrap());
        assert_eq!(e.row_vecs(), vec![vec![1], vec![1]]);
    }

    #[test]
    fn a_degrees() {
        let sq = incidence_configuration(&fixtures::square());
        assert_eq!(a_degree(&[1, 0, 1, 0], &sq).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(a_degree(&[0, 0, 0, 0], &sq).unwrap(), vec![0; 4]);
        let t = incidence_configuration(&fixtures::triangle());
        assert_eq!(a_degree(&[1, 1, 1], &t).unwrap(), vec![2, 2, 2]);
        assert_eq!(a_degree(&[1, -1, 0], &t), Err(Error::NegativeExponent));
        assert!(matches!(a_degree(&[1], &t), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn square_walk_binomial() {
        let g = fixtures::square();
        let w = ClosedWalk::new(&g, 0, vec![0, 1, 2, 3]).unwrap();
        let b = binomial_of_walk(&w, &g).unwrap();
        assert_eq!(b.to_string(), "e1*e3 - e2*e4");
        assert_eq!(degree(&b), 2);
        assert_eq!(b.to_json(), "[[1,1],[2,-1],[3,1],[4,-1]]");
    }

    #[test]
    fn bowtie_walk_binomial() {
        let g = fixtures::bowtie();
        let w = eulerian_trail(&doubled_graph(&g).unwrap()).unwrap();
        let b = binomial_of_walk(&w, &g).unwrap();
        assert_eq!(b.degree(), 3);
        assert_eq!(b.support().len(), 6);
        assert!(incidence_configuration(&g).annihilates(b.exponents()).unwrap());
    }

    #[test]
    fn triangle_twice_cancels() {
        let g = fixtures::triangle();
        let w = ClosedWalk::new(&g, 0, vec![0, 1, 2, 0, 1, 2]).unwrap();
        assert_eq!(binomial_of_walk(&w, &g), Err(Error::ZeroBinomial));
        let odd = ClosedWalk::new(&g, 0, vec![0, 1, 2]).unwrap();
        assert_eq!(binomial_of_walk(&odd, &g), Err(Error::OddWalk(3)));
    }

    #[test]
    fn display_with_powers() {
        let b = Binomial::from_entries(vec![-1, -1, 2, -1, 1]).unwrap();
        assert_eq!(b.to_string(), "e1*e2*e4 - e3^2*e5");
        assert_eq!(b.display_with("x"), "x1*x2*x4 - x3^2*x5");
    }

    #[test]
    fn doubled_graphs() {
        let m = doubled_graph(&fixtures::two_triangles_bridge()).unwrap();
        assert_eq!(m.edge_count(), 8);
        assert!((0..m.vertex_count()).all(|v| m.degree(v).is_multiple_of(2)));
        assert_eq!(doubled_graph(&fixtures::square()).unwrap().edge_count(), 4);
        let e = doubled_graph(&Graph::from_edges(&[("a", "b")]).unwrap()).unwrap();
        assert_eq!((e.edge_count(), e.degree(0), e.degree(1)), (2, 2, 2));
        assert!(doubled_graph(&Graph::parse("a b\nc d\n").unwrap()).is_err());
    }

    #[test]
    fn matrix_text_format() {
        let a = ToricConfiguration::parse("2 4\n2 1 0 1\n0 1 2 0\n").unwrap();
        assert_eq!(a.column(1), vec![1, 1]);
        assert!(ToricConfiguration::parse("2 2\n1 2 3\n").is_err());
        assert!(ToricConfiguration::parse("1 1\n1 2\n").is_err());
        assert!(ToricConfiguration::parse("1 1\nx\n").is_err());
    }

    #[test]
    fn conformal_order() {
        let u = SignedVector(vec![2, -1, 0, 3]);
        assert!(SignedVector(vec![1, -1, 0, 0]).conformally_leq(&u));
        assert!(!SignedVector(vec![1, 1, 0, 0]).conformally_leq(&u));
        assert!(!SignedVector(vec![0, 0, 1, 0]).conformally_leq(&u));
        assert!(u.conformally_leq(&u));
    }
}
