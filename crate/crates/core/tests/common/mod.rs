//! Independent oracles shared by the integration tests. They use only rational
//! linear algebra and exhaustive search, never the library's own algorithms
//! beyond building inputs.
#![allow(dead_code)]

use std::collections::BTreeSet;

use graphtoric::graph::{EdgeId, Graph};
use graphtoric::graver::kernel_lattice_basis;
use graphtoric::toric::{Binomial, SignedVector, ToricConfiguration};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Solves `cols · t = p` over the rationals; `None` when inconsistent.
/// Free variables are set to zero.
pub fn solve(cols: &[Vec<i64>], p: &[i64]) -> Option<Vec<BigRational>> {
    let rows = p.len();
    let n = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| q(c[i])).collect();
            row.push(q(p[i]));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, pr);
        let lead = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x /= lead.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !m[i][n].is_zero()) {
        return None;
    }
    let mut t = vec![BigRational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        t[c] = m[i][n].clone();
    }
    Some(t)
}

pub fn rank(cols: &[Vec<i64>]) -> usize {
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for c in cols {
        if solve(&basis, c).is_none() {
            basis.push(c.clone());
        }
    }
    basis.len()
}

/// Every simple cycle of `g` as a sorted edge set, by depth-first search from
/// each start vertex through larger vertices only.
pub fn bruteforce_cycles(g: &Graph) -> BTreeSet<Vec<EdgeId>> {
    fn extend(g: &Graph, start: usize, at: usize, used: &mut Vec<EdgeId>, on: &mut Vec<bool>, out: &mut BTreeSet<Vec<EdgeId>>) {
        for &(w, e) in g.neighbors(at) {
            if used.contains(&e) {
                continue;
            }
            if w == start && used.len() >= 2 {
                let mut cycle = used.clone();
                cycle.push(e);
                cycle.sort_unstable();
                out.insert(cycle);
            } else if w > start && !on[w] {
                on[w] = true;
                used.push(e);
                extend(g, start, w, used, on, out);
                used.pop();
                on[w] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.vertex_count() {
        let mut on = vec![false; g.vertex_count()];
        on[s] = true;
        extend(g, s, s, &mut Vec::new(), &mut on, &mut out);
    }
    out
}

/// All nonzero kernel vectors of `a` with every entry at most `bound` in absolute value.
pub fn bounded_kernel_vectors(a: &ToricConfiguration, bound: i64) -> Vec<Vec<i64>> {
    let k = kernel_lattice_basis(a);
    let (m, dim) = (k.rows(), k.cols());
    if dim == 0 {
        return Vec::new();
    }
    let basis: Vec<Vec<i64>> =
        (0..dim).map(|j| k.column(j).iter().map(|x| x.to_i64().unwrap()).collect()).collect();
    // coordinates that determine a kernel vector
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..m {
        let mut trial = chosen.clone();
        trial.push(i);
        let rows: Vec<Vec<i64>> = trial.iter().map(|&r| basis.iter().map(|b| b[r]).collect()).collect();
        if rank(&rows) == trial.len() {
            chosen = trial;
        }
        if chosen.len() == dim {
            break;
        }
    }
    assert_eq!(chosen.len(), dim);
    let sub: Vec<Vec<i64>> = basis.iter().map(|b| chosen.iter().map(|&r| b[r]).collect()).collect();

    let mut out = Vec::new();
    let mut y = vec![-bound; dim];
    loop {
        if let Some(c) = solve(&sub, &y) {
            if c.iter().all(|x| x.is_integer()) {
                let v: Vec<i64> = (0..m)
                    .map(|i| {
                        let s: BigRational = (0..dim).map(|j| &c[j] * q(basis[j][i])).sum();
                        s.to_integer().to_i64().unwrap()
                    })
                    .collect();
                if v.iter().any(|&x| x != 0) && v.iter().all(|x| x.abs() <= bound) {
                    out.push(v);
                }
            }
        }
        let mut i = 0;
        while i < dim && y[i] == bound {
            y[i] = -bound;
            i += 1;
        }
        if i == dim {
            return out;
        }
        y[i] += 1;
    }
}

fn conformally_leq(v: &[i64], u: &[i64]) -> bool {
    v.iter().zip(u).all(|(&x, &y)| (x == 0) || (x.signum() == y.signum() && x.abs() <= y.abs()))
}

/// Graver elements whose entries are bounded by `bound`, by exhaustive search.
pub fn exhaustive_graver(a: &ToricConfiguration, bound: i64) -> BTreeSet<Binomial> {
    let all = bounded_kernel_vectors(a, bound);
    all.iter()
        .filter(|u| !all.iter().any(|v| v != *u && conformally_leq(v, u)))
        .map(|u| Binomial::from_entries(u.clone()).unwrap())
        .collect()
}

/// Circuits with entries bounded by `bound`: support-minimal kernel vectors of content 1.
pub fn exhaustive_circuits(a: &ToricConfiguration, bound: i64) -> BTreeSet<Binomial> {
    let all = bounded_kernel_vectors(a, bound);
    let support = |v: &[i64]| -> Vec<usize> { (0..v.len()).filter(|&i| v[i] != 0).collect() };
    all.iter()
        .filter(|u| {
            let su = support(u);
            let gcd = u.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
            gcd == 1
                && !all.iter().any(|v| {
                    let sv = support(v);
                    sv.len() < su.len() && sv.iter().all(|i| su.contains(i))
                })
        })
        .map(|u| Binomial::from_entries(u.clone()).unwrap())
        .collect()
}

fn combinations(cols: &[Vec<i64>], k: i64, rows: usize, f: &mut dyn FnMut(Vec<i64>)) {
    let n = cols.len();
    let mut c = vec![-k; n];
    loop {
        let p: Vec<i64> = (0..rows).map(|i| (0..n).map(|j| c[j] * cols[j][i]).sum()).collect();
        f(p);
        let mut i = 0;
        while i < n && c[i] == k {
            c[i] = -k;
            i += 1;
        }
        if i == n {
            return;
        }
        c[i] += 1;
    }
}

/// Index of `Z{a_j : j ∈ support}` in `R(support) ∩ ZA`, by counting the points of
/// each lattice in a half-open parallelepiped spanned by independent support columns.
/// Lattice points are generated as combinations with coefficients in `[-k, k]`.
pub fn coset_index(a: &ToricConfiguration, support: &[usize], k: i64) -> u64 {
    let rows = a.rows();
    let all: Vec<Vec<i64>> = (0..a.cols()).map(|j| a.column(j)).collect();
    let sup: Vec<Vec<i64>> = support.iter().map(|&j| all[j].clone()).collect();
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for c in &sup {
        if solve(&basis, c).is_none() {
            basis.push(c.clone());
        }
    }
    let inside = |p: &[i64]| -> bool {
        solve(&basis, p).is_some_and(|t| t.iter().all(|x| !x.is_negative() && *x < BigRational::one()))
    };
    let count = |cols: &[Vec<i64>]| -> usize {
        let mut seen = BTreeSet::new();
        combinations(cols, k, rows, &mut |p| {
            if inside(&p) {
                seen.insert(p);
            }
        });
        seen.len()
    };
    let (big, small) = (count(&all), count(&sup));
    assert_eq!(big % small, 0, "parallelepiped counts {big} and {small}");
    (big / small) as u64
}

/// Closed walks of length at most `max_len`, as edge sequences, from every start vertex.
pub fn closed_walks(g: &Graph, max_len: usize) -> Vec<(usize, Vec<EdgeId>)> {
    fn go(g: &Graph, start: usize, at: usize, max_len: usize, walk: &mut Vec<EdgeId>, out: &mut Vec<(usize, Vec<EdgeId>)>) {
        if !walk.is_empty() && at == start {
            out.push((start, walk.clone()));
        }
        if walk.len() == max_len {
            return;
        }
        for &(w, e) in g.neighbors(at) {
            walk.push(e);
            go(g, start, w, max_len, walk, out);
            walk.pop();
        }
    }
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        go(g, s, s, max_len, &mut Vec::new(), &mut out);
    }
    out
}

/// Odd-position and even-position edge multiplicities of an even closed walk.
pub fn walk_parts(m: usize, walk: &[EdgeId]) -> (Vec<i64>, Vec<i64>) {
    let (mut plus, mut minus) = (vec![0; m], vec![0; m]);
    for (i, &e) in walk.iter().enumerate() {
        if i % 2 == 0 {
            plus[e] += 1;
        } else {
            minus[e] += 1;
        }
    }
    (plus, minus)
}

pub fn signed(plus: &[i64], minus: &[i64]) -> SignedVector {
    SignedVector(plus.iter().zip(minus).map(|(a, b)| a - b).collect())
}

use graphtoric::lattice::{hermite_normal_form, smith_normal_form, IntMatrix};

fn unit(det: &BigInt) -> bool {
    det.abs().is_one()
}

fn minors_gcd(m: &IntMatrix, k: usize) -> BigInt {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        (k - 1..n)
            .flat_map(|last| {
                subsets(last, k - 1).into_iter().map(move |mut s| {
                    s.push(last);
                    s
                })
            })
            .collect()
    }
    let mut g = BigInt::zero();
    for rows in subsets(m.rows(), k) {
        for cols in subsets(m.cols(), k) {
            let mut sub = IntMatrix::zeros(k, k);
            for (i, &r) in rows.iter().enumerate() {
                for (j, &c) in cols.iter().enumerate() {
                    sub[(i, j)] = m[(r, c)].clone();
                }
            }
            g = num_integer::Integer::gcd(&g, &sub.determinant());
        }
    }
    g
}

/// Every documented property of the column Hermite normal form of `m`.
pub fn check_hnf(m: &IntMatrix) -> Result<(), String> {
    let hnf = hermite_normal_form(m);
    let (h, u) = (&hnf.h, &hnf.u);
    if m.mul(u) != *h {
        return Err("h != m u".into());
    }
    if !unit(&u.determinant()) {
        return Err("u is not unimodular".into());
    }
    let cols: Vec<Vec<i64>> = (0..m.cols()).map(|j| m.column(j).iter().map(|x| x.to_i64().unwrap()).collect()).collect();
    if hnf.rank != rank(&cols) {
        return Err(format!("rank {} but rational rank {}", hnf.rank, rank(&cols)));
    }
    for j in 0..h.cols() {
        if j >= hnf.rank {
            if !h.column_is_zero(j) {
                return Err(format!("column {j} beyond the rank is nonzero"));
            }
            continue;
        }
        let p = hnf.pivot_rows[j];
        if j > 0 && p <= hnf.pivot_rows[j - 1] {
            return Err("pivot rows not increasing".into());
        }
        if (0..p).any(|i| !h[(i, j)].is_zero()) || !h[(p, j)].is_positive() {
            return Err(format!("column {j} is not in echelon form"));
        }
        for k in 0..h.cols() {
            let x = &h[(p, k)];
            let ok = match k.cmp(&j) {
                std::cmp::Ordering::Less => !x.is_negative() && x < &h[(p, j)],
                std::cmp::Ordering::Equal => true,
                std::cmp::Ordering::Greater => x.is_zero(),
            };
            if !ok {
                return Err(format!("pivot row {p} not reduced at column {k}"));
            }
        }
    }
    let kernel = hnf.kernel_basis();
    if kernel.cols() != m.cols() - hnf.rank || !m.mul(&kernel).is_zero() {
        return Err("kernel basis is wrong".into());
    }
    Ok(())
}

/// Every documented property of the Smith normal form of `m`, including the
/// determinantal-divisor characterisation of the invariant factors.
pub fn check_snf(m: &IntMatrix) -> Result<(), String> {
    let snf = smith_normal_form(m);
    if snf.u.mul(m).mul(&snf.v) != snf.diagonal_matrix() {
        return Err("u m v is not the diagonal".into());
    }
    if !unit(&snf.u.determinant()) || !unit(&snf.v.determinant()) {
        return Err("transforms are not unimodular".into());
    }
    let d: Vec<&BigInt> = snf.invariant_factors().collect();
    if snf.d.iter().any(|x| x.is_negative()) {
        return Err("negative diagonal entry".into());
    }
    if d.windows(2).any(|w| !(w[1] % w[0]).is_zero()) {
        return Err("divisibility chain broken".into());
    }
    let mut product = BigInt::one();
    for (k, x) in d.iter().enumerate() {
        product *= *x;
        if product != minors_gcd(m, k + 1) {
            return Err(format!("determinantal divisor {} mismatch", k + 1));
        }
    }
    if d.len() < m.rows().min(m.cols()) && !minors_gcd(m, d.len() + 1).is_zero() {
        return Err("rank too small".into());
    }
    Ok(())
}

/// Right-multiplies `m` by a product of elementary unimodular column operations.
pub fn scramble_columns(m: &IntMatrix, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut w = IntMatrix::identity(m.cols());
    for &(a, b, f) in ops {
        let (a, b) = (a % m.cols(), b % m.cols());
        if a == b {
            continue;
        }
        for i in 0..w.rows() {
            let delta = &w[(i, b)] * BigInt::from(f);
            w[(i, a)] += delta;
        }
    }
    m.mul(&w)
}
