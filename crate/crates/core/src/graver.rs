//! Graver bases and circuits of arbitrary small configurations, computed purely
//! from the lattice. These are the independent checks for the graph-side modules.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{hermite_normal_form, IntMatrix};
use crate::limits::Limits;
use crate::toric::{Binomial, SignedVector, ToricConfiguration};

/// Canonically signed, deduplicated set of pairwise ⊑-incomparable kernel vectors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraverSet {
    vectors: BTreeSet<Binomial>,
}

impl GraverSet {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Binomial> {
        self.vectors.iter()
    }

    pub fn as_set(&self) -> &BTreeSet<Binomial> {
        &self.vectors
    }

    pub fn into_set(self) -> BTreeSet<Binomial> {
        self.vectors
    }

    /// Membership up to sign.
    pub fn contains(&self, v: &SignedVector) -> bool {
        Binomial::new(v.clone()).is_ok_and(|b| self.vectors.contains(&b))
    }

    pub fn max_degree(&self) -> i64 {
        self.vectors.iter().map(Binomial::degree).max().unwrap_or(0)
    }
}

impl FromIterator<Binomial> for GraverSet {
    /// Collects without checking minimality; callers vouch for the input.
    fn from_iter<I: IntoIterator<Item = Binomial>>(iter: I) -> Self {
        GraverSet { vectors: iter.into_iter().collect() }
    }
}

fn matrix_of(a: &ToricConfiguration) -> IntMatrix {
    IntMatrix::from_i64(&a.row_vecs())
}

fn to_i64_vector(entries: &[BigInt]) -> Result<SignedVector> {
    entries
        .iter()
        .map(|x| x.to_i64().ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()
        .map(SignedVector)
}

/// Columns form a basis of `{u ∈ Z^m : A u = 0}`.
pub fn kernel_lattice_basis(a: &ToricConfiguration) -> IntMatrix {
    if a.rows() == 0 {
        return IntMatrix::identity(a.cols());
    }
    hermite_normal_form(&matrix_of(a)).kernel_basis()
}

fn kernel_generators(a: &ToricConfiguration) -> Result<Vec<SignedVector>> {
    let k = kernel_lattice_basis(a);
    (0..k.cols()).map(|j| to_i64_vector(&k.column(j))).collect()
}

/// Graver basis by completion, starting from an HNF kernel basis.
pub fn graver_completion(a: &ToricConfiguration, limits: &Limits) -> Result<GraverSet> {
    graver_completion_from(a, kernel_generators(a)?, limits)
}

/// Graver basis by completion from caller-supplied generators of the kernel lattice.
///
/// The working set holds every generator with both signs. Pending sums `f + g`
/// are processed first in, first out; pairs with no coordinate of opposite sign
/// are skipped because their sum reduces to zero by `f` and then `g`. Each sum is
/// reduced by repeatedly subtracting the earliest inserted element conformally
/// below it; nonzero remainders join the set. At the fixpoint the ⊑-minimal
/// elements are exactly the Graver basis.
pub fn graver_completion_from(
    a: &ToricConfiguration,
    generators: Vec<SignedVector>,
    limits: &Limits,
) -> Result<GraverSet> {
    if !a.is_nonnegative() {
        return Err(Error::Unsupported("completion expects a non-negative configuration".into()));
    }
    for g in &generators {
        if g.len() != a.cols() {
            return Err(Error::LengthMismatch { expected: a.cols(), found: g.len() });
        }
        if !a.annihilates(g.entries())? {
            return Err(Error::Lattice("generator is not in the kernel".into()));
        }
    }

    let mut work = WorkingSet::new(limits.max_insertions);
    let mut pending: VecDeque<(usize, usize)> = VecDeque::new();
    for g in generators {
        if g.is_zero() {
            continue;
        }
        for v in [g.clone(), g.neg()] {
            if let Some(k) = work.insert(v)? {
                pending.extend((0..k).map(|i| (i, k)));
            }
        }
    }

    while let Some((i, j)) = pending.pop_front() {
        let (f, g) = (&work.items[i], &work.items[j]);
        if !has_sign_conflict(f, g) {
            continue;
        }
        let sum = f.checked_add(g)?;
        let reduced = work.normal_form(sum)?;
        if reduced.is_zero() {
            continue;
        }
        for v in [reduced.neg(), reduced] {
            if let Some(k) = work.insert(v)? {
                pending.extend((0..k).map(|i| (i, k)));
            }
        }
    }

    let minimal: BTreeSet<Binomial> = work
        .items
        .iter()
        .filter(|u| !work.items.iter().any(|v| v != *u && v.conformally_leq(u)))
        .map(|u| Binomial::new(u.clone()))
        .collect::<Result<_>>()?;
    Ok(GraverSet { vectors: minimal })
}

fn has_sign_conflict(f: &SignedVector, g: &SignedVector) -> bool {
    f.entries().iter().zip(g.entries()).any(|(&x, &y)| (x > 0 && y < 0) || (x < 0 && y > 0))
}

struct WorkingSet {
    items: Vec<SignedVector>,
    seen: HashSet<SignedVector>,
    cap: usize,
}

impl WorkingSet {
    fn new(cap: usize) -> Self {
        WorkingSet { items: Vec::new(), seen: HashSet::new(), cap }
    }

    fn insert(&mut self, v: SignedVector) -> Result<Option<usize>> {
        if self.seen.contains(&v) {
            return Ok(None);
        }
        if self.items.len() >= self.cap {
            return Err(Error::CapExceeded { what: "completion insertion", cap: self.cap });
        }
        self.seen.insert(v.clone());
        self.items.push(v);
        Ok(Some(self.items.len() - 1))
    }

    fn normal_form(&self, mut s: SignedVector) -> Result<SignedVector> {
        'outer: loop {
            if s.is_zero() {
                return Ok(s);
            }
            for g in &self.items {
                if g.conformally_leq(&s) {
                    s = s.checked_sub(g)?;
                    continue 'outer;
                }
            }
            return Ok(s);
        }
    }
}

/// All circuits of `a`: primitive kernel vectors with inclusion-minimal support.
///
/// Examines every column subset of size at most `rank + 1` and keeps those whose
/// kernel is one-dimensional and spanned by a vector using every column.
pub fn circuits_bruteforce(a: &ToricConfiguration, limits: &Limits) -> Result<BTreeSet<Binomial>> {
    let m = a.cols();
    let rank = matrix_of(a).rank();
    let max_size = (rank + 1).min(m);
    let mut total = 0usize;
    let mut binom = 1usize;
    for k in 1..=max_size {
        binom = binom.saturating_mul(m + 1 - k) / k;
        total = total.saturating_add(binom);
    }
    if total > limits.max_support_subsets {
        return Err(Error::CapExceeded { what: "support subset", cap: limits.max_support_subsets });
    }

    let mut out = BTreeSet::new();
    let mut subset = Vec::with_capacity(max_size);
    for size in 2..=max_size {
        for_each_subset(m, size, &mut subset, &mut |cols| {
            let sub = a.select_columns(cols);
            let hnf = hermite_normal_form(&matrix_of(&sub));
            if cols.len() - hnf.rank != 1 {
                return Ok(());
            }
            let k = hnf.kernel_basis().column(0);
            if k.iter().any(Zero::is_zero) {
                return Ok(());
            }
            let mut full = vec![0i64; m];
            for (&j, x) in cols.iter().zip(&k) {
                full[j] = x.to_i64().ok_or(Error::Overflow)?;
            }
            out.insert(Binomial::from_entries(full)?);
            Ok(())
        })?;
    }
    Ok(out)
}

fn for_each_subset(
    m: usize,
    size: usize,
    current: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if current.len() == size {
        return f(current);
    }
    let start = current.last().map_or(0, |&x| x + 1);
    let remaining = size - current.len();
    for j in start..=m.saturating_sub(remaining) {
        current.push(j);
        for_each_subset(m, size, current, f)?;
        current.pop();
    }
    Ok(())
}

/// True iff no element of `s` other than `±u` lies conformally below `u`.
pub fn is_conformally_minimal(u: &SignedVector, s: &GraverSet) -> Result<bool> {
    if u.is_zero() {
        return Err(Error::ZeroBinomial);
    }
    let (plus, minus) = (u.canonical(), u.canonical().neg());
    Ok(!s.iter().any(|b| {
        let v = b.vector();
        *v != plus && *v != minus && (v.conformally_leq(u) || v.neg().conformally_leq(u))
    }))
}

/// A nonzero kernel vector of `a` strictly conformally below `u`, found by
/// searching the whole box of vectors below `u`. `None` means `u` is primitive.
pub fn conformal_kernel_divisor(
    u: &SignedVector,
    a: &ToricConfiguration,
    limits: &Limits,
) -> Result<Option<SignedVector>> {
    if u.is_zero() {
        return Err(Error::ZeroBinomial);
    }
    if u.len() != a.cols() {
        return Err(Error::LengthMismatch { expected: a.cols(), found: u.len() });
    }
    let cap = limits.max_support_subsets;
    let mut size = 1usize;
    for &x in u.entries() {
        size = size.saturating_mul(x.unsigned_abs() as usize + 1);
        if size > cap {
            return Err(Error::CapExceeded { what: "conformal box", cap });
        }
    }
    let mut v = vec![0i64; u.len()];
    loop {
        // odometer step towards u, one coordinate at a time
        let mut k = 0;
        while k < v.len() && v[k] == u.entries()[k] {
            v[k] = 0;
            k += 1;
        }
        if k == v.len() {
            return Ok(None);
        }
        v[k] += u.entries()[k].signum();
        if v.as_slice() != u.entries() && a.annihilates(&v)? {
            return Ok(Some(SignedVector(v)));
        }
    }
}
