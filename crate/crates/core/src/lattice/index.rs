use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{hermite_normal_form, smith_normal_form, IntMatrix};
use crate::error::{Error, Result};
use crate::toric::{Binomial, SignedVector, ToricConfiguration};

/// The lattice `ZA` spanned by the columns of a configuration, held as an HNF basis.
#[derive(Debug, Clone)]
pub struct ColumnLattice {
    basis: IntMatrix,
    pivot_rows: Vec<usize>,
}

impl ColumnLattice {
    pub fn of(a: &ToricConfiguration) -> Self {
        let hnf = hermite_normal_form(&IntMatrix::from_i64(&a.row_vecs()));
        let basis = if a.rows() == 0 { IntMatrix::zeros(0, 0) } else { hnf.basis() };
        ColumnLattice { basis, pivot_rows: hnf.pivot_rows }
    }

    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Integer coordinates of `x` over the basis, by substitution down the pivot rows.
    pub fn coordinates(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.basis.rows() {
            return Err(Error::LengthMismatch { expected: self.basis.rows(), found: x.len() });
        }
        let mut c: Vec<BigInt> = Vec::with_capacity(self.rank());
        for (j, &p) in self.pivot_rows.iter().enumerate() {
            let mut s = x[p].clone();
            for (i, ci) in c.iter().enumerate() {
                s -= &self.basis[(p, i)] * ci;
            }
            let (q, r) = s.div_rem(&self.basis[(p, j)]);
            if !r.is_zero() {
                return Err(Error::Lattice(format!("vector is not in the column lattice (pivot row {p})")));
            }
            c.push(q);
        }
        if self.basis.mul_vec(&c) != x {
            return Err(Error::Lattice("vector is not in the column lattice".into()));
        }
        Ok(c)
    }

    /// Index of the lattice spanned by `columns` inside its saturation within `ZA`.
    pub fn saturation_index(&self, columns: &[Vec<BigInt>]) -> Result<BigInt> {
        let coords = columns.iter().map(|c| self.coordinates(c)).collect::<Result<Vec<_>>>()?;
        let m = IntMatrix::from_columns(self.rank(), &coords);
        let snf = smith_normal_form(&m);
        Ok(snf.invariant_factors().fold(BigInt::one(), |acc, d| acc * d))
    }

    /// `[R(supp C) ∩ ZA : Z(supp C)]` for a circuit `c` of `a`.
    pub fn circuit_index(&self, c: &SignedVector, a: &ToricConfiguration) -> Result<BigInt> {
        check_circuit(c, a)?;
        let columns: Vec<Vec<BigInt>> = c
            .support()
            .into_iter()
            .map(|j| a.column(j).into_iter().map(BigInt::from).collect())
            .collect();
        self.saturation_index(&columns)
    }
}

fn check_circuit(c: &SignedVector, a: &ToricConfiguration) -> Result<()> {
    if c.len() != a.cols() {
        return Err(Error::LengthMismatch { expected: a.cols(), found: c.len() });
    }
    if c.is_zero() {
        return Err(Error::NotACircuit("zero vector".into()));
    }
    if !a.annihilates(c.entries())? {
        return Err(Error::NotACircuit("not in the kernel".into()));
    }
    let content = c.entries().iter().fold(0i64, |g, &x| g.gcd(&x));
    if content != 1 {
        return Err(Error::NotACircuit(format!("entries have common factor {content}")));
    }
    let support = c.support();
    let sub = a.select_columns(&support);
    let rank = IntMatrix::from_i64(&sub.row_vecs()).rank();
    if rank + 1 != support.len() {
        return Err(Error::NotACircuit(format!(
            "support of size {} has rank {rank}; the support is not minimal",
            support.len()
        )));
    }
    Ok(())
}

pub fn circuit_index(c: &Binomial, a: &ToricConfiguration) -> Result<BigInt> {
    ColumnLattice::of(a).circuit_index(c.vector(), a)
}

/// `deg(C) · index(C)`
pub fn true_degree(c: &Binomial, a: &ToricConfiguration) -> Result<BigInt> {
    Ok(circuit_index(c, a)? * BigInt::from(c.degree()))
}
