use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Column Hermite normal form `h = m · u` with `u` unimodular.
///
/// Pivots sit in the first `rank` columns, at strictly increasing rows; each pivot
/// is positive, entries to its left in the pivot row lie in `[0, pivot)`, entries to
/// its right are zero, and the trailing `cols - rank` columns of `h` vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
    /// Row index of the pivot of column `j`, for `j < rank`.
    pub pivot_rows: Vec<usize>,
}

impl Hnf {
    /// The nonzero columns of `h`: a basis of the column lattice of the input.
    pub fn basis(&self) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = (0..self.rank).map(|j| self.h.column(j)).collect();
        IntMatrix::from_columns(self.h.rows(), &cols)
    }

    /// The trailing columns of `u`: a basis of the integer kernel of the input.
    pub fn kernel_basis(&self) -> IntMatrix {
        let cols: Vec<Vec<BigInt>> = (self.rank..self.u.cols()).map(|j| self.u.column(j)).collect();
        IntMatrix::from_columns(self.u.rows(), &cols)
    }
}

pub fn hermite_normal_form(m: &IntMatrix) -> Hnf {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = IntMatrix::identity(cols);
    let mut k = 0;
    let mut pivot_rows = Vec::new();

    for i in 0..rows {
        if k == cols {
            break;
        }
        // Euclid across row i on columns k..cols
        loop {
            let smallest = (k..cols)
                .filter(|&j| !h[(i, j)].is_zero())
                .min_by(|&a, &b| h[(i, a)].abs().cmp(&h[(i, b)].abs()));
            let Some(j) = smallest else { break };
            h.swap_cols(j, k);
            u.swap_cols(j, k);
            let mut done = true;
            for j in k + 1..cols {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let q = h[(i, j)].div_floor(&h[(i, k)]);
                h.sub_col_multiple(j, k, &q);
                u.sub_col_multiple(j, k, &q);
                if !h[(i, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(i, k)].is_zero() {
            continue;
        }
        if h[(i, k)].is_negative() {
            h.negate_col(k);
            u.negate_col(k);
        }
        for j in 0..k {
            let q = h[(i, j)].div_floor(&h[(i, k)]);
            h.sub_col_multiple(j, k, &q);
            u.sub_col_multiple(j, k, &q);
        }
        pivot_rows.push(i);
        k += 1;
    }
    Hnf { h, u, rank: k, pivot_rows }
}
