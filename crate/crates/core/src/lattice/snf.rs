use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `u · m · v = diag(d)` with `u`, `v` unimodular and `d_1 | d_2 | …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// Diagonal of length `min(rows, cols)`; nonzero entries first, all non-negative.
    pub d: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn invariant_factors(&self) -> impl Iterator<Item = &BigInt> {
        self.d.iter().filter(|x| !x.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().count()
    }

    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.u.rows(), self.v.cols());
        for (i, x) in self.d.iter().enumerate() {
            out[(i, i)] = x.clone();
        }
        out
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let n = rows.min(cols);

    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(a, u, v);
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                a.sub_row_multiple(i, t, &q);
                u.sub_row_multiple(i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                a.sub_col_multiple(j, t, &q);
                v.sub_col_multiple(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole trailing block
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)])));
            match offender {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    a.sub_row_multiple(t, i, &minus_one);
                    u.sub_row_multiple(t, i, &minus_one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(a, u, v)
}

fn finish(a: IntMatrix, u: IntMatrix, v: IntMatrix) -> SnfResult {
    let n = a.rows().min(a.cols());
    let d = (0..n).map(|i| a[(i, i)].clone()).collect();
    SnfResult { d, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check(m: &IntMatrix) -> SnfResult {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.diagonal_matrix());
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        s
    }

    #[test]
    fn diag_2_3_becomes_1_6() {
        let s = check(&IntMatrix::from_i64(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.d, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(3));
        assert!(s.d.iter().all(One::is_one));
    }

    #[test]
    fn single_row_gives_gcd() {
        let s = check(&IntMatrix::from_i64(&[vec![4, 6]]));
        assert_eq!(s.d, vec![BigInt::from(2)]);
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn zero_and_rank_deficient() {
        let s = check(&IntMatrix::zeros(2, 3));
        assert_eq!(s.rank(), 0);
        let s = check(&IntMatrix::from_i64(&[vec![2, 4], vec![4, 8], vec![6, 12]]));
        assert_eq!(s.d, vec![BigInt::from(2), BigInt::zero()]);
    }
}
