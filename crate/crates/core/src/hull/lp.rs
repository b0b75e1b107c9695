//! Convex-combination feasibility by a fraction-free (integer-pivoting) phase-one simplex.
//!
//! The tableau holds `D * B^-1 [A | b]` with `D` the current basis determinant, so all
//! entries stay integral and every division is exact. Bland's rule prevents cycling.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::point::LatticePoint;

/// `true` iff `p` lies in the convex hull of `others`.
pub(crate) fn in_convex_hull(p: &LatticePoint, others: &[&LatticePoint]) -> bool {
    if others.is_empty() {
        return false;
    }
    let d = p.dim();
    let m = d + 1;
    let ncols = others.len();
    let width = ncols + m + 1;
    let rhs = width - 1;

    // rows: coordinates then the affine row sum(lambda) = 1
    let mut t: Vec<Vec<BigInt>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let b = if i < d { p.coords()[i] } else { 1 };
        let sign = if b < 0 { -1 } else { 1 };
        let mut row = vec![BigInt::zero(); width];
        for (j, q) in others.iter().enumerate() {
            let a = if i < d { q.coords()[i] } else { 1 };
            row[j] = BigInt::from(sign * a);
        }
        row[ncols + i] = BigInt::one();
        row[rhs] = BigInt::from(sign * b);
        t.push(row);
    }
    // phase-one objective row: reduced costs of sum(artificials), rhs = -objective
    let mut obj = vec![BigInt::zero(); width];
    for row in &t {
        for j in 0..ncols {
            obj[j] -= &row[j];
        }
        obj[rhs] -= &row[rhs];
    }
    t.push(obj);

    let mut basis: Vec<usize> = (ncols..ncols + m).collect();
    let mut det = BigInt::one();
    while let Some(enter) = (0..ncols + m).find(|&j| t[m][j].is_negative()) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            leave = match leave {
                None => Some(i),
                Some(r) => {
                    // compare rhs_i / a_i with rhs_r / a_r
                    let lhs = &t[i][rhs] * &t[r][enter];
                    let rhs_v = &t[r][rhs] * &t[i][enter];
                    if lhs < rhs_v || (lhs == rhs_v && basis[i] < basis[r]) {
                        Some(i)
                    } else {
                        Some(r)
                    }
                }
            };
        }
        // the phase-one objective is bounded below by zero
        let r = leave.expect("phase-one problem is bounded");
        let piv = t[r][enter].clone();
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[enter].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = (&*x * &piv - &f * y) / &det;
            }
        }
        det = piv;
        basis[r] = enter;
    }
    t[m][rhs].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(p: &[i64], others: &[&[i64]]) -> bool {
        let p = LatticePoint::from(p);
        let o: Vec<LatticePoint> = others.iter().map(|c| LatticePoint::from(*c)).collect();
        let refs: Vec<&LatticePoint> = o.iter().collect();
        in_convex_hull(&p, &refs)
    }

    #[test]
    fn membership() {
        assert!(lp(&[2, 2], &[&[1, 1], &[3, 3], &[1, 3], &[3, 1]]));
        assert!(lp(&[2, 1], &[&[1, 1], &[3, 1]]));
        assert!(!lp(&[1, 1], &[&[2, 1], &[3, 1], &[2, 2]]));
        assert!(!lp(&[0, 0, 0, 0], &[]));
        assert!(lp(&[1, 1, 1, 1], &[&[0, 0, 0, 0], &[2, 2, 2, 2]]));
        assert!(!lp(&[-1, 5], &[&[-1, 4], &[-1, 3]]));
    }
}
