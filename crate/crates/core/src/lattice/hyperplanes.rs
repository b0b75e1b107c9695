//! Counting lattice hyperplanes with a given normal that meet `[n]^d`.

use super::directions::PrimitiveVector;
use crate::error::{Error, Result};

/// Number of distinct values of `<v, x>` for `x` in `[n]^d`, i.e. the number of
/// hyperplanes with normal `v` through at least one grid point.
pub fn hyperplane_count(v: &PrimitiveVector, n: i64) -> Result<u64> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!("n={n} must be >= 1")));
    }
    // negating a coordinate reflects its progression, so absolute values suffice
    let weights: Vec<usize> = v
        .coords()
        .iter()
        .map(|c| c.unsigned_abs() as usize)
        .filter(|&w| w > 0)
        .collect();
    let span: usize = weights.iter().sum::<usize>() * (n as usize - 1);
    if span > 1 << 30 {
        return Err(Error::InvalidParameter("sum range too large to tabulate".into()));
    }
    // reach[s]: s = sum w_i t_i with t_i in [0, n-1] is achievable
    let mut reach = vec![false; span + 1];
    reach[0] = true;
    let mut top = 0usize;
    for w in weights {
        let new_top = top + w * (n as usize - 1);
        let mut next = vec![false; span + 1];
        // sliding window of n terms along each residue class mod w
        for r in 0..w.min(new_top + 1) {
            let mut live = 0usize;
            let mut s = r;
            let mut k = 0usize;
            while s <= new_top {
                if s <= top && reach[s] {
                    live += 1;
                }
                if k >= n as usize {
                    let old = s - w * n as usize;
                    if old <= top && reach[old] {
                        live -= 1;
                    }
                }
                next[s] = live > 0;
                s += w;
                k += 1;
            }
        }
        reach = next;
        top = new_top;
    }
    Ok(reach.iter().filter(|&&b| b).count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn pv(c: &[i64]) -> PrimitiveVector {
        PrimitiveVector::new(c.to_vec()).unwrap()
    }

    fn brute(v: &[i64], n: i64) -> u64 {
        let mut sums = BTreeSet::new();
        let d = v.len();
        let mut x = vec![1i64; d];
        loop {
            sums.insert(x.iter().zip(v).map(|(a, b)| a * b).sum::<i64>());
            let mut i = 0;
            loop {
                if i == d {
                    return sums.len() as u64;
                }
                if x[i] < n {
                    x[i] += 1;
                    break;
                }
                x[i] = 1;
                i += 1;
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(hyperplane_count(&pv(&[1, 0]), 5).unwrap(), 5);
        assert_eq!(hyperplane_count(&pv(&[2, 3]), 2).unwrap(), 4);
        assert_eq!(hyperplane_count(&pv(&[1, 1]), 3).unwrap(), 5);
    }

    #[test]
    fn matches_exhaustive_scan() {
        for v in [[1, 2, 3], [3, 0, 5], [2, 5, 4], [1, 1, 1], [4, -3, 1]] {
            for n in 1..=7 {
                assert_eq!(hyperplane_count(&pv(&v), n).unwrap(), brute(&v, n), "{v:?} n={n}");
            }
        }
    }
}
