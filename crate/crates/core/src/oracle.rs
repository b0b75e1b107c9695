//! Brute-force extremality oracle, independent of the hull code.
//!
//! `p` is extreme in `S` iff the system `sum_j l_j q_j = p, sum_j l_j = 1, l >= 0` over
//! `q_j in S \ {p}` is infeasible. The oracle decides this with a phase-one revised
//! simplex whose basis inverse is kept as an integer adjugate over the determinant,
//! so every quantity is an exact rational. It is meant for tests and small inputs:
//! arithmetic is checked `i128` and overflow is reported as an error.

use crate::error::{Error, Result};
use crate::point::{LatticePoint, PointSet};

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

/// Bareiss determinant.
fn det(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = sub(mul(m[i][j], m[k][k])?, mul(m[i][k], m[k][j])?)?;
                m[i][j] = v / prev;
            }
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

/// Adjugate and determinant: `B^-1 = adj / det`.
#[allow(clippy::needless_range_loop)]
fn adjugate(b: &[Vec<i128>]) -> Result<(Vec<Vec<i128>>, i128)> {
    let n = b.len();
    let d = det(b.to_vec())?;
    let mut adj = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i128>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| b[r][c]).collect())
                .collect();
            let c = det(minor)?;
            adj[j][i] = if (i + j).is_multiple_of(2) { c } else { -c };
        }
    }
    Ok((adj, d))
}

fn mat_vec(m: &[Vec<i128>], v: &[i128]) -> Result<Vec<i128>> {
    m.iter()
        .map(|row| row.iter().zip(v).try_fold(0i128, |s, (&a, &b)| add(s, mul(a, b)?)))
        .collect()
}

/// Exact feasibility of `p` as a convex combination of `others`.
pub fn in_convex_hull(p: &LatticePoint, others: &[&LatticePoint]) -> Result<bool> {
    if others.is_empty() {
        return Ok(false);
    }
    let d = p.dim();
    let m = d + 1;
    // row signs keep the right-hand side non-negative
    let sign: Vec<i128> = (0..m)
        .map(|i| if i < d && p.coords()[i] < 0 { -1 } else { 1 })
        .collect();
    let b: Vec<i128> = (0..m)
        .map(|i| sign[i] * if i < d { p.coords()[i] as i128 } else { 1 })
        .collect();
    let n = others.len();
    let column = |j: usize| -> Vec<i128> {
        if j < n {
            (0..m)
                .map(|i| sign[i] * if i < d { others[j].coords()[i] as i128 } else { 1 })
                .collect()
        } else {
            (0..m).map(|i| i128::from(i == j - n)).collect()
        }
    };
    let cost = |j: usize| i128::from(j >= n);

    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        let bmat: Vec<Vec<i128>> = (0..m)
            .map(|i| basis.iter().map(|&j| column(j)[i]).collect())
            .collect();
        let (adj, det_b) = adjugate(&bmat)?;
        let det_sign = det_b.signum();
        // y * det = c_B^T adj
        let y: Vec<i128> = (0..m)
            .map(|c| {
                basis
                    .iter()
                    .enumerate()
                    .try_fold(0i128, |s, (r, &j)| add(s, mul(cost(j), adj[r][c])?))
            })
            .collect::<Result<_>>()?;
        let mut entering = None;
        for j in 0..n + m {
            if basis.contains(&j) {
                continue;
            }
            let a = column(j);
            let ya = a.iter().zip(&y).try_fold(0i128, |s, (&x, &w)| add(s, mul(x, w)?))?;
            let reduced = sub(mul(cost(j), det_b)?, ya)?;
            if reduced.signum() * det_sign < 0 {
                entering = Some(j);
                break;
            }
        }
        let xb = mat_vec(&adj, &b)?;
        let Some(j) = entering else {
            // optimal: feasible iff no artificial carries positive weight
            let infeasible = basis
                .iter()
                .zip(&xb)
                .any(|(&bj, &x)| bj >= n && x * det_sign > 0);
            return Ok(!infeasible);
        };
        let dir = mat_vec(&adj, &column(j))?;
        let mut leave: Option<usize> = None;
        for r in 0..m {
            if dir[r] * det_sign <= 0 {
                continue;
            }
            leave = match leave {
                None => Some(r),
                Some(s) => {
                    // xb[r]/dir[r] vs xb[s]/dir[s]; both denominators share det's sign
                    let lhs = mul(xb[r], dir[s])?;
                    let rhs = mul(xb[s], dir[r])?;
                    let (lhs, rhs) = if mul(dir[r], dir[s])? > 0 { (lhs, rhs) } else { (rhs, lhs) };
                    if lhs < rhs || (lhs == rhs && basis[r] < basis[s]) {
                        Some(r)
                    } else {
                        Some(s)
                    }
                }
            };
        }
        let r = leave.expect("phase-one objective is bounded");
        basis[r] = j;
    }
}

/// `true` iff `p` is not a convex combination of the other members of `s`.
pub fn oracle_extreme(p: &LatticePoint, s: &PointSet) -> Result<bool> {
    if p.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: p.dim(),
        });
    }
    if !s.contains(p) {
        return Err(Error::NotMember);
    }
    let others: Vec<&LatticePoint> = s.iter().filter(|q| *q != p).collect();
    Ok(!in_convex_hull(p, &others)?)
}

/// Extreme points of `s` decided point by point by the oracle.
pub fn oracle_extreme_points(s: &PointSet) -> Result<PointSet> {
    let mut out = Vec::new();
    for p in s {
        if oracle_extreme(p, s)? {
            out.push(p.clone());
        }
    }
    PointSet::new(s.dim(), out)
}

/// Full peeling using only the oracle.
pub fn oracle_layers(s: &PointSet) -> Result<Vec<PointSet>> {
    let mut layers = Vec::new();
    let mut cur = s.clone();
    while !cur.is_empty() {
        let ext = oracle_extreme_points(&cur)?;
        if ext.is_empty() {
            return Err(Error::InvariantViolation("oracle found no extreme point".into()));
        }
        cur = cur.difference(&ext);
        layers.push(ext);
    }
    Ok(layers)
}
