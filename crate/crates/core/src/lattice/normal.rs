//! Primitive normals of lattice hyperplanes through `d` points.

use super::directions::{gcd_all, PrimitiveVector};
use crate::error::{Error, Result};
use crate::point::LatticePoint;

/// Determinant by fraction-free elimination with checked arithmetic.
pub(crate) fn bareiss_det(mut m: Vec<Vec<i128>>) -> Result<i128> {
    let k = m.len();
    if k == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| m[r][c] != 0) else {
            return Ok(0);
        };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                let a = m[r][j].checked_mul(m[c][c]).ok_or(Error::Overflow)?;
                let b = m[r][c].checked_mul(m[c][j]).ok_or(Error::Overflow)?;
                m[r][j] = a.checked_sub(b).ok_or(Error::Overflow)? / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    Ok(sign * m[k - 1][k - 1])
}

/// Primitive normal of the hyperplane through `d` affinely independent points in `Z^d`,
/// oriented so that its first nonzero coordinate is positive.
pub fn primitive_normal(points: &[LatticePoint]) -> Result<PrimitiveVector> {
    let d = points.len();
    if d == 0 {
        return Err(Error::EmptyInput);
    }
    for p in points {
        if p.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: p.dim(),
            });
        }
    }
    let last = &points[d - 1];
    let rows: Vec<Vec<i128>> = points[..d - 1]
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(last.coords())
                .map(|(a, b)| *a as i128 - *b as i128)
                .collect()
        })
        .collect();
    let mut normal = Vec::with_capacity(d);
    for j in 0..d {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| *x).collect())
            .collect();
        let cof = bareiss_det(minor)?;
        normal.push(if (d + j).is_multiple_of(2) { cof } else { -cof });
    }
    let g = normal
        .iter()
        .fold(0u128, |g, x| num_integer::gcd(g, x.unsigned_abs()));
    if g == 0 {
        return Err(Error::AffinelyDependent);
    }
    let flip = normal.iter().find(|x| **x != 0).is_some_and(|x| *x < 0);
    let coords = normal
        .into_iter()
        .map(|x| {
            let y = x / g as i128;
            i64::try_from(if flip { -y } else { y }).map_err(|_| Error::Overflow)
        })
        .collect::<Result<Vec<i64>>>()?;
    debug_assert_eq!(gcd_all(&coords), 1);
    PrimitiveVector::new(coords)
}
