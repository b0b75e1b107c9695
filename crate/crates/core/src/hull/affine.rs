//! Affine rank of a point set and a coordinate projection that is injective on its affine hull.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::point::LatticePoint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct AffineFrame {
    /// Affine dimension; `-1` for the empty set.
    pub rank: isize,
    /// Coordinate axes whose projection is injective on the affine hull (`rank` of them).
    pub axes: Vec<usize>,
}

fn gcd_normalize(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

/// Fraction-free forward elimination in `i128`; callers guarantee small coordinates.
pub(crate) fn frame_small(points: &[LatticePoint], dim: usize) -> AffineFrame {
    let Some(origin) = points.first() else {
        return AffineFrame {
            rank: -1,
            axes: Vec::new(),
        };
    };
    let mut rows: Vec<(usize, Vec<i128>)> = Vec::with_capacity(dim);
    for p in &points[1..] {
        let mut v: Vec<i128> = p
            .coords()
            .iter()
            .zip(origin.coords())
            .map(|(&a, &b)| (a - b) as i128)
            .collect();
        for (c, r) in &rows {
            let f = v[*c];
            if f != 0 {
                let piv = r[*c];
                for (x, &y) in v.iter_mut().zip(r) {
                    *x = *x * piv - y * f;
                }
                gcd_normalize(&mut v);
            }
        }
        if let Some(c) = v.iter().position(|&x| x != 0) {
            rows.push((c, v));
            if rows.len() == dim {
                break;
            }
        }
    }
    AffineFrame {
        rank: rows.len() as isize,
        axes: rows.iter().map(|(c, _)| *c).collect(),
    }
}

/// Same as [`frame_small`] over arbitrary-precision integers.
pub(crate) fn frame_big(points: &[LatticePoint], dim: usize) -> AffineFrame {
    let Some(origin) = points.first() else {
        return AffineFrame {
            rank: -1,
            axes: Vec::new(),
        };
    };
    let mut rows: Vec<(usize, Vec<BigInt>)> = Vec::with_capacity(dim);
    for p in &points[1..] {
        let mut v: Vec<BigInt> = p
            .coords()
            .iter()
            .zip(origin.coords())
            .map(|(&a, &b)| BigInt::from(a) - BigInt::from(b))
            .collect();
        for (c, r) in &rows {
            if v[*c].is_zero() {
                continue;
            }
            let f = v[*c].clone();
            let piv = &r[*c];
            for (x, y) in v.iter_mut().zip(r) {
                *x = &*x * piv - y * &f;
            }
            let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if g.abs() > BigInt::from(1) {
                v.iter_mut().for_each(|x| *x = &*x / &g);
            }
        }
        if let Some(c) = v.iter().position(|x| !x.is_zero()) {
            rows.push((c, v));
            if rows.len() == dim {
                break;
            }
        }
    }
    AffineFrame {
        rank: rows.len() as isize,
        axes: rows.iter().map(|(c, _)| *c).collect(),
    }
}
