//! Peeling restricted to a facet hyperplane of the cube `[1, n]^d`.
//!
//! Each such hyperplane supports `conv(A)` for `A` inside the cube, so the part of
//! `A` on it should peel exactly like a `(d-1)`-dimensional set.

use serde::{Deserialize, Serialize};

use super::{peel_all, PeelOptions};
use crate::error::{Error, Result};
use crate::point::PointSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictionReport {
    /// The nonempty per-step removals on the hyperplane equal the lower-dimensional layers.
    pub equivalent: bool,
    /// Additionally, the `k`-th lower layer was removed exactly at global step `k`.
    pub steps_aligned: bool,
    /// Per global step, points removed on the hyperplane (with its axis dropped).
    pub restricted_removals: Vec<PointSet>,
    pub lower_layers: Vec<PointSet>,
}

/// Face `2k` is `x_k = 1`, face `2k + 1` is `x_k = n`.
pub fn restriction_report(a: &PointSet, n: i64, face_index: usize) -> Result<RestrictionReport> {
    let d = a.dim();
    if face_index >= 2 * d {
        return Err(Error::InvalidFace {
            index: face_index,
            dim: d,
        });
    }
    if d < 2 {
        return Err(Error::InvalidParameter(
            "restriction needs dimension at least 2".into(),
        ));
    }
    if let Some(p) = a.iter().find(|p| p.coords().iter().any(|&c| c < 1 || c > n)) {
        return Err(Error::InvalidParameter(format!("{p:?} lies outside [{n}]^{d}")));
    }
    let axis = face_index / 2;
    let value = if face_index.is_multiple_of(2) { 1 } else { n };
    let on_face = |s: &PointSet| -> PointSet {
        PointSet::new(
            d - 1,
            s.iter()
                .filter(|p| p.coords()[axis] == value)
                .map(|p| p.without_axis(axis)),
        )
        .expect("uniform dimension")
    };

    let section = on_face(a);
    let lower_layers = if section.is_empty() {
        Vec::new()
    } else {
        peel_all(&section, PeelOptions::default())?
            .layers
            .expect("points stored")
    };
    let restricted_removals: Vec<PointSet> = if a.is_empty() {
        Vec::new()
    } else {
        peel_all(a, PeelOptions::default())?
            .layers
            .expect("points stored")
            .iter()
            .map(on_face)
            .collect()
    };

    let nonempty: Vec<&PointSet> = restricted_removals.iter().filter(|s| !s.is_empty()).collect();
    let equivalent = nonempty.len() == lower_layers.len()
        && nonempty.iter().zip(&lower_layers).all(|(x, y)| *x == y);
    let steps_aligned = equivalent
        && restricted_removals
            .iter()
            .zip(&lower_layers)
            .all(|(x, y)| x == y);
    Ok(RestrictionReport {
        equivalent,
        steps_aligned,
        restricted_removals,
        lower_layers,
    })
}

pub fn restriction_equivalence_check(a: &PointSet, n: i64, face_index: usize) -> Result<bool> {
    Ok(restriction_report(a, n, face_index)?.equivalent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::LatticePoint;

    #[test]
    fn cube_face_peels_like_the_square() {
        let a = PointSet::grid(3, 3).unwrap();
        let r = restriction_report(&a, 3, 0).unwrap();
        assert!(r.equivalent && r.steps_aligned);
        let sizes: Vec<usize> = r.lower_layers.iter().map(|l| l.len()).collect();
        assert_eq!(sizes, vec![4, 4, 1]);
    }

    #[test]
    fn subset_of_the_face_itself() {
        let a = PointSet::from_points(
            [[1, 1, 1], [1, 2, 3], [1, 3, 2], [1, 2, 2]].map(LatticePoint::from),
        )
        .unwrap();
        for face in 0..6 {
            assert!(restriction_equivalence_check(&a, 3, face).unwrap());
        }
    }

    #[test]
    fn bad_face_index() {
        let a = PointSet::grid(2, 3).unwrap();
        assert_eq!(
            restriction_equivalence_check(&a, 2, 6),
            Err(Error::InvalidFace { index: 6, dim: 3 })
        );
    }
}
