//! Short lattice vectors orthogonal to a direction, and the direction filter built on them.

use rayon::prelude::*;

use super::directions::{enumerate_directions, DirectionSet, PrimitiveVector};
use crate::error::{Error, Result};

/// Largest `alpha` on the grid `0.1, 0.2, ..., 1.5` for which the filter with radius
/// `alpha * mu^(1/3)` keeps at least half of `V_mu` for every `mu <= 40` in dimension 3.
pub const CALIBRATED_ALPHA_3: f64 = 0.7;

/// Nonzero integer vectors of squared norm at most `r2`, ordered by squared norm and
/// then lexicographically.
#[derive(Debug, Clone)]
pub struct ShortVectors {
    dim: usize,
    vectors: Vec<(i64, Vec<i64>)>,
}

impl ShortVectors {
    pub fn new(dim: usize, bound: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if bound <= 0.0 || !bound.is_finite() {
            return Err(Error::InvalidParameter(format!("search bound {bound} must be positive")));
        }
        let r = bound.floor() as i64;
        if (2.0 * r as f64 + 1.0).powi(dim as i32) > 5e7 {
            return Err(Error::InvalidParameter(format!("ball of radius {bound} in dimension {dim} is too large")));
        }
        let b2 = bound * bound;
        let mut vectors = Vec::new();
        let mut w = vec![-r; dim];
        loop {
            let n2: i64 = w.iter().map(|x| x * x).sum();
            if n2 > 0 && (n2 as f64) <= b2 {
                vectors.push((n2, w.clone()));
            }
            let mut i = dim;
            loop {
                if i == 0 {
                    vectors.sort();
                    return Ok(ShortVectors { dim, vectors });
                }
                i -= 1;
                if w[i] < r {
                    w[i] += 1;
                    break;
                }
                w[i] = -r;
            }
        }
    }

    /// First vector in the ordering that is orthogonal to `v`.
    pub fn shortest_orthogonal(&self, v: &[i64]) -> Option<(&[i64], i64)> {
        debug_assert_eq!(v.len(), self.dim);
        self.vectors
            .iter()
            .find(|(_, w)| w.iter().zip(v).map(|(a, b)| a * b).sum::<i64>() == 0)
            .map(|(n2, w)| (w.as_slice(), *n2))
    }
}

/// Shortest nonzero integer `w` with `<v, w> = 0` and `|w| <= bound`, together with `|w|`.
/// Ties are broken by the lexicographically smallest coordinates.
pub fn shortest_orthogonal_vector(v: &PrimitiveVector, bound: f64) -> Result<Option<(Vec<i64>, f64)>> {
    let sv = ShortVectors::new(v.dim(), bound)?;
    Ok(sv
        .shortest_orthogonal(v.coords())
        .map(|(w, n2)| (w.to_vec(), (n2 as f64).sqrt())))
}

/// Keeps the directions whose orthogonal complement has no nonzero lattice vector of norm `<= nu`.
pub fn filter_directions(ds: &DirectionSet, nu: f64) -> Result<DirectionSet> {
    if ds.is_filtered() {
        return Err(Error::InvalidParameter("direction set is already filtered".into()));
    }
    if nu <= 0.0 || !nu.is_finite() {
        return Err(Error::InvalidParameter(format!("nu={nu} must be positive")));
    }
    let vectors = if nu < 1.0 {
        ds.vectors.clone()
    } else {
        let sv = ShortVectors::new(ds.dim, nu)?;
        ds.vectors
            .par_iter()
            .filter(|v| sv.shortest_orthogonal(v.coords()).is_none())
            .cloned()
            .collect()
    };
    Ok(DirectionSet {
        mu: ds.mu,
        dim: ds.dim,
        vectors,
        filter_radius: Some(nu),
    })
}

/// Filter radius `alpha * mu^(1/d)`.
pub fn filter_radius(alpha: f64, mu: i64, d: usize) -> f64 {
    alpha * (mu as f64).powf(1.0 / d as f64)
}

#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Calibration {
    pub d: usize,
    pub mu_max: i64,
    /// `None` when no grid value satisfies the half-survival property.
    pub alpha: Option<f64>,
    /// `(mu, |V'_mu|, |V_mu|)` at the chosen alpha.
    pub survival: Vec<(i64, usize, usize)>,
}

pub const ALPHA_GRID: [f64; 15] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.1, 1.2, 1.3, 1.4, 1.5];

fn survival_counts(table: &[(i64, Option<i64>)], alpha: f64, mu_max: i64, d: usize) -> Vec<(i64, usize, usize)> {
    (1..=mu_max)
        .map(|mu| {
            let nu = filter_radius(alpha, mu, d);
            let mut kept = 0;
            let mut total = 0;
            for &(m, n2) in table {
                if m <= mu {
                    total += 1;
                    if n2.is_none_or(|n2| n2 as f64 > nu * nu) {
                        kept += 1;
                    }
                }
            }
            (mu, kept, total)
        })
        .collect()
}

/// Largest grid `alpha` keeping at least half of `V_mu` for every `mu` in `1..=mu_max`.
pub fn calibrate_alpha(d: usize, mu_max: i64) -> Result<Calibration> {
    let ds = enumerate_directions(mu_max, d)?;
    let top = filter_radius(ALPHA_GRID[ALPHA_GRID.len() - 1], mu_max, d);
    let sv = ShortVectors::new(d, top)?;
    // (max coordinate, squared norm of the shortest orthogonal vector within the top radius)
    let table: Vec<(i64, Option<i64>)> = ds
        .vectors
        .par_iter()
        .map(|v| (v.max_coord(), sv.shortest_orthogonal(v.coords()).map(|(_, n2)| n2)))
        .collect();
    for &alpha in ALPHA_GRID.iter().rev() {
        let survival = survival_counts(&table, alpha, mu_max, d);
        if survival.iter().all(|&(_, kept, total)| 2 * kept >= total) {
            return Ok(Calibration {
                d,
                mu_max,
                alpha: Some(alpha),
                survival,
            });
        }
    }
    Ok(Calibration {
        d,
        mu_max,
        alpha: None,
        survival: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(c: &[i64]) -> PrimitiveVector {
        PrimitiveVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn shortest_examples() {
        let (w, n) = shortest_orthogonal_vector(&pv(&[1, 0, 0]), 1.5).unwrap().unwrap();
        assert_eq!((w, n), (vec![0, -1, 0], 1.0));
        let (w, n) = shortest_orthogonal_vector(&pv(&[1, 1, 1]), 2.0).unwrap().unwrap();
        assert_eq!(w, vec![-1, 0, 1]);
        assert!((n - 2f64.sqrt()).abs() < 1e-12);
        assert!(shortest_orthogonal_vector(&pv(&[2, 3]), 3.0).unwrap().is_none());
        let (w, _) = shortest_orthogonal_vector(&pv(&[2, 3]), 3.7).unwrap().unwrap();
        assert_eq!(w, vec![-3, 2]);
    }

    #[test]
    fn filter_examples() {
        let v1 = enumerate_directions(1, 3).unwrap();
        let f = filter_directions(&v1, 1.1).unwrap();
        assert_eq!(f.vectors, vec![pv(&[1, 1, 1])]);
        assert!(filter_directions(&f, 1.1).is_err());
        let v4 = enumerate_directions(4, 3).unwrap();
        assert_eq!(filter_directions(&v4, 0.9).unwrap().vectors, v4.vectors);
    }

    #[test]
    fn calibrated_constant_matches_calibration() {
        let cal = calibrate_alpha(3, 40).unwrap();
        assert_eq!(cal.alpha, Some(CALIBRATED_ALPHA_3));
        let nu = filter_radius(CALIBRATED_ALPHA_3, 20, 3);
        let v20 = enumerate_directions(20, 3).unwrap();
        assert!(2 * filter_directions(&v20, nu).unwrap().len() >= v20.len());
    }
}
