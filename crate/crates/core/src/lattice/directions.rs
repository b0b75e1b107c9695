//! Primitive direction vectors and the census of `V_mu`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::arith::{jordan_partial_sum, zeta};
use crate::error::{Error, Result};

/// A nonzero integer vector whose coordinates have greatest common divisor one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimitiveVector(Vec<i64>);

pub(crate) fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, x| g.gcd(x))
}

impl PrimitiveVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        match gcd_all(&coords) {
            1 => Ok(PrimitiveVector(coords)),
            0 => Err(Error::InvalidParameter("zero vector is not primitive".into())),
            g => Err(Error::InvalidParameter(format!(
                "{coords:?} is not primitive (gcd {g})"
            ))),
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn max_coord(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }
}

/// `V_mu`: every primitive vector with all coordinates in `[0, mu]`, or a filtered subset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectionSet {
    pub mu: i64,
    pub dim: usize,
    /// Lexicographically sorted.
    pub vectors: Vec<PrimitiveVector>,
    /// Radius of the orthogonal-vector filter that produced this subset, if any.
    pub filter_radius: Option<f64>,
}

impl DirectionSet {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn is_filtered(&self) -> bool {
        self.filter_radius.is_some()
    }
}

/// Exhaustive enumeration of `V_mu` in dimension `d`.
pub fn enumerate_directions(mu: i64, d: usize) -> Result<DirectionSet> {
    if mu < 1 {
        return Err(Error::InvalidParameter(format!("mu={mu} must be >= 1")));
    }
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    if (mu as f64 + 1.0).powi(d as i32) > 1e8 {
        return Err(Error::InvalidParameter(format!("box [0,{mu}]^{d} is too large")));
    }
    let mut vectors = Vec::new();
    let mut cur = vec![0i64; d];
    'outer: loop {
        let mut axis = d;
        loop {
            if axis == 0 {
                break 'outer;
            }
            axis -= 1;
            if cur[axis] < mu {
                cur[axis] += 1;
                break;
            }
            cur[axis] = 0;
        }
        if gcd_all(&cur) == 1 {
            vectors.push(PrimitiveVector(cur.clone()));
        }
    }
    Ok(DirectionSet {
        mu,
        dim: d,
        vectors,
        filter_radius: None,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub d: usize,
    pub mu: i64,
    pub exact_count: u64,
    pub jordan_sum: u128,
    /// `exact_count * zeta(d) / mu^d`.
    pub density_ratio: f64,
}

pub fn census_report(mu: i64, d: usize) -> Result<CensusReport> {
    if d < 2 {
        return Err(Error::InvalidParameter("census needs d >= 2".into()));
    }
    let exact_count = enumerate_directions(mu, d)?.len() as u64;
    let jordan_sum = jordan_partial_sum(mu as u64, d as u32);
    let density_ratio = exact_count as f64 * zeta(d as u32) / (mu as f64).powi(d as i32);
    Ok(CensusReport {
        d,
        mu,
        exact_count,
        jordan_sum,
        density_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords(ds: &DirectionSet) -> Vec<Vec<i64>> {
        ds.vectors.iter().map(|v| v.coords().to_vec()).collect()
    }

    #[test]
    fn small_direction_sets() {
        assert_eq!(
            coords(&enumerate_directions(1, 2).unwrap()),
            vec![vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(enumerate_directions(1, 3).unwrap().len(), 7);
        assert_eq!(enumerate_directions(2, 2).unwrap().len(), 5);
    }

    #[test]
    fn census_examples() {
        let c = census_report(1, 2).unwrap();
        assert_eq!((c.exact_count, c.jordan_sum), (3, 1));
        let c = census_report(1, 3).unwrap();
        assert_eq!((c.exact_count, c.jordan_sum), (7, 1));
        let c = census_report(60, 3).unwrap();
        assert!((0.9..=1.1).contains(&c.density_ratio), "{}", c.density_ratio);
    }

    #[test]
    fn primitive_vector_validation() {
        assert!(PrimitiveVector::new(vec![2, 4]).is_err());
        assert!(PrimitiveVector::new(vec![0, 0]).is_err());
        assert!(PrimitiveVector::new(vec![-2, 3]).is_ok());
    }
}
