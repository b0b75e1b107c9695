//! Integer lattice points and finite point sets.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A point of `Z^d`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(SmallVec<[i64; 4]>);

impl LatticePoint {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        LatticePoint(coords.into_iter().collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }

    pub fn dot(&self, v: &[i64]) -> i128 {
        self.0
            .iter()
            .zip(v)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum()
    }

    /// Drops coordinate `axis`.
    pub fn without_axis(&self, axis: usize) -> LatticePoint {
        LatticePoint(
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != axis)
                .map(|(_, &c)| c)
                .collect(),
        )
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|c| c.saturating_abs()).max().unwrap_or(0)
    }
}

impl From<&[i64]> for LatticePoint {
    fn from(c: &[i64]) -> Self {
        LatticePoint(SmallVec::from_slice(c))
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(c: [i64; N]) -> Self {
        LatticePoint(SmallVec::from_slice(&c))
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite set of lattice points of a common dimension, stored sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PointSet {
    dim: usize,
    points: Vec<LatticePoint>,
}

impl PointSet {
    pub fn empty(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(PointSet {
            dim,
            points: Vec::new(),
        })
    }

    /// Builds a set of dimension `dim`; duplicates are merged.
    pub fn new(dim: usize, points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut points: Vec<LatticePoint> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::MixedDimensions {
                expected: dim,
                found: p.dim(),
            });
        }
        points.sort_unstable();
        points.dedup();
        Ok(PointSet { dim, points })
    }

    /// Builds a set whose dimension is taken from the first point.
    pub fn from_points(points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let points: Vec<LatticePoint> = points.into_iter().collect();
        let dim = points.first().ok_or(Error::EmptyInput)?.dim();
        PointSet::new(dim, points)
    }

    pub(crate) fn from_sorted_unchecked(dim: usize, points: Vec<LatticePoint>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        PointSet { dim, points }
    }

    /// The grid `[n]^d = {1, ..., n}^d` in lexicographic order.
    pub fn grid(n: i64, d: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!("grid side n={n} must be >= 1")));
        }
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        let total = (n as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
        if total > 1 << 28 {
            return Err(Error::InvalidParameter(format!(
                "grid [{n}]^{d} is too large to materialize"
            )));
        }
        let mut points = Vec::with_capacity(total as usize);
        let mut cur = vec![1i64; d];
        loop {
            points.push(LatticePoint::from(cur.as_slice()));
            let mut axis = d;
            loop {
                if axis == 0 {
                    return Ok(PointSet { dim: d, points });
                }
                axis -= 1;
                if cur[axis] < n {
                    cur[axis] += 1;
                    break;
                }
                cur[axis] = 1;
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LatticePoint> {
        self.points.iter()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn into_points(self) -> Vec<LatticePoint> {
        self.points
    }

    /// `self \ other`.
    pub fn difference(&self, other: &PointSet) -> PointSet {
        let points = self
            .points
            .iter()
            .filter(|p| !other.contains(p))
            .cloned()
            .collect();
        PointSet {
            dim: self.dim,
            points,
        }
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }

    /// Applies `f` to every point; the result must have dimension `dim`.
    pub fn map(&self, dim: usize, f: impl Fn(&LatticePoint) -> LatticePoint) -> Result<PointSet> {
        PointSet::new(dim, self.points.iter().map(f))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a LatticePoint;
    type IntoIter = std::slice::Iter<'a, LatticePoint>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}
