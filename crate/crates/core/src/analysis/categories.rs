use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hull::{affine_dimension, HullDescription};
use crate::lattice::{DirectionSet, PrimitiveVector};
use crate::peel::PeelingTrace;
use crate::point::LatticePoint;

/// Dimension of the face a direction supports on a layer polytope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Category {
    Face(usize),
    /// The polytope is not full-dimensional, so no category is assigned.
    Degenerate,
}

fn supported_vertices<'a>(v: &[i64], vertices: &'a [LatticePoint], maximize: bool) -> Vec<LatticePoint> {
    let mut best: Option<i128> = None;
    let mut out: Vec<&'a LatticePoint> = Vec::new();
    for p in vertices {
        let h = if maximize { p.dot(v) } else { -p.dot(v) };
        match best {
            Some(b) if h < b => {}
            Some(b) if h == b => out.push(p),
            _ => {
                best = Some(h);
                out.clear();
                out.push(p);
            }
        }
    }
    out.into_iter().cloned().collect()
}

fn face_dim(v: &[i64], hull: &HullDescription, maximize: bool) -> usize {
    let face = supported_vertices(v, hull.vertices.points(), maximize);
    affine_dimension(&face, hull.dim).max(0) as usize
}

/// Dimension of the face of `hull` maximizing `<v, x>`.
pub fn classify_direction(v: &PrimitiveVector, hull: &HullDescription) -> Result<Category> {
    if v.dim() != hull.dim {
        return Err(Error::DimensionMismatch {
            expected: hull.dim,
            found: v.dim(),
        });
    }
    if !hull.is_full_dimensional() {
        return Ok(Category::Degenerate);
    }
    Ok(Category::Face(face_dim(v.coords(), hull, true)))
}

/// Like [`classify_direction`] but also evaluates the opposite supporting hyperplane and
/// fails if the two faces differ in dimension.
pub fn classify_direction_strict(v: &PrimitiveVector, hull: &HullDescription) -> Result<Category> {
    let c = classify_direction(v, hull)?;
    if let Category::Face(k) = c {
        let opposite = face_dim(v.coords(), hull, false);
        if opposite != k {
            return Err(Error::InvariantViolation(format!(
                "direction {:?} supports a {k}-face but its opposite supports a {opposite}-face",
                v.coords()
            )));
        }
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryRecord {
    pub layer_index: usize,
    pub mu: i64,
    pub filtered: bool,
    /// `counts[k]` directions support a `k`-face, `k < d`.
    pub counts: Vec<usize>,
    pub degenerate: usize,
}

impl CategoryRecord {
    pub fn total(&self) -> usize {
        self.counts.iter().sum::<usize>() + self.degenerate
    }
}

/// Tallies the categories of every direction in `directions` on every layer polytope.
pub fn category_sweep(trace: &PeelingTrace, directions: &DirectionSet, strict: bool) -> Result<Vec<CategoryRecord>> {
    let layers = trace.layers()?;
    if directions.dim != trace.dim {
        return Err(Error::DimensionMismatch {
            expected: trace.dim,
            found: directions.dim,
        });
    }
    let d = trace.dim;
    layers
        .iter()
        .enumerate()
        .map(|(i, layer)| {
            let hull = HullDescription::from_vertices(layer.clone());
            let cats = directions
                .vectors
                .par_iter()
                .map(|v| {
                    if strict {
                        classify_direction_strict(v, &hull)
                    } else {
                        classify_direction(v, &hull)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let mut counts = vec![0; d];
            let mut degenerate = 0;
            for c in cats {
                match c {
                    Category::Face(k) if k < d => counts[k] += 1,
                    Category::Face(k) => {
                        return Err(Error::InvariantViolation(format!("{k}-face on a full-dimensional polytope in dimension {d}")))
                    }
                    Category::Degenerate => degenerate += 1,
                }
            }
            Ok(CategoryRecord {
                layer_index: i,
                mu: directions.mu,
                filtered: directions.is_filtered(),
                counts,
                degenerate,
            })
        })
        .collect()
}
