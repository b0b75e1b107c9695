//! The peeling process: repeatedly delete the hull vertices of the remaining set.

mod restriction;
mod state;
mod symmetry;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hull::{affine_dimension, extreme_points, hull_description};
use crate::point::{LatticePoint, PointSet};

pub use restriction::{restriction_equivalence_check, restriction_report, RestrictionReport};
use state::{GridIntervals, LineIndex, PeelState};

/// What to record per peeling step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelOptions {
    /// Edge and facet counts (dimension 3 only).
    pub fvectors: bool,
    /// Normalized volume of each layer polytope (dimension 3 and below).
    pub volumes: bool,
    /// Keep the point lists of the layers, not just their summaries.
    pub store_points: bool,
    /// Compute grid layers from one chamber of the hypercube symmetry group.
    pub symmetry: bool,
}

impl Default for PeelOptions {
    fn default() -> Self {
        PeelOptions {
            fvectors: true,
            volumes: true,
            store_points: true,
            symmetry: false,
        }
    }
}

impl PeelOptions {
    /// Layer sizes only.
    pub fn counts_only() -> Self {
        PeelOptions {
            fvectors: false,
            volumes: false,
            store_points: false,
            symmetry: false,
        }
    }

    pub fn with_points(mut self) -> Self {
        self.store_points = true;
        self
    }

    pub fn with_symmetry(mut self, on: bool) -> Self {
        self.symmetry = on;
        self
    }

    fn needs_hull(&self) -> bool {
        self.fvectors || self.volumes
    }
}

/// Summary of one layer polytope `P_i`, the hull of the set before step `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerSummary {
    pub layer_index: usize,
    pub f0: usize,
    pub f1: Option<usize>,
    pub f2: Option<usize>,
    /// `d!` times the volume of `P_i`.
    pub normalized_volume: Option<u128>,
    pub affine_dim: isize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelingTrace {
    pub dim: usize,
    /// Grid side when the initial set was `[n]^d`.
    pub n: Option<i64>,
    /// Removed point sets in order; `None` when only summaries were kept.
    pub layers: Option<Vec<PointSet>>,
    pub summaries: Vec<LayerSummary>,
    pub tau: usize,
}

impl PeelingTrace {
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.summaries.iter().map(|s| s.f0).collect()
    }

    pub fn total_points(&self) -> usize {
        self.summaries.iter().map(|s| s.f0).sum()
    }

    pub fn layers(&self) -> Result<&[PointSet]> {
        self.layers.as_deref().ok_or(Error::NotInstrumented("stored layer points"))
    }
}

/// One peeling step: `(extreme points, the rest)`.
pub fn peel_once(s: &PointSet) -> Result<(PointSet, PointSet)> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    let removed = extreme_points(s);
    let remaining = s.difference(&removed);
    Ok((removed, remaining))
}

fn run<S: PeelState>(
    mut state: S,
    dim: usize,
    n: Option<i64>,
    opts: PeelOptions,
) -> Result<PeelingTrace> {
    let mut layers = opts.store_points.then(Vec::new);
    let mut summaries = Vec::new();
    while state.len() > 0 {
        let cand = PointSet::from_sorted_unchecked(dim, state.candidates());
        let layer_index = summaries.len();
        let (removed, summary) = if opts.needs_hull() {
            let h = hull_description(&cand);
            let full3 = dim == 3 && h.affine_dim == 3;
            let summary = LayerSummary {
                layer_index,
                f0: h.vertices.len(),
                f1: if opts.fvectors && full3 { h.edge_count } else { None },
                f2: if opts.fvectors && full3 { Some(h.facets.len()) } else { None },
                normalized_volume: if opts.volumes { h.normalized_volume } else { None },
                affine_dim: h.affine_dim,
            };
            (h.vertices, summary)
        } else {
            let sym = match (opts.symmetry, n) {
                (true, Some(n)) => symmetry::symmetric_extreme(cand.points(), n, dim),
                _ => None,
            };
            let removed = match sym {
                Some(v) => PointSet::from_sorted_unchecked(dim, v),
                None => extreme_points(&cand),
            };
            let summary = LayerSummary {
                layer_index,
                f0: removed.len(),
                f1: None,
                f2: None,
                normalized_volume: None,
                affine_dim: affine_dimension(removed.points(), dim),
            };
            (removed, summary)
        };
        if removed.is_empty() {
            return Err(Error::InvariantViolation(format!(
                "step {layer_index} found no extreme point among {} remaining",
                state.len()
            )));
        }
        state.remove(removed.points());
        summaries.push(summary);
        if let Some(l) = layers.as_mut() {
            l.push(removed);
        }
    }
    Ok(PeelingTrace {
        dim,
        n,
        layers,
        tau: summaries.len(),
        summaries,
    })
}

/// Peels `s` to exhaustion.
pub fn peel_all(s: &PointSet, opts: PeelOptions) -> Result<PeelingTrace> {
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    run(LineIndex::new(s.points(), s.dim()), s.dim(), None, opts)
}

fn check_grid(n: i64, d: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!("n={n} must be >= 1")));
    }
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let lines = (n as u128).checked_pow(d as u32 - 1);
    if lines.is_none_or(|l| l > 1 << 26) || n > 1 << 20 {
        return Err(Error::InvalidParameter(format!("grid [{n}]^{d} is too large")));
    }
    Ok(())
}

/// Peels `[n]^d`, using its lattice convexity to keep per-line intervals instead of
/// the full point set.
pub fn grid_trace(n: i64, d: usize, opts: PeelOptions) -> Result<PeelingTrace> {
    check_grid(n, d)?;
    run(GridIntervals::new(n, d), d, Some(n), opts)
}

/// Layer number of `[n]^d`.
pub fn tau_grid(n: i64, d: usize) -> Result<usize> {
    tau_grid_with(n, d, false)
}

pub fn tau_grid_with(n: i64, d: usize, symmetry: bool) -> Result<usize> {
    let opts = PeelOptions {
        symmetry,
        ..PeelOptions::counts_only()
    };
    Ok(grid_trace(n, d, opts)?.tau)
}

/// Point reflection through the centre of `[n]^d`.
pub fn central_reflection(p: &LatticePoint, n: i64) -> LatticePoint {
    LatticePoint::new(p.coords().iter().map(|&x| n + 1 - x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sizes(t: &PeelingTrace) -> Vec<usize> {
        t.layer_sizes()
    }

    #[test]
    fn peel_once_examples() {
        let (r, rest) = peel_once(&PointSet::grid(3, 2).unwrap()).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(rest.len(), 5);
        let (r, rest) = peel_once(&PointSet::grid(2, 2).unwrap()).unwrap();
        assert_eq!(r.len(), 4);
        assert!(rest.is_empty());
        let single = PointSet::from_points([LatticePoint::from([5, 5, 5])]).unwrap();
        let (r, rest) = peel_once(&single).unwrap();
        assert_eq!(r, single);
        assert!(rest.is_empty());
        assert_eq!(peel_once(&PointSet::empty(2).unwrap()), Err(Error::EmptyInput));
    }

    #[test]
    fn small_grid_traces() {
        let t = peel_all(&PointSet::grid(3, 2).unwrap(), PeelOptions::default()).unwrap();
        assert_eq!((t.tau, sizes(&t)), (3, vec![4, 4, 1]));
        let t = peel_all(&PointSet::grid(3, 3).unwrap(), PeelOptions::default()).unwrap();
        assert_eq!((t.tau, sizes(&t)), (4, vec![8, 12, 6, 1]));
        for d in 1..=4 {
            assert_eq!(tau_grid(1, d).unwrap(), 1);
            assert_eq!(tau_grid(2, d).unwrap(), 1);
        }
    }

    #[test]
    fn grid_fvectors_for_3x3x3() {
        let t = grid_trace(3, 3, PeelOptions::default()).unwrap();
        let f: Vec<_> = t
            .summaries
            .iter()
            .map(|s| (s.f0, s.f1, s.f2, s.normalized_volume))
            .collect();
        assert_eq!(
            f,
            vec![
                (8, Some(12), Some(6), Some(48)),
                (12, Some(24), Some(14), Some(40)),
                (6, Some(12), Some(8), Some(8)),
                (1, None, None, Some(0)),
            ]
        );
    }

    #[test]
    fn grid_path_matches_general_path() {
        for d in 1..=3 {
            for n in 1..=(if d == 3 { 6 } else { 12 }) {
                let g = PointSet::grid(n, d).unwrap();
                let a = peel_all(&g, PeelOptions::default()).unwrap();
                let b = grid_trace(n, d, PeelOptions::default()).unwrap();
                assert_eq!(a.layers, b.layers, "n={n} d={d}");
                assert_eq!(a.summaries, b.summaries, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn symmetry_flag_is_transparent() {
        for d in 1..=3 {
            for n in 1..=(if d == 3 { 12 } else { 40 }) {
                let plain = grid_trace(n, d, PeelOptions::counts_only()).unwrap();
                let sym = grid_trace(
                    n,
                    d,
                    PeelOptions {
                        symmetry: true,
                        store_points: true,
                        ..PeelOptions::counts_only()
                    },
                )
                .unwrap();
                assert_eq!(plain.summaries, sym.summaries, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn one_dimensional_grids() {
        for n in 1..=20 {
            assert_eq!(tau_grid(n, 1).unwrap(), ((n + 1) / 2) as usize);
        }
    }

    #[test]
    fn invalid_grid_parameters() {
        assert!(tau_grid(0, 2).is_err());
        assert!(tau_grid(3, 0).is_err());
    }
}
