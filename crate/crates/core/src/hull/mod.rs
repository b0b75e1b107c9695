//! Extreme points and hull descriptions of finite lattice point sets.
//!
//! Dimensions up to three with moderate coordinates use exact `i128` predicates:
//! min/max for affine dimension one, the monotone chain in the plane and quickhull in
//! space, always after projecting onto coordinate axes that are injective on the
//! affine hull. Everything else goes through per-point convex-combination feasibility
//! over arbitrary-precision integers.

mod affine;
mod lp;
mod planar;
mod spatial;

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::point::{LatticePoint, PointSet};

pub(crate) use affine::{frame_big, frame_small};

/// Coordinates up to this magnitude (and dimension up to 3) take the `i128` fast path.
pub const FAST_COORD_LIMIT: i64 = 1 << 28;

/// A facet of a full-dimensional hull in dimension 2 or 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    /// Primitive outward normal.
    pub normal: Vec<i64>,
    /// `<normal, x> = offset` on the facet and `< offset` inside.
    pub offset: i128,
    /// Vertices in boundary order (counter-clockwise seen from outside in 3D).
    pub vertices: Vec<LatticePoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullDescription {
    pub dim: usize,
    pub vertices: PointSet,
    /// Empty unless `affine_dim == dim` and `dim` is 2 or 3.
    pub facets: Vec<Facet>,
    /// `-1` for the empty set.
    pub affine_dim: isize,
    /// `dim!` times the Euclidean volume; `None` where it is not computed (dim >= 4).
    pub normalized_volume: Option<u128>,
    /// Number of edges for a full-dimensional 3D hull.
    pub edge_count: Option<usize>,
}

impl HullDescription {
    /// Hull description from a vertex set alone, without facets.
    pub fn from_vertices(vertices: PointSet) -> HullDescription {
        let affine_dim = affine_dimension(vertices.points(), vertices.dim());
        HullDescription {
            dim: vertices.dim(),
            vertices,
            facets: Vec::new(),
            affine_dim,
            normalized_volume: None,
            edge_count: None,
        }
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim as isize
    }
}

struct Analysis {
    extreme: Vec<usize>,
    affine_dim: isize,
    facets: Vec<(Vec<i64>, i128, Vec<usize>)>,
    volume: Option<u128>,
    edges: Option<usize>,
    neighbors: Option<Vec<(usize, Vec<usize>)>>,
}

fn fast_path(points: &[LatticePoint], dim: usize) -> bool {
    dim <= 3 && points.iter().all(|p| p.max_abs() <= FAST_COORD_LIMIT)
}

pub(crate) fn affine_dimension(points: &[LatticePoint], dim: usize) -> isize {
    if fast_path(points, dim) {
        frame_small(points, dim).rank
    } else {
        frame_big(points, dim).rank
    }
}

fn analyze(points: &[LatticePoint], dim: usize, full: bool) -> Analysis {
    if fast_path(points, dim) {
        analyze_small(points, dim, full)
    } else {
        analyze_generic(points, dim)
    }
}

fn analyze_small(points: &[LatticePoint], dim: usize, full: bool) -> Analysis {
    let frame = frame_small(points, dim);
    let mut axes = frame.axes.clone();
    axes.sort_unstable();
    let zero_volume = Some(0);
    match frame.rank {
        -1 => Analysis {
            extreme: Vec::new(),
            affine_dim: -1,
            facets: Vec::new(),
            volume: zero_volume,
            edges: None,
            neighbors: Some(Vec::new()),
        },
        0 => Analysis {
            extreme: vec![0],
            affine_dim: 0,
            facets: Vec::new(),
            volume: zero_volume,
            edges: None,
            neighbors: Some(vec![(0, Vec::new())]),
        },
        1 => {
            let a = axes[0];
            let lo = (0..points.len()).min_by_key(|&i| points[i].coords()[a]).unwrap();
            let hi = (0..points.len()).max_by_key(|&i| points[i].coords()[a]).unwrap();
            let volume = if dim == 1 {
                (points[hi].coords()[0] - points[lo].coords()[0]) as u128
            } else {
                0
            };
            let mut extreme = vec![lo, hi];
            extreme.sort_unstable();
            Analysis {
                extreme,
                affine_dim: 1,
                facets: Vec::new(),
                volume: Some(volume),
                edges: None,
                neighbors: Some(vec![(lo, vec![hi]), (hi, vec![lo])]),
            }
        }
        2 => {
            let proj: Vec<[i64; 2]> = points
                .iter()
                .map(|p| [p.coords()[axes[0]], p.coords()[axes[1]]])
                .collect();
            let cycle = planar::monotone_chain(&proj);
            let k = cycle.len();
            let mut facets = Vec::new();
            let mut volume = 0u128;
            if dim == 2 {
                volume = planar::twice_area(&proj, &cycle) as u128;
                if full {
                    for i in 0..k {
                        let (a, b) = (proj[cycle[i]], proj[cycle[(i + 1) % k]]);
                        let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
                        let g = num_integer::gcd(dx, dy);
                        let normal = vec![dy / g, -dx / g];
                        let offset = normal[0] as i128 * a[0] as i128 + normal[1] as i128 * a[1] as i128;
                        facets.push((normal, offset, vec![cycle[i], cycle[(i + 1) % k]]));
                    }
                }
            }
            let neighbors = (0..k)
                .map(|i| (cycle[i], vec![cycle[(i + k - 1) % k], cycle[(i + 1) % k]]))
                .collect();
            let mut extreme = cycle;
            extreme.sort_unstable();
            Analysis {
                extreme,
                affine_dim: 2,
                facets,
                volume: Some(volume),
                edges: None,
                neighbors: Some(neighbors),
            }
        }
        _ => {
            let pts: Vec<[i64; 3]> = points
                .iter()
                .map(|p| [p.coords()[0], p.coords()[1], p.coords()[2]])
                .collect();
            let h = spatial::quickhull(&pts).expect("rank-3 input spans space");
            let facets = if full {
                h.faces
                    .iter()
                    .map(|f| (f.normal.to_vec(), f.offset, f.corners.clone()))
                    .collect()
            } else {
                Vec::new()
            };
            let neighbors = if full {
                let nb = h.vertex_neighbors();
                Some(
                    h.extreme
                        .iter()
                        .map(|v| (*v, nb[v].iter().copied().collect()))
                        .collect(),
                )
            } else {
                None
            };
            Analysis {
                edges: Some(h.edge_count()),
                extreme: h.extreme,
                affine_dim: 3,
                facets,
                volume: Some(h.volume6 as u128),
                neighbors,
            }
        }
    }
}

/// Indices of points that are not strictly inside an axis-parallel segment between
/// two other members. Every extreme point survives.
pub(crate) fn axis_line_candidates(points: &[LatticePoint]) -> Vec<usize> {
    let dim = points.first().map_or(0, |p| p.dim());
    let mut keep = vec![true; points.len()];
    for axis in 0..dim {
        let mut ends: HashMap<LatticePoint, (i64, i64)> = HashMap::new();
        for p in points {
            let c = p.coords()[axis];
            ends.entry(p.without_axis(axis))
                .and_modify(|e| {
                    e.0 = e.0.min(c);
                    e.1 = e.1.max(c);
                })
                .or_insert((c, c));
        }
        for (i, p) in points.iter().enumerate() {
            let c = p.coords()[axis];
            let (lo, hi) = ends[&p.without_axis(axis)];
            if lo < c && c < hi {
                keep[i] = false;
            }
        }
    }
    (0..points.len()).filter(|&i| keep[i]).collect()
}

const MIDPOINT_FILTER_MAX: usize = 1024;

fn analyze_generic(points: &[LatticePoint], dim: usize) -> Analysis {
    let affine_dim = frame_big(points, dim).rank;
    let mut cand = axis_line_candidates(points);
    if points.len() <= MIDPOINT_FILTER_MAX {
        let members: HashSet<&LatticePoint> = points.iter().collect();
        cand.retain(|&i| {
            let p = &points[i];
            !points.iter().any(|q| {
                q != p && {
                    let r = LatticePoint::new(
                        p.coords().iter().zip(q.coords()).map(|(&a, &b)| 2 * a - b),
                    );
                    members.contains(&r)
                }
            })
        });
    }
    let extreme: Vec<usize> = cand
        .par_iter()
        .filter(|&&i| {
            let others: Vec<&LatticePoint> = cand
                .iter()
                .filter(|&&j| j != i)
                .map(|&j| &points[j])
                .collect();
            !lp::in_convex_hull(&points[i], &others)
        })
        .copied()
        .collect();
    Analysis {
        extreme,
        affine_dim,
        facets: Vec::new(),
        volume: if affine_dim < dim as isize { Some(0) } else { None },
        edges: None,
        neighbors: None,
    }
}

/// The vertices of the convex hull of `s`: points not in the hull of the others.
pub fn extreme_points(s: &PointSet) -> PointSet {
    let a = analyze(s.points(), s.dim(), false);
    let mut idx = a.extreme;
    idx.sort_unstable();
    PointSet::from_sorted_unchecked(s.dim(), idx.into_iter().map(|i| s.points()[i].clone()).collect())
}

/// [`extreme_points`] over a raw point list; rejects mixed dimensions.
pub fn extreme_points_of(points: &[LatticePoint]) -> Result<PointSet> {
    match points.first() {
        None => Ok(PointSet::from_sorted_unchecked(1, Vec::new())),
        Some(p) => Ok(extreme_points(&PointSet::new(p.dim(), points.iter().cloned())?)),
    }
}

/// Vertices, affine dimension and (for full-dimensional 2D/3D hulls) facets.
pub fn hull_description(s: &PointSet) -> HullDescription {
    let pts = s.points();
    let a = analyze(pts, s.dim(), true);
    let mut idx = a.extreme;
    idx.sort_unstable();
    let vertices =
        PointSet::from_sorted_unchecked(s.dim(), idx.into_iter().map(|i| pts[i].clone()).collect());
    let facets = a
        .facets
        .into_iter()
        .map(|(normal, offset, vs)| Facet {
            normal,
            offset,
            vertices: vs.into_iter().map(|i| pts[i].clone()).collect(),
        })
        .collect();
    HullDescription {
        dim: s.dim(),
        vertices,
        facets,
        affine_dim: a.affine_dim,
        normalized_volume: a.volume,
        edge_count: a.edges,
    }
}

/// For each hull vertex, boundary neighbours whose difference vectors generate the
/// tangent cone at that vertex. Only available on the fast path.
pub(crate) fn vertex_cones(points: &[LatticePoint], dim: usize) -> Option<Vec<(usize, Vec<usize>)>> {
    if !fast_path(points, dim) {
        return None;
    }
    analyze_small(points, dim, true).neighbors
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[&[i64]]) -> PointSet {
        PointSet::from_points(v.iter().map(|c| LatticePoint::from(*c))).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(extreme_points(&set(&[&[1, 1]])), set(&[&[1, 1]]));
        assert_eq!(
            extreme_points(&PointSet::grid(3, 2).unwrap()),
            set(&[&[1, 1], &[1, 3], &[3, 1], &[3, 3]])
        );
        assert_eq!(
            extreme_points(&PointSet::grid(2, 3).unwrap()),
            PointSet::grid(2, 3).unwrap()
        );
        assert_eq!(
            extreme_points(&set(&[&[1, 1], &[2, 2], &[3, 3]])),
            set(&[&[1, 1], &[3, 3]])
        );
    }

    #[test]
    fn cube_description() {
        let h = hull_description(&PointSet::grid(2, 3).unwrap());
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.facets.len(), 6);
        assert_eq!(h.affine_dim, 3);
        let mut normals: Vec<_> = h.facets.iter().map(|f| f.normal.clone()).collect();
        normals.sort();
        assert_eq!(
            normals,
            vec![
                vec![-1, 0, 0],
                vec![0, -1, 0],
                vec![0, 0, -1],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![1, 0, 0]
            ]
        );
        assert_eq!(h.normalized_volume, Some(6));
    }

    #[test]
    fn planar_triangle_in_space() {
        let h = hull_description(&set(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(h.affine_dim, 2);
        assert_eq!(h.vertices.len(), 3);
        assert!(h.facets.is_empty());
        assert_eq!(h.normalized_volume, Some(0));
    }

    #[test]
    fn empty_set() {
        let h = hull_description(&PointSet::empty(3).unwrap());
        assert_eq!(h.affine_dim, -1);
        assert!(h.vertices.is_empty());
    }

    #[test]
    fn generic_path_matches_fast_path_on_shifted_grid() {
        // the shift pushes coordinates past the fast-path bound
        let g = PointSet::grid(3, 3).unwrap();
        let far = g
            .map(3, |p| LatticePoint::new(p.coords().iter().map(|c| c + (1 << 40))))
            .unwrap();
        let e = extreme_points(&far);
        assert_eq!(e.len(), 8);
        assert_eq!(hull_description(&far).affine_dim, 3);
    }

    #[test]
    fn four_dimensional_grid() {
        let g = PointSet::grid(3, 4).unwrap();
        let e = extreme_points(&g);
        assert_eq!(e.len(), 16);
        assert!(e.iter().all(|p| p.coords().iter().all(|&c| c == 1 || c == 3)));
    }

    #[test]
    fn mixed_dimensions_is_an_error() {
        let pts = vec![LatticePoint::from([1, 2]), LatticePoint::from([1])];
        assert!(extreme_points_of(&pts).is_err());
    }
}
