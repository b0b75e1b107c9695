//! Extreme points of hyperoctahedrally symmetric sets from one fundamental chamber.
//!
//! In doubled centred coordinates `c = 2x - (n + 1)` the chamber is
//! `0 <= c_1 <= c_2 <= ... <= c_d`, cut out by the simple roots `e_1` and
//! `e_i - e_{i-1}`. For a symmetric set `S` and a point `p` of `S` in the chamber
//! `C`, `p` is a vertex of `conv(S)` iff its normal cone in `conv(S cap C)`
//! meets `C` in a full-dimensional cone. With tangent generators `E` at `p`, that is
//! the strict solvability of `<u, e> < 0` for `e` in `E` and `<u, a> > 0` for the
//! simple roots `a`, which by Gordan's alternative is `0 not in conv(E, -a)`. The
//! chamber test only needs `S cap C`, and vertices found there are spread over their
//! orbits.

use std::collections::BTreeSet;

use crate::hull::{extreme_points, vertex_cones};
use crate::point::{LatticePoint, PointSet};

fn centred(p: &LatticePoint, n: i64) -> Vec<i64> {
    p.coords().iter().map(|&x| 2 * x - (n + 1)).collect()
}

fn in_chamber(c: &[i64]) -> bool {
    c.first().is_some_and(|&c0| c0 >= 0) && c.windows(2).all(|w| w[0] <= w[1])
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(d - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, d - 1);
            out.push(q);
        }
    }
    out
}

/// Images of `p` under all coordinate permutations and reflections of `[n]^d`.
pub(crate) fn orbit(p: &LatticePoint, n: i64) -> BTreeSet<LatticePoint> {
    let d = p.dim();
    let mut out = BTreeSet::new();
    for perm in permutations(d) {
        for mask in 0u32..(1 << d) {
            out.insert(LatticePoint::new((0..d).map(|i| {
                let x = p.coords()[perm[i]];
                if mask >> i & 1 == 1 {
                    n + 1 - x
                } else {
                    x
                }
            })));
        }
    }
    out
}

fn negated_simple_roots(d: usize) -> Vec<LatticePoint> {
    (0..d)
        .map(|i| {
            LatticePoint::new((0..d).map(|j| {
                if j == i {
                    -1
                } else if i > 0 && j == i - 1 {
                    1
                } else {
                    0
                }
            }))
        })
        .collect()
}

/// Extreme points of a symmetric subset of `[n]^d` given a candidate superset of them.
/// `None` when the dimension has no chamber routine (d > 3).
pub(crate) fn symmetric_extreme(
    candidates: &[LatticePoint],
    n: i64,
    dim: usize,
) -> Option<Vec<LatticePoint>> {
    if dim > 3 {
        return None;
    }
    let chamber: Vec<LatticePoint> = candidates
        .iter()
        .filter(|p| in_chamber(&centred(p, n)))
        .cloned()
        .collect();
    let cones = vertex_cones(&chamber, dim)?;
    let roots = negated_simple_roots(dim);
    let origin = LatticePoint::new(std::iter::repeat_n(0, dim));
    let mut out = BTreeSet::new();
    for (v, nbrs) in cones {
        let p = &chamber[v];
        let mut gens: Vec<LatticePoint> = nbrs
            .iter()
            .map(|&q| {
                LatticePoint::new(chamber[q].coords().iter().zip(p.coords()).map(|(a, b)| a - b))
            })
            .collect();
        gens.extend(roots.iter().cloned());
        gens.push(origin.clone());
        let set = PointSet::new(dim, gens).expect("uniform dimension");
        if extreme_points(&set).contains(&origin) {
            out.extend(orbit(p, n));
        }
    }
    Some(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit(&LatticePoint::from([1, 1, 1]), 3).len(), 8);
        assert_eq!(orbit(&LatticePoint::from([1, 2, 2]), 3).len(), 6);
        assert_eq!(orbit(&LatticePoint::from([1, 2]), 4).len(), 8);
        assert_eq!(permutations(3).len(), 6);
    }

    #[test]
    fn chamber_route_matches_direct_hull_on_grids() {
        for d in 1..=3 {
            for n in 1..=5 {
                let g = PointSet::grid(n, d).unwrap();
                let direct = extreme_points(&g);
                let sym = symmetric_extreme(g.points(), n, d).unwrap();
                assert_eq!(sym, direct.points().to_vec(), "n={n} d={d}");
            }
        }
    }
}
