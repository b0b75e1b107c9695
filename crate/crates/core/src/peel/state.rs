//! Remaining-set bookkeeping between peeling steps.
//!
//! A point strictly inside an axis-parallel segment between two members is never a
//! hull vertex, so only points that are endpoints of all `d` axis lines through them
//! are handed to the hull code. Both states maintain that candidate set
//! incrementally as points are removed.

use std::collections::{BTreeSet, HashMap};

use crate::point::LatticePoint;

pub(crate) trait PeelState {
    fn len(&self) -> usize;
    /// Sorted candidate points; every extreme point of the remaining set is among them.
    fn candidates(&self) -> Vec<LatticePoint>;
    /// Removes extreme points of the current remaining set.
    fn remove(&mut self, removed: &[LatticePoint]);
}

/// Arbitrary finite point sets: one ordered coordinate set per axis-parallel line.
pub(crate) struct LineIndex {
    dim: usize,
    lines: Vec<HashMap<LatticePoint, BTreeSet<i64>>>,
    cand: BTreeSet<LatticePoint>,
    len: usize,
}

impl LineIndex {
    pub fn new(points: &[LatticePoint], dim: usize) -> Self {
        let mut lines: Vec<HashMap<LatticePoint, BTreeSet<i64>>> = vec![HashMap::new(); dim];
        for p in points {
            for (axis, line) in lines.iter_mut().enumerate() {
                line.entry(p.without_axis(axis))
                    .or_default()
                    .insert(p.coords()[axis]);
            }
        }
        let mut s = LineIndex {
            dim,
            lines,
            cand: BTreeSet::new(),
            len: points.len(),
        };
        let cand = points
            .iter()
            .filter(|p| s.is_candidate(p))
            .cloned()
            .collect();
        s.cand = cand;
        s
    }

    fn contains(&self, p: &LatticePoint) -> bool {
        self.lines[0]
            .get(&p.without_axis(0))
            .is_some_and(|l| l.contains(&p.coords()[0]))
    }

    fn is_candidate(&self, p: &LatticePoint) -> bool {
        (0..self.dim).all(|axis| {
            let line = &self.lines[axis][&p.without_axis(axis)];
            let c = p.coords()[axis];
            line.first() == Some(&c) || line.last() == Some(&c)
        })
    }
}

impl PeelState for LineIndex {
    fn len(&self) -> usize {
        self.len
    }

    fn candidates(&self) -> Vec<LatticePoint> {
        self.cand.iter().cloned().collect()
    }

    fn remove(&mut self, removed: &[LatticePoint]) {
        let mut recheck: Vec<LatticePoint> = Vec::new();
        for p in removed {
            self.cand.remove(p);
            self.len -= 1;
            for axis in 0..self.dim {
                let key = p.without_axis(axis);
                let line = self.lines[axis].get_mut(&key).expect("point is present");
                line.remove(&p.coords()[axis]);
                if line.is_empty() {
                    self.lines[axis].remove(&key);
                    continue;
                }
                for &c in [line.first(), line.last()].into_iter().flatten() {
                    let mut q = p.clone();
                    q.coords_mut()[axis] = c;
                    recheck.push(q);
                }
            }
        }
        for q in recheck {
            if !self.cand.contains(&q) && self.contains(&q) && self.is_candidate(&q) {
                self.cand.insert(q);
            }
        }
    }
}

/// Peeling state for sets that stay lattice-convex, such as `[n]^d`: every
/// axis-parallel line meets the remaining set in an interval.
pub(crate) struct GridIntervals {
    n: i64,
    dim: usize,
    /// Per axis, `(lo, hi)` per line; `lo > hi` marks an exhausted line.
    lines: Vec<Vec<(i64, i64)>>,
    cand: BTreeSet<LatticePoint>,
    len: usize,
}

impl GridIntervals {
    pub fn new(n: i64, dim: usize) -> Self {
        let per_axis = (n as usize).pow(dim as u32 - 1);
        let lines = vec![vec![(1, n); per_axis]; dim];
        let mut cand = BTreeSet::new();
        for mask in 0u32..(1 << dim) {
            cand.insert(LatticePoint::new(
                (0..dim).map(|i| if mask >> (dim - 1 - i) & 1 == 1 { n } else { 1 }),
            ));
        }
        GridIntervals {
            n,
            dim,
            lines,
            cand,
            len: (n as usize).pow(dim as u32),
        }
    }

    fn key(&self, p: &LatticePoint, axis: usize) -> usize {
        p.coords()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != axis)
            .fold(0usize, |k, (_, &c)| k * self.n as usize + (c - 1) as usize)
    }

    fn is_candidate(&self, p: &LatticePoint) -> bool {
        (0..self.dim).all(|axis| {
            let (lo, hi) = self.lines[axis][self.key(p, axis)];
            let c = p.coords()[axis];
            lo <= hi && (c == lo || c == hi)
        })
    }
}

impl PeelState for GridIntervals {
    fn len(&self) -> usize {
        self.len
    }

    fn candidates(&self) -> Vec<LatticePoint> {
        self.cand.iter().cloned().collect()
    }

    fn remove(&mut self, removed: &[LatticePoint]) {
        let mut recheck: Vec<LatticePoint> = Vec::new();
        for p in removed {
            self.cand.remove(p);
            self.len -= 1;
            for axis in 0..self.dim {
                let k = self.key(p, axis);
                let (lo, hi) = &mut self.lines[axis][k];
                let c = p.coords()[axis];
                if *lo == *hi {
                    *lo = *hi + 1;
                    continue;
                }
                let next = if c == *lo {
                    *lo += 1;
                    *lo
                } else {
                    debug_assert_eq!(c, *hi, "removed point must end its line");
                    *hi -= 1;
                    *hi
                };
                let mut q = p.clone();
                q.coords_mut()[axis] = next;
                recheck.push(q);
            }
        }
        for q in recheck {
            if !self.cand.contains(&q) && self.is_candidate(&q) {
                self.cand.insert(q);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::PointSet;

    #[test]
    fn grid_states_agree_on_initial_candidates() {
        let g = PointSet::grid(4, 3).unwrap();
        let a = LineIndex::new(g.points(), 3);
        let b = GridIntervals::new(4, 3);
        assert_eq!(a.candidates(), b.candidates());
        assert_eq!(a.candidates().len(), 8);
    }

    #[test]
    fn removal_exposes_new_endpoints() {
        let g = PointSet::grid(3, 2).unwrap();
        let mut a = LineIndex::new(g.points(), 2);
        let mut b = GridIntervals::new(3, 2);
        let corners: Vec<LatticePoint> = a.candidates();
        a.remove(&corners);
        b.remove(&corners);
        assert_eq!(a.candidates(), b.candidates());
        assert_eq!(a.len(), 5);
        // plus shape: the four edge midpoints are line endpoints, the centre is not
        assert_eq!(a.candidates().len(), 4);
    }
}
