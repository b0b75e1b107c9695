//! Quickhull in three dimensions over exact integers.
//!
//! Visibility is strict (`> 0`), so points on the current boundary are discarded and
//! coplanar neighbouring triangles may coexist. Coplanar triangles are merged into
//! polygonal faces afterwards and triangulation vertices lying on edges or inside
//! faces are dropped from the vertex set. Coordinates must satisfy the fast-path
//! magnitude bound so every predicate fits in `i128`.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;

type P3 = [i64; 3];

fn sub(a: P3, b: P3) -> [i128; 3] {
    [
        (a[0] - b[0]) as i128,
        (a[1] - b[1]) as i128,
        (a[2] - b[2]) as i128,
    ]
}

fn cross(u: [i128; 3], v: [i128; 3]) -> [i128; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

fn dot(u: [i128; 3], v: [i128; 3]) -> i128 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn widen(p: P3) -> [i128; 3] {
    [p[0] as i128, p[1] as i128, p[2] as i128]
}

#[derive(Debug)]
struct Tri {
    v: [usize; 3],
    /// `nb[i]` is the triangle across edge `(v[i], v[(i + 1) % 3])`.
    nb: [usize; 3],
    normal: [i128; 3],
    offset: i128,
    outside: Vec<usize>,
    alive: bool,
}

impl Tri {
    fn new(v: [usize; 3], pts: &[P3]) -> Tri {
        let normal = cross(sub(pts[v[1]], pts[v[0]]), sub(pts[v[2]], pts[v[0]]));
        let offset = dot(normal, widen(pts[v[0]]));
        Tri {
            v,
            nb: [usize::MAX; 3],
            normal,
            offset,
            outside: Vec::new(),
            alive: true,
        }
    }

    fn height(&self, p: P3) -> i128 {
        dot(self.normal, widen(p)) - self.offset
    }

    fn edge_to(&self, a: usize, b: usize) -> usize {
        (0..3)
            .find(|&i| self.v[i] == a && self.v[(i + 1) % 3] == b)
            .expect("adjacent triangle shares the reversed edge")
    }
}

/// A polygonal face of the hull.
#[derive(Debug, Clone)]
pub(crate) struct Face {
    /// Primitive outward normal.
    pub normal: [i64; 3],
    pub offset: i128,
    /// Strict corners, counter-clockwise seen from outside.
    pub corners: Vec<usize>,
}

#[derive(Debug, Clone)]
pub(crate) struct SpatialHull {
    pub faces: Vec<Face>,
    /// Sorted indices of the hull vertices.
    pub extreme: Vec<usize>,
    /// Six times the enclosed volume.
    pub volume6: i128,
    pub triangles: Vec<[usize; 3]>,
}

impl SpatialHull {
    pub fn edge_count(&self) -> usize {
        self.faces.iter().map(|f| f.corners.len()).sum::<usize>() / 2
    }

    /// Boundary neighbours of each hull vertex in the final triangulation; the
    /// difference vectors generate the tangent cone at that vertex.
    pub fn vertex_neighbors(&self) -> HashMap<usize, BTreeSet<usize>> {
        let mut out: HashMap<usize, BTreeSet<usize>> = HashMap::new();
        for t in &self.triangles {
            for i in 0..3 {
                let e = out.entry(t[i]).or_default();
                e.insert(t[(i + 1) % 3]);
                e.insert(t[(i + 2) % 3]);
            }
        }
        out
    }
}

fn initial_simplex(pts: &[P3]) -> Option<[usize; 4]> {
    let i0 = (0..pts.len()).min_by_key(|&i| pts[i])?;
    let i1 = (0..pts.len()).max_by_key(|&i| pts[i])?;
    if i0 == i1 {
        return None;
    }
    let d01 = sub(pts[i1], pts[i0]);
    let (i2, c) = (0..pts.len())
        .map(|i| {
            let c = cross(d01, sub(pts[i], pts[i0]));
            (i, c)
        })
        .max_by_key(|&(_, c)| dot(c, c))?;
    if dot(c, c) == 0 {
        return None;
    }
    let (i3, h) = (0..pts.len())
        .map(|i| (i, dot(c, sub(pts[i], pts[i0]))))
        .max_by_key(|&(_, h)| h.abs())?;
    if h == 0 {
        return None;
    }
    Some([i0, i1, i2, i3])
}

/// Hull of a full-dimensional point set without duplicates. Returns `None` when the
/// points do not span three dimensions.
pub(crate) fn quickhull(pts: &[P3]) -> Option<SpatialHull> {
    let simplex = initial_simplex(pts)?;
    let mut tris: Vec<Tri> = Vec::with_capacity(4 * pts.len().min(1 << 16));
    for skip in 0..4 {
        let mut v = [0usize; 3];
        let mut k = 0;
        for (j, &s) in simplex.iter().enumerate() {
            if j != skip {
                v[k] = s;
                k += 1;
            }
        }
        let mut t = Tri::new(v, pts);
        if t.height(pts[simplex[skip]]) > 0 {
            t = Tri::new([v[0], v[2], v[1]], pts);
        }
        tris.push(t);
    }
    let mut edges: HashMap<(usize, usize), usize> = HashMap::new();
    for (ti, t) in tris.iter().enumerate() {
        for i in 0..3 {
            edges.insert((t.v[i], t.v[(i + 1) % 3]), ti);
        }
    }
    for t in tris.iter_mut().take(4) {
        for i in 0..3 {
            let (a, b) = (t.v[i], t.v[(i + 1) % 3]);
            t.nb[i] = edges[&(b, a)];
        }
    }

    for (p, &q) in pts.iter().enumerate() {
        if simplex.contains(&p) {
            continue;
        }
        if let Some(t) = tris.iter_mut().find(|t| t.height(q) > 0) {
            t.outside.push(p);
        }
    }

    let mut stack: Vec<usize> = (0..4).filter(|&t| !tris[t].outside.is_empty()).collect();
    let mut mark: Vec<u32> = vec![0; tris.len()];
    let mut stamp = 0u32;
    while let Some(f) = stack.pop() {
        if !tris[f].alive || tris[f].outside.is_empty() {
            continue;
        }
        let eye = *tris[f]
            .outside
            .iter()
            .max_by_key(|&&p| tris[f].height(pts[p]))
            .expect("nonempty");
        let eye_pt = pts[eye];

        stamp += 1;
        mark.resize(tris.len(), 0);
        let mut visible = vec![f];
        mark[f] = stamp;
        let mut horizon: Vec<(usize, usize, usize)> = Vec::new();
        let mut k = 0;
        while k < visible.len() {
            let t = visible[k];
            k += 1;
            for i in 0..3 {
                let n = tris[t].nb[i];
                if mark[n] == stamp {
                    continue;
                }
                if tris[n].height(eye_pt) > 0 {
                    mark[n] = stamp;
                    visible.push(n);
                } else {
                    horizon.push((tris[t].v[i], tris[t].v[(i + 1) % 3], n));
                }
            }
        }

        let mut by_start: HashMap<usize, usize> = HashMap::with_capacity(horizon.len());
        let first_new = tris.len();
        for &(a, b, n) in &horizon {
            let id = tris.len();
            let mut t = Tri::new([a, b, eye], pts);
            t.nb[0] = n;
            let j = tris[n].edge_to(b, a);
            tris[n].nb[j] = id;
            by_start.insert(a, id);
            tris.push(t);
        }
        for id in first_new..tris.len() {
            let b = tris[id].v[1];
            let next = by_start[&b];
            tris[id].nb[1] = next;
            tris[next].nb[2] = id;
        }

        let mut orphans: Vec<usize> = Vec::new();
        for &t in &visible {
            tris[t].alive = false;
            orphans.append(&mut tris[t].outside);
        }
        for p in orphans {
            if p == eye {
                continue;
            }
            let q = pts[p];
            if let Some(t) = (first_new..tris.len()).find(|&t| tris[t].height(q) > 0) {
                tris[t].outside.push(p);
            }
        }
        stack.extend((first_new..tris.len()).filter(|&t| !tris[t].outside.is_empty()));
    }

    Some(assemble(pts, &tris))
}

fn primitive(n: [i128; 3]) -> [i64; 3] {
    let g = n[0].gcd(&n[1]).gcd(&n[2]);
    [(n[0] / g) as i64, (n[1] / g) as i64, (n[2] / g) as i64]
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn assemble(pts: &[P3], tris: &[Tri]) -> SpatialHull {
    let alive: Vec<usize> = (0..tris.len()).filter(|&t| tris[t].alive).collect();
    let normals: HashMap<usize, [i64; 3]> =
        alive.iter().map(|&t| (t, primitive(tris[t].normal))).collect();

    let mut parent: Vec<usize> = (0..tris.len()).collect();
    for &t in &alive {
        for &n in &tris[t].nb {
            if normals[&t] == normals[&n] {
                let (a, b) = (find(&mut parent, t), find(&mut parent, n));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }

    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut group_of: HashMap<usize, usize> = HashMap::new();
    for &t in &alive {
        let r = find(&mut parent, t);
        let g = *group_of.entry(r).or_insert_with(|| {
            groups.push((r, Vec::new()));
            groups.len() - 1
        });
        groups[g].1.push(t);
    }
    let root_of = |parent: &mut Vec<usize>, t: usize| find(parent, t);

    let mut faces = Vec::with_capacity(groups.len());
    let mut corners_all: BTreeSet<usize> = BTreeSet::new();
    for (root, members) in &groups {
        let mut next: HashMap<usize, usize> = HashMap::new();
        for &t in members {
            for i in 0..3 {
                if root_of(&mut parent, tris[t].nb[i]) != *root {
                    next.insert(tris[t].v[i], tris[t].v[(i + 1) % 3]);
                }
            }
        }
        let start = *next.keys().min().expect("face has a boundary");
        let mut cycle = vec![start];
        let mut cur = next[&start];
        while cur != start {
            cycle.push(cur);
            cur = next[&cur];
        }
        let k = cycle.len();
        let corners: Vec<usize> = (0..k)
            .filter(|&i| {
                let a = pts[cycle[(i + k - 1) % k]];
                let b = pts[cycle[i]];
                let c = pts[cycle[(i + 1) % k]];
                cross(sub(b, a), sub(c, b)) != [0, 0, 0]
            })
            .map(|i| cycle[i])
            .collect();
        corners_all.extend(corners.iter().copied());
        let normal = normals[&members[0]];
        let offset = dot(widen(normal), widen(pts[corners[0]]));
        faces.push(Face {
            normal,
            offset,
            corners,
        });
    }

    let o = pts[0];
    let volume6 = alive
        .iter()
        .map(|&t| {
            let [a, b, c] = tris[t].v;
            dot(sub(pts[a], o), cross(sub(pts[b], o), sub(pts[c], o)))
        })
        .sum();

    SpatialHull {
        faces,
        extreme: corners_all.into_iter().collect(),
        volume6,
        triangles: alive.iter().map(|&t| tris[t].v).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube(n: i64) -> Vec<P3> {
        let mut v = Vec::new();
        for x in 1..=n {
            for y in 1..=n {
                for z in 1..=n {
                    v.push([x, y, z]);
                }
            }
        }
        v
    }

    #[test]
    fn grid_cube_has_eight_corners_six_faces() {
        let pts = cube(4);
        let h = quickhull(&pts).unwrap();
        assert_eq!(h.extreme.len(), 8);
        assert_eq!(h.faces.len(), 6);
        assert_eq!(h.edge_count(), 12);
        assert_eq!(h.volume6, 6 * 27);
        for f in &h.faces {
            assert_eq!(f.corners.len(), 4);
            assert_eq!(f.normal.iter().map(|c| c.abs()).sum::<i64>(), 1);
        }
    }

    #[test]
    fn planar_input_is_rejected() {
        let pts = vec![[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]];
        assert!(quickhull(&pts).is_none());
    }

    #[test]
    fn octahedron() {
        let pts = vec![
            [1, 0, 0],
            [-1, 0, 0],
            [0, 1, 0],
            [0, -1, 0],
            [0, 0, 1],
            [0, 0, -1],
            [0, 0, 0],
        ];
        let h = quickhull(&pts).unwrap();
        assert_eq!(h.extreme, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(h.faces.len(), 8);
        assert_eq!(h.volume6, 8);
    }
}
