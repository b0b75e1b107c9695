//! Andrew's monotone chain on exact integer coordinates.

pub(crate) fn cross(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i128 {
    (a[0] - o[0]) as i128 * (b[1] - o[1]) as i128 - (a[1] - o[1]) as i128 * (b[0] - o[0]) as i128
}

/// Indices of the strict hull vertices in counter-clockwise order, starting at the
/// lexicographically smallest point. Points on edges are dropped. Input must not
/// contain duplicates.
pub(crate) fn monotone_chain(pts: &[[i64; 2]]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_unstable_by_key(|&i| pts[i]);
    if order.len() <= 2 {
        return order;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(order.len() + 1);
    for &i in &order {
        while hull.len() >= 2
            && cross(pts[hull[hull.len() - 2]], pts[hull[hull.len() - 1]], pts[i]) <= 0
        {
            hull.pop();
        }
        hull.push(i);
    }
    let lower = hull.len() + 1;
    for &i in order.iter().rev().skip(1) {
        while hull.len() >= lower
            && cross(pts[hull[hull.len() - 2]], pts[hull[hull.len() - 1]], pts[i]) <= 0
        {
            hull.pop();
        }
        hull.push(i);
    }
    hull.pop();
    // all points collinear: the chain degenerates to the two endpoints
    if hull.len() == 2 && hull[0] == hull[1] {
        hull.pop();
    }
    hull
}

/// Twice the signed area of a polygon given by vertex indices.
pub(crate) fn twice_area(pts: &[[i64; 2]], cycle: &[usize]) -> i128 {
    let k = cycle.len();
    (0..k)
        .map(|i| {
            let a = pts[cycle[i]];
            let b = pts[cycle[(i + 1) % k]];
            a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128
        })
        .sum()
}
