//! Geodesic intervals and the visibility predicates.
//!
//! `x` and `y` are *X-visible* when some shortest `x,y`-path has no interior
//! vertex in `X`. The test never enumerates paths: it sweeps the interval
//! `I(x,y)` level by level from `x`, keeping only unblocked vertices reachable
//! from the previous level, and succeeds if the sweep reaches the level next
//! to `y`.

use crate::distance::DistanceMatrix;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// All vertices on at least one shortest `x,y`-path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeodesicInterval {
    pub x: usize,
    pub y: usize,
    pub members: VertexSet,
}

pub fn geodesic_interval(d: &DistanceMatrix, x: usize, y: usize) -> GeodesicInterval {
    let len = d.get(x, y);
    let mut members = VertexSet::new();
    for k in 0..=len {
        members.union_with(&d.sphere(x, k).intersection(&d.sphere(y, len - k)));
    }
    GeodesicInterval { x, y, members }
}

/// Whether some shortest `x,y`-path avoids `blockers` in its interior.
/// `x` and `y` themselves are never treated as blocking.
#[inline]
pub fn reachable_avoiding(
    g: &Graph,
    d: &DistanceMatrix,
    blockers: &VertexSet,
    x: usize,
    y: usize,
) -> bool {
    let len = d.get(x, y);
    if len <= 1 {
        return true;
    }
    let mut frontier = VertexSet::singleton(x);
    for k in 1..len {
        let mut level = d.sphere(x, k);
        level.intersect_with(&d.sphere(y, len - k));
        level.difference_with(blockers);
        let mut next = VertexSet::new();
        for v in &level {
            if g.neighbor_set(v).intersects(&frontier) {
                next.insert(v);
            }
        }
        if next.is_empty() {
            return false;
        }
        frontier = next;
    }
    true
}

/// Whether `x` and `y` are X-visible. The blockers are `X \ {x, y}`, so the
/// predicate is defined whether or not the endpoints belong to `X`.
pub fn are_x_visible(g: &Graph, d: &DistanceMatrix, set: &VertexSet, x: usize, y: usize) -> bool {
    if x == y {
        return true;
    }
    let blockers = set.without(x).without(y);
    reachable_avoiding(g, d, &blockers, x, y)
}

/// Whether every pair of `set` is X-visible.
pub fn is_mv_set(g: &Graph, d: &DistanceMatrix, set: &VertexSet) -> bool {
    let members = set.to_vec();
    members.iter().enumerate().all(|(i, &x)| {
        members[i + 1..]
            .iter()
            .all(|&y| are_x_visible(g, d, set, x, y))
    })
}

/// An MV set that is also independent.
pub fn is_independent_mv_set(g: &Graph, d: &DistanceMatrix, set: &VertexSet) -> bool {
    g.is_independent(set) && is_mv_set(g, d, set)
}

/// No member lies on a geodesic between two other members.
pub fn is_gp_set(d: &DistanceMatrix, set: &VertexSet) -> bool {
    let members = set.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &w in &members[i + 1..] {
            if members
                .iter()
                .any(|&v| v != u && v != w && d.on_geodesic(u, v, w))
            {
                return false;
            }
        }
    }
    true
}
