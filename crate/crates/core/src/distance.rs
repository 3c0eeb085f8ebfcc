//! All-pairs hop distances and isometric-subgraph tests.

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph};
use crate::vertex_set::VertexSet;

/// All-pairs shortest-path distances of a connected graph.
///
/// Alongside the matrix it keeps, for every vertex `v` and radius `k`, the
/// sphere `{w : d(v, w) = k}` as a bit set. Geodesic intervals are
/// intersections of two spheres, which is what the visibility code runs on.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    diam: u32,
    dist: Vec<u32>,
    spheres: Vec<VertexSet>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Result<DistanceMatrix> {
        let n = g.order();
        let mut dist = Vec::with_capacity(n * n);
        for u in 0..n {
            for (v, d) in bfs_distances(g, u).into_iter().enumerate() {
                dist.push(d.ok_or(Error::Disconnected(u, v))?);
            }
        }
        let diam = dist.iter().copied().max().unwrap_or(0);
        let stride = diam as usize + 1;
        let mut spheres = vec![VertexSet::new(); n * stride];
        for u in 0..n {
            for v in 0..n {
                spheres[u * stride + dist[u * n + v] as usize].insert(v);
            }
        }
        Ok(DistanceMatrix {
            n,
            diam,
            dist,
            spheres,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    #[inline]
    pub fn diameter(&self) -> u32 {
        self.diam
    }

    /// Vertices at distance exactly `k` from `v` (empty beyond the diameter).
    #[inline]
    pub fn sphere(&self, v: usize, k: u32) -> VertexSet {
        if k > self.diam {
            VertexSet::new()
        } else {
            self.spheres[v * (self.diam as usize + 1) + k as usize]
        }
    }

    /// Whether `v` lies on some shortest `x,y`-path.
    #[inline]
    pub fn on_geodesic(&self, x: usize, v: usize, y: usize) -> bool {
        self.get(x, v) + self.get(v, y) == self.get(x, y)
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }
}

/// Convenience wrapper returning the distance matrix of a connected graph.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    DistanceMatrix::new(g)
}

/// Whether `G[W]` preserves all host distances between members of `W`.
///
/// `G[W]` has to be connected; a disconnected induced subgraph is reported as
/// an error rather than `false`.
pub fn is_isometric_subgraph(g: &Graph, d: &DistanceMatrix, w: &VertexSet) -> Result<bool> {
    let (sub, map) = g.induced_subgraph(w)?;
    let sub_d = DistanceMatrix::new(&sub).map_err(|e| match e {
        Error::Disconnected(a, b) => Error::Disconnected(map[a], map[b]),
        e => e,
    })?;
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            if sub_d.get(i, j) != d.get(map[i], map[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
