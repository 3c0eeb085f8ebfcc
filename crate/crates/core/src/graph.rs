//! Simple undirected graphs on dense vertex indices.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept twice: as sorted neighbor lists for iteration and as
/// per-vertex bit rows for set algebra. Disconnected graphs can be built (a
/// corona factor need not be connected); anything that needs distances
/// rejects them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    neighbor_bits: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are collapsed.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::CapExceeded {
                n,
                cap: MAX_VERTICES,
            });
        }
        let mut neighbor_bits = vec![VertexSet::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            neighbor_bits[u].insert(v);
            neighbor_bits[v].insert(u);
        }
        let adjacency: Vec<Vec<usize>> = neighbor_bits.iter().map(|s| s.to_vec()).collect();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            adjacency,
            neighbor_bits,
            edge_count,
        })
    }

    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::new(n, std::iter::empty())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.neighbor_bits[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbor_bits[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Union of the neighborhoods of every vertex in `set`.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in set {
            out.union_with(&self.neighbor_bits[v]);
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Degrees sorted in nonincreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Vertices of the connected component containing `start`.
    pub fn component(&self, start: usize) -> VertexSet {
        self.component_within(start, &self.vertices())
    }

    fn component_within(&self, start: usize, allowed: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = self.neighborhood(&frontier);
            next.intersect_with(allowed);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component(0).len() == self.order()
    }

    /// Whether the subgraph induced by `set` is connected. The empty set counts
    /// as disconnected.
    pub fn induces_connected(&self, set: &VertexSet) -> bool {
        match set.first() {
            Some(v) => self.component_within(v, set) == *set,
            None => false,
        }
    }

    /// Returns an error naming an unreachable pair when the graph is disconnected.
    pub fn require_connected(&self) -> Result<()> {
        let comp = self.component(0);
        match self.vertices().difference(&comp).first() {
            Some(v) => Err(Error::Disconnected(0, v)),
            None => Ok(()),
        }
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(u, v)| !self.neighbor_bits[u].intersects(&self.neighbor_bits[v]))
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order() && self.is_connected()
    }

    /// Leaves (degree-one vertices).
    pub fn leaves(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Whether the vertices of `set` are pairwise non-adjacent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| !self.neighbor_bits[v].intersects(set))
    }

    /// The subgraph induced by `set`. Vertex `i` of the result is the `i`-th
    /// smallest member of `set`; the returned vector maps back to host indices.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        let members = set.to_vec();
        if let Some(&v) = members.iter().find(|&&v| v >= self.order()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            });
        }
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in members.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| set.contains(u) && set.contains(v))
            .map(|(u, v)| (local[u], local[v]));
        Ok((Graph::new(members.len(), edges)?, members))
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order() {
            return Err(Error::DimensionMismatch(format!(
                "permutation of length {} for graph on {} vertices",
                perm.len(),
                self.order()
            )));
        }
        Graph::new(self.order(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.order(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Hop distances from `source`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Isomorphism-invariant fingerprint: sorted degree sequence plus the sorted
/// multiset of pairwise distances (`u32::MAX` for unreachable pairs).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: usize,
    pub degrees: Vec<usize>,
    pub distances: Vec<u32>,
}

pub fn fingerprint(g: &Graph) -> Fingerprint {
    let mut distances = Vec::with_capacity(g.order() * g.order() / 2);
    for u in 0..g.order() {
        let row = bfs_distances(g, u);
        distances.extend(row[u + 1..].iter().map(|d| d.unwrap_or(u32::MAX)));
    }
    distances.sort_unstable();
    Fingerprint {
        order: g.order(),
        degrees: g.degree_sequence(),
        distances,
    }
}

/// Largest order accepted by [`find_isomorphism`].
pub const ISOMORPHISM_LIMIT: usize = 10;

/// Searches for a bijection `phi` with `uv ∈ E(a) ⟺ phi(u)phi(v) ∈ E(b)`.
/// Plain backtracking with degree filtering, meant for graphs of order at most
/// [`ISOMORPHISM_LIMIT`].
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    let n = a.order();
    if n > ISOMORPHISM_LIMIT || b.order() > ISOMORPHISM_LIMIT {
        return Err(Error::CapExceeded {
            n: n.max(b.order()),
            cap: ISOMORPHISM_LIMIT,
        });
    }
    if n != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence() {
        return Ok(None);
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = VertexSet::new();
    Ok(extend_isomorphism(a, b, 0, &mut phi, &mut used).then_some(phi))
}

fn extend_isomorphism(
    a: &Graph,
    b: &Graph,
    v: usize,
    phi: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if v == a.order() {
        return true;
    }
    for target in 0..b.order() {
        if used.contains(target) || a.degree(v) != b.degree(target) {
            continue;
        }
        let consistent = (0..v).all(|u| a.has_edge(u, v) == b.has_edge(phi[u], target));
        if !consistent {
            continue;
        }
        phi[v] = target;
        used.insert(target);
        if extend_isomorphism(a, b, v + 1, phi, used) {
            return true;
        }
        used.remove(target);
    }
    phi[v] = usize::MAX;
    false
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn build_path_and_cycle() {
        let g = p3();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.degree_sequence(), vec![2, 2, 2, 2]);
        assert_eq!(c4.size(), 4);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::new(0, []), Err(Error::EmptyGraph));
        assert!(matches!(
            Graph::edgeless(MAX_VERTICES + 1),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g, p3());
    }

    #[test]
    fn connectivity() {
        assert!(p3().is_connected());
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert!(matches!(
            g.require_connected(),
            Err(Error::Disconnected(0, 2))
        ));
        assert!(Graph::edgeless(1).unwrap().is_connected());
    }

    #[test]
    fn triangles() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!k3.is_triangle_free());
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(c5.is_triangle_free());
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let (sub, map) = c5.induced_subgraph(&[0, 1, 2, 3].iter().collect()).unwrap();
        assert_eq!(map, vec![0, 1, 2, 3]);
        assert_eq!(sub.size(), 3);
        assert!(sub.is_tree());
    }

    #[test]
    fn isomorphism_search() {
        let a = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::new(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        let phi = find_isomorphism(&a, &b).unwrap().unwrap();
        for (u, v) in a.edges() {
            assert!(b.has_edge(phi[u], phi[v]));
        }
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&a, &star).unwrap());
    }
}
