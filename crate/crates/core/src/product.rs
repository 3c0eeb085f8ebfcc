//! Cartesian products and coronas.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Coordinates of a Cartesian product `G □ H`.
///
/// Product vertex `g * n(H) + h` is the pair `(g, h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductLabeling {
    left: usize,
    right: usize,
}

impl ProductLabeling {
    pub fn new(left: usize, right: usize) -> Self {
        ProductLabeling { left, right }
    }

    /// Orders of the two factors.
    pub fn dims(&self) -> (usize, usize) {
        (self.left, self.right)
    }

    pub fn order(&self) -> usize {
        self.left * self.right
    }

    #[inline]
    pub fn vertex(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.left && h < self.right);
        g * self.right + h
    }

    #[inline]
    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.right, v % self.right)
    }

    /// The `G`-layer `G^h`: all `(g', h)`.
    pub fn left_layer(&self, h: usize) -> VertexSet {
        (0..self.left).map(|g| self.vertex(g, h)).collect()
    }

    /// The `H`-layer `^gH`: all `(g, h')`.
    pub fn right_layer(&self, g: usize) -> VertexSet {
        (0..self.right).map(|h| self.vertex(g, h)).collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            });
        }
        Ok(())
    }
}

/// `G □ H`: `(g,h)(g',h')` is an edge when `gg' ∈ E(G)` and `h = h'`, or
/// `g = g'` and `hh' ∈ E(H)`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductLabeling)> {
    let lab = ProductLabeling::new(g.order(), h.order());
    let mut edges = Vec::with_capacity(g.size() * h.order() + h.size() * g.order());
    for (a, b) in g.edges() {
        for y in 0..h.order() {
            edges.push((lab.vertex(a, y), lab.vertex(b, y)));
        }
    }
    for (a, b) in h.edges() {
        for x in 0..g.order() {
            edges.push((lab.vertex(x, a), lab.vertex(x, b)));
        }
    }
    Ok((Graph::new(lab.order(), edges)?, lab))
}

/// Corona `G ∘ H`: vertices `0..n(G)` are `G`; copy `i` of `H` occupies
/// `n(G) + i*n(H) ..` and every one of its vertices is joined to `i`.
/// `H` may be disconnected (e.g. an edgeless graph).
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    let copy = |i: usize, v: usize| ng + i * nh + v;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..ng {
        edges.extend(h.edges().map(|(a, b)| (copy(i, a), copy(i, b))));
        edges.extend((0..nh).map(|v| (i, copy(i, v))));
    }
    Graph::new(ng * (1 + nh), edges)
}

/// Vertices of the `H`-copies in a corona built by [`corona`].
pub fn corona_copies(g: &Graph, h: &Graph) -> VertexSet {
    (g.order()..g.order() * (1 + h.order())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::DistanceMatrix;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn k2_square_is_c4() {
        let (g, _) = cartesian_product(&complete(2), &complete(2)).unwrap();
        assert_eq!(g.size(), 4);
        assert_eq!(g.degree_sequence(), vec![2; 4]);
        assert!(g.is_connected());
    }

    #[test]
    fn grid_edge_count() {
        let (g, _) = cartesian_product(&path(2), &path(3)).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.size(), 7);
    }

    #[test]
    fn p2_square_distance() {
        let (g, lab) = cartesian_product(&path(2), &path(2)).unwrap();
        let d = DistanceMatrix::new(&g).unwrap();
        assert_eq!(d.get(lab.vertex(0, 0), lab.vertex(1, 1)), 2);
    }

    #[test]
    fn labeling_is_bijective() {
        let lab = ProductLabeling::new(3, 4);
        for v in 0..12 {
            let (g, h) = lab.coords(v);
            assert_eq!(lab.vertex(g, h), v);
        }
        assert_eq!(lab.left_layer(2).len(), 3);
        assert_eq!(lab.right_layer(1).len(), 4);
    }

    #[test]
    fn corona_orders() {
        let p2 = path(2);
        let k1bar = Graph::edgeless(1).unwrap();
        let c = corona(&p2, &k1bar).unwrap();
        assert_eq!(c.order(), 4);
        assert_eq!(c.degree_sequence(), vec![2, 2, 1, 1]);

        let c4 = Graph::new(4, (0..4).map(|i| (i, (i + 1) % 4))).unwrap();
        let c = corona(&c4, &complete(2)).unwrap();
        assert_eq!(c.order(), 12);
        assert!(c.is_connected());
    }
}
