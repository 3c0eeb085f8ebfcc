//! Cheap certificates bracketing μ.

use std::collections::VecDeque;

use serde::Serialize;

use super::{exact, Invariant, SolverConfig};
use crate::distance::{is_isometric_subgraph, DistanceMatrix};
use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRule {
    pub rule: &'static str,
    pub kind: BoundKind,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub lower: usize,
    pub upper: usize,
    pub provenance: Vec<BoundRule>,
}

impl BoundsReport {
    fn from_rules(provenance: Vec<BoundRule>) -> Self {
        let lower = provenance
            .iter()
            .filter(|r| r.kind == BoundKind::Lower)
            .map(|r| r.value)
            .max()
            .unwrap_or(0);
        let upper = provenance
            .iter()
            .filter(|r| r.kind == BoundKind::Upper)
            .map(|r| r.value)
            .min()
            .unwrap_or(usize::MAX);
        debug_assert!(lower <= upper);
        BoundsReport {
            lower,
            upper,
            provenance,
        }
    }
}

fn lower(rule: &'static str, value: usize) -> BoundRule {
    BoundRule {
        rule,
        kind: BoundKind::Lower,
        value,
    }
}

fn upper(rule: &'static str, value: usize) -> BoundRule {
    BoundRule {
        rule,
        kind: BoundKind::Upper,
        value,
    }
}

/// Structural bounds on μ(G) for a connected graph.
///
/// Lower rules: two vertices are always mutually visible; μ ≥ Δ; an isometric
/// cycle gives 3; a triangle-free host containing the graph H gives 4; a tree
/// on at least three vertices has μ equal to its leaf count. Upper rules: the
/// order, and 2 for paths.
pub fn bounds_mu(g: &Graph) -> Result<BoundsReport> {
    let d = DistanceMatrix::new(g)?;
    let n = g.order();
    let mut rules = vec![
        upper("order", n),
        lower("pair", n.min(2)),
        lower("max_degree", g.max_degree()),
    ];
    if let Some(cycle) = shortest_cycle(g) {
        if is_isometric_subgraph(g, &d, &cycle)? {
            rules.push(lower("isometric_cycle", 3));
        }
    }
    if g.is_triangle_free() && contains_subgraph_h(g) {
        rules.push(lower("graph_h", 4));
    }
    if n >= 2 && g.is_tree() && g.max_degree() <= 2 {
        rules.push(upper("path", 2));
    }
    if n >= 3 && g.is_tree() {
        let leaves = g.leaves().len();
        rules.push(lower("tree_leaves", leaves));
        rules.push(upper("tree_leaves", leaves));
    }
    Ok(BoundsReport::from_rules(rules))
}

/// Bounds on μ(G □ H) from exactly solved factors:
/// `max(μ(G)μ_i(H), μ(H)μ_i(G)) ≤ μ(G□H) ≤ min(μ(G)n(H), μ(H)n(G))`.
pub fn bounds_mu_product(g: &Graph, h: &Graph, cfg: &SolverConfig) -> Result<BoundsReport> {
    let (mu_g, mui_g) = (
        exact(g, Invariant::Mu, cfg)?,
        exact(g, Invariant::MuI, cfg)?,
    );
    let (mu_h, mui_h) = (
        exact(h, Invariant::Mu, cfg)?,
        exact(h, Invariant::MuI, cfg)?,
    );
    let rules = vec![
        lower("product_lower", (mu_g * mui_h).max(mu_h * mui_g)),
        upper("product_upper", (mu_g * h.order()).min(mu_h * g.order())),
        upper("order", g.order() * h.order()),
    ];
    Ok(BoundsReport::from_rules(rules))
}

/// Vertex set of a shortest cycle, if the graph has one. A shortest cycle is
/// always an isometric subgraph.
pub fn shortest_cycle(g: &Graph) -> Option<VertexSet> {
    let mut best: Option<Vec<usize>> = None;
    for (u, v) in g.edges() {
        // shortest u-v path avoiding the edge uv
        let mut parent = vec![usize::MAX; g.order()];
        parent[u] = u;
        let mut queue = VecDeque::from([u]);
        'bfs: while let Some(a) = queue.pop_front() {
            for &b in g.neighbors(a) {
                if parent[b] != usize::MAX || (a == u && b == v) {
                    continue;
                }
                parent[b] = a;
                if b == v {
                    break 'bfs;
                }
                queue.push_back(b);
            }
        }
        if parent[v] == usize::MAX {
            continue;
        }
        let mut cycle = vec![v];
        let mut x = v;
        while x != u {
            x = parent[x];
            cycle.push(x);
        }
        if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
            best = Some(cycle);
        }
    }
    best.map(|c| c.into_iter().collect())
}

/// Whether G contains the graph H (two `P_3`s whose centers are joined) as a
/// subgraph, not necessarily induced.
///
/// H sits on an edge `uv` exactly when two distinct further neighbors of `u`
/// and two of `v` can be chosen, all four distinct. With `A = N(u) - v` and
/// `B = N(v) - u` that is `|A| ≥ 2`, `|B| ≥ 2` and `|A ∪ B| ≥ 4`.
pub fn contains_subgraph_h(g: &Graph) -> bool {
    g.edges().any(|(u, v)| {
        let a = g.neighbor_set(u).without(v);
        let b = g.neighbor_set(v).without(u);
        a.len() >= 2 && b.len() >= 2 && a.union(&b).len() >= 4
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;

    #[test]
    fn star_lower_bound() {
        let b = bounds_mu(&star(4).unwrap()).unwrap();
        assert!(b.lower >= 4);
        assert!(b
            .provenance
            .iter()
            .any(|r| r.rule == "max_degree" && r.value == 4));
    }

    #[test]
    fn graph_h_rule() {
        let b = bounds_mu(&graph_h()).unwrap();
        assert_eq!(b.lower, 4);
        assert!(b.provenance.iter().any(|r| r.rule == "graph_h"));
    }

    #[test]
    fn paths_and_cycles() {
        let b = bounds_mu(&path(9).unwrap()).unwrap();
        assert_eq!((b.lower, b.upper), (2, 2));
        let b = bounds_mu(&cycle(7).unwrap()).unwrap();
        assert_eq!((b.lower, b.upper), (3, 7));
        let b = bounds_mu(&path(1).unwrap()).unwrap();
        assert_eq!((b.lower, b.upper), (1, 1));
    }

    #[test]
    fn h_detection() {
        assert!(contains_subgraph_h(&graph_h()));
        assert!(!contains_subgraph_h(&cycle(6).unwrap()));
        assert!(contains_subgraph_h(&grid(3, 3).unwrap()));
        // K4 minus nothing: every edge has |A ∪ B| = 2
        assert!(!contains_subgraph_h(&complete(4).unwrap()));
    }

    #[test]
    fn shortest_cycle_of_petersen_has_five_vertices() {
        assert_eq!(shortest_cycle(&petersen()).unwrap().len(), 5);
        assert!(shortest_cycle(&path(5).unwrap()).is_none());
    }
}
