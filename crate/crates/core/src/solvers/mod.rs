//! Exact μ, μ_i, α and gp with witnesses.

mod bounds;
mod search;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};
use crate::visibility::reachable_avoiding;
use search::Family;

pub use bounds::{
    bounds_mu, bounds_mu_product, contains_subgraph_h, shortest_cycle, BoundKind, BoundRule,
    BoundsReport,
};

/// Default per-solve vertex limit. Raise it with [`SolverConfig::vertex_cap`],
/// up to [`MAX_VERTICES`].
pub const DEFAULT_VERTEX_CAP: usize = 64;
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    /// Mutual-visibility number μ.
    Mu,
    /// Independent mutual-visibility number μ_i.
    MuI,
    /// Independence number α.
    Alpha,
    /// General position number gp.
    Gp,
}

impl Invariant {
    pub const ALL: [Invariant; 4] = [
        Invariant::Mu,
        Invariant::MuI,
        Invariant::Alpha,
        Invariant::Gp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Mu => "mu",
            Invariant::MuI => "mu_i",
            Invariant::Alpha => "alpha",
            Invariant::Gp => "gp",
        }
    }

    /// Whether `set` belongs to the family this invariant maximizes over.
    pub fn accepts(self, g: &Graph, d: &DistanceMatrix, set: &VertexSet) -> bool {
        use crate::visibility::*;
        match self {
            Invariant::Mu => is_mv_set(g, d, set),
            Invariant::MuI => is_independent_mv_set(g, d, set),
            Invariant::Alpha => g.is_independent(set),
            Invariant::Gp => is_gp_set(d, set),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// `None` disables the deadline.
    pub timeout: Option<Duration>,
    pub workers: usize,
    pub vertex_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            timeout: Some(DEFAULT_TIMEOUT),
            workers: 1,
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

impl SolverConfig {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_timeout(mut self, timeout: Option<Duration>) -> Self {
        self.timeout = timeout;
        self
    }

    pub fn with_vertex_cap(mut self, cap: usize) -> Self {
        self.vertex_cap = cap.min(MAX_VERTICES);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    /// Search exhausted; `value` is the maximum.
    Optimal,
    /// Deadline hit; `value` is only the best size found.
    Incomplete,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub invariant: Invariant,
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub status: SolveStatus,
}

impl SolveResult {
    pub fn is_optimal(&self) -> bool {
        self.status == SolveStatus::Optimal
    }
}

/// Precomputed distances for one connected graph, reusable across solves.
pub struct Instance<'g> {
    graph: &'g Graph,
    dist: DistanceMatrix,
}

impl<'g> Instance<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        Ok(Instance {
            graph,
            dist: DistanceMatrix::new(graph)?,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn solve(&self, invariant: Invariant, cfg: &SolverConfig) -> Result<SolveResult> {
        let n = self.graph.order();
        let cap = cfg.vertex_cap.min(MAX_VERTICES);
        if n > cap {
            return Err(Error::CapExceeded { n, cap });
        }
        let start = Instant::now();
        let fam = Families {
            g: self.graph,
            d: &self.dist,
            invariant,
        };
        let out = search::solve(&fam, cfg.workers.max(1), cfg.timeout);
        debug_assert!(!out.complete || invariant.accepts(self.graph, &self.dist, &out.witness));
        debug_assert_eq!(out.witness.len(), out.value);
        Ok(SolveResult {
            invariant,
            value: out.value,
            witness: out.witness,
            nodes_explored: out.nodes,
            elapsed: start.elapsed(),
            status: if out.complete {
                SolveStatus::Optimal
            } else {
                SolveStatus::Incomplete
            },
        })
    }
}

struct Families<'a> {
    g: &'a Graph,
    d: &'a DistanceMatrix,
    invariant: Invariant,
}

impl Families<'_> {
    fn mv_can_add(&self, set: &VertexSet, v: usize) -> bool {
        let next = set.with(v);
        for a in set {
            if !reachable_avoiding(self.g, self.d, &next.without(a).without(v), a, v) {
                return false;
            }
        }
        let members = set.to_vec();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if self.d.on_geodesic(a, v, b)
                    && !reachable_avoiding(self.g, self.d, &next.without(a).without(b), a, b)
                {
                    return false;
                }
            }
        }
        true
    }

    fn gp_can_add(&self, set: &VertexSet, v: usize) -> bool {
        let members = set.to_vec();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if self.d.on_geodesic(a, v, b)
                    || self.d.on_geodesic(v, a, b)
                    || self.d.on_geodesic(v, b, a)
                {
                    return false;
                }
            }
        }
        true
    }
}

impl Family for Families<'_> {
    fn order(&self) -> usize {
        self.g.order()
    }

    fn can_add(&self, set: &VertexSet, v: usize) -> bool {
        match self.invariant {
            Invariant::Mu => self.mv_can_add(set, v),
            Invariant::MuI => !self.g.neighbor_set(v).intersects(set) && self.mv_can_add(set, v),
            Invariant::Alpha => !self.g.neighbor_set(v).intersects(set),
            Invariant::Gp => self.gp_can_add(set, v),
        }
    }

    fn branch_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.g.order()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.g.degree(v)), v));
        order
    }
}

pub fn solve(g: &Graph, invariant: Invariant, cfg: &SolverConfig) -> Result<SolveResult> {
    Instance::new(g)?.solve(invariant, cfg)
}

pub fn solve_mu(g: &Graph, cfg: &SolverConfig) -> Result<SolveResult> {
    solve(g, Invariant::Mu, cfg)
}

pub fn solve_mu_i(g: &Graph, cfg: &SolverConfig) -> Result<SolveResult> {
    solve(g, Invariant::MuI, cfg)
}

pub fn solve_alpha(g: &Graph, cfg: &SolverConfig) -> Result<SolveResult> {
    solve(g, Invariant::Alpha, cfg)
}

pub fn solve_gp(g: &Graph, cfg: &SolverConfig) -> Result<SolveResult> {
    solve(g, Invariant::Gp, cfg)
}

/// Optimal value, or an error if the solve was cut short.
pub(crate) fn exact(g: &Graph, invariant: Invariant, cfg: &SolverConfig) -> Result<usize> {
    let r = solve(g, invariant, cfg)?;
    match r.status {
        SolveStatus::Optimal => Ok(r.value),
        SolveStatus::Incomplete => Err(Error::Timeout(invariant.name())),
    }
}
