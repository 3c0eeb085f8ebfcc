//! Machine checks of the structural results on μ.
//!
//! Each claim is a named checker evaluated over exhaustively enumerated or
//! seeded random instances. A checker either passes or records concrete
//! counterexamples; instances are processed in parallel and merged in input
//! order, so reports do not depend on the worker count.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{
    complete, cycle, empty, is_tree_with_exactly_three_leaves, path, random_tree, recognize_frog,
    spider, star,
};
use crate::distance::{is_isometric_subgraph, DistanceMatrix};
use crate::enumerate::{
    connected_masks, graph_from_mask, pair_list, random_connected_graph, MAX_ENUMERATION_ORDER,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::to_graph6;
use crate::product::{cartesian_product, corona};
use crate::solvers::{
    contains_subgraph_h, shortest_cycle, Instance, Invariant, SolveStatus, SolverConfig,
};
use crate::vertex_set::VertexSet;
use crate::visibility::{geodesic_interval, is_mv_set};
use crate::zarankiewicz::{matrix_to_mv_set, mv_set_to_matrix, z_exact, ZConfig, ZInstance};

/// Instance scale for the checkers.
#[derive(Clone, Debug)]
pub struct ScaleParams {
    /// Largest order for claims over all connected graphs.
    pub max_n: usize,
    /// Largest order for claims over all connected triangle-free graphs.
    pub max_n_triangle_free: usize,
    /// Number of random instances for sampled claims.
    pub samples: usize,
    pub seed: u64,
    /// Threads used to check instances concurrently.
    pub workers: usize,
    pub solver: SolverConfig,
    /// Replaces the generated family for single-graph claims.
    pub instances: Option<Vec<(String, Graph)>>,
}

impl Default for ScaleParams {
    fn default() -> Self {
        ScaleParams {
            max_n: 6,
            max_n_triangle_free: 7,
            samples: 25,
            seed: 0,
            workers: 1,
            solver: SolverConfig::default(),
            instances: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub claim_id: String,
    pub instances_checked: usize,
    pub failures: Vec<Failure>,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    run: fn(&ScaleParams) -> Result<Tally>,
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<Failure>,
}

pub const CLAIMS: &[Claim] = &[
    Claim {
        id: "eq1_sandwich",
        statement: "mu_i(G) <= min(mu(G), alpha(G))",
        run: eq1_sandwich,
    },
    Claim {
        id: "lemma_diam3",
        statement: "diam(G) <= 3 implies mu_i(G) = alpha(G)",
        run: lemma_diam3,
    },
    Claim {
        id: "eq2_trees",
        statement: "a tree T with n(T) >= 3 has mu(T) = #leaves = mu_i(T)",
        run: eq2_trees,
    },
    Claim {
        id: "prop_corona",
        statement: "mu(G o H) = n(G) n(H) for n(G) >= 2; mu_i(G o K_k-bar) = k n(G)",
        run: prop_corona,
    },
    Claim {
        id: "thm_cp_bounds",
        statement: "max(mu(G)mu_i(H), mu(H)mu_i(G)) <= mu(G x H) <= min(mu(G)n(H), mu(H)n(G))",
        run: thm_cp_bounds,
    },
    Claim {
        id: "cor_trees_lower",
        statement: "trees of order >= 3: mu(T1 x T2) >= mu(T1) mu(T2)",
        run: cor_trees_lower,
    },
    Claim {
        id: "thm_kkg",
        statement: "mu(G) = mu_i(G) implies mu(K_k x G) = k mu(G)",
        run: thm_kkg,
    },
    Claim {
        id: "lemma_hamming",
        statement: "X is MV in K_r x K_s iff every induced 4-cycle meets X in at most 3 vertices",
        run: lemma_hamming,
    },
    Claim {
        id: "cor_zarankiewicz",
        statement: "mu(K_m x K_n) = z(m,n;2,2) for m, n >= 2",
        run: cor_zarankiewicz,
    },
    Claim {
        id: "lemma_isometric",
        statement: "G' isometric in G implies mu(G) >= mu(G')",
        run: lemma_isometric,
    },
    Claim {
        id: "lemma_delta",
        statement: "mu(G) >= max degree",
        run: lemma_delta,
    },
    Claim {
        id: "lemma_h",
        statement: "triangle-free G containing H has mu(G) >= 4",
        run: lemma_h,
    },
    Claim {
        id: "thm_mu3",
        statement:
            "connected triangle-free G: mu(G) = 3 iff G is a tree with three leaves or a frog graph",
        run: thm_mu3,
    },
    Claim {
        id: "path_k1_chars",
        statement: "mu(G) = 1 iff G = K_1; mu(G) = 2 iff G is a path on >= 2 vertices",
        run: path_k1_chars,
    },
    Claim {
        id: "remark_prs",
        statement: "mu(P_r x P_s) = 2 min(r, s) for r, s > 3",
        run: remark_prs,
    },
];

pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

pub fn find_claim(id: &str) -> Result<&'static Claim> {
    CLAIMS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim {
            id: id.to_string(),
            valid: claim_ids().join(", "),
        })
}

/// Runs one claim. A solver timeout turns into a skipped report.
pub fn check(claim_id: &str, params: &ScaleParams) -> Result<CheckReport> {
    let claim = find_claim(claim_id)?;
    let start = Instant::now();
    let outcome = (claim.run)(params);
    let elapsed_ms = Some(start.elapsed().as_millis() as u64);
    let report = |checked, failures: Vec<Failure>, status, skip_reason| CheckReport {
        claim_id: claim.id.to_string(),
        instances_checked: checked,
        failures,
        status,
        skip_reason,
        elapsed_ms,
    };
    match outcome {
        Ok(t) if !t.failures.is_empty() => {
            Ok(report(t.checked, t.failures, CheckStatus::Fail, None))
        }
        Ok(t) if t.checked == 0 => Ok(report(
            0,
            vec![],
            CheckStatus::Skipped,
            Some("no applicable instances".into()),
        )),
        Ok(t) => Ok(report(t.checked, vec![], CheckStatus::Pass, None)),
        Err(e @ Error::Timeout(_)) => {
            Ok(report(0, vec![], CheckStatus::Skipped, Some(e.to_string())))
        }
        Err(e) => Err(e),
    }
}

pub fn check_all(params: &ScaleParams) -> Result<Vec<CheckReport>> {
    CLAIMS.iter().map(|c| check(c.id, params)).collect()
}

// ---------------------------------------------------------------------------
// helpers

fn describe(g: &Graph) -> String {
    format!("g6:{}", to_graph6(g))
}

/// Maps `f` over `items` on `params.workers` threads, keeping input order.
fn par_check<T, F>(params: &ScaleParams, items: &[T], f: F) -> Result<Tally>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<Vec<Failure>>> + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.workers.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let results: Vec<Option<Vec<Failure>>> =
        pool.install(|| items.par_iter().map(&f).collect::<Result<Vec<_>>>())?;
    let mut tally = Tally::default();
    for r in results.into_iter().flatten() {
        tally.checked += 1;
        tally.failures.extend(r);
    }
    Ok(tally)
}

fn fail(instance: impl Into<String>, expected: impl ToString, got: impl ToString) -> Failure {
    Failure {
        instance: instance.into(),
        expected: expected.to_string(),
        got: got.to_string(),
    }
}

struct Solved<'g> {
    inst: Instance<'g>,
    cfg: &'g SolverConfig,
}

impl<'g> Solved<'g> {
    fn new(g: &'g Graph, cfg: &'g SolverConfig) -> Result<Self> {
        Ok(Solved {
            inst: Instance::new(g)?,
            cfg,
        })
    }

    fn get(&self, invariant: Invariant) -> Result<usize> {
        let r = self.inst.solve(invariant, self.cfg)?;
        match r.status {
            SolveStatus::Optimal => Ok(r.value),
            SolveStatus::Incomplete => Err(Error::Timeout(invariant.name())),
        }
    }
}

fn solver_cfg(params: &ScaleParams) -> SolverConfig {
    // parallelism lives at the instance level
    params.solver.clone().with_workers(1)
}

fn mu(g: &Graph, cfg: &SolverConfig) -> Result<usize> {
    Solved::new(g, cfg)?.get(Invariant::Mu)
}

/// Masks of all connected graphs with `1 ≤ n ≤ max_n`, tagged by order.
fn all_connected(max_n: usize, triangle_free: bool) -> Result<Vec<(usize, u64)>> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(MAX_ENUMERATION_ORDER) {
        out.extend(
            connected_masks(n, triangle_free)?
                .into_iter()
                .map(|m| (n, m)),
        );
    }
    Ok(out)
}

/// Either the caller's instances or every connected graph up to `max_n`.
fn single_graph_claim<F>(
    params: &ScaleParams,
    max_n: usize,
    triangle_free: bool,
    f: F,
) -> Result<Tally>
where
    F: Fn(&Graph, &SolverConfig) -> Result<Option<Vec<Failure>>> + Sync + Send,
{
    let cfg = solver_cfg(params);
    match &params.instances {
        Some(list) => par_check(params, list, |(_, g)| f(g, &cfg)),
        None => {
            let masks = all_connected(max_n, triangle_free)?;
            par_check(params, &masks, |&(n, mask)| {
                f(&graph_from_mask(n, mask), &cfg)
            })
        }
    }
}

fn is_path(g: &Graph) -> bool {
    g.order() >= 2 && g.is_tree() && g.max_degree() <= 2
}

// ---------------------------------------------------------------------------
// claims

fn eq1_sandwich(params: &ScaleParams) -> Result<Tally> {
    single_graph_claim(params, params.max_n, false, |g, cfg| {
        let s = Solved::new(g, cfg)?;
        let (mu, mu_i, alpha) = (
            s.get(Invariant::Mu)?,
            s.get(Invariant::MuI)?,
            s.get(Invariant::Alpha)?,
        );
        Ok(Some(if mu_i <= mu.min(alpha) {
            vec![]
        } else {
            vec![fail(
                describe(g),
                format!("mu_i <= min({mu}, {alpha})"),
                mu_i,
            )]
        }))
    })
}

fn lemma_diam3(params: &ScaleParams) -> Result<Tally> {
    let mut tally = single_graph_claim(params, params.max_n, false, |g, cfg| {
        if DistanceMatrix::new(g)?.diameter() > 3 {
            return Ok(None);
        }
        let s = Solved::new(g, cfg)?;
        let (mu_i, alpha) = (s.get(Invariant::MuI)?, s.get(Invariant::Alpha)?);
        Ok(Some(if mu_i == alpha {
            vec![]
        } else {
            vec![fail(describe(g), alpha, mu_i)]
        }))
    })?;
    if params.instances.is_none() {
        // diameter 4 breaks the equality
        let p5 = path(5)?;
        let s = Solved::new(&p5, &params.solver)?;
        let got = (s.get(Invariant::MuI)?, s.get(Invariant::Alpha)?);
        tally.checked += 1;
        if got != (2, 3) {
            tally
                .failures
                .push(fail("P_5", "(mu_i, alpha) = (2, 3)", format!("{got:?}")));
        }
    }
    Ok(tally)
}

fn eq2_trees(params: &ScaleParams) -> Result<Tally> {
    let trees: Vec<(String, Graph)> = match &params.instances {
        Some(list) => list
            .iter()
            .filter(|(_, g)| g.is_tree() && g.order() >= 3)
            .cloned()
            .collect(),
        None => (0..params.samples)
            .map(|i| {
                let n = 3 + i % 10;
                let seed = params.seed.wrapping_add(i as u64);
                Ok((format!("tree:{n},{seed}"), random_tree(n, seed)?))
            })
            .collect::<Result<_>>()?,
    };
    let cfg = solver_cfg(params);
    par_check(params, &trees, |(name, t)| {
        let s = Solved::new(t, &cfg)?;
        let leaves = t.leaves().len();
        let got = (s.get(Invariant::Mu)?, s.get(Invariant::MuI)?);
        Ok(Some(if got == (leaves, leaves) {
            vec![]
        } else {
            vec![fail(
                name.clone(),
                format!("({leaves}, {leaves})"),
                format!("{got:?}"),
            )]
        }))
    })
}

fn prop_corona(params: &ScaleParams) -> Result<Tally> {
    let bases = [
        ("P_2", path(2)?),
        ("P_3", path(3)?),
        ("C_4", cycle(4)?),
        ("K_1,3", star(3)?),
    ];
    let mut cases: Vec<(String, Graph, Graph, bool)> = Vec::new();
    let fibers = [
        ("K_1", complete(1)?),
        ("K_2", complete(2)?),
        ("P_3", path(3)?),
        ("K_2-bar", empty(2)?),
        ("K_3-bar", empty(3)?),
    ];
    for (gn, g) in &bases {
        for (hn, h) in &fibers {
            cases.push((format!("{gn} o {hn}"), g.clone(), h.clone(), false));
        }
        for k in 1..=3 {
            cases.push((
                format!("{gn} o K_{k}-bar (mu_i)"),
                g.clone(),
                empty(k)?,
                true,
            ));
        }
    }
    let cfg = solver_cfg(params);
    par_check(params, &cases, |(name, g, h, independent)| {
        let c = corona(g, h)?;
        let expected = g.order() * h.order();
        let s = Solved::new(&c, &cfg)?;
        let got = s.get(if *independent {
            Invariant::MuI
        } else {
            Invariant::Mu
        })?;
        Ok(Some(if got == expected {
            vec![]
        } else {
            vec![fail(name.clone(), expected, got)]
        }))
    })
}

fn product_factors() -> Result<Vec<(&'static str, Graph)>> {
    Ok(vec![
        ("P_3", path(3)?),
        ("P_4", path(4)?),
        ("C_4", cycle(4)?),
        ("C_6", cycle(6)?),
        ("K_3", complete(3)?),
        ("K_1,3", star(3)?),
    ])
}

/// Checks both product bounds for one factor pair.
pub fn product_bounds_hold(g: &Graph, h: &Graph, cfg: &SolverConfig) -> Result<(bool, String)> {
    let sg = Solved::new(g, cfg)?;
    let sh = Solved::new(h, cfg)?;
    let (mu_g, mui_g) = (sg.get(Invariant::Mu)?, sg.get(Invariant::MuI)?);
    let (mu_h, mui_h) = (sh.get(Invariant::Mu)?, sh.get(Invariant::MuI)?);
    let lower = (mu_g * mui_h).max(mu_h * mui_g);
    let upper = (mu_g * h.order()).min(mu_h * g.order());
    let (gh, _) = cartesian_product(g, h)?;
    let got = mu(&gh, cfg)?;
    Ok((
        lower <= got && got <= upper,
        format!("{lower} <= {got} <= {upper}"),
    ))
}

fn thm_cp_bounds(params: &ScaleParams) -> Result<Tally> {
    let factors = product_factors()?;
    let mut pairs = Vec::new();
    for i in 0..factors.len() {
        for j in i..factors.len() {
            if factors[i].1.order() * factors[j].1.order() <= 24 {
                pairs.push((i, j));
            }
        }
    }
    let cfg = solver_cfg(params);
    par_check(params, &pairs, |&(i, j)| {
        let (ok, detail) = product_bounds_hold(&factors[i].1, &factors[j].1, &cfg)?;
        let name = format!("{} x {}", factors[i].0, factors[j].0);
        Ok(Some(if ok {
            vec![]
        } else {
            vec![fail(name, "bounds hold", detail)]
        }))
    })
}

fn cor_trees_lower(params: &ScaleParams) -> Result<Tally> {
    let trees = [
        ("P_3", path(3)?),
        ("P_4", path(4)?),
        ("K_1,3", star(3)?),
        ("P_5", path(5)?),
        ("spider(1,1,2)", spider(&[1, 1, 2])?),
        ("K_1,4", star(4)?),
    ];
    let mut pairs = Vec::new();
    for i in 0..trees.len() {
        for j in i..trees.len() {
            if trees[i].1.order() * trees[j].1.order() <= 20 {
                pairs.push((i, j));
            }
        }
    }
    let cfg = solver_cfg(params);
    par_check(params, &pairs, |&(i, j)| {
        let (a, b) = (&trees[i].1, &trees[j].1);
        let expected = mu(a, &cfg)? * mu(b, &cfg)?;
        let got = mu(&cartesian_product(a, b)?.0, &cfg)?;
        let name = format!("{} x {}", trees[i].0, trees[j].0);
        Ok(Some(if got >= expected {
            vec![]
        } else {
            vec![fail(name, format!(">= {expected}"), got)]
        }))
    })
}

fn thm_kkg(params: &ScaleParams) -> Result<Tally> {
    let bases = [
        ("C_6", cycle(6)?),
        ("C_7", cycle(7)?),
        ("P_4", path(4)?),
        ("K_1,3", star(3)?),
        ("spider(1,2,2)", spider(&[1, 2, 2])?),
        ("spider(1,1,1,2)", spider(&[1, 1, 1, 2])?),
    ];
    let cases: Vec<(usize, usize)> = (0..bases.len()).flat_map(|i| [(i, 2), (i, 3)]).collect();
    let cfg = solver_cfg(params);
    par_check(params, &cases, |&(i, k)| {
        let g = &bases[i].1;
        let s = Solved::new(g, &cfg)?;
        let mu_g = s.get(Invariant::Mu)?;
        if mu_g != s.get(Invariant::MuI)? {
            return Ok(None);
        }
        let got = mu(&cartesian_product(&complete(k)?, g)?.0, &cfg)?;
        let name = format!("K_{k} x {}", bases[i].0);
        Ok(Some(if got == k * mu_g {
            vec![]
        } else {
            vec![fail(name, k * mu_g, got)]
        }))
    })
}

/// Vertex sets of the induced 4-cycles of `g`, found by scanning 4-subsets.
fn induced_four_cycles(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let set: VertexSet = [a, b, c, d].iter().collect();
                    let (sub, _) = g.induced_subgraph(&set).expect("in range");
                    if sub.size() == 4 && sub.degree_sequence() == vec![2; 4] {
                        out.push(set);
                    }
                }
            }
        }
    }
    out
}

fn lemma_hamming(params: &ScaleParams) -> Result<Tally> {
    let mut cases = Vec::new();
    for r in 2..=3 {
        for s in 2..=3 {
            let (g, _) = cartesian_product(&complete(r)?, &complete(s)?)?;
            let d = DistanceMatrix::new(&g)?;
            let squares = induced_four_cycles(&g);
            cases.push((r, s, g, d, squares));
        }
    }
    let mut tally = Tally::default();
    for (r, s, g, d, squares) in &cases {
        let subsets: Vec<u64> = (0..1u64 << g.order()).collect();
        let t = par_check(params, &subsets, |&mask| {
            let x: VertexSet = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
            let mv = is_mv_set(g, d, &x);
            let sparse = squares.iter().all(|c| c.intersection(&x).len() <= 3);
            Ok(Some(if mv == sparse {
                vec![]
            } else {
                vec![fail(format!("K_{r} x K_{s}, X={:?}", x), sparse, mv)]
            }))
        })?;
        tally.checked += t.checked;
        tally.failures.extend(t.failures);
    }
    Ok(tally)
}

fn cor_zarankiewicz(params: &ScaleParams) -> Result<Tally> {
    let cases: Vec<(usize, usize)> = (2..=4).flat_map(|m| (2..=4).map(move |n| (m, n))).collect();
    let cfg = solver_cfg(params);
    let zcfg = ZConfig {
        timeout: cfg.timeout,
        ..ZConfig::default()
    };
    par_check(params, &cases, |&(m, n)| {
        let (g, lab) = cartesian_product(&complete(m)?, &complete(n)?)?;
        let inst = Instance::new(&g)?;
        let r = inst.solve(Invariant::Mu, &cfg)?;
        let z = z_exact(ZInstance::c4(m, n)?, &zcfg)?;
        if r.status != SolveStatus::Optimal || !z.complete {
            return Err(Error::Timeout("mu"));
        }
        let name = format!("K_{m} x K_{n}");
        let mut failures = Vec::new();
        if r.value != z.value {
            failures.push(fail(name.clone(), z.value, r.value));
        }
        let as_matrix = mv_set_to_matrix(&r.witness, &lab)?;
        if as_matrix.has_all_ones_block(2, 2) {
            failures.push(fail(
                name.clone(),
                "mu witness is 2x2-free",
                as_matrix.bit_string(),
            ));
        }
        let as_set = matrix_to_mv_set(&z.witness, &lab)?;
        if !is_mv_set(&g, inst.distances(), &as_set) {
            failures.push(fail(name, "z witness is an MV set", format!("{as_set:?}")));
        }
        Ok(Some(failures))
    })
}

/// Connected isometric subgraphs to test: geodesic intervals and a shortest
/// cycle, deduplicated and capped at `limit`.
fn isometric_samples(g: &Graph, d: &DistanceMatrix, limit: usize) -> Result<Vec<VertexSet>> {
    let mut candidates: Vec<VertexSet> = shortest_cycle(g).into_iter().collect();
    for (x, y) in pair_list(g.order()) {
        candidates.push(geodesic_interval(d, x, y).members);
    }
    let mut out: Vec<VertexSet> = Vec::new();
    for w in candidates {
        if out.len() == limit {
            break;
        }
        if w.len() >= 2
            && !out.contains(&w)
            && g.induces_connected(&w)
            && is_isometric_subgraph(g, d, &w)?
        {
            out.push(w);
        }
    }
    Ok(out)
}

fn lemma_isometric(params: &ScaleParams) -> Result<Tally> {
    let hosts: Vec<(String, Graph)> = match &params.instances {
        Some(list) => list.clone(),
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
            (0..params.samples)
                .map(|i| {
                    let n = 5 + i % 4;
                    let p = rng.gen_range(0.1..0.5);
                    let g = random_connected_graph(n, p, &mut rng)?;
                    Ok((describe(&g), g))
                })
                .collect::<Result<_>>()?
        }
    };
    let cfg = solver_cfg(params);
    let mut tally = Tally::default();
    let per_host = par_check(params, &hosts, |(name, g)| {
        let d = DistanceMatrix::new(g)?;
        let host_mu = mu(g, &cfg)?;
        let mut failures = Vec::new();
        for w in isometric_samples(g, &d, 8)? {
            let (sub, _) = g.induced_subgraph(&w)?;
            let sub_mu = mu(&sub, &cfg)?;
            if sub_mu > host_mu {
                failures.push(fail(
                    format!("{name}, W={w:?}"),
                    format!("<= {host_mu}"),
                    sub_mu,
                ));
            }
        }
        Ok(Some(failures))
    })?;
    tally.checked += per_host.checked;
    tally.failures = per_host.failures;
    Ok(tally)
}

fn lemma_delta(params: &ScaleParams) -> Result<Tally> {
    single_graph_claim(params, params.max_n, false, |g, cfg| {
        let got = mu(g, cfg)?;
        Ok(Some(if got >= g.max_degree() {
            vec![]
        } else {
            vec![fail(describe(g), format!(">= {}", g.max_degree()), got)]
        }))
    })
}

/// A random connected triangle-free graph: a random tree plus random edges
/// that close no triangle.
fn random_triangle_free<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    let tree = random_tree(n, rng.gen())?;
    let mut edges: Vec<(usize, usize)> = tree.edges().collect();
    let mut g = tree;
    let mut pairs = pair_list(n);
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.gen_range(0..=i));
    }
    let extra = rng.gen_range(0..=n);
    for (u, v) in pairs {
        if edges.len() >= n - 1 + extra {
            break;
        }
        if !g.has_edge(u, v) && !g.neighbor_set(u).intersects(g.neighbor_set(v)) {
            edges.push((u, v));
            g = Graph::new(n, edges.iter().copied())?;
        }
    }
    Ok(g)
}

fn lemma_h(params: &ScaleParams) -> Result<Tally> {
    let check = |g: &Graph, cfg: &SolverConfig| -> Result<Option<Vec<Failure>>> {
        if !g.is_triangle_free() || !contains_subgraph_h(g) {
            return Ok(None);
        }
        let got = mu(g, cfg)?;
        Ok(Some(if got >= 4 {
            vec![]
        } else {
            vec![fail(describe(g), ">= 4", got)]
        }))
    };
    let mut tally = single_graph_claim(params, params.max_n_triangle_free, true, check)?;
    if params.instances.is_none() {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ 0x6a09e667);
        let sampled: Vec<Graph> = (0..params.samples)
            .map(|_| random_triangle_free(8, &mut rng))
            .collect::<Result<_>>()?;
        let cfg = solver_cfg(params);
        let t = par_check(params, &sampled, |g| check(g, &cfg))?;
        tally.checked += t.checked;
        tally.failures.extend(t.failures);
    }
    Ok(tally)
}

fn thm_mu3(params: &ScaleParams) -> Result<Tally> {
    single_graph_claim(params, params.max_n_triangle_free, true, |g, cfg| {
        if !g.is_triangle_free() {
            return Ok(None);
        }
        let is_three = mu(g, cfg)? == 3;
        let shape = is_tree_with_exactly_three_leaves(g) || recognize_frog(g).is_some();
        Ok(Some(if is_three == shape {
            vec![]
        } else {
            vec![fail(
                describe(g),
                format!("mu == 3: {shape}"),
                format!("mu == 3: {is_three}"),
            )]
        }))
    })
}

fn path_k1_chars(params: &ScaleParams) -> Result<Tally> {
    single_graph_claim(params, params.max_n, false, |g, cfg| {
        let got = mu(g, cfg)?;
        let mut failures = Vec::new();
        if (got == 1) != (g.order() == 1) {
            failures.push(fail(
                describe(g),
                format!("mu == 1: {}", g.order() == 1),
                got,
            ));
        }
        if (got == 2) != is_path(g) {
            failures.push(fail(describe(g), format!("mu == 2: {}", is_path(g)), got));
        }
        Ok(Some(failures))
    })
}

fn remark_prs(params: &ScaleParams) -> Result<Tally> {
    let cases = [(4usize, 4usize), (4, 5)];
    let cfg = solver_cfg(params);
    par_check(params, &cases, |&(r, s)| {
        let got = mu(&crate::constructions::grid(r, s)?, &cfg)?;
        let expected = 2 * r.min(s);
        Ok(Some(if got == expected {
            vec![]
        } else {
            vec![fail(format!("P_{r} x P_{s}"), expected, got)]
        }))
    })
}
