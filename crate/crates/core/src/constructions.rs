//! Graph families and the recognizers used by the triangle-free
//! characterization.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph};
use crate::product::{cartesian_product, corona};

pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K̄_n`, the edgeless graph.
pub fn empty(n: usize) -> Result<Graph> {
    Graph::edgeless(n)
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Result<Graph> {
    Graph::new(k + 1, (1..=k).map(|i| (0, i)))
}

/// `P_r □ P_s`.
pub fn grid(r: usize, s: usize) -> Result<Graph> {
    Ok(cartesian_product(&path(r)?, &path(s)?)?.0)
}

/// Subdivided star: center 0 with one pendant path per entry of `legs`,
/// each entry giving that path's number of vertices.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        if len == 0 {
            return Err(Error::InvalidArgument(
                "spider legs must be nonempty".into(),
            ));
        }
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(next, edges)
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner).collect::<Vec<_>>()).expect("static graph")
}

/// Two copies of `P_3` whose centers are joined. Centers are 0 and 1;
/// 2, 3 hang off 0 and 4, 5 hang off 1.
pub fn graph_h() -> Graph {
    Graph::new(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).expect("static graph")
}

/// Uniform labeled tree from a seeded Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::new(n, prufer_decode(n, &code))
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] = 0;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Parameters of a frog graph: a cycle `C_c` with a path `P_r` attached at
/// junction `v^r` and a path `P_s` attached at the antipodal junction `v^s`.
/// A path of order 1 attaches nothing, so `r = s = 1` is the bare cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FrogSpec {
    pub cycle_len: usize,
    pub r: usize,
    pub s: usize,
}

impl FrogSpec {
    pub fn new(cycle_len: usize, r: usize, s: usize) -> Result<Self> {
        if cycle_len < 3 || r == 0 || s == 0 {
            return Err(Error::InvalidArgument(format!(
                "frog needs c >= 3 and r, s >= 1, got ({cycle_len}, {r}, {s})"
            )));
        }
        Ok(FrogSpec { cycle_len, r, s })
    }

    pub fn order(&self) -> usize {
        self.cycle_len + self.r + self.s - 2
    }

    /// The same frog with `r ≥ s`.
    pub fn normalized(self) -> Self {
        if self.r >= self.s {
            self
        } else {
            FrogSpec {
                r: self.s,
                s: self.r,
                ..self
            }
        }
    }
}

/// Builds the frog on cycle `0..c`. `v^r = 0` and `v^s = ⌊c/2⌋`; for odd `c`
/// that is the clockwise antipode. Path `P_r` takes the next `r - 1` indices,
/// then `P_s`.
pub fn make_frog(spec: FrogSpec) -> Result<Graph> {
    let FrogSpec { cycle_len: c, r, s } = FrogSpec::new(spec.cycle_len, spec.r, spec.s)?;
    let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    let mut next = c;
    for (junction, len) in [(0, r), (c / 2, s)] {
        let mut prev = junction;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(next, edges)
}

/// A recognized frog: its parameters, its cycle in cyclic order, and the
/// junctions `(v^r, v^s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frog {
    pub spec: FrogSpec,
    pub cycle: Vec<usize>,
    pub junctions: (usize, usize),
}

/// Decides whether a connected graph is a frog.
///
/// Conditions: exactly one cycle (`|E| = |V|`), maximum degree at most 3,
/// every degree-3 vertex on the cycle, at most two of them, and two of them
/// only at cycle distance `⌊c/2⌋`. The off-cycle remainder is then forced to
/// be at most two pendant paths. The returned spec has `r ≥ s`.
pub fn recognize_frog(g: &Graph) -> Option<Frog> {
    let n = g.order();
    if !g.is_connected() || g.size() != n || g.max_degree() > 3 {
        return None;
    }
    let cycle = unique_cycle(g);
    let c = cycle.len();
    let mut position = vec![None; n];
    for (i, &v) in cycle.iter().enumerate() {
        position[v] = Some(i);
    }
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 3).collect();
    if branch.len() > 2 || branch.iter().any(|&v| position[v].is_none()) {
        return None;
    }
    let tail = |junction: usize| -> usize {
        // vertices on the pendant path hanging at `junction`, junction included
        let Some(&first) = g
            .neighbors(junction)
            .iter()
            .find(|&&w| position[w].is_none())
        else {
            return 1;
        };
        let (mut prev, mut cur, mut len) = (junction, first, 2);
        while let Some(&w) = g.neighbors(cur).iter().find(|&&w| w != prev) {
            prev = cur;
            cur = w;
            len += 1;
        }
        len
    };
    let (junctions, r, s) = match branch.as_slice() {
        [] => ((cycle[0], cycle[c / 2]), 1, 1),
        [u] => {
            let i = position[*u].unwrap();
            ((*u, cycle[(i + c / 2) % c]), tail(*u), 1)
        }
        [u, v] => {
            let (i, j) = (position[*u].unwrap(), position[*v].unwrap());
            let gap = i.abs_diff(j);
            if gap.min(c - gap) != c / 2 {
                return None;
            }
            ((*u, *v), tail(*u), tail(*v))
        }
        _ => unreachable!(),
    };
    let (spec, junctions) = if r >= s {
        (FrogSpec { cycle_len: c, r, s }, junctions)
    } else {
        (
            FrogSpec {
                cycle_len: c,
                r: s,
                s: r,
            },
            (junctions.1, junctions.0),
        )
    };
    Some(Frog {
        spec,
        cycle,
        junctions,
    })
}

/// The cycle of a connected unicyclic graph, in cyclic order.
fn unique_cycle(g: &Graph) -> Vec<usize> {
    let mut degree: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; g.order()];
    let mut stack: Vec<usize> = (0..g.order()).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = stack.pop() {
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let start = (0..g.order())
        .find(|&v| !removed[v])
        .expect("unicyclic graph");
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| !removed[w] && w != prev)
            .expect("cycle continues");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    cycle
}

pub fn is_tree_with_exactly_three_leaves(g: &Graph) -> bool {
    g.is_tree() && g.leaves().len() == 3
}

/// Whether every pair of vertices is joined by exactly one shortest path.
/// Disconnected graphs are reported as not geodetic.
pub fn is_geodetic(g: &Graph) -> bool {
    let n = g.order();
    for s in 0..n {
        let dist = bfs_distances(g, s);
        if dist.iter().any(Option::is_none) {
            return false;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| dist[v]);
        let mut count = vec![0u8; n];
        count[s] = 1;
        for &v in &order[1..] {
            let dv = dist[v].unwrap();
            let total: u32 = g
                .neighbors(v)
                .iter()
                .filter(|&&w| dist[w].unwrap() + 1 == dv)
                .map(|&w| count[w] as u32)
                .sum();
            if total > 1 {
                return false;
            }
            count[v] = total as u8;
        }
    }
    true
}

/// Builds a graph from a family spec such as `cycle:8`, `grid:3,4`,
/// `frog:6,3,2` or `cartesian:complete:3,path:4`.
///
/// Families: `path:n`, `cycle:n`, `complete:n`, `star:k` (`K_{1,k}`),
/// `empty:n`, `grid:r,s`, `petersen`, `frog:c,r,s`, `tree:n,seed`,
/// `graph_h`, `corona:SPEC,SPEC`, `cartesian:SPEC,SPEC`.
pub fn from_spec(spec: &str) -> Result<Graph> {
    let mut p = SpecParser { src: spec, pos: 0 };
    let g = p.graph()?;
    if p.pos != spec.len() {
        return Err(p.error());
    }
    Ok(g)
}

/// Family names accepted by [`from_spec`].
pub const FAMILIES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "star",
    "empty",
    "grid",
    "petersen",
    "frog",
    "tree",
    "graph_h",
    "corona",
    "cartesian",
];

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn error(&self) -> Error {
        Error::InvalidSpec(self.src.to_string())
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.rest().starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error())
        }
    }

    fn word(&mut self) -> &str {
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        let w = &self.src[self.pos..self.pos + len];
        self.pos += len;
        w
    }

    fn number(&mut self) -> Result<u64> {
        let w = self.word();
        w.parse()
            .map_err(|_| Error::InvalidSpec(self.src.to_string()))
    }

    fn numbers(&mut self, k: usize) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(k);
        for i in 0..k {
            self.expect(if i == 0 { ':' } else { ',' })?;
            out.push(self.number()? as usize);
        }
        Ok(out)
    }

    fn two_graphs(&mut self) -> Result<(Graph, Graph)> {
        self.expect(':')?;
        let a = self.graph()?;
        self.expect(',')?;
        let b = self.graph()?;
        Ok((a, b))
    }

    fn graph(&mut self) -> Result<Graph> {
        let name = self.word().to_string();
        match name.as_str() {
            "path" => path(self.numbers(1)?[0]),
            "cycle" => cycle(self.numbers(1)?[0]),
            "complete" => complete(self.numbers(1)?[0]),
            "star" => star(self.numbers(1)?[0]),
            "empty" => empty(self.numbers(1)?[0]),
            "grid" => {
                let a = self.numbers(2)?;
                grid(a[0], a[1])
            }
            "petersen" => Ok(petersen()),
            "graph_h" => Ok(graph_h()),
            "frog" => {
                let a = self.numbers(3)?;
                make_frog(FrogSpec::new(a[0], a[1], a[2])?)
            }
            "tree" => {
                self.expect(':')?;
                let n = self.number()? as usize;
                self.expect(',')?;
                let seed = self.number()?;
                random_tree(n, seed)
            }
            "corona" => {
                let (g, h) = self.two_graphs()?;
                corona(&g, &h)
            }
            "cartesian" => {
                let (g, h) = self.two_graphs()?;
                Ok(cartesian_product(&g, &h)?.0)
            }
            _ => Err(self.error()),
        }
    }
}
