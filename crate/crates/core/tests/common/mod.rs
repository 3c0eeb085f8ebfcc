//! Brute-force reference implementations shared by the integration tests.
//!
//! Nothing here calls the library's distance, visibility or search code.
//! Distances come from Floyd-Warshall and visibility from explicit
//! enumeration of shortest paths.

#![allow(dead_code)]

use mutvis::Graph;

pub struct Oracle {
    pub n: usize,
    adj: Vec<Vec<bool>>,
    pub dist: Vec<Vec<u32>>,
}

const INF: u32 = u32::MAX / 4;

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        let mut dist = vec![vec![INF; n]; n];
        for u in 0..n {
            dist[u][u] = 0;
            for v in 0..n {
                if adj[u][v] {
                    dist[u][v] = 1;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = dist[i][k] + dist[k][j];
                    if via < dist[i][j] {
                        dist[i][j] = via;
                    }
                }
            }
        }
        assert!(
            dist.iter().flatten().all(|&d| d < INF),
            "oracle needs a connected graph"
        );
        Oracle { n, adj, dist }
    }

    /// Every shortest x-y path, as vertex sequences.
    pub fn shortest_paths(&self, x: usize, y: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![x];
        self.extend(&mut stack, y, &mut out);
        out
    }

    fn extend(&self, stack: &mut Vec<usize>, y: usize, out: &mut Vec<Vec<usize>>) {
        let last = *stack.last().unwrap();
        if last == y {
            out.push(stack.clone());
            return;
        }
        for w in 0..self.n {
            if self.adj[last][w] && self.dist[w][y] + 1 == self.dist[last][y] {
                stack.push(w);
                self.extend(stack, y, out);
                stack.pop();
            }
        }
    }

    /// Some shortest x-y path has no internal vertex in `set`.
    pub fn visible(&self, set: u64, x: usize, y: usize) -> bool {
        x == y
            || self
                .shortest_paths(x, y)
                .iter()
                .any(|p| p[1..p.len() - 1].iter().all(|&v| set >> v & 1 == 0))
    }

    pub fn is_mv(&self, set: u64) -> bool {
        let members = bits(set);
        members
            .iter()
            .enumerate()
            .all(|(i, &x)| members[i + 1..].iter().all(|&y| self.visible(set, x, y)))
    }

    pub fn is_independent(&self, set: u64) -> bool {
        let members = bits(set);
        members
            .iter()
            .all(|&u| members.iter().all(|&v| !self.adj[u][v]))
    }

    /// No member lies on a shortest path between two others.
    pub fn is_gp(&self, set: u64) -> bool {
        let m = bits(set);
        for &a in &m {
            for &b in &m {
                for &c in &m {
                    if a != b
                        && b != c
                        && a != c
                        && self.dist[a][b] + self.dist[b][c] == self.dist[a][c]
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn max_over(&self, accept: impl Fn(u64) -> bool) -> usize {
        (0..1u64 << self.n)
            .filter(|&s| accept(s))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn mu(&self) -> usize {
        self.max_over(|s| self.is_mv(s))
    }

    pub fn mu_i(&self) -> usize {
        self.max_over(|s| self.is_independent(s) && self.is_mv(s))
    }

    pub fn alpha(&self) -> usize {
        self.max_over(|s| self.is_independent(s))
    }

    pub fn gp(&self) -> usize {
        self.max_over(|s| self.is_gp(s))
    }
}

pub fn bits(set: u64) -> Vec<usize> {
    (0..64).filter(|&v| set >> v & 1 == 1).collect()
}

/// Does the `m x n` 0/1 matrix (row-major bits) contain an all-ones
/// `s x t` submatrix? Checked by scanning every row and column subset.
pub fn has_block(m: usize, n: usize, cells: u64, s: usize, t: usize) -> bool {
    let rows: Vec<u64> = (0..1u64 << m)
        .filter(|r| r.count_ones() as usize == s)
        .collect();
    let cols: Vec<u64> = (0..1u64 << n)
        .filter(|c| c.count_ones() as usize == t)
        .collect();
    rows.iter().any(|&r| {
        cols.iter().any(|&c| {
            bits(r)
                .iter()
                .all(|&i| bits(c).iter().all(|&j| cells >> (i * n + j) & 1 == 1))
        })
    })
}

/// z(m,n;s,t) by enumerating all `2^(mn)` matrices.
pub fn brute_z(m: usize, n: usize, s: usize, t: usize) -> usize {
    (0..1u64 << (m * n))
        .filter(|&cells| !has_block(m, n, cells, s, t))
        .map(|cells| cells.count_ones() as usize)
        .max()
        .unwrap()
}
