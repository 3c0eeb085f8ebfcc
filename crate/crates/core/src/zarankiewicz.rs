//! Zarankiewicz numbers `z(m,n;s,t)` and their link to mutual visibility in
//! `K_m □ K_n`.
//!
//! A vertex set of `K_m □ K_n` is read as an `m×n` 0/1 matrix. It is a
//! mutual-visibility set exactly when no induced 4-cycle (a Cartesian square)
//! is fully occupied, i.e. when the matrix has no all-ones 2×2 submatrix.

use std::fmt;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::product::ProductLabeling;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZInstance {
    pub m: usize,
    pub n: usize,
    pub s: usize,
    pub t: usize,
}

impl ZInstance {
    pub fn new(m: usize, n: usize, s: usize, t: usize) -> Result<Self> {
        if m == 0 || n == 0 || s == 0 || t == 0 {
            return Err(Error::InvalidArgument(format!(
                "z({m},{n};{s},{t}): all parameters must be positive"
            )));
        }
        Ok(ZInstance { m, n, s, t })
    }

    /// `z(m,n;2,2)`.
    pub fn c4(m: usize, n: usize) -> Result<Self> {
        ZInstance::new(m, n, 2, 2)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            rows,
            cols,
            cells: vec![false; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(BinaryMatrix {
            rows: rows.len(),
            cols,
            cells: rows.concat(),
        })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.cells[i * self.cols + j] = value;
    }

    pub fn ones(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn transpose(&self) -> Self {
        let mut t = BinaryMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Whether some `s` rows and `t` columns select only ones.
    pub fn has_all_ones_block(&self, s: usize, t: usize) -> bool {
        if s > self.rows || t > self.cols {
            return false;
        }
        let mut chosen = Vec::with_capacity(s);
        self.block_rows(0, s, t, &mut chosen)
    }

    fn block_rows(&self, from: usize, s: usize, t: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == s {
            let common = (0..self.cols)
                .filter(|&j| chosen.iter().all(|&i| self.get(i, j)))
                .count();
            return common >= t;
        }
        for i in from..self.rows {
            chosen.push(i);
            if self.block_rows(i + 1, s, t, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Row-major bit string, used for canonical ordering of witnesses.
    pub fn bit_string(&self) -> String {
        self.cells
            .iter()
            .map(|&c| if c { '1' } else { '0' })
            .collect()
    }

    /// One string of `0`/`1` characters per row.
    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| if self.get(i, j) { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }

    /// Parses rows of `0`/`1` characters, one per line.
    pub fn parse(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(Error::Parse(format!("matrix: unexpected character `{c}`"))),
                    })
                    .collect::<Result<Vec<bool>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        BinaryMatrix::from_rows(&rows)
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_strings() {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix{:?}", self.row_strings())
    }
}

#[derive(Clone, Debug)]
pub struct ZConfig {
    pub timeout: Option<Duration>,
    /// Largest side accepted by the `(2,2)` row search.
    pub max_side: usize,
    /// Largest `m·n` accepted by the general cell search.
    pub max_cells: usize,
}

impl Default for ZConfig {
    fn default() -> Self {
        ZConfig {
            timeout: Some(Duration::from_secs(60)),
            max_side: 7,
            max_cells: 49,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ZResult {
    pub instance: ZInstance,
    pub value: usize,
    /// Among all optimal matrices, the one with the lexicographically largest
    /// row-major bit string.
    pub witness: BinaryMatrix,
    pub complete: bool,
    pub elapsed: Duration,
}

/// Exact `z(m,n;s,t)` with a canonical witness.
///
/// `(2,2)` instances use a row-by-row search over column subsets: a matrix is
/// 2×2-free exactly when no pair of columns is covered by two rows. Other
/// `(s,t)` use a plain cell-by-cell search meant for tiny instances.
pub fn z_exact(inst: ZInstance, cfg: &ZConfig) -> Result<ZResult> {
    let ZInstance { m, n, s, t } = inst;
    let start = Instant::now();
    let deadline = cfg.timeout.map(|d| start + d);
    let (value, witness, complete) = if (s, t) == (2, 2) {
        let side = m.max(n);
        let cap = cfg.max_side.min(11);
        if side > cap {
            return Err(Error::CapExceeded { n: side, cap });
        }
        RowSearch::new(m, n, deadline).run()
    } else {
        if m * n > cfg.max_cells {
            return Err(Error::CapExceeded {
                n: m * n,
                cap: cfg.max_cells,
            });
        }
        CellSearch::new(inst, deadline).run()
    };
    Ok(ZResult {
        instance: inst,
        value,
        witness,
        complete,
        elapsed: start.elapsed(),
    })
}

struct RowSearch {
    m: usize,
    n: usize,
    weight: Vec<usize>,
    pairs: Vec<u64>,
    /// `budget[r][p]`: most ones `r` rows can hold using at most `p` column pairs.
    budget: Vec<Vec<usize>>,
    total_pairs: usize,
    rows: Vec<usize>,
    best: usize,
    best_rows: Vec<usize>,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

impl RowSearch {
    fn new(m: usize, n: usize, deadline: Option<Instant>) -> Self {
        // column j is bit n-1-j, so integer order is bit-string order
        let mut pair_index = vec![vec![0usize; n]; n];
        let mut k = 0;
        for (a, row) in pair_index.iter_mut().enumerate() {
            for slot in row.iter_mut().skip(a + 1) {
                *slot = k;
                k += 1;
            }
        }
        let total_pairs = k;
        let masks = 1usize << n;
        let mut weight = vec![0; masks];
        let mut pairs = vec![0u64; masks];
        for mask in 0..masks {
            let cols: Vec<usize> = (0..n).filter(|&j| mask >> (n - 1 - j) & 1 == 1).collect();
            weight[mask] = cols.len();
            for (i, &a) in cols.iter().enumerate() {
                for &b in &cols[i + 1..] {
                    pairs[mask] |= 1 << pair_index[a][b];
                }
            }
        }
        let mut budget = vec![vec![0usize; total_pairs + 1]; m + 1];
        for r in 1..=m {
            for p in 0..=total_pairs {
                budget[r][p] = (0..=n)
                    .filter(|w| w * w.saturating_sub(1) / 2 <= p)
                    .map(|w| w + budget[r - 1][p - w * w.saturating_sub(1) / 2])
                    .max()
                    .unwrap();
            }
        }
        RowSearch {
            m,
            n,
            weight,
            pairs,
            budget,
            total_pairs,
            rows: Vec::with_capacity(m),
            best: 0,
            best_rows: vec![0; m],
            deadline,
            nodes: 0,
            timed_out: false,
        }
    }

    fn run(mut self) -> (usize, BinaryMatrix, bool) {
        let top = (1usize << self.n) - 1;
        self.dfs(top, 0, 0);
        let mut w = BinaryMatrix::zeros(self.m, self.n);
        for (i, &mask) in self.best_rows.iter().enumerate() {
            for j in 0..self.n {
                w.set(i, j, mask >> (self.n - 1 - j) & 1 == 1);
            }
        }
        (self.best, w, !self.timed_out)
    }

    fn dfs(&mut self, prev: usize, used: u64, total: usize) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.timed_out = true;
        }
        if self.timed_out {
            return;
        }
        let row = self.rows.len();
        if row == self.m {
            if total > self.best {
                self.best = total;
                self.best_rows.copy_from_slice(&self.rows);
            }
            return;
        }
        let free = self.total_pairs - used.count_ones() as usize;
        if total + self.budget[self.m - row][free] <= self.best {
            return;
        }
        for mask in (0..=prev).rev() {
            if self.pairs[mask] & used != 0 {
                continue;
            }
            self.rows.push(mask);
            self.dfs(mask, used | self.pairs[mask], total + self.weight[mask]);
            self.rows.pop();
            if self.timed_out {
                return;
            }
        }
    }
}

struct CellSearch {
    inst: ZInstance,
    matrix: BinaryMatrix,
    best: usize,
    best_matrix: BinaryMatrix,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

impl CellSearch {
    fn new(inst: ZInstance, deadline: Option<Instant>) -> Self {
        let matrix = BinaryMatrix::zeros(inst.m, inst.n);
        CellSearch {
            inst,
            best_matrix: matrix.clone(),
            matrix,
            best: 0,
            deadline,
            nodes: 0,
            timed_out: false,
        }
    }

    fn run(mut self) -> (usize, BinaryMatrix, bool) {
        self.dfs(0, 0);
        (self.best, self.best_matrix, !self.timed_out)
    }

    fn dfs(&mut self, cell: usize, total: usize) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.timed_out = true;
        }
        if self.timed_out {
            return;
        }
        let cells = self.inst.m * self.inst.n;
        if total + (cells - cell) <= self.best {
            return;
        }
        if cell == cells {
            self.best = total;
            self.best_matrix = self.matrix.clone();
            return;
        }
        let (i, j) = (cell / self.inst.n, cell % self.inst.n);
        self.matrix.set(i, j, true);
        if !self.matrix.has_all_ones_block(self.inst.s, self.inst.t) {
            self.dfs(cell + 1, total + 1);
        }
        self.matrix.set(i, j, false);
        self.dfs(cell + 1, total);
    }
}

fn check_labeling(lab: &ProductLabeling, m: usize, n: usize) -> Result<()> {
    if lab.dims() != (m, n) {
        return Err(Error::DimensionMismatch(format!(
            "labeling of K_{} □ K_{} used with a {m}×{n} matrix",
            lab.dims().0,
            lab.dims().1
        )));
    }
    Ok(())
}

/// Entry `(i,k)` is 1 iff product vertex `(i,k)` is in `set`.
pub fn mv_set_to_matrix(set: &VertexSet, lab: &ProductLabeling) -> Result<BinaryMatrix> {
    let (m, n) = lab.dims();
    for v in set {
        lab.check_vertex(v)?;
    }
    let mut out = BinaryMatrix::zeros(m, n);
    for v in set {
        let (i, k) = lab.coords(v);
        out.set(i, k, true);
    }
    Ok(out)
}

pub fn matrix_to_mv_set(matrix: &BinaryMatrix, lab: &ProductLabeling) -> Result<VertexSet> {
    let (m, n) = matrix.dims();
    check_labeling(lab, m, n)?;
    let mut out = VertexSet::new();
    for i in 0..m {
        for k in 0..n {
            if matrix.get(i, k) {
                out.insert(lab.vertex(i, k));
            }
        }
    }
    Ok(out)
}

/// Kővári–Sós–Turán: `z(m,n;s,t) < (s−1)^{1/t} (n−t+1) m^{1−1/t} + (t−1) m`
/// for `s, t > 1`.
pub fn kst_upper(inst: ZInstance) -> Result<f64> {
    let ZInstance { m, n, s, t } = inst;
    if s <= 1 || t <= 1 {
        return Err(Error::InvalidArgument(format!(
            "Kővári–Sós–Turán bound needs s, t > 1, got s={s}, t={t}"
        )));
    }
    let (m, n, s, t) = (m as f64, n as f64, s as f64, t as f64);
    Ok((s - 1.0).powf(1.0 / t) * (n - t + 1.0) * m.powf(1.0 - 1.0 / t) + (t - 1.0) * m)
}

/// `⌊(1 − 1/(s!t!)) m^{1−α} n^{1−β}⌋` with `α = (s−1)/(st−1)` and
/// `β = (t−1)/(st−1)`.
pub fn projective_lower(inst: ZInstance) -> Result<u64> {
    let ZInstance { m, n, s, t } = inst;
    if s * t <= 1 {
        return Err(Error::InvalidArgument(
            "projective-plane bound is undefined for s = t = 1".into(),
        ));
    }
    let factorial = |k: usize| (1..=k).map(|i| i as f64).product::<f64>();
    let st1 = (s * t - 1) as f64;
    let alpha = (s - 1) as f64 / st1;
    let beta = (t - 1) as f64 / st1;
    let value = (1.0 - 1.0 / (factorial(s) * factorial(t)))
        * (m as f64).powf(1.0 - alpha)
        * (n as f64).powf(1.0 - beta);
    // powf can land a hair under an exact integer
    Ok((value + 1e-9).floor() as u64)
}

/// `(n^{3/2} − n^{4/3}, ¼ n (1 + √(4n−3)))`, the Brown / Erdős–Rényi–Sós
/// window for `z(n,n;2,2)` as it is usually quoted.
///
/// The upper end is not a valid bound: exact values exceed it for every
/// `n ≥ 1` (`z(2,2) = 3 > 1.62`), and projective planes beat it
/// asymptotically. Reiman's bound `½ n (1 + √(4n−3))` is the correct one.
pub fn erdos_window(n: usize) -> (f64, f64) {
    let x = n as f64;
    (
        x.powf(1.5) - x.powf(4.0 / 3.0),
        0.25 * x * (1.0 + (4.0 * x - 3.0).sqrt()),
    )
}
