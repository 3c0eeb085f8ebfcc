//! Branch and bound over downward-closed vertex-set families.
//!
//! All four invariants share one skeleton. A node holds a feasible set `X` and
//! the candidates `P` that can each be added to `X` on their own. Because the
//! families are closed under subsets, a vertex that cannot join `X` can never
//! join any superset of `X`, so `P` only shrinks along a branch and
//! `|X| + |P|` is a valid upper bound.
//!
//! The search runs in two phases. The first finds the optimum value with
//! vertices ordered by decreasing degree, optionally spread over several
//! workers sharing the incumbent value. The second walks vertices in index
//! order, include-first, and stops at the first set of optimal size, which is
//! the lexicographically smallest optimal set. The witness is therefore the
//! same for any worker count.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::vertex_set::VertexSet;

pub(crate) trait Family: Sync {
    fn order(&self) -> usize;

    /// Whether `set ∪ {v}` is in the family, given that `set` is.
    fn can_add(&self, set: &VertexSet, v: usize) -> bool;

    /// Vertex order for the optimization phase.
    fn branch_order(&self) -> Vec<usize>;
}

pub(crate) struct Outcome {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes: u64,
    pub complete: bool,
}

struct Shared {
    best: AtomicUsize,
    nodes: AtomicU64,
    stop: AtomicBool,
    deadline: Option<Instant>,
}

impl Shared {
    fn poll(&self, local_nodes: u64) -> bool {
        if local_nodes.is_multiple_of(256) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.stop.store(true, Ordering::Relaxed);
                }
            }
        }
        self.stop.load(Ordering::Relaxed)
    }
}

struct Worker<'a, F: Family> {
    family: &'a F,
    shared: &'a Shared,
    nodes: u64,
    best_len: usize,
    best_set: VertexSet,
}

impl<F: Family> Worker<'_, F> {
    fn filter(&self, set: &VertexSet, rest: &[usize]) -> Vec<usize> {
        rest.iter()
            .copied()
            .filter(|&c| self.family.can_add(set, c))
            .collect()
    }

    fn record(&mut self, set: VertexSet, len: usize) {
        if len > self.best_len {
            self.best_len = len;
            self.best_set = set;
        }
        self.shared.best.fetch_max(len, Ordering::Relaxed);
    }

    fn maximize(&mut self, set: VertexSet, len: usize, cands: &[usize]) {
        self.nodes += 1;
        if self.shared.poll(self.nodes) {
            return;
        }
        self.record(set, len);
        for (i, &v) in cands.iter().enumerate() {
            if len + cands.len() - i <= self.shared.best.load(Ordering::Relaxed) {
                return;
            }
            let next = set.with(v);
            let next_cands = self.filter(&next, &cands[i + 1..]);
            self.maximize(next, len + 1, &next_cands);
            if self.shared.stop.load(Ordering::Relaxed) {
                return;
            }
        }
    }

    fn first_of_size(
        &mut self,
        set: VertexSet,
        len: usize,
        cands: &[usize],
        target: usize,
    ) -> Option<VertexSet> {
        self.nodes += 1;
        if len == target {
            return Some(set);
        }
        if self.shared.poll(self.nodes) {
            return None;
        }
        for (i, &v) in cands.iter().enumerate() {
            if len + cands.len() - i < target {
                return None;
            }
            let next = set.with(v);
            let next_cands = self.filter(&next, &cands[i + 1..]);
            if let Some(found) = self.first_of_size(next, len + 1, &next_cands, target) {
                return Some(found);
            }
            if self.shared.stop.load(Ordering::Relaxed) {
                return None;
            }
        }
        None
    }
}

pub(crate) fn solve<F: Family>(family: &F, workers: usize, timeout: Option<Duration>) -> Outcome {
    let shared = Shared {
        best: AtomicUsize::new(0),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        deadline: timeout.map(|t| Instant::now() + t),
    };
    let order = family.branch_order();
    let incumbent = Mutex::new((0usize, VertexSet::new()));
    let next_branch = AtomicUsize::new(0);

    let run = || {
        let mut w = Worker {
            family,
            shared: &shared,
            nodes: 0,
            best_len: 0,
            best_set: VertexSet::new(),
        };
        loop {
            let i = next_branch.fetch_add(1, Ordering::Relaxed);
            if i >= order.len() || shared.stop.load(Ordering::Relaxed) {
                break;
            }
            if order.len() - i <= shared.best.load(Ordering::Relaxed) {
                continue;
            }
            let root = VertexSet::singleton(order[i]);
            let cands = w.filter(&root, &order[i + 1..]);
            w.maximize(root, 1, &cands);
        }
        shared.nodes.fetch_add(w.nodes, Ordering::Relaxed);
        let mut inc = incumbent.lock().unwrap();
        if w.best_len > inc.0 {
            *inc = (w.best_len, w.best_set);
        }
    };

    if workers <= 1 {
        run();
    } else {
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(run);
            }
        });
    }

    let (value, fallback) = *incumbent.lock().unwrap();
    if shared.stop.load(Ordering::Relaxed) {
        return Outcome {
            value,
            witness: fallback,
            nodes: shared.nodes.load(Ordering::Relaxed),
            complete: false,
        };
    }

    let mut w = Worker {
        family,
        shared: &shared,
        nodes: 0,
        best_len: 0,
        best_set: VertexSet::new(),
    };
    let all: Vec<usize> = (0..family.order()).collect();
    let canonical = w.first_of_size(VertexSet::new(), 0, &all, value);
    let nodes = shared.nodes.load(Ordering::Relaxed) + w.nodes;
    match canonical {
        Some(witness) => Outcome {
            value,
            witness,
            nodes,
            complete: true,
        },
        None => Outcome {
            value,
            witness: fallback,
            nodes,
            complete: false,
        },
    }
}
