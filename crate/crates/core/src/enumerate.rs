//! Exhaustive and random graph sources for property checks.

use std::collections::HashMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{find_isomorphism, fingerprint, Fingerprint, Graph};

/// Largest order for labeled enumeration (`2^21` adjacency matrices at 7).
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Vertex pairs `(i, j)`, `i < j`, in the bit order used by edge masks.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// The labeled graph whose edge set is the bits of `mask` over [`pair_list`].
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pair_list(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e);
    Graph::new(n, edges).expect("pairs are in range")
}

fn rows_of(n: usize, pairs: &[(usize, usize)], mask: u64) -> [u8; 8] {
    let mut rows = [0u8; 8];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
    }
    debug_assert!(n <= 8);
    rows
}

fn rows_connected(n: usize, rows: &[u8; 8]) -> bool {
    let all = ((1u16 << n) - 1) as u8;
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let mut next = 0u8;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        next &= !seen;
        seen |= next;
        frontier = next;
    }
    seen == all
}

fn rows_triangle_free(n: usize, rows: &[u8; 8]) -> bool {
    (0..n).all(|i| {
        let mut higher = rows[i] & !((2u16 << i) - 1) as u8;
        while higher != 0 {
            let j = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            if rows[i] & rows[j] != 0 {
                return false;
            }
        }
        true
    })
}

/// Edge masks of every connected labeled graph on `n` vertices (optionally
/// only the triangle-free ones), in increasing order.
pub fn connected_masks(n: usize, triangle_free_only: bool) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::CapExceeded {
            n,
            cap: MAX_ENUMERATION_ORDER,
        });
    }
    let pairs = pair_list(n);
    Ok((0..1u64 << pairs.len())
        .filter(|&mask| {
            let rows = rows_of(n, &pairs, mask);
            rows_connected(n, &rows) && (!triangle_free_only || rows_triangle_free(n, &rows))
        })
        .collect())
}

/// Every connected labeled graph on `n` vertices.
pub fn enumerate_connected_graphs(
    n: usize,
    triangle_free_only: bool,
) -> Result<impl Iterator<Item = Graph>> {
    Ok(connected_masks(n, triangle_free_only)?
        .into_iter()
        .map(move |mask| graph_from_mask(n, mask)))
}

/// One representative per isomorphism class, keeping first occurrences.
/// Graphs are bucketed by [`fingerprint`] and compared exactly within a
/// bucket, so orders above the isomorphism limit are rejected.
pub fn dedup_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Result<Vec<Graph>> {
    let mut buckets: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
    let mut kept: Vec<Graph> = Vec::new();
    for g in graphs {
        let bucket = buckets.entry(fingerprint(&g)).or_default();
        let mut duplicate = false;
        for &i in bucket.iter() {
            if find_isomorphism(&kept[i], &g)?.is_some() {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            bucket.push(kept.len());
            kept.push(g);
        }
    }
    Ok(kept)
}

/// A random connected graph: a uniform random spanning tree (random Prüfer
/// code) plus each remaining pair independently with probability `p`.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let tree = crate::constructions::random_tree(n, rng.gen())?;
    let mut edges: Vec<(usize, usize)> = tree.edges().collect();
    for (i, j) in pair_list(n) {
        if !tree.has_edge(i, j) && rng.gen_bool(p) {
            edges.push((i, j));
        }
    }
    Graph::new(n, edges)
}
