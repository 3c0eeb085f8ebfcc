//! graph6 and edge-list serialization.
//!
//! graph6 follows McKay's format: a size prefix `N(n)` followed by the upper
//! triangle of the adjacency matrix in column order (`x(0,1) x(0,2) x(1,2)
//! x(0,3) ...`), packed six bits per byte, big-endian, each byte offset by 63.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push(126 as char);
        out.push(126 as char);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("graph6: invalid byte 0x{b:02x}")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = match bytes {
        [] => return Err(Error::Parse("graph6: empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Parse("graph6: truncated size".into()));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | six(b));
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Parse("graph6: truncated size".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | six(b));
            (n, &rest[3..])
        }
        [b, rest @ ..] => (six(*b), rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Parse(format!(
            "graph6: expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::Parse("graph6: nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Parses every non-empty line of a graph6 file.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(from_graph6)
        .collect()
}

/// Edge-list text: a header line `n m`, then `m` lines `u v` (0-based).
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let parse_pair = |(lineno, line): (usize, &str)| -> Result<(usize, usize)> {
        let nums: Vec<&str> = line.split_whitespace().collect();
        let bad = || {
            Error::Parse(format!(
                "edge list line {}: expected two integers",
                lineno + 1
            ))
        };
        match nums.as_slice() {
            [a, b] => Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    };
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("edge list: missing header".into()))?;
    let (n, m) = parse_pair(header)?;
    let edges = lines.map(parse_pair).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "edge list: header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}
