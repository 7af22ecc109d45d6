//! Brute-force references: every subset is enumerated and counted directly.
//!
//! Nothing here is clever on purpose. All dynamic programs are tested
//! against these functions.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::value::Value;

pub const DEFAULT_CAP: usize = 20;

/// Optimum edge count for every `k` in `0..=n`, with the first maximizing
/// set found for each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub values: Vec<u32>,
    pub witnesses: Vec<VertexSet>,
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    let mut adj = vec![0u32; g.n()];
    for (u, v) in g.real_edges() {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    adj
}

fn count_in_mask(adj: &[u32], mask: u32) -> u32 {
    let mut rest = mask;
    let mut twice = 0;
    while rest != 0 {
        let v = rest.trailing_zeros();
        twice += (adj[v as usize] & mask).count_ones();
        rest &= rest - 1;
    }
    twice / 2
}

/// Optimum for every `k`, by enumerating all `2^n` subsets.
pub fn brute_force_all(g: &Graph, cap: usize) -> Result<OracleResult> {
    let n = g.n();
    if n > cap || n > 30 {
        return Err(Error::CapExceeded { n, cap });
    }
    let adj = adjacency_masks(g);
    let mut best = vec![None::<(u32, u32)>; n + 1];
    for mask in 0..(1u32 << n) {
        let k = mask.count_ones() as usize;
        let c = count_in_mask(&adj, mask);
        if best[k].is_none_or(|(b, _)| c > b) {
            best[k] = Some((c, mask));
        }
    }
    let values = best.iter().map(|b| b.unwrap().0).collect();
    let witnesses = best
        .iter()
        .map(|b| VertexSet::from_vertices(n, (0..n as Vertex).filter(|&v| b.unwrap().1 >> v & 1 == 1)))
        .collect();
    Ok(OracleResult { values, witnesses })
}

/// Optimum and witness for a single `k`.
pub fn brute_force_densest_k(g: &Graph, k: usize, cap: usize) -> Result<(u32, VertexSet)> {
    if k > g.n() {
        return Err(Error::KTooLarge { k, n: g.n() });
    }
    let mut all = brute_force_all(g, cap)?;
    Ok((all.values[k], all.witnesses.swap_remove(k)))
}

/// Reference table for a vertex set with a fixed edge list.
///
/// Row `r` is the subset of `boundary` selected by the bits of `r`; cell
/// `[r][k']` is the largest number of `edges` inside a `k'`-subset of
/// `vertices` whose intersection with `boundary` is exactly that subset.
/// Columns run `0..=min(kmax, |vertices|)`.
pub fn brute_force_slice_table(
    vertices: &[Vertex],
    edges: &[(Vertex, Vertex)],
    boundary: &[Vertex],
    kmax: usize,
    cap: usize,
) -> Result<Vec<Vec<Value>>> {
    let n = vertices.len();
    if n > cap || n > 30 {
        return Err(Error::CapExceeded { n, cap });
    }
    let index = |v: Vertex| vertices.iter().position(|&w| w == v).expect("vertex of slice");
    let mut adj = vec![0u32; n];
    for &(u, v) in edges {
        let (a, b) = (index(u), index(v));
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let bpos: Vec<usize> = boundary.iter().map(|&v| index(v)).collect();
    let cols = kmax.min(n) + 1;
    let mut table = vec![vec![Value::ABSENT; cols]; 1 << boundary.len()];
    for mask in 0..(1u32 << n) {
        let k = mask.count_ones() as usize;
        if k >= cols {
            continue;
        }
        let row = bpos
            .iter()
            .enumerate()
            .fold(0usize, |r, (i, &p)| r | (((mask >> p) & 1) as usize) << i);
        let c = Value::new(count_in_mask(&adj, mask));
        table[row][k] = table[row][k].max(c);
    }
    Ok(table)
}
