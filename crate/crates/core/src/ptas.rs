//! Layered decomposition of planar graphs and a probe measuring how far
//! the best class solution falls from the optimum.
//!
//! BFS layers from a root are grouped by residue modulo `b`. The `Keep`
//! variant keeps, for each residue `i`, the layers congruent to `i`; the
//! `Delete` variant (the classic scheme) removes them. Every class `G_i`
//! splits into runs of consecutive layers, each run is embedded with an apex
//! standing in for the layers below it, and the face left by the apex becomes
//! the outer face. That certifies at most `b - 1` levels per run before the
//! exact solver sees it.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::bouter::{solve_bouterplanar, BouterOptions};
use crate::convolve::combine_counts;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::oracle::brute_force_all;
use crate::planarity::planar_rotation;
use crate::plane::PlaneGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    /// `G_i` is induced by the layers congruent to `i` modulo `b`.
    #[default]
    Keep,
    /// `G_i` is what remains after deleting those layers.
    Delete,
}

/// BFS layer of every vertex. Vertices the root cannot reach are layered from
/// the lowest vertex of their own component.
pub fn bfs_layers(g: &Graph, root: Vertex) -> Vec<u32> {
    let n = g.n();
    let mut layer = vec![u32::MAX; n];
    let starts = core::iter::once(root).chain(0..n as Vertex);
    for s in starts {
        if (s as usize) >= n || layer[s as usize] != u32::MAX {
            continue;
        }
        layer[s as usize] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if layer[w as usize] == u32::MAX {
                    layer[w as usize] = layer[v as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    layer
}

/// One class of the decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Class {
    pub residue: u32,
    /// Vertices of `G_i`, ascending.
    pub vertices: Vec<Vertex>,
    /// Connected components `G_{i,j}` of `G_i`.
    pub components: Vec<Vec<Vertex>>,
}

/// Splits `g` into the `b` classes of the chosen variant.
pub fn baker_decompose(g: &Graph, b: u32, root: Vertex, variant: Variant) -> Vec<Class> {
    let layer = bfs_layers(g, root);
    (0..b)
        .map(|i| {
            let vertices: Vec<Vertex> = (0..g.n() as Vertex)
                .filter(|&v| (layer[v as usize] % b == i) == (variant == Variant::Keep))
                .collect();
            let (sub, map) = g.induced_subgraph(&vertices);
            let components = crate::graph::connected_components(&sub)
                .iter()
                .map(|c| c.iter().map(|v| map[v as usize]).collect())
                .collect();
            Class {
                residue: i,
                vertices,
                components,
            }
        })
        .collect()
}

/// Exact best edge counts of a class for sizes `0..=k`. Sizes beyond the
/// class are padded with outside vertices, so they repeat the best smaller
/// value. Also returns the deepest level count seen, the certificate.
pub fn solve_class(g: &Graph, class: &Class, layer: &[u32], k: usize) -> Result<(Vec<u32>, u32)> {
    let (sub, map) = g.induced_subgraph(&class.vertices);
    let m = sub.n();
    if m == 0 {
        return Ok((vec![0; k + 1], 0));
    }
    // One apex per run of consecutive layers, joined to the run's lowest
    // layer. Runs never touch each other, so apexes stay in their own runs.
    let mut low = vec![u32::MAX; m];
    let mut comp_of = vec![usize::MAX; m];
    let comps = crate::graph::connected_components(&sub);
    for (c, set) in comps.iter().enumerate() {
        let base = set.iter().map(|v| layer[map[v as usize] as usize]).min().unwrap();
        for v in set.iter() {
            comp_of[v as usize] = c;
            low[v as usize] = base;
        }
    }
    let mut edges: Vec<(Vertex, Vertex)> = sub.real_edges().collect();
    for v in 0..m {
        if layer[map[v] as usize] == low[v] {
            edges.push((v as Vertex, (m + comp_of[v]) as Vertex));
        }
    }
    let aug = Graph::from_edges(m + comps.len(), &edges)?;
    let aug_rot = planar_rotation(&aug)?;
    // The neighbour preceding the apex around each apex neighbour: the dart
    // towards it starts the face the apex leaves behind.
    let mut before_apex = vec![Vertex::MAX; m];
    for v in 0..m {
        let r = &aug_rot[v];
        if let Some(i) = r.iter().position(|&w| w as usize >= m) {
            before_apex[v] = r[(i + r.len() - 1) % r.len()];
        }
    }
    let rotation: Vec<Vec<Vertex>> = aug_rot[..m]
        .iter()
        .map(|r| r.iter().copied().filter(|&w| (w as usize) < m).collect())
        .collect();
    let outer = |plane: &PlaneGraph, back: &[Vertex]| {
        let (v, &w) = back
            .iter()
            .enumerate()
            .find_map(|(i, &v)| {
                let w = &before_apex[v as usize];
                ((*w as usize) < m).then_some((i, w))
            })
            .ok_or(Error::EmbeddingInconsistent("run without an apex neighbour"))?;
        let lw = back.iter().position(|&x| x == w).unwrap();
        plane
            .find_dart(v as Vertex, lw as Vertex)
            .ok_or(Error::EmbeddingInconsistent("apex corner lost"))
    };
    let kk = k.min(m);
    let sol = solve_bouterplanar(&sub, &rotation, &outer, kk, &BouterOptions::default())?;
    let mut values = sol.values;
    let last = *values.last().unwrap();
    values.resize(k + 1, last);
    for i in 1..values.len() {
        values[i] = values[i].max(values[i - 1]);
    }
    Ok((values, sol.depth))
}

/// Max-plus combination of per-component vectors at every size up to `k`.
pub fn combine_components(vectors: &[Vec<u32>], k: usize) -> Vec<u32> {
    combine_counts(vectors, k)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeOptions {
    pub variant: Variant,
    pub root: Vertex,
    /// Largest graph the brute-force oracle is used on as the reference.
    pub cap: usize,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions {
            variant: Variant::Keep,
            root: 0,
            cap: crate::oracle::DEFAULT_CAP,
        }
    }
}

/// One probed instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeEntry {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub epsilon: f64,
    pub b: u32,
    pub variant: Variant,
    /// `S_i` at `k` for every residue.
    pub class_values: Vec<u32>,
    /// `S`, the best class value.
    pub best: u32,
    pub best_class: u32,
    /// Residue with the smallest `S_i`.
    pub worst_class: u32,
    pub opt: u32,
    /// `S / OPT`, or 1 when `OPT = 0`.
    pub ratio: f64,
    /// Deepest level count over all class runs.
    pub depth: u32,
}

/// `b = ceil(1 / epsilon)`, which must be at least 2.
pub fn layers_for(epsilon: f64) -> Result<u32> {
    if !(epsilon > 0.0 && epsilon <= 0.5) {
        return Err(Error::InfeasibleSpec("epsilon must lie in (0, 1/2]"));
    }
    let b = 1.0 / epsilon;
    let r = b as u32;
    Ok(if (r as f64) < b - 1e-9 { r + 1 } else { r })
}

/// Runs the decomposition on `g` and compares the best class solution with
/// the optimum: brute force up to `opts.cap` vertices, otherwise the exact
/// solver on `rotation` (or on a computed embedding).
pub fn probe(
    g: &Graph,
    rotation: Option<&[Vec<Vertex>]>,
    k: usize,
    epsilon: f64,
    opts: &ProbeOptions,
) -> Result<ProbeEntry> {
    let n = g.n();
    if k > n {
        return Err(Error::KTooLarge { k, n });
    }
    let b = layers_for(epsilon)?;
    let layer = bfs_layers(g, opts.root);
    let classes = baker_decompose(g, b, opts.root, opts.variant);
    if opts.variant == Variant::Delete {
        let kept = classes.iter().map(|c| c.vertices.len()).max().unwrap_or(0);
        assert!(kept as f64 * b as f64 >= (b as f64 - 1.0) * n as f64 - 1e-9);
    }
    let mut class_values = Vec::with_capacity(classes.len());
    let mut depth = 0;
    for class in &classes {
        let (values, d) = solve_class(g, class, &layer, k)?;
        if d + 1 > b {
            return Err(Error::EmbeddingInconsistent("class run exceeds b - 1 levels"));
        }
        depth = depth.max(d);
        class_values.push(values[k]);
    }
    let opt = if n <= opts.cap {
        brute_force_all(g, opts.cap)?.values[k]
    } else {
        let owned;
        let rot = match rotation {
            Some(r) => r,
            None => {
                owned = planar_rotation(g)?;
                &owned
            }
        };
        let outer = |p: &PlaneGraph, _: &[Vertex]| Ok(crate::planarity::outer_face(p));
        solve_bouterplanar(g, rot, &outer, k, &BouterOptions::default())?.values[k]
    };
    let (best_class, &best) = class_values
        .iter()
        .enumerate()
        .max_by_key(|&(i, &v)| (v, core::cmp::Reverse(i)))
        .unwrap();
    let worst_class = class_values.iter().enumerate().min_by_key(|&(i, &v)| (v, i)).unwrap().0;
    let ratio = if opt == 0 { 1.0 } else { best as f64 / opt as f64 };
    Ok(ProbeEntry {
        n,
        m: g.real_edge_count(),
        k,
        epsilon,
        b,
        variant: opts.variant,
        class_values,
        best,
        best_class: best_class as u32,
        worst_class: worst_class as u32,
        opt,
        ratio,
        depth,
    })
}

/// Counts of ratios in ten equal buckets over `[0, 1]`, the last one closed.
pub fn histogram(entries: &[ProbeEntry]) -> [usize; 10] {
    let mut h = [0; 10];
    for e in entries {
        let i = ((e.ratio * 10.0) as usize).min(9);
        h[i] += 1;
    }
    h
}

/// A star with centre 0: every edge joins BFS layers 0 and 1, so keeping
/// congruent layers leaves every class without edges.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (1..=leaves as Vertex).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).expect("star edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    #[test]
    fn path_classes_alternate() {
        let g = path(6);
        let cs = baker_decompose(&g, 2, 0, Variant::Keep);
        assert_eq!(cs[0].vertices, vec![0, 2, 4]);
        assert_eq!(cs[1].vertices, vec![1, 3, 5]);
        assert!(cs.iter().all(|c| c.components.len() == 3));
    }

    #[test]
    fn star_defeats_keep_variant() {
        let g = star(6);
        let e = probe(&g, None, 4, 0.5, &ProbeOptions::default()).unwrap();
        assert_eq!((e.best, e.opt), (0, 3));
        assert_eq!(e.ratio, 0.0);
    }

    #[test]
    fn single_vertex_is_ratio_one() {
        let g = star(4);
        let e = probe(&g, None, 1, 0.5, &ProbeOptions::default()).unwrap();
        assert_eq!(e.ratio, 1.0);
    }

    #[test]
    fn two_edges_combine() {
        assert_eq!(combine_components(&[vec![0, 0, 1], vec![0, 0, 1]], 4)[4], 2);
    }

    #[test]
    fn epsilon_to_b() {
        assert_eq!(layers_for(0.5), Ok(2));
        assert_eq!(layers_for(1.0 / 3.0), Ok(3));
        assert_eq!(layers_for(0.3), Ok(4));
        assert!(layers_for(0.7).is_err());
    }
}
