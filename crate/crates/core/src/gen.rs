//! Seeded instance generators.
//!
//! Every generator draws from ChaCha8 seeded with `GenSpec::seed`, so a spec
//! always produces the same graph on every platform.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::recognize_outerplanar;
use crate::error::{Error, Result};
use crate::graph::{connected_components, EdgeKind, Graph, Vertex};
use crate::levels::compute_levels;
use crate::plane::{Dart, PlaneGraph, NO_DART};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    /// Target number of levels.
    pub b: u32,
    /// Edge density in `[0, 1]`.
    pub rho: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(n: usize, b: u32, rho: f64, seed: u64) -> Self {
        GenSpec { n, b, rho, seed }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// A graph with a plane embedding: counterclockwise neighbour lists and a
/// dart `u -> v` that has the outer face on its left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub rotation: Vec<Vec<Vertex>>,
    pub outer: Option<(Vertex, Vertex)>,
}

impl Instance {
    /// The plane graph and its outer dart (`NO_DART` without edges).
    pub fn plane(&self) -> Result<(PlaneGraph, Dart)> {
        let p = PlaneGraph::from_rotation(&self.graph, &self.rotation)?;
        let d = match self.outer {
            Some((u, v)) => p
                .darts_around(u)
                .into_iter()
                .find(|&d| p.head(d) == v)
                .ok_or(Error::EmbeddingInconsistent("outer dart is not an edge"))?,
            None => NO_DART,
        };
        Ok((p, d))
    }

    fn relabel(&self, perm: &[Vertex]) -> Instance {
        let n = self.graph.n();
        let edges: Vec<(Vertex, Vertex)> = self
            .graph
            .edges()
            .iter()
            .map(|e| (perm[e.u as usize], perm[e.v as usize]))
            .collect();
        let graph = Graph::from_edges(n, &edges).expect("relabelled graph");
        let mut rotation = vec![Vec::new(); n];
        for (v, r) in self.rotation.iter().enumerate() {
            rotation[perm[v] as usize] = r.iter().map(|&w| perm[w as usize]).collect();
        }
        Instance {
            graph,
            rotation,
            outer: self.outer.map(|(u, v)| (perm[u as usize], perm[v as usize])),
        }
    }
}

fn permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n as Vertex).collect();
    p.shuffle(rng);
    p
}

/// Chords of a random triangulation of the polygon `poly`.
fn polygon_chords(poly: &[Vertex], rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    if poly.len() < 4 {
        return out;
    }
    let mut stack = vec![(0usize, poly.len() - 1)];
    while let Some((i, j)) = stack.pop() {
        if j - i < 2 {
            continue;
        }
        let m = rng.gen_range(i + 1..j);
        if m - i >= 2 {
            out.push((poly[i], poly[m]));
            stack.push((i, m));
        }
        if j - m >= 2 {
            out.push((poly[m], poly[j]));
            stack.push((m, j));
        }
    }
    out
}

fn pick_fraction<T>(mut items: Vec<T>, rho: f64, rng: &mut ChaCha8Rng) -> Vec<T> {
    let keep = ((items.len() as f64) * rho.clamp(0.0, 1.0) + 0.5) as usize;
    items.shuffle(rng);
    items.truncate(keep);
    items
}

/// A cycle on `n` vertices plus a `rho` fraction of the chords of a random
/// polygon triangulation, with vertex ids shuffled.
pub fn gen_outerplanar(spec: &GenSpec) -> Result<Instance> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::InfeasibleSpec("n must be positive"));
    }
    let mut rng = spec.rng();
    let poly: Vec<Vertex> = (0..n as Vertex).collect();
    let mut edges: Vec<(Vertex, Vertex)> = match n {
        1 => Vec::new(),
        2 => vec![(0, 1)],
        _ => (0..n as Vertex).map(|i| (i, (i + 1) % n as Vertex)).collect(),
    };
    edges.extend(pick_fraction(polygon_chords(&poly, &mut rng), spec.rho, &mut rng));
    let perm = permutation(n, &mut rng);
    let edges: Vec<(Vertex, Vertex)> = edges
        .iter()
        .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
        .collect();
    let graph = Graph::from_edges(n, &edges)?;
    instance_of_outerplanar(graph)
}

fn instance_of_outerplanar(graph: Graph) -> Result<Instance> {
    let emb = recognize_outerplanar(&graph)?;
    let outer = emb.outer_dart.map(|d| (emb.plane.tail(d), emb.plane.head(d)));
    Ok(Instance {
        rotation: emb.plane.rotation(),
        graph,
        outer,
    })
}

/// An outerplanar graph built from random blocks glued at cutpoints: cycles
/// with a `rho` fraction of chords, bridges, and now and then a fresh
/// component. Not necessarily connected.
pub fn gen_outerplanar_blocks(spec: &GenSpec) -> Result<Graph> {
    let n = spec.n;
    let mut rng = spec.rng();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut used: usize = n.min(1);
    while used < n {
        if rng.gen_bool(0.1) {
            used += 1;
            continue;
        }
        let at = rng.gen_range(0..used) as Vertex;
        let size = rng.gen_range(2..=(n - used + 1).min(7));
        let mut poly = vec![at];
        poly.extend(used as Vertex..(used + size - 1) as Vertex);
        used += size - 1;
        if size == 2 {
            edges.push((poly[0], poly[1]));
            continue;
        }
        for i in 0..size {
            edges.push((poly[i], poly[(i + 1) % size]));
        }
        let chords = polygon_chords(&poly, &mut rng);
        edges.extend(chords.into_iter().filter(|_| rng.gen_bool(spec.rho.clamp(0.0, 1.0))));
    }
    let perm = permutation(n, &mut rng);
    let edges: Vec<(Vertex, Vertex)> = edges
        .iter()
        .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
        .collect();
    Graph::from_edges(n, &edges)
}

/// Concentric rings joined by random zig-zag triangulations, the innermost
/// ring holding random chords or a single hub vertex. A random spanning tree
/// always survives; beyond it, ring edges survive with probability
/// `(1 + rho) / 2` and all other edges with probability `rho`. Samples are
/// redrawn until the graph has exactly `b` levels, and after a few misses
/// every ring but the innermost is kept whole, which forces the depth.
pub fn gen_bouterplanar(spec: &GenSpec) -> Result<Instance> {
    if spec.b <= 1 {
        return gen_outerplanar(spec);
    }
    let b = spec.b as usize;
    if spec.n < 3 * (b - 1) + 1 {
        return Err(Error::InfeasibleSpec("too few vertices for the requested levels"));
    }
    let mut rng = spec.rng();
    for attempt in 0..10_000 {
        if let Some(inst) = ring_attempt(spec, attempt >= 16, &mut rng) {
            let perm = permutation(spec.n, &mut rng);
            return Ok(inst.relabel(&perm));
        }
    }
    Err(Error::InfeasibleSpec("no sample reached the requested levels"))
}

fn ring_sizes(n: usize, b: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut sizes = vec![3; b];
    sizes[b - 1] = 1;
    for _ in 0..n - 3 * (b - 1) - 1 {
        let i = rng.gen_range(0..b);
        sizes[i] += 1;
    }
    if sizes[b - 1] == 2 {
        match (0..b - 1).find(|&i| sizes[i] > 3) {
            Some(i) => {
                sizes[i] -= 1;
                sizes[b - 1] = 3;
            }
            None => {
                sizes[0] += 1;
                sizes[b - 1] = 1;
            }
        }
    }
    sizes
}

/// Zig-zag between an outer ring of `p` and an inner ring of `q >= 3`
/// vertices. Returns, per outer vertex, its inner neighbours and, per inner
/// vertex, its outer neighbours, both in clockwise-to-counterclockwise
/// order, or `None` if the walk repeated an edge.
type Adjacency = Vec<Vec<usize>>;

fn zigzag(p: usize, q: usize, rng: &mut ChaCha8Rng) -> Option<(Adjacency, Adjacency)> {
    let mut steps: Vec<bool> = vec![true; p];
    steps.extend(vec![false; q]);
    steps.shuffle(rng);
    let mut inward = vec![Vec::new(); p + 1];
    let mut outward = vec![Vec::new(); q + 1];
    let (mut a, mut bb) = (0, 0);
    inward[0].push(0);
    outward[0].push(0);
    let mut seen = BTreeSet::new();
    seen.insert((0, 0));
    for (i, &s) in steps.iter().enumerate() {
        if s {
            a += 1;
        } else {
            bb += 1;
        }
        inward[a].push(bb % q);
        outward[bb].push(a % p);
        if i + 1 < steps.len() && !seen.insert((a % p, bb % q)) {
            return None;
        }
    }
    let mut ins: Adjacency = inward[..p].to_vec();
    let mut tail = inward[p].clone();
    tail.pop();
    tail.extend(ins[0].iter().copied());
    ins[0] = tail;
    let mut outs: Adjacency = outward[..q].to_vec();
    let mut tail = outward[q].clone();
    tail.pop();
    tail.extend(outs[0].iter().copied());
    outs[0] = tail;
    Some((ins, outs))
}

fn ring_attempt(spec: &GenSpec, whole_rings: bool, rng: &mut ChaCha8Rng) -> Option<Instance> {
    let b = spec.b as usize;
    let n = spec.n;
    let sizes = ring_sizes(n, b, rng);
    let mut start = vec![0usize; b];
    for j in 1..b {
        start[j] = start[j - 1] + sizes[j - 1];
    }
    let id = |j: usize, t: usize| (start[j] + t % sizes[j]) as Vertex;
    let level_of = |v: Vertex| start.iter().rposition(|&s| s <= v as usize).unwrap();
    let mut inward_ccw: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut outward: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut ring_edges = Vec::new();
    let mut other_edges = Vec::new();
    for j in 0..b {
        if sizes[j] >= 3 {
            for t in 0..sizes[j] {
                ring_edges.push((id(j, t), id(j, t + 1)));
            }
        }
    }
    for j in 0..b - 1 {
        let (p, q) = (sizes[j], sizes[j + 1]);
        if q == 1 {
            let h = id(j + 1, 0);
            for a in 0..p {
                other_edges.push((id(j, a), h));
                inward_ccw[id(j, a) as usize].push(h);
                outward[h as usize].push(id(j, a));
            }
            continue;
        }
        let (ins, outs) = zigzag(p, q, rng)?;
        for (a, list) in ins.iter().enumerate() {
            let o = id(j, a);
            inward_ccw[o as usize] = list.iter().rev().map(|&bb| id(j + 1, bb)).collect();
            for &bb in list {
                if !(a == 0 && bb == 0) || other_edges.iter().all(|&e| e != (o, id(j + 1, 0))) {
                    other_edges.push((o, id(j + 1, bb)));
                }
            }
        }
        for (bb, list) in outs.iter().enumerate() {
            outward[id(j + 1, bb) as usize] = list.iter().map(|&a| id(j, a)).collect();
        }
    }
    other_edges.sort_unstable();
    other_edges.dedup();
    let inner = b - 1;
    if sizes[inner] >= 3 {
        let q = sizes[inner];
        let poly: Vec<Vertex> = (0..q).map(|t| id(inner, t)).collect();
        for (u, v) in polygon_chords(&poly, rng) {
            other_edges.push((u, v));
            inward_ccw[u as usize].push(v);
            inward_ccw[v as usize].push(u);
        }
        for t in 0..q {
            let v = id(inner, t);
            inward_ccw[v as usize].sort_by_key(|&w| (w as usize + q - start[inner] - t) % q);
        }
    }
    let rho = spec.rho.clamp(0.0, 1.0);
    let mut kept = spanning_tree(n, ring_edges.iter().chain(&other_edges), rng);
    for &(u, v) in &ring_edges {
        let whole = whole_rings && level_of(u) + 1 < b;
        if whole || rng.gen_bool((1.0 + rho) / 2.0) {
            kept.insert((u.min(v), u.max(v)));
        }
    }
    for &(u, v) in &other_edges {
        if rng.gen_bool(rho) {
            kept.insert((u.min(v), u.max(v)));
        }
    }
    let has = |u: Vertex, v: Vertex| kept.contains(&(u.min(v), u.max(v)));
    let mut rotation = vec![Vec::new(); n];
    for j in 0..b {
        for t in 0..sizes[j] {
            let v = id(j, t);
            let mut r = Vec::new();
            if sizes[j] >= 3 {
                r.push(id(j, t + 1));
                r.extend(inward_ccw[v as usize].iter().copied());
                r.push(id(j, t + sizes[j] - 1));
            } else {
                r.extend(inward_ccw[v as usize].iter().copied());
            }
            r.extend(outward[v as usize].iter().copied());
            r.retain(|&w| has(v, w));
            rotation[v as usize] = r;
        }
    }
    let edges: Vec<(Vertex, Vertex)> = kept.iter().copied().collect();
    let graph = Graph::from_edges(n, &edges).ok()?;
    if connected_components(&graph).len() != 1 {
        return None;
    }
    let outer = (0..sizes[0])
        .map(|t| (id(0, t + 1), id(0, t)))
        .find(|&(u, v)| has(u, v))?;
    let inst = Instance {
        graph,
        rotation,
        outer: Some(outer),
    };
    let (plane, d) = inst.plane().ok()?;
    if !plane.is_plane() {
        return None;
    }
    let levels = compute_levels(&plane, d);
    (levels.iter().copied().max() == Some(spec.b)).then_some(inst)
}

/// Edges of a random spanning forest of `edges`, normalized.
fn spanning_tree<'a>(
    n: usize,
    edges: impl Iterator<Item = &'a (Vertex, Vertex)>,
    rng: &mut ChaCha8Rng,
) -> BTreeSet<(Vertex, Vertex)> {
    let mut order: Vec<(Vertex, Vertex)> = edges.copied().collect();
    order.shuffle(rng);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut tree = BTreeSet::new();
    for (u, v) in order {
        let (a, b) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
        if a != b {
            parent[a] = b;
            tree.insert((u.min(v), u.max(v)));
        }
    }
    tree
}

/// A random stacked triangulation on `n` vertices thinned to a random
/// spanning tree plus each other edge with probability `rho`. The longest
/// face is made the outer face.
pub fn gen_planar(spec: &GenSpec) -> Result<Instance> {
    let n = spec.n;
    let mut rng = spec.rng();
    if n < 3 {
        let edges: Vec<(Vertex, Vertex)> = if n == 2 { vec![(0, 1)] } else { Vec::new() };
        return instance_of_outerplanar(Graph::from_edges(n.max(1), &edges)?);
    }
    let mut p = PlaneGraph::new(3);
    let e0 = p.insert_edge(0, NO_DART, 1, NO_DART, EdgeKind::Real);
    let e1 = p.insert_edge(1, 2 * e0 + 1, 2, NO_DART, EdgeKind::Real);
    p.insert_edge(2, 2 * e1 + 1, 0, 2 * e0, EdgeKind::Real);
    for _ in 3..n {
        let d1 = rng.gen_range(0..p.dart_count());
        let d2 = p.face_next(d1);
        let d3 = p.face_next(d2);
        let v = p.add_vertex();
        let a = p.insert_edge(p.tail(d1), d1, v, NO_DART, EdgeKind::Real);
        let b = p.insert_edge(p.tail(d2), d2, v, 2 * a + 1, EdgeKind::Real);
        p.insert_edge(p.tail(d3), d3, v, 2 * b + 1, EdgeKind::Real);
    }
    debug_assert!(p.is_plane());
    let full = p.to_graph();
    let all: Vec<(Vertex, Vertex)> = full.real_edges().collect();
    let mut kept = spanning_tree(n, all.iter(), &mut rng);
    for (u, v) in full.real_edges() {
        if rng.gen_bool(spec.rho.clamp(0.0, 1.0)) {
            kept.insert((u.min(v), u.max(v)));
        }
    }
    let rotation: Vec<Vec<Vertex>> = p
        .rotation()
        .into_iter()
        .enumerate()
        .map(|(u, r)| {
            r.into_iter()
                .filter(|&w| kept.contains(&((u as Vertex).min(w), (u as Vertex).max(w))))
                .collect()
        })
        .collect();
    let edges: Vec<(Vertex, Vertex)> = kept.into_iter().collect();
    let graph = Graph::from_edges(n, &edges)?;
    let plane = PlaneGraph::from_rotation(&graph, &rotation)?;
    let d = crate::planarity::outer_face(&plane);
    Ok(Instance {
        outer: Some((plane.tail(d), plane.head(d))),
        graph,
        rotation,
    })
}
