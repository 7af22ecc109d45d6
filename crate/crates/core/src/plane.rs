//! Combinatorial plane graphs stored as rotation systems over darts.
//!
//! Edge `e` owns darts `2e` (from `u` to `v`) and `2e + 1` (back). `next` is
//! the counterclockwise successor of a dart around its tail; the face to the
//! left of a dart continues with `face_next(d) = prev(twin(d))`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, Graph, Vertex};

pub type Dart = usize;

pub const NO_DART: Dart = usize::MAX;

#[inline]
pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

#[inline]
pub fn edge_of(d: Dart) -> usize {
    d >> 1
}

#[derive(Debug, Clone, Default)]
pub struct PlaneGraph {
    n: usize,
    tail: Vec<Vertex>,
    kind: Vec<EdgeKind>,
    next: Vec<Dart>,
    prev: Vec<Dart>,
    first: Vec<Dart>,
}

impl PlaneGraph {
    pub fn new(n: usize) -> Self {
        PlaneGraph {
            n,
            first: vec![NO_DART; n],
            ..Default::default()
        }
    }

    /// Builds a plane graph from a graph and, per vertex, the counterclockwise
    /// order of its neighbours. Every edge of `g` (all kinds) must appear in
    /// both rotations. A pair joined by a real edge and its bridge copy lists
    /// the neighbour twice; the copy is matched to the second occurrence.
    pub fn from_rotation(g: &Graph, rotation: &[Vec<Vertex>]) -> Result<Self> {
        if rotation.len() != g.n() {
            return Err(Error::EmbeddingInconsistent(
                "rotation length differs from vertex count",
            ));
        }
        let mut pg = PlaneGraph::new(g.n());
        for e in g.edges() {
            pg.tail.push(e.u);
            pg.tail.push(e.v);
            pg.kind.push(e.kind);
        }
        let darts = pg.tail.len();
        pg.next = vec![NO_DART; darts];
        pg.prev = vec![NO_DART; darts];
        let mut used = vec![false; darts];
        for (v, order) in rotation.iter().enumerate() {
            let v = v as Vertex;
            if order.len() != g.incident(v).len() {
                return Err(Error::EmbeddingInconsistent(
                    "rotation does not list every incident edge",
                ));
            }
            let mut ds = Vec::with_capacity(order.len());
            for &w in order {
                let d = g
                    .incident(v)
                    .iter()
                    .map(|&id| if g.edge(id).u == v { 2 * id } else { 2 * id + 1 })
                    .find(|&d| !used[d] && pg.head(d) == w)
                    .ok_or(Error::EmbeddingInconsistent("rotation names a non-neighbour"))?;
                used[d] = true;
                ds.push(d);
            }
            for i in 0..ds.len() {
                let a = ds[i];
                let b = ds[(i + 1) % ds.len()];
                pg.next[a] = b;
                pg.prev[b] = a;
            }
            if let Some(&d) = ds.first() {
                pg.first[v as usize] = d;
            }
        }
        Ok(pg)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dart_count(&self) -> usize {
        self.tail.len()
    }

    pub fn edge_count(&self) -> usize {
        self.kind.len()
    }

    pub fn tail(&self, d: Dart) -> Vertex {
        self.tail[d]
    }

    pub fn head(&self, d: Dart) -> Vertex {
        self.tail[twin(d)]
    }

    pub fn kind(&self, d: Dart) -> EdgeKind {
        self.kind[edge_of(d)]
    }

    /// Counterclockwise successor around the tail.
    pub fn next(&self, d: Dart) -> Dart {
        self.next[d]
    }

    pub fn prev(&self, d: Dart) -> Dart {
        self.prev[d]
    }

    /// The dart following `d` along the face on its left.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.prev[twin(d)]
    }

    pub fn face_prev(&self, d: Dart) -> Dart {
        twin(self.next[d])
    }

    pub fn first_dart(&self, v: Vertex) -> Option<Dart> {
        let d = self.first[v as usize];
        (d != NO_DART).then_some(d)
    }

    /// Darts leaving `v` in counterclockwise order starting at `first_dart`.
    pub fn darts_around(&self, v: Vertex) -> Vec<Dart> {
        let mut out = Vec::new();
        if let Some(start) = self.first_dart(v) {
            let mut d = start;
            loop {
                out.push(d);
                d = self.next[d];
                if d == start {
                    break;
                }
            }
        }
        out
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.darts_around(v).len()
    }

    /// Dart from `u` to `v`, preferring a real edge.
    pub fn find_dart(&self, u: Vertex, v: Vertex) -> Option<Dart> {
        let around = self.darts_around(u);
        around
            .iter()
            .copied()
            .filter(|&d| self.head(d) == v)
            .min_by_key(|&d| self.kind(d) != EdgeKind::Real)
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.first.push(NO_DART);
        self.n += 1;
        (self.n - 1) as Vertex
    }

    /// Adds an edge whose first dart is inserted right after `after_u` around
    /// `u` and whose second dart right after `after_v` around `v`. `NO_DART`
    /// is allowed for a vertex without darts. When both corners lie on the
    /// same face, that face is split in two.
    pub fn insert_edge(&mut self, u: Vertex, after_u: Dart, v: Vertex, after_v: Dart, kind: EdgeKind) -> usize {
        let e = self.kind.len();
        self.kind.push(kind);
        self.tail.push(u);
        self.tail.push(v);
        self.next.push(NO_DART);
        self.next.push(NO_DART);
        self.prev.push(NO_DART);
        self.prev.push(NO_DART);
        self.splice(2 * e, u, after_u);
        self.splice(2 * e + 1, v, after_v);
        e
    }

    fn splice(&mut self, d: Dart, v: Vertex, after: Dart) {
        if after == NO_DART {
            debug_assert_eq!(self.first[v as usize], NO_DART);
            self.next[d] = d;
            self.prev[d] = d;
            self.first[v as usize] = d;
        } else {
            debug_assert_eq!(self.tail[after], v);
            let nx = self.next[after];
            self.next[after] = d;
            self.prev[d] = after;
            self.next[d] = nx;
            self.prev[nx] = d;
        }
    }

    /// Walks the face to the left of `d`, returning its darts in order.
    pub fn face_darts(&self, d: Dart) -> Vec<Dart> {
        let mut out = vec![d];
        let mut x = self.face_next(d);
        while x != d {
            out.push(x);
            x = self.face_next(x);
        }
        out
    }

    /// Face id per dart and the number of faces. Ids follow the order of the
    /// smallest dart in each face.
    pub fn faces(&self) -> (Vec<usize>, usize) {
        let mut id = vec![usize::MAX; self.dart_count()];
        let mut count = 0;
        for d in 0..self.dart_count() {
            if id[d] != usize::MAX {
                continue;
            }
            let mut x = d;
            loop {
                id[x] = count;
                x = self.face_next(x);
                if x == d {
                    break;
                }
            }
            count += 1;
        }
        (id, count)
    }

    /// Checks Euler's formula per connected component, which certifies that
    /// the rotation system describes a plane embedding.
    pub fn is_plane(&self) -> bool {
        let (face_id, faces) = self.faces();
        let mut comp = vec![usize::MAX; self.n];
        let mut comps = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = comps;
            stack.push(s as Vertex);
            while let Some(v) = stack.pop() {
                for d in self.darts_around(v) {
                    let w = self.head(d) as usize;
                    if comp[w] == usize::MAX {
                        comp[w] = comps;
                        stack.push(w as Vertex);
                    }
                }
            }
            comps += 1;
        }
        let mut v_c = vec![0i64; comps];
        let mut e_c = vec![0i64; comps];
        let mut f_c = vec![0i64; comps];
        for v in 0..self.n {
            v_c[comp[v]] += 1;
        }
        for e in 0..self.edge_count() {
            e_c[comp[self.tail[2 * e] as usize]] += 1;
        }
        let mut seen = vec![false; faces];
        for d in 0..self.dart_count() {
            if !seen[face_id[d]] {
                seen[face_id[d]] = true;
                f_c[comp[self.tail[d] as usize]] += 1;
            }
        }
        (0..comps).all(|c| {
            let f = if e_c[c] == 0 { 1 } else { f_c[c] };
            v_c[c] - e_c[c] + f == 2
        })
    }

    /// The underlying graph, all edge kinds included.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for e in 0..self.edge_count() {
            g.add_edge_kind(self.tail[2 * e], self.tail[2 * e + 1], self.kind[e])
                .expect("plane graph edges are valid");
        }
        g
    }

    pub fn has_real_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.darts_around(u)
            .into_iter()
            .any(|d| self.head(d) == v && self.kind(d) == EdgeKind::Real)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.find_dart(u, v).is_some()
    }

    /// Adds a [`EdgeKind::BridgeDouble`] copy of every real bridge, placed so
    /// that the two copies bound an empty face. A dart `u -> v` of a bridge
    /// ends up inside that face and its copy takes its place on the other
    /// side; darts listed in `tracked` are rewritten accordingly.
    pub fn double_bridges(&mut self, tracked: &mut [Dart]) {
        let g = self.to_graph();
        let bridges = crate::graph::bridges_and_cutpoints(&g).bridges;
        for (u, v) in bridges {
            let d = self.find_dart(u, v).expect("bridge is an edge");
            let before_twin = self.prev(twin(d));
            let e = self.insert_edge(u, d, v, before_twin, EdgeKind::BridgeDouble);
            for t in tracked.iter_mut() {
                if *t == d {
                    *t = 2 * e;
                }
            }
        }
    }

    /// The same graph seen in a mirror: every rotation reversed.
    pub fn mirrored(&self) -> PlaneGraph {
        let mut m = self.clone();
        core::mem::swap(&mut m.next, &mut m.prev);
        m
    }

    /// The plane subgraph formed by the edges accepted by `keep`, with the
    /// map from its darts to darts of `self`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> (PlaneGraph, Vec<Dart>) {
        let mut new_id = vec![usize::MAX; self.edge_count()];
        let mut to_full = Vec::new();
        let mut sub = PlaneGraph::new(self.n);
        for e in 0..self.edge_count() {
            if keep(e) {
                new_id[e] = sub.kind.len();
                sub.kind.push(self.kind[e]);
                sub.tail.push(self.tail[2 * e]);
                sub.tail.push(self.tail[2 * e + 1]);
                to_full.push(2 * e);
                to_full.push(2 * e + 1);
            }
        }
        let map = |d: Dart| {
            let e = new_id[edge_of(d)];
            (e != usize::MAX).then(|| 2 * e + (d & 1))
        };
        sub.next = vec![NO_DART; sub.tail.len()];
        sub.prev = vec![NO_DART; sub.tail.len()];
        for v in 0..self.n as Vertex {
            let ds: Vec<Dart> = self.darts_around(v).into_iter().filter_map(map).collect();
            for i in 0..ds.len() {
                let (a, b) = (ds[i], ds[(i + 1) % ds.len()]);
                sub.next[a] = b;
                sub.prev[b] = a;
            }
            if let Some(&d) = ds.first() {
                sub.first[v as usize] = d;
            }
        }
        (sub, to_full)
    }

    /// Counterclockwise neighbour lists, the inverse of [`Self::from_rotation`].
    pub fn rotation(&self) -> Vec<Vec<Vertex>> {
        (0..self.n as Vertex)
            .map(|v| self.darts_around(v).into_iter().map(|d| self.head(d)).collect())
            .collect()
    }
}
