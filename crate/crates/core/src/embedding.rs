//! Outerplanar recognition and embedding.
//!
//! Each biconnected block is reduced by repeatedly deleting a degree-2 vertex
//! and joining its neighbours; replaying the deletions backwards rebuilds the
//! unique Hamiltonian cycle or proves there is none. Blocks are then glued at
//! cutpoints with every block kept in the outer angle of its neighbours.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{bridges_and_cutpoints, connected_components, Graph, Vertex};
use crate::plane::{Dart, PlaneGraph};

/// A plane embedding with every vertex on the outer face.
#[derive(Debug, Clone)]
pub struct OuterplanarEmbedding {
    pub plane: PlaneGraph,
    /// A dart with the outer face on its left; `None` for a single vertex.
    pub outer_dart: Option<Dart>,
}

impl OuterplanarEmbedding {
    /// Vertices along the outer face starting at the tail of `outer_dart`.
    /// Cutpoints appear once per visit.
    pub fn outer_walk(&self) -> Vec<Vertex> {
        match self.outer_dart {
            Some(d) => self
                .plane
                .face_darts(d)
                .into_iter()
                .map(|d| self.plane.tail(d))
                .collect(),
            None => (0..self.plane.n() as Vertex).collect(),
        }
    }

    /// Real edges that are not on the outer face.
    pub fn chords(&self) -> Vec<(Vertex, Vertex)> {
        let outer: BTreeSet<usize> = match self.outer_dart {
            Some(d) => self.plane.face_darts(d).into_iter().map(|d| d >> 1).collect(),
            None => BTreeSet::new(),
        };
        (0..self.plane.edge_count())
            .filter(|e| !outer.contains(e))
            .map(|e| {
                let (u, v) = (self.plane.tail(2 * e), self.plane.head(2 * e));
                (u.min(v), u.max(v))
            })
            .collect()
    }
}

/// Hamiltonian cycle of a biconnected outerplanar graph on `verts` (at least
/// three vertices) using edges `edges`, or `None` if the block is not
/// outerplanar.
fn block_cycle(verts: &[Vertex], edges: &[(Vertex, Vertex)]) -> Option<Vec<Vertex>> {
    let local = |v: Vertex| verts.binary_search(&v).expect("vertex of block");
    let n = verts.len();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in edges {
        let (a, b) = (local(u), local(v));
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut alive = n;
    let mut removed = vec![false; n];
    let mut order: Vec<(usize, usize, usize)> = Vec::new();
    let mut queue: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 2).collect();
    while alive > 2 {
        let v = loop {
            let v = queue.pop()?;
            if !removed[v] && adj[v].len() == 2 {
                break v;
            }
        };
        let mut it = adj[v].iter();
        let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
        removed[v] = true;
        alive -= 1;
        adj[a].remove(&v);
        adj[b].remove(&v);
        adj[a].insert(b);
        adj[b].insert(a);
        order.push((v, a, b));
        for w in [a, b] {
            if adj[w].len() == 2 {
                queue.push(w);
            }
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let mut next = vec![usize::MAX; n];
    let mut prev = vec![usize::MAX; n];
    next[rest[0]] = rest[1];
    next[rest[1]] = rest[0];
    prev[rest[0]] = rest[1];
    prev[rest[1]] = rest[0];
    for &(v, a, b) in order.iter().rev() {
        let (a, b) = if next[a] == b {
            (a, b)
        } else if next[b] == a {
            (b, a)
        } else {
            return None;
        };
        next[a] = v;
        prev[v] = a;
        next[v] = b;
        prev[b] = v;
    }
    let mut cycle = Vec::with_capacity(n);
    let mut v = 0;
    for _ in 0..n {
        cycle.push(verts[v]);
        v = next[v];
    }
    Some(cycle)
}

/// Embeds a connected graph with all vertices on the outer face.
pub fn recognize_outerplanar(g: &Graph) -> Result<OuterplanarEmbedding> {
    let n = g.n();
    if connected_components(g).len() > 1 {
        return Err(Error::InvalidGraph("graph is not connected"));
    }
    if n > 1 && g.real_edge_count() > 2 * n - 3 {
        return Err(Error::NotOuterplanar);
    }
    let blocks = bridges_and_cutpoints(g).blocks;
    // Per vertex, the counterclockwise neighbour lists of each block in turn.
    let mut rotation: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut pos = vec![0usize; n];
    for block in &blocks {
        let edges: Vec<(Vertex, Vertex)> = block
            .iter()
            .map(|&id| {
                let e = g.edge(id);
                (e.u, e.v)
            })
            .collect();
        let mut verts: Vec<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() == 2 {
            rotation[verts[0] as usize].push(verts[1]);
            rotation[verts[1] as usize].push(verts[0]);
            continue;
        }
        let cycle = block_cycle(&verts, &edges).ok_or(Error::NotOuterplanar)?;
        let len = cycle.len();
        for (i, &v) in cycle.iter().enumerate() {
            pos[v as usize] = i;
        }
        let mut nbrs: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
        for &(a, b) in &edges {
            nbrs.entry(a).or_default().push(b);
            nbrs.entry(b).or_default().push(a);
        }
        for (i, &v) in cycle.iter().enumerate() {
            let mut around = nbrs.remove(&v).unwrap_or_default();
            around.sort_by_key(|&w| (pos[w as usize] + len - i) % len);
            rotation[v as usize].extend(around);
        }
    }
    let plane = PlaneGraph::from_rotation(g, &rotation)?;
    let outer_dart = outer_dart_of(&plane, &blocks, g);
    let emb = OuterplanarEmbedding { plane, outer_dart };
    // Any crossing chord shows up as a failed Euler count or a vertex missing
    // from the outer walk.
    if !emb.plane.is_plane() {
        return Err(Error::NotOuterplanar);
    }
    if let Some(d) = emb.outer_dart {
        let walk: BTreeSet<Vertex> = emb.plane.face_darts(d).into_iter().map(|d| emb.plane.tail(d)).collect();
        if walk.len() != n {
            return Err(Error::NotOuterplanar);
        }
    }
    Ok(emb)
}

fn outer_dart_of(plane: &PlaneGraph, blocks: &[Vec<usize>], g: &Graph) -> Option<Dart> {
    // In every block the face left of the reverse of a cycle edge is outer.
    // Prefer a dart of the lowest edge of the first block; that edge may be a
    // chord, so fall back to the first face reaching every vertex.
    let first = blocks.first()?;
    let e = g.edge(first[0]);
    let d = plane.find_dart(e.u, e.v)?;
    let n = plane.n();
    let mut stamp = vec![usize::MAX; n];
    let mut reaches_all = |d: Dart| {
        let mut seen = 0;
        for x in plane.face_darts(d) {
            let v = plane.tail(x) as usize;
            if stamp[v] != d {
                stamp[v] = d;
                seen += 1;
            }
        }
        seen == n
    };
    if reaches_all(d) {
        return Some(d);
    }
    if reaches_all(d ^ 1) {
        return Some(d ^ 1);
    }
    let (face, nf) = plane.faces();
    let mut tried = vec![false; nf];
    for x in 0..plane.dart_count() {
        if !tried[face[x]] {
            tried[face[x]] = true;
            if reaches_all(x) {
                return Some(x);
            }
        }
    }
    Some(d)
}
