//! Planar embedding of graphs given without one.
//!
//! Blocks are embedded one at a time by the Demoucron, Malgrange and
//! Pertuiset path-insertion method, and their rotations are concatenated at
//! cutpoints. Quadratic, which is plenty for edge-list inputs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{bridges_and_cutpoints, Graph, Vertex};
use crate::plane::{Dart, PlaneGraph, NO_DART};

/// A counterclockwise rotation system for `g`, or `NotPlanar`.
pub fn planar_rotation(g: &Graph) -> Result<Vec<Vec<Vertex>>> {
    if g.edges().iter().any(|e| !e.kind.is_real()) {
        return Err(Error::InvalidGraph("planarity test expects real edges only"));
    }
    let mut rotation = vec![Vec::new(); g.n()];
    for block in bridges_and_cutpoints(g).blocks {
        let rot = embed_block(g, &block)?;
        for (v, order) in rot.into_iter().enumerate() {
            rotation[v].extend(order);
        }
    }
    Ok(rotation)
}

/// Embeds `g` and picks the outer face with [`outer_face`].
pub fn embed_planar(g: &Graph) -> Result<(PlaneGraph, Dart)> {
    let rotation = planar_rotation(g)?;
    let plane = PlaneGraph::from_rotation(g, &rotation)?;
    let d = outer_face(&plane);
    Ok((plane, d))
}

/// A dart of the longest face. Ties go to the face holding the lowest vertex
/// id, then to the smallest dart.
pub fn outer_face(plane: &PlaneGraph) -> Dart {
    let (face, nf) = plane.faces();
    let mut len = vec![0usize; nf];
    let mut low = vec![Vertex::MAX; nf];
    let mut rep = vec![usize::MAX; nf];
    for d in 0..plane.dart_count() {
        let f = face[d];
        len[f] += 1;
        low[f] = low[f].min(plane.tail(d));
        rep[f] = rep[f].min(d);
    }
    (0..nf)
        .max_by_key(|&f| (len[f], core::cmp::Reverse((low[f], rep[f]))))
        .map_or(NO_DART, |f| rep[f])
}

/// Rotation of one block (edge ids of `g`), indexed by vertex of `g`.
fn embed_block(g: &Graph, block: &[usize]) -> Result<Vec<Vec<Vertex>>> {
    let n = g.n();
    let mut rot = vec![Vec::new(); n];
    if block.len() == 1 {
        let e = g.edge(block[0]);
        rot[e.u as usize].push(e.v);
        rot[e.v as usize].push(e.u);
        return Ok(rot);
    }
    // Adjacency restricted to the block.
    let mut adj: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); n];
    for &id in block {
        let e = g.edge(id);
        adj[e.u as usize].push((e.v, id));
        adj[e.v as usize].push((e.u, id));
    }
    let mut plane = PlaneGraph::new(n);
    let mut placed_v = vec![false; n];
    let mut placed_e = vec![false; g.edges().len()];

    let cycle = initial_cycle(g, &adj, block[0]);
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let au = plane.first_dart(u).unwrap_or(NO_DART);
        let av = plane.first_dart(v).unwrap_or(NO_DART);
        plane.insert_edge(u, au, v, av, g.edge(edge_id(&adj, u, v)).kind);
        placed_e[edge_id(&adj, u, v)] = true;
        placed_v[u as usize] = true;
    }
    let mut left = block.len() - cycle.len();
    while left > 0 {
        let frags = fragments(&adj, &placed_v, &placed_e);
        let (face, nf) = plane.faces();
        // Faces at each placed vertex, with the dart opening that corner.
        let mut corners: Vec<Vec<(usize, Dart)>> = vec![Vec::new(); n];
        for d in 0..plane.dart_count() {
            corners[plane.tail(d) as usize].push((face[d], d));
        }
        let mut pick: Option<(usize, usize)> = None;
        for (i, fr) in frags.iter().enumerate() {
            let mut ok = vec![0usize; nf];
            for &a in &fr.attach {
                for &(f, _) in &corners[a as usize] {
                    ok[f] += 1;
                }
            }
            let admissible: Vec<usize> = (0..nf).filter(|&f| ok[f] == fr.attach.len()).collect();
            match admissible.len() {
                0 => return Err(Error::NotPlanar),
                1 => {
                    pick = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if pick.is_none() {
                        pick = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (i, f) = pick.expect("a block with unplaced edges has a fragment");
        let path = fragment_path(&adj, &placed_v, &frags[i]);
        let corner = |v: Vertex| {
            corners[v as usize]
                .iter()
                .find(|&&(g, _)| g == f)
                .map(|&(_, d)| d)
                .unwrap()
        };
        let (a, b) = (path[0], *path.last().unwrap());
        let (ca, cb) = (corner(a), corner(b));
        for w in 0..path.len() - 1 {
            let (u, v) = (path[w], path[w + 1]);
            let au = if w == 0 { ca } else { plane.first_dart(u).unwrap() };
            let av = if w + 2 == path.len() { cb } else { NO_DART };
            let id = edge_id(&adj, u, v);
            plane.insert_edge(u, au, v, av, g.edge(id).kind);
            placed_e[id] = true;
            placed_v[v as usize] = true;
            left -= 1;
        }
    }
    for v in 0..n as Vertex {
        rot[v as usize] = plane.darts_around(v).into_iter().map(|d| plane.head(d)).collect();
    }
    Ok(rot)
}

fn edge_id(adj: &[Vec<(Vertex, usize)>], u: Vertex, v: Vertex) -> usize {
    adj[u as usize]
        .iter()
        .find(|&&(w, _)| w == v)
        .map(|&(_, id)| id)
        .unwrap()
}

/// A cycle through the edge `first`: the edge plus a shortest detour.
fn initial_cycle(g: &Graph, adj: &[Vec<(Vertex, usize)>], first: usize) -> Vec<Vertex> {
    let e = g.edge(first);
    let mut from = vec![u32::MAX; adj.len()];
    from[e.u as usize] = e.u;
    let mut queue = VecDeque::from([e.u]);
    while let Some(x) = queue.pop_front() {
        for &(y, id) in &adj[x as usize] {
            if id != first && from[y as usize] == u32::MAX {
                from[y as usize] = x;
                queue.push_back(y);
            }
        }
    }
    let mut cycle = vec![e.v];
    let mut x = e.v;
    while x != e.u {
        x = from[x as usize];
        cycle.push(x);
    }
    cycle
}

/// A bridge of the placed subgraph: either one unplaced edge between placed
/// vertices, or a component of unplaced vertices with its attachment edges.
struct Fragment {
    attach: Vec<Vertex>,
    /// Unplaced vertices, empty for a single edge.
    inner: Vec<Vertex>,
    /// The edge for a single-edge fragment.
    chord: Option<(Vertex, Vertex)>,
}

fn fragments(adj: &[Vec<(Vertex, usize)>], placed_v: &[bool], placed_e: &[bool]) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !placed_v[u] {
            continue;
        }
        for &(v, id) in &adj[u] {
            if (u as Vertex) < v && placed_v[v as usize] && !placed_e[id] {
                out.push(Fragment {
                    attach: vec![u as Vertex, v],
                    inner: Vec::new(),
                    chord: Some((u as Vertex, v)),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if placed_v[s] || seen[s] || adj[s].is_empty() {
            continue;
        }
        let mut inner = vec![s as Vertex];
        let mut attach = Vec::new();
        seen[s] = true;
        let mut i = 0;
        while i < inner.len() {
            let x = inner[i];
            i += 1;
            for &(y, _) in &adj[x as usize] {
                if placed_v[y as usize] {
                    attach.push(y);
                } else if !seen[y as usize] {
                    seen[y as usize] = true;
                    inner.push(y);
                }
            }
        }
        attach.sort_unstable();
        attach.dedup();
        out.push(Fragment {
            attach,
            inner,
            chord: None,
        });
    }
    out
}

/// A path through the fragment between two distinct attachments.
fn fragment_path(adj: &[Vec<(Vertex, usize)>], placed_v: &[bool], fr: &Fragment) -> Vec<Vertex> {
    if let Some((u, v)) = fr.chord {
        return vec![u, v];
    }
    let a = fr.attach[0];
    let n = adj.len();
    let mut from = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for &(y, _) in &adj[a as usize] {
        if !placed_v[y as usize] && fr.inner.contains(&y) && from[y as usize] == u32::MAX {
            from[y as usize] = a;
            queue.push_back(y);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &(y, _) in &adj[x as usize] {
            if placed_v[y as usize] {
                if y != a {
                    let mut path = vec![y, x];
                    let mut z = x;
                    while from[z as usize] != a {
                        z = from[z as usize];
                        path.push(z);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
            } else if from[y as usize] == u32::MAX {
                from[y as usize] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a block has two attachments")
}
