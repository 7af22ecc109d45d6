//! Levels of a plane graph, level components, connector edges, bridge copies
//! and the inter-level triangulation.
//!
//! Level 1 is the outer face; level `i + 1` is the outer face once levels
//! `1..=i` are deleted. Everything added here is a fake or bridge-copy edge,
//! so no count ever changes.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{bridges_and_cutpoints, EdgeKind, Graph, Vertex};
use crate::plane::{twin, Dart, PlaneGraph, NO_DART};

/// Level per vertex, counting from 1 at the outer face, by breadth-first
/// search over vertex-face incidences.
pub fn compute_levels(plane: &PlaneGraph, outer_dart: Dart) -> Vec<u32> {
    let n = plane.n();
    let (face, nf) = plane.faces();
    let mut face_darts: Vec<Vec<Dart>> = vec![Vec::new(); nf];
    for d in 0..plane.dart_count() {
        face_darts[face[d]].push(d);
    }
    let mut level = vec![0u32; n];
    let mut face_seen = vec![false; nf];
    let mut queue = VecDeque::new();
    face_seen[face[outer_dart]] = true;
    queue.push_back((face[outer_dart], 1u32));
    while let Some((f, lv)) = queue.pop_front() {
        for &d in &face_darts[f] {
            let v = plane.tail(d);
            if level[v as usize] != 0 {
                continue;
            }
            level[v as usize] = lv;
            for e in plane.darts_around(v) {
                if !face_seen[face[e]] {
                    face_seen[face[e]] = true;
                    queue.push_back((face[e], lv + 1));
                }
            }
        }
    }
    for l in level.iter_mut() {
        if *l == 0 {
            *l = 1;
        }
    }
    level
}

/// One connected set of same-level vertices, with its own plane graph.
#[derive(Debug, Clone)]
pub struct LevelComponent {
    pub level: u32,
    pub vertices: Vec<Vertex>,
    /// Edges among the component's vertices, connectors and bridge copies
    /// included.
    pub plane: PlaneGraph,
    /// Dart of `plane` to the matching dart of the full graph.
    pub full_dart: Vec<Dart>,
    /// Dart of `plane` with the component's outer face on its left.
    pub outer_dart: Option<Dart>,
    /// Enclosing component and a dart of its plane graph with the enclosing
    /// face on its left.
    pub enclosing: Option<(usize, Dart)>,
}

/// A plane graph with levels, connected level components and (after
/// [`triangulate`]) triangles between consecutive levels.
#[derive(Debug, Clone)]
pub struct LeveledEmbedding {
    pub plane: PlaneGraph,
    pub outer_dart: Dart,
    pub level: Vec<u32>,
    pub depth: u32,
    pub components: Vec<LevelComponent>,
    pub component_of: Vec<usize>,
    /// Full dart to the matching dart of its component's plane graph, or
    /// `NO_DART` for darts between components.
    pub local: Vec<Dart>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        self.0[a.max(b)] = a.min(b);
        true
    }
}

/// Adds one fake edge inside a face that touches two different level-`lv`
/// components. Returns false when no face does.
fn add_connector(plane: &mut PlaneGraph, level: &[u32], lv: u32, uf: &mut UnionFind) -> bool {
    let (face, nf) = plane.faces();
    let mut seen = vec![false; nf];
    for start in 0..plane.dart_count() {
        if seen[face[start]] {
            continue;
        }
        seen[face[start]] = true;
        let mut first: Option<(usize, Dart)> = None;
        for d in plane.face_darts(start) {
            let v = plane.tail(d);
            if level[v as usize] != lv {
                continue;
            }
            let root = uf.find(v as usize);
            match first {
                None => first = Some((root, d)),
                Some((r, d0)) if r != root => {
                    let u = plane.tail(d0);
                    plane.insert_edge(u, d0, v, d, EdgeKind::Fake);
                    uf.union(r, root);
                    return true;
                }
                _ => {}
            }
        }
    }
    false
}

impl LeveledEmbedding {
    /// Levels, connectors, bridge copies and per-component plane graphs for a
    /// connected plane graph whose outer face is left of `outer_dart`.
    pub fn new(plane: &PlaneGraph, outer_dart: Dart) -> Result<Self> {
        let n = plane.n();
        let level = compute_levels(plane, outer_dart);
        let depth = level.iter().copied().max().unwrap_or(1);
        let mut plane = plane.clone();

        // Same-level structure: real edges, then connectors level by level.
        let mut uf = UnionFind::new(n);
        for e in 0..plane.edge_count() {
            let (u, v) = (plane.tail(2 * e), plane.head(2 * e));
            if level[u as usize] == level[v as usize] {
                uf.union(u as usize, v as usize);
            }
        }
        for lv in 2..=depth {
            while add_connector(&mut plane, &level, lv, &mut uf) {}
        }

        let mut roots: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
        let mut comp_ids: Vec<usize> = roots.clone();
        comp_ids.sort_unstable();
        comp_ids.dedup();
        for r in roots.iter_mut() {
            *r = comp_ids.binary_search(r).unwrap();
        }
        let component_of = roots;

        // Double every bridge of every component inside the full graph.
        let same = |plane: &PlaneGraph, e: usize| {
            component_of[plane.tail(2 * e) as usize] == component_of[plane.head(2 * e) as usize]
        };
        let mut shape = Graph::new(n);
        for e in 0..plane.edge_count() {
            if same(&plane, e) {
                shape
                    .add_edge(plane.tail(2 * e), plane.head(2 * e))
                    .map_err(|_| Error::EmbeddingInconsistent("parallel edges inside a level"))?;
            }
        }
        let mut tracked = [outer_dart];
        for (u, v) in bridges_and_cutpoints(&shape).bridges {
            let d = plane.find_dart(u, v).expect("bridge is an edge");
            let before = plane.prev(twin(d));
            let e = plane.insert_edge(u, d, v, before, EdgeKind::BridgeDouble);
            if tracked[0] == d {
                tracked[0] = 2 * e;
            }
        }
        let outer_dart = tracked[0];

        let mut components = Vec::with_capacity(comp_ids.len());
        let mut members: Vec<Vec<Vertex>> = vec![Vec::new(); comp_ids.len()];
        for v in 0..n {
            members[component_of[v]].push(v as Vertex);
        }
        for vertices in members {
            let c = component_of[vertices[0] as usize];
            let (sub, full_dart) = plane.restrict(|e| {
                component_of[plane.tail(2 * e) as usize] == c && component_of[plane.head(2 * e) as usize] == c
            });
            components.push(LevelComponent {
                level: level[vertices[0] as usize],
                vertices,
                plane: sub,
                full_dart,
                outer_dart: None,
                enclosing: None,
            });
        }

        let mut local = vec![NO_DART; plane.dart_count()];
        for comp in &components {
            for (d, &f) in comp.full_dart.iter().enumerate() {
                local[f] = d;
            }
        }
        let mut le = LeveledEmbedding {
            plane,
            outer_dart,
            level,
            depth,
            components,
            component_of,
            local,
        };
        le.locate_components()?;
        Ok(le)
    }

    /// The dart of component `c`'s plane graph matching a full dart.
    pub fn local_dart(&self, c: usize, full: Dart) -> Option<Dart> {
        let d = *self.local.get(full)?;
        (d != NO_DART && self.component_of[self.plane.tail(full) as usize] == c).then_some(d)
    }

    /// The first dart of component `c` met when turning clockwise from the
    /// full dart `d` around its tail, as a dart of the component's plane.
    pub fn sector_dart(&self, c: usize, d: Dart) -> Option<Dart> {
        let mut x = self.plane.prev(d);
        while x != d {
            let w = self.plane.head(x);
            if self.component_of[w as usize] == c && self.component_of[self.plane.tail(x) as usize] == c {
                return self.local_dart(c, x);
            }
            x = self.plane.prev(x);
        }
        None
    }

    fn locate_components(&mut self) -> Result<()> {
        for c in 0..self.components.len() {
            if self.components[c].vertices.len() == 1 && self.components[c].level == 1 {
                continue;
            }
            let lv = self.components[c].level;
            if lv == 1 {
                let local = self
                    .local_dart(c, self.outer_dart)
                    .ok_or(Error::EmbeddingInconsistent("outer face is not on level 1"))?;
                self.components[c].outer_dart = Some(local);
                continue;
            }
            // A dart from the component to the level below.
            let link = self.components[c]
                .vertices
                .iter()
                .flat_map(|&u| self.plane.darts_around(u))
                .find(|&d| self.level[self.plane.head(d) as usize] == lv - 1)
                .ok_or(Error::EmbeddingInconsistent("component has no neighbour one level out"))?;
            if self.components[c].vertices.len() > 1 {
                let outer = self
                    .sector_dart(c, link)
                    .ok_or(Error::EmbeddingInconsistent("no component dart around vertex"))?;
                self.components[c].outer_dart = Some(outer);
            }
            let w = self.plane.head(link);
            let parent = self.component_of[w as usize];
            let enclosing = self
                .sector_dart(parent, twin(link))
                .ok_or(Error::EmbeddingInconsistent("enclosing component is a single vertex"))?;
            self.components[c].enclosing = Some((parent, enclosing));
        }
        Ok(())
    }

    /// Components on `level`.
    pub fn components_on(&self, level: u32) -> impl Iterator<Item = usize> + '_ {
        (0..self.components.len()).filter(move |&c| self.components[c].level == level)
    }
}

/// Which side advances first while zipping two level arcs together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZipOrder {
    #[default]
    OuterFirst,
    InnerFirst,
}

/// Splits every face that spans two levels into triangles using fake edges
/// between the two levels. Returns the number of edges added.
pub fn triangulate(le: &mut LeveledEmbedding, order: ZipOrder) -> Result<usize> {
    let plane = &mut le.plane;
    let level = &le.level;
    let (face, nf) = plane.faces();
    let mut rep = vec![usize::MAX; nf];
    for d in 0..plane.dart_count() {
        if rep[face[d]] == usize::MAX {
            rep[face[d]] = d;
        }
    }
    let mut added = 0;
    for &start in &rep {
        let walk = plane.face_darts(start);
        let lv: Vec<u32> = walk.iter().map(|&d| level[plane.tail(d) as usize]).collect();
        let lo = *lv.iter().min().unwrap();
        let hi = *lv.iter().max().unwrap();
        if lo == hi {
            continue;
        }
        if hi != lo + 1 {
            return Err(Error::EmbeddingInconsistent("face spans non-consecutive levels"));
        }
        let len = walk.len();
        let switches = (0..len).filter(|&i| (lv[i] == lo) != (lv[(i + 1) % len] == lo)).count();
        if switches != 2 {
            return Err(Error::EmbeddingInconsistent("face alternates between levels"));
        }
        // Rotate so the walk starts with the outer arc.
        let s0 = (0..len)
            .find(|&i| lv[i] == lo && lv[(i + len - 1) % len] == hi)
            .unwrap();
        let walk: Vec<Dart> = (0..len).map(|i| walk[(s0 + i) % len]).collect();
        let p_len = walk
            .iter()
            .take_while(|&&d| level[plane.tail(d) as usize] == lo)
            .count();
        let dp: Vec<Dart> = walk[..p_len].to_vec();
        let dq: Vec<Dart> = walk[p_len..].to_vec();
        let (s, t) = (dp.len() - 1, dq.len() - 1);
        let p = |a: usize, pl: &PlaneGraph| pl.tail(dp[a]);
        let q = |b: usize, pl: &PlaneGraph| pl.tail(dq[b]);
        // Rung (a, b) joins p_a and q_b. A zip is a monotone path of rungs
        // from (s, 0) to (0, t); cells whose rung already exists are avoided
        // when some path allows it.
        let corner = |a: usize, b: usize| (a, b) == (s, 0) || (a, b) == (0, t);
        let free = |a: usize, b: usize, pl: &PlaneGraph| corner(a, b) || !pl.has_edge(p(a, pl), q(b, pl));
        let mut reach = vec![vec![false; t + 1]; s + 1];
        for a in 0..=s {
            for b in (0..=t).rev() {
                reach[a][b] = (a, b) == (0, t)
                    || (free(a, b, plane) && ((a > 0 && reach[a - 1][b]) || (b < t && reach[a][b + 1])));
            }
        }
        let avoid = reach[s][0];
        let (mut a, mut b) = (s, 0usize);
        let mut rung = dp[s];
        while (a, b) != (0, t) {
            let (can_p, can_q) = if avoid {
                (a > 0 && reach[a - 1][b], b < t && reach[a][b + 1])
            } else {
                // No zip avoids every existing edge: parallel fake edges.
                (a > 0, b < t)
            };
            let take_p = match (can_p, can_q) {
                (true, true) => order == ZipOrder::OuterFirst,
                (p, _) => p,
            };
            if take_p {
                a -= 1;
                if (a, b) != (0, t) {
                    let e = plane.insert_edge(p(a, plane), dp[a], q(b, plane), dq[b], EdgeKind::Fake);
                    rung = 2 * e;
                    added += 1;
                }
            } else {
                b += 1;
                if (a, b) != (0, t) {
                    let e = plane.insert_edge(p(a, plane), rung, q(b, plane), dq[b], EdgeKind::Fake);
                    rung = 2 * e;
                    added += 1;
                }
            }
        }
    }
    Ok(added)
}
