//! Undirected simple graphs, vertex sets and the basic decompositions every
//! solver needs.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Vertex ids are dense `0..n`.
pub type Vertex = u32;

/// Tag carried by every edge. Only [`EdgeKind::Real`] edges are ever counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Real,
    /// Helper edge added while triangulating or connecting level components.
    Fake,
    /// Second copy of a bridge so the bridge can be treated as a face.
    BridgeDouble,
}

impl EdgeKind {
    pub fn is_real(self) -> bool {
        self == EdgeKind::Real
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub kind: EdgeKind,
}

impl Edge {
    pub fn other(&self, w: Vertex) -> Vertex {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// An undirected graph with optional vertex names.
///
/// At most one real edge joins a pair; a [`EdgeKind::BridgeDouble`] copy may sit
/// next to it. Fake edges are free to duplicate nothing real.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    /// Sorted real neighbours per vertex.
    real_adj: Vec<Vec<Vertex>>,
    /// Incident edge ids per vertex, all kinds.
    incident: Vec<Vec<usize>>,
    names: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            real_adj: vec![Vec::new(); n],
            incident: vec![Vec::new(); n],
            names: None,
        }
    }

    /// Builds a graph from real edges, rejecting loops and duplicates.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        debug_assert_eq!(names.len(), self.n);
        self.names = Some(names);
        self
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, v: Vertex) -> String {
        match &self.names {
            Some(names) => names[v as usize].clone(),
            None => alloc::format!("{v}"),
        }
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<Vertex> {
        self.names.as_ref()?.iter().position(|s| s == name).map(|i| i as Vertex)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    pub fn real_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().filter(|e| e.kind.is_real()).map(|e| (e.u, e.v))
    }

    pub fn real_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.kind.is_real()).count()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.real_adj[v as usize]
    }

    pub fn incident(&self, v: Vertex) -> &[usize] {
        &self.incident[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.real_adj[v as usize].len()
    }

    pub fn has_real_edge(&self, u: Vertex, v: Vertex) -> bool {
        if u as usize >= self.n || v as usize >= self.n {
            return false;
        }
        self.real_adj[u as usize].binary_search(&v).is_ok()
    }

    /// Adds a real edge.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<usize> {
        self.add_edge_kind(u, v, EdgeKind::Real)
    }

    pub fn add_edge_kind(&mut self, u: Vertex, v: Vertex, kind: EdgeKind) -> Result<usize> {
        if u as usize >= self.n || v as usize >= self.n {
            return Err(Error::InvalidGraph("edge endpoint out of range"));
        }
        if u == v {
            return Err(Error::InvalidGraph("self-loop"));
        }
        match kind {
            EdgeKind::Real => {
                if self.has_real_edge(u, v) {
                    return Err(Error::InvalidGraph("duplicate edge"));
                }
                for (a, b) in [(u, v), (v, u)] {
                    let adj = &mut self.real_adj[a as usize];
                    let pos = adj.binary_search(&b).unwrap_err();
                    adj.insert(pos, b);
                }
            }
            EdgeKind::BridgeDouble => {
                let doubled = self.incident[u as usize].iter().any(|&id| {
                    let e = self.edges[id];
                    e.kind == EdgeKind::BridgeDouble && e.other(u) == v
                });
                if doubled {
                    return Err(Error::InvalidGraph("bridge already doubled"));
                }
            }
            EdgeKind::Fake => {}
        }
        let id = self.edges.len();
        self.edges.push(Edge { u, v, kind });
        self.incident[u as usize].push(id);
        self.incident[v as usize].push(id);
        Ok(id)
    }

    /// Subgraph induced by `vs` (real edges only), with the mapping from new
    /// ids back to the original ones.
    pub fn induced_subgraph(&self, vs: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut local = vec![u32::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            local[v as usize] = i as u32;
        }
        let mut g = Graph::new(vs.len());
        for (u, v) in self.real_edges() {
            let (a, b) = (local[u as usize], local[v as usize]);
            if a != u32::MAX && b != u32::MAX {
                g.add_edge(a, b).expect("induced subgraph of a simple graph");
            }
        }
        if let Some(names) = &self.names {
            g.names = Some(vs.iter().map(|&v| names[v as usize].clone()).collect());
        }
        (g, vs.to_vec())
    }
}

/// A subset of `0..n` stored as a bitset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet::new(n);
        for v in 0..n {
            s.insert(v as Vertex);
        }
        s
    }

    pub fn from_vertices(n: usize, vs: impl IntoIterator<Item = Vertex>) -> Self {
        let mut s = VertexSet::new(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: Vertex) {
        self.words[v as usize / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: Vertex) {
        self.words[v as usize / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (v as usize) < self.n && self.words[v as usize / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n as Vertex).filter(move |&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

/// Number of real edges with both ends in `s`.
pub fn induced_edge_count(g: &Graph, s: &VertexSet) -> usize {
    g.real_edges().filter(|&(u, v)| s.contains(u) && s.contains(v)).count()
}

/// Partition of the vertices into maximal sets connected by real edges,
/// ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut set = VertexSet::new(n);
        comp[s] = id;
        stack.push(s as Vertex);
        while let Some(v) = stack.pop() {
            set.insert(v);
            for &w in g.neighbors(v) {
                if comp[w as usize] == usize::MAX {
                    comp[w as usize] = id;
                    stack.push(w);
                }
            }
        }
        out.push(set);
    }
    out
}

/// Bridges, cutpoints and biconnected blocks (as lists of real edge ids).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub bridges: Vec<(Vertex, Vertex)>,
    pub cutpoints: Vec<Vertex>,
    pub blocks: Vec<Vec<usize>>,
}

/// Lowpoint decomposition over real edges. Works per connected component, so
/// a disconnected graph is fine as well.
pub fn bridges_and_cutpoints(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut is_cut = vec![false; n];
    let mut out = BlockDecomposition::default();
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut time = 0u32;
    // (vertex, parent edge, next incident index)
    let mut stack: Vec<(Vertex, usize, usize)> = Vec::new();

    for root in 0..n as Vertex {
        if disc[root as usize] != u32::MAX {
            continue;
        }
        disc[root as usize] = time;
        low[root as usize] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (v, pe, ref mut idx)) = stack.last_mut() {
            let inc = g.incident(v);
            if *idx < inc.len() {
                let eid = inc[*idx];
                *idx += 1;
                let e = g.edge(eid);
                if !e.kind.is_real() || eid == pe {
                    continue;
                }
                let w = e.other(v);
                if disc[w as usize] == u32::MAX {
                    disc[w as usize] = time;
                    low[w as usize] = time;
                    time += 1;
                    edge_stack.push(eid);
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, eid, 0));
                } else if disc[w as usize] < disc[v as usize] {
                    edge_stack.push(eid);
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p as usize] = low[p as usize].min(low[v as usize]);
                    if low[v as usize] >= disc[p as usize] {
                        if p != root {
                            is_cut[p as usize] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(id) = edge_stack.pop() {
                            block.push(id);
                            if id == pe {
                                break;
                            }
                        }
                        if low[v as usize] > disc[p as usize] {
                            let e = g.edge(pe);
                            out.bridges.push((e.u.min(e.v), e.u.max(e.v)));
                        }
                        block.sort_unstable();
                        out.blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root as usize] = true;
        }
    }
    out.cutpoints = (0..n as Vertex).filter(|&v| is_cut[v as usize]).collect();
    out.bridges.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn induced_count_basics() {
        let g = triangle();
        assert_eq!(induced_edge_count(&g, &VertexSet::full(3)), 3);
        assert_eq!(induced_edge_count(&g, &VertexSet::new(3)), 0);
    }

    #[test]
    fn fake_edges_are_not_counted() {
        let mut g = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        g.add_edge_kind(0, 2, EdgeKind::Fake).unwrap();
        g.add_edge_kind(0, 1, EdgeKind::BridgeDouble).unwrap();
        assert_eq!(induced_edge_count(&g, &VertexSet::full(4)), 2);
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        let mut g = triangle();
        assert!(g.add_edge(0, 0).is_err());
        assert!(g.add_edge(1, 0).is_err());
        assert!(g.add_edge_kind(0, 1, EdgeKind::BridgeDouble).is_ok());
        assert!(g.add_edge_kind(1, 0, EdgeKind::BridgeDouble).is_err());
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(connected_components(&g).len(), 1);
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let cs = connected_components(&g);
        assert_eq!(cs.len(), 2);
        assert!(cs.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn path_and_cycle_blocks() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let d = bridges_and_cutpoints(&p3);
        assert_eq!(d.bridges, vec![(0, 1), (1, 2)]);
        assert_eq!(d.cutpoints, vec![1]);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let d = bridges_and_cutpoints(&c5);
        assert!(d.bridges.is_empty() && d.cutpoints.is_empty());
        assert_eq!(d.blocks.len(), 1);
    }

    #[test]
    fn bowtie_has_one_cutpoint() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let d = bridges_and_cutpoints(&g);
        assert_eq!(d.cutpoints, vec![2]);
        assert_eq!(d.blocks.len(), 2);
        assert!(d.bridges.is_empty());
    }
}
