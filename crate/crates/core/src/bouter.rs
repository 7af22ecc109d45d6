//! Dynamic program over slices of a leveled, triangulated plane graph.
//!
//! A [`BoundaryTable`] describes one slice. Its rows are indexed by subsets
//! of the distinct boundary vertices; the cell for subset `A` and budget `k'`
//! is the largest number of real edges induced by a `k'`-vertex subset of the
//! slice whose intersection with the boundary is exactly `A`. Each table
//! also remembers the real edges of its slice between boundary vertices, so
//! that an edge two slices have in common is subtracted once when they are
//! merged and an edge is never added twice.

use alloc::vec;
use alloc::vec::Vec;

use crate::convolve::combine;
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, Vertex};
use crate::levels::{triangulate, LeveledEmbedding, ZipOrder};
use crate::plane::{Dart, PlaneGraph};
use crate::slices::{NodeRef, SliceForest};
use crate::tree::NodeKind;
use crate::value::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryTable {
    /// Boundaries, innermost vertex first.
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
    /// Distinct boundary vertices; bit `i` of a row index is `verts[i]`.
    pub verts: Vec<Vertex>,
    /// Vertex count of the slice.
    pub size: usize,
    /// Columns per row, `min(k, size) + 1`.
    pub cols: usize,
    /// Row-major cells.
    pub cells: Vec<Value>,
    /// Real edges of the slice between boundary vertices, `(min, max)`,
    /// sorted.
    pub edges: Vec<(Vertex, Vertex)>,
}

fn norm(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

fn distinct(left: &[Vertex], right: &[Vertex]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = Vec::with_capacity(left.len() + right.len());
    for &v in left.iter().chain(right) {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

fn position(verts: &[Vertex], v: Vertex) -> usize {
    verts.iter().position(|&w| w == v).expect("boundary vertex")
}

/// Bits of `verts` set in `mask`, moved to their positions in `to`.
fn project(mask: usize, from: &[Vertex], to_pos: &[Option<usize>]) -> usize {
    let mut out = 0;
    for (i, p) in to_pos.iter().enumerate().take(from.len()) {
        if mask >> i & 1 == 1 {
            if let Some(p) = p {
                out |= 1 << p;
            }
        }
    }
    out
}

impl BoundaryTable {
    pub fn rows(&self) -> usize {
        1 << self.verts.len()
    }

    pub fn row(&self, mask: usize) -> &[Value] {
        &self.cells[mask * self.cols..(mask + 1) * self.cols]
    }

    pub fn get(&self, mask: usize, k: usize) -> Value {
        if k < self.cols {
            self.cells[mask * self.cols + k]
        } else {
            Value::ABSENT
        }
    }

    /// Row index of a vertex subset; every vertex must be on the boundary.
    pub fn mask_of(&self, subset: &[Vertex]) -> usize {
        subset.iter().fold(0, |m, &v| m | 1 << position(&self.verts, v))
    }

    /// Best value per column over all rows.
    pub fn column_max(&self) -> Vec<Value> {
        let mut out = vec![Value::ABSENT; self.cols];
        for mask in 0..self.rows() {
            for (o, &c) in out.iter_mut().zip(self.row(mask)) {
                *o = o.max(c);
            }
        }
        out
    }

    /// Table of an explicit small vertex set, by enumerating its subsets.
    pub fn brute(
        left: Vec<Vertex>,
        right: Vec<Vertex>,
        vertices: &[Vertex],
        edges: &[(Vertex, Vertex)],
        k: usize,
    ) -> Self {
        let verts = distinct(&left, &right);
        let mut all = verts.clone();
        for &v in vertices {
            if !all.contains(&v) {
                all.push(v);
            }
        }
        let mut es: Vec<(Vertex, Vertex)> = edges.iter().map(|&(u, v)| norm(u, v)).collect();
        es.sort_unstable();
        es.dedup();
        let pairs: Vec<(usize, usize)> = es
            .iter()
            .map(|&(u, v)| (position(&all, u), position(&all, v)))
            .collect();
        let size = all.len();
        let cols = k.min(size) + 1;
        let bmask = (1usize << verts.len()) - 1;
        let mut cells = vec![Value::ABSENT; (1 << verts.len()) * cols];
        for mask in 0..1usize << size {
            let kk = mask.count_ones() as usize;
            if kk >= cols {
                continue;
            }
            let e = pairs
                .iter()
                .filter(|&&(a, b)| mask >> a & 1 == 1 && mask >> b & 1 == 1)
                .count();
            let cell = &mut cells[(mask & bmask) * cols + kk];
            *cell = cell.max(Value::new(e as u32));
        }
        let edges = es
            .into_iter()
            .filter(|&(u, v)| verts.contains(&u) && verts.contains(&v))
            .collect();
        BoundaryTable {
            left,
            right,
            verts,
            size,
            cols,
            cells,
            edges,
        }
    }

    /// Table of a single edge `(x, y)` on the outer level.
    pub fn leaf(x: Vertex, y: Vertex, real: bool, k: usize) -> Self {
        let edges: &[(Vertex, Vertex)] = if real { &[(x, y)] } else { &[] };
        Self::brute(vec![x], vec![y], &[x, y], edges, k)
    }

    /// Table of a lone vertex.
    pub fn vertex(v: Vertex, k: usize) -> Self {
        Self::brute(vec![v], vec![v], &[v], &[], k)
    }

    /// Adds the edge between the innermost boundary vertices if it is real
    /// and not yet counted.
    pub fn adjust(mut self, plane: &PlaneGraph) -> Self {
        let (x, y) = (self.left[0], self.right[0]);
        if x == y || !plane.has_real_edge(x, y) {
            return self;
        }
        let e = norm(x, y);
        if let Err(at) = self.edges.binary_search(&e) {
            self.edges.insert(at, e);
            let both = 1 << position(&self.verts, x) | 1 << position(&self.verts, y);
            for mask in 0..self.rows() {
                if mask & both == both {
                    for c in &mut self.cells[mask * self.cols..(mask + 1) * self.cols] {
                        *c = c.offset(1);
                    }
                }
            }
        }
        self
    }

    /// Joins two slices whose boundaries meet: the right boundary of `a` must
    /// be the left boundary of `b`. Boundary vertices the two slices share
    /// are counted once, and so is every edge both slices contain.
    pub fn merge(a: &Self, b: &Self, k: usize) -> Result<Self> {
        if a.right != b.left {
            return Err(Error::BoundaryMismatch);
        }
        let mut union = a.verts.clone();
        for &v in &b.verts {
            if !union.contains(&v) {
                union.push(v);
            }
        }
        let in_a: Vec<Option<usize>> = union.iter().map(|&v| a.verts.iter().position(|&w| w == v)).collect();
        let in_b: Vec<Option<usize>> = union.iter().map(|&v| b.verts.iter().position(|&w| w == v)).collect();
        let shared: usize = (0..union.len())
            .filter(|&i| in_a[i].is_some() && in_b[i].is_some())
            .fold(0, |m, i| m | 1 << i);
        let common: Vec<usize> = a
            .edges
            .iter()
            .filter(|e| b.edges.binary_search(e).is_ok())
            .map(|&(u, v)| 1 << position(&union, u) | 1 << position(&union, v))
            .collect();
        let left = a.left.clone();
        let right = b.right.clone();
        let verts = distinct(&left, &right);
        let out_pos: Vec<Option<usize>> = union.iter().map(|&v| verts.iter().position(|&w| w == v)).collect();
        let size = a.size + b.size - shared.count_ones() as usize;
        let cols = k.min(size) + 1;
        let mut cells = vec![Value::ABSENT; (1 << verts.len()) * cols];
        // Positions in `union` of each table's own bits.
        let a_bits: Vec<Option<usize>> = (0..union.len()).map(|i| in_a[i]).collect();
        let b_bits: Vec<Option<usize>> = (0..union.len()).map(|i| in_b[i]).collect();
        for x in 0..1usize << union.len() {
            let ma = project(x, &union, &a_bits);
            let mb = project(x, &union, &b_bits);
            let sh = (x & shared).count_ones() as usize;
            let sub = common.iter().filter(|&&m| x & m == m).count() as i64;
            let out = project(x, &union, &out_pos) * cols;
            let (ra, rb) = (a.row(ma), b.row(mb));
            for (k1, &va) in ra.iter().enumerate() {
                if va.is_absent() {
                    continue;
                }
                for (k2, &vb) in rb.iter().enumerate() {
                    if vb.is_absent() || k1 + k2 - sh >= cols {
                        continue;
                    }
                    let cell = &mut cells[out + k1 + k2 - sh];
                    *cell = cell.max((va + vb).offset(-sub));
                }
            }
        }
        let mut edges: Vec<(Vertex, Vertex)> = a
            .edges
            .iter()
            .chain(&b.edges)
            .copied()
            .filter(|&(u, v)| verts.contains(&u) && verts.contains(&v))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Ok(BoundaryTable {
            left,
            right,
            verts,
            size,
            cols,
            cells,
            edges,
        })
    }

    /// Drops the shared innermost vertex of both boundaries, keeping the
    /// better of leaving it out or taking it.
    pub fn contract(&self) -> Result<Self> {
        let z = self.left[0];
        if self.right[0] != z {
            return Err(Error::BoundaryMismatch);
        }
        let left = self.left[1..].to_vec();
        let right = self.right[1..].to_vec();
        let verts = distinct(&left, &right);
        if verts.contains(&z) {
            return Err(Error::BoundaryMismatch);
        }
        let zbit = 1 << position(&self.verts, z);
        let pos: Vec<Option<usize>> = self.verts.iter().map(|&v| verts.iter().position(|&w| w == v)).collect();
        let cols = self.cols;
        let mut cells = vec![Value::ABSENT; (1 << verts.len()) * cols];
        for mask in 0..self.rows() {
            let out = project(mask & !zbit, &self.verts, &pos) * cols;
            for (c, &v) in cells[out..out + cols].iter_mut().zip(self.row(mask)) {
                *c = c.max(v);
            }
        }
        let edges = self.edges.iter().copied().filter(|&(u, v)| u != z && v != z).collect();
        Ok(BoundaryTable {
            left,
            right,
            verts,
            size: self.size,
            cols,
            cells,
            edges,
        })
    }

    /// Adds a new vertex `z` in front of both boundaries, with its real edges
    /// to the boundary.
    pub fn extend(&self, z: Vertex, plane: &PlaneGraph, k: usize) -> Self {
        let mut left = vec![z];
        left.extend_from_slice(&self.left);
        let mut right = vec![z];
        right.extend_from_slice(&self.right);
        let mut verts = vec![z];
        verts.extend_from_slice(&self.verts);
        let adj: Vec<bool> = self.verts.iter().map(|&v| plane.has_real_edge(z, v)).collect();
        let size = self.size + 1;
        let cols = k.min(size) + 1;
        let mut cells = vec![Value::ABSENT; (1 << verts.len()) * cols];
        for mask in 0..self.rows() {
            let m = (0..self.verts.len()).filter(|&i| mask >> i & 1 == 1 && adj[i]).count() as i64;
            let row = self.row(mask);
            let without = (mask << 1) * cols;
            let with = ((mask << 1) | 1) * cols;
            for (kk, &v) in row.iter().enumerate() {
                cells[without + kk] = v;
                if kk + 1 < cols {
                    cells[with + kk + 1] = v.offset(m);
                }
            }
        }
        let mut edges = self.edges.clone();
        for (i, &v) in self.verts.iter().enumerate() {
            if adj[i] {
                edges.push(norm(z, v));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        BoundaryTable {
            left,
            right,
            verts,
            size,
            cols,
            cells,
            edges,
        }
    }
}

/// Which rule produced a node's table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Children merged left to right, then the node's own edge.
    Fold,
    /// The enclosed component's root table with its root vertex removed.
    Enclosing,
    /// An edge on the outermost level.
    OuterLeaf,
    /// A leaf on an inner level, built around the pivot child.
    InnerLeaf { pivot: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub node: NodeRef,
    pub label: (Vertex, Vertex),
    pub branch: Branch,
}

#[derive(Debug, Clone, Default)]
pub struct BouterOptions {
    /// Outer walk position of the level-1 root.
    pub root: Option<usize>,
    /// Zipper order of the triangulation.
    pub order: ZipOrder,
    /// Keep every node's table.
    pub dump: bool,
    /// Record the branch taken at every node.
    pub trace: bool,
}

#[derive(Debug, Clone)]
pub struct ForestSolution {
    /// Best edge count for `k' = 0..=min(k, n)`.
    pub values: Vec<Value>,
    pub root_table: BoundaryTable,
    /// Number of table computations; one per tree node.
    pub calls: usize,
    pub trace: Vec<TraceEntry>,
    pub tables: Vec<(NodeRef, BoundaryTable)>,
    /// Table cells allocated over the whole run.
    pub cells: usize,
}

fn dependencies(f: &SliceForest, at: NodeRef) -> Vec<NodeRef> {
    let node = &f.trees[at.comp].nodes[at.node];
    if node.is_leaf() {
        if f.level(at.comp) == 1 {
            return Vec::new();
        }
        let info = f.info(at);
        let ch = f.enclosing_children(at.comp);
        return (info.lbn..info.rbn).map(|j| ch[j as usize - 1]).collect();
    }
    match f.enclosed[at.comp][at.node] {
        Some(c) => vec![f.root(c)],
        None => node
            .children
            .iter()
            .map(|&node| NodeRef { comp: at.comp, node })
            .collect(),
    }
}

/// Runs the table recursion over an annotated forest, bottom-up and without
/// recursion, computing each node's table exactly once.
pub fn solve_forest(f: &SliceForest, k: usize, opts: &BouterOptions) -> Result<ForestSolution> {
    let plane = &f.le.plane;
    let mut memo: Vec<Vec<Option<BoundaryTable>>> = f.trees.iter().map(|t| vec![None; t.len()]).collect();
    let mut calls = 0usize;
    let mut cells = 0usize;
    let mut trace = Vec::new();
    let mut tables = Vec::new();
    let root = f.root(f.top);
    let mut stack = vec![(root, false)];
    while let Some((at, ready)) = stack.pop() {
        let deps = dependencies(f, at);
        if !ready {
            stack.push((at, true));
            for &d in deps.iter().rev() {
                stack.push((d, false));
            }
            continue;
        }
        let mut take = |r: NodeRef| memo[r.comp][r.node].take().expect("table computed once");
        let node = &f.trees[at.comp].nodes[at.node];
        let (x, y) = (node.x, node.y);
        let (table, branch) = if !node.is_leaf() {
            match f.enclosed[at.comp][at.node] {
                Some(_) => (take(deps[0]).contract()?.adjust(plane), Branch::Enclosing),
                None => {
                    let mut t = take(deps[0]);
                    for &d in &deps[1..] {
                        t = BoundaryTable::merge(&t, &take(d), k)?;
                    }
                    (t.adjust(plane), Branch::Fold)
                }
            }
        } else if f.level(at.comp) == 1 {
            let t = if node.kind == NodeKind::Single {
                BoundaryTable::vertex(x, k)
            } else {
                BoundaryTable::leaf(x, y, plane.has_real_edge(x, y), k)
            };
            (t, Branch::OuterLeaf)
        } else {
            let info = f.info(at);
            let pivot = info.pivot;
            let b = f.boundary_at(at.comp, pivot);
            let mut left = vec![x];
            left.extend_from_slice(&b);
            let mut right = vec![y];
            right.extend_from_slice(&b);
            let mut vs = vec![x, y];
            vs.extend_from_slice(&b);
            let mut es: Vec<(Vertex, Vertex)> = Vec::new();
            let mut add = |u: Vertex, v: Vertex| {
                if u != v && plane.has_real_edge(u, v) {
                    es.push((u, v));
                }
            };
            add(x, y);
            add(x, b[0]);
            add(y, b[0]);
            for w in b.windows(2) {
                add(w[0], w[1]);
            }
            let mut t = BoundaryTable::brute(left, right, &vs, &es, k);
            let mut dep = deps.iter();
            let before: Vec<NodeRef> = dep.by_ref().take((pivot - info.lbn) as usize).copied().collect();
            for &d in before.iter().rev() {
                let ext = take(d).extend(x, plane, k);
                t = BoundaryTable::merge(&ext, &t, k)?;
            }
            for &d in dep {
                let ext = take(d).extend(y, plane, k);
                t = BoundaryTable::merge(&t, &ext, k)?;
            }
            (t, Branch::InnerLeaf { pivot })
        };
        let info = f.info(at);
        if table.left != info.left || table.right != info.right {
            return Err(Error::BoundaryMismatch);
        }
        calls += 1;
        cells += table.cells.len();
        if opts.trace {
            trace.push(TraceEntry {
                node: at,
                label: (x, y),
                branch,
            });
        }
        if opts.dump {
            tables.push((at, table.clone()));
        }
        memo[at.comp][at.node] = Some(table);
    }
    let root_table = memo[root.comp][root.node].take().expect("root table");
    Ok(ForestSolution {
        values: root_table.column_max(),
        root_table,
        calls,
        trace,
        tables,
        cells,
    })
}

/// Levels, triangulates and solves a connected plane graph whose outer face
/// is left of `outer_dart`.
pub fn solve_plane(plane: &PlaneGraph, outer_dart: Dart, k: usize, opts: &BouterOptions) -> Result<ForestSolution> {
    let forest = build_forest(plane, outer_dart, opts)?;
    solve_forest(&forest, k, opts)
}

/// The annotated forest [`solve_plane`] works on.
pub fn build_forest(plane: &PlaneGraph, outer_dart: Dart, opts: &BouterOptions) -> Result<SliceForest> {
    let mut le = LeveledEmbedding::new(plane, outer_dart)?;
    triangulate(&mut le, opts.order)?;
    SliceForest::new(le, opts.root)
}

#[derive(Debug, Clone)]
pub struct BouterSolution {
    /// Best edge count for every `k' = 0..=k`.
    pub values: Vec<u32>,
    /// Number of levels of the deepest component.
    pub depth: u32,
    /// Per component, the input vertex behind each local vertex.
    pub components: Vec<(Vec<Vertex>, ForestSolution)>,
    pub cells: usize,
}

/// Solves every connected component of a plane graph given by its rotation
/// system. `outer` picks the outer face of each component from the
/// component's plane graph and the input vertex behind each of its vertices.
pub fn solve_bouterplanar(
    g: &Graph,
    rotation: &[Vec<Vertex>],
    outer: &dyn Fn(&PlaneGraph, &[Vertex]) -> Result<Dart>,
    k: usize,
    opts: &BouterOptions,
) -> Result<BouterSolution> {
    if k > g.n() {
        return Err(Error::KTooLarge { k, n: g.n() });
    }
    let mut vectors = Vec::new();
    let mut components = Vec::new();
    let mut depth = 0;
    let mut cells = 0;
    let mut local = vec![Vertex::MAX; g.n()];
    for comp in connected_components(g) {
        let vs = comp.to_vec();
        let (sub, map) = g.induced_subgraph(&vs);
        for (i, &v) in map.iter().enumerate() {
            local[v as usize] = i as Vertex;
        }
        let rot: Vec<Vec<Vertex>> = map
            .iter()
            .map(|&v| rotation[v as usize].iter().map(|&w| local[w as usize]).collect())
            .collect();
        let sol = if sub.n() == 1 {
            single_vertex(k)
        } else {
            let plane = PlaneGraph::from_rotation(&sub, &rot)?;
            let d = outer(&plane, &map)?;
            let le_depth;
            let sol = {
                let forest = build_forest(&plane, d, opts)?;
                le_depth = forest.le.depth;
                solve_forest(&forest, k, opts)?
            };
            depth = depth.max(le_depth);
            sol
        };
        depth = depth.max(1);
        cells += sol.cells;
        vectors.push(sol.values.clone());
        components.push((map, sol));
    }
    let values = combine(&vectors, k).into_iter().map(|v| v.get().unwrap_or(0)).collect();
    Ok(BouterSolution {
        values,
        depth,
        components,
        cells,
    })
}

fn single_vertex(k: usize) -> ForestSolution {
    let t = BoundaryTable::vertex(0, k);
    ForestSolution {
        values: t.column_max(),
        cells: t.cells.len(),
        root_table: t,
        calls: 1,
        trace: Vec::new(),
        tables: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_force_all, brute_force_slice_table, DEFAULT_CAP};

    fn solve_rot(edges: &[(u32, u32)], rot: Vec<Vec<u32>>, outer: (u32, u32)) -> (Graph, Vec<u32>) {
        let n = rot.len();
        let g = Graph::from_edges(n, edges).unwrap();
        let pick = move |p: &PlaneGraph, _: &[u32]| Ok(p.find_dart(outer.0, outer.1).unwrap());
        let sol = solve_bouterplanar(&g, &rot, &pick, n, &BouterOptions::default()).unwrap();
        (g, sol.values)
    }

    fn wheel() -> (Vec<(u32, u32)>, Vec<Vec<u32>>) {
        let mut edges: Vec<(u32, u32)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        let rot = (0..5)
            .map(|i| vec![(i + 1) % 5, 5, (i + 4) % 5])
            .chain(core::iter::once(vec![0, 1, 2, 3, 4]))
            .collect();
        (edges, rot)
    }

    #[test]
    fn wheel_matches_oracle() {
        let (edges, rot) = wheel();
        let (g, values) = solve_rot(&edges, rot, (1, 0));
        assert_eq!(values, brute_force_all(&g, DEFAULT_CAP).unwrap().values);
        assert_eq!(values[6], 10);
    }

    #[test]
    fn wheel_tables_match_slices() {
        let (edges, rot) = wheel();
        let g = Graph::from_edges(6, &edges).unwrap();
        let plane = PlaneGraph::from_rotation(&g, &rot).unwrap();
        let opts = BouterOptions {
            dump: true,
            ..Default::default()
        };
        let f = build_forest(&plane, plane.find_dart(1, 0).unwrap(), &opts).unwrap();
        let sol = solve_forest(&f, 6, &opts).unwrap();
        assert_eq!(sol.calls, f.trees.iter().map(|t| t.len()).sum::<usize>());
        for (at, t) in &sol.tables {
            let s = f.materialize_slice(*at);
            let oracle = brute_force_slice_table(&s.vertices, &s.edges, &t.verts, 6, DEFAULT_CAP).unwrap();
            let rows: Vec<Vec<Value>> = (0..t.rows()).map(|m| t.row(m).to_vec()).collect();
            assert_eq!(rows, oracle, "node {:?}", at);
        }
    }
}
