//! Edge-table dynamic program for outerplanar graphs.
//!
//! Every tree node `(x, y)` gets a table indexed by whether `x` and `y` are
//! chosen and by the exact number of chosen vertices; a cell holds the most
//! real edges such a choice induces inside the node's subtree. Children are
//! folded left to right with [`merge`], so a whole component costs
//! `O(n k^2)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::convolve;
use crate::embedding::recognize_outerplanar;
use crate::error::{Error, Result};
use crate::graph::{connected_components, EdgeKind, Graph, Vertex, VertexSet};
use crate::plane::{Dart, PlaneGraph};
use crate::tree::{ComponentTree, NodeKind};
use crate::value::Value;

/// Which condition triggers the extra budget for a vertex shared by both
/// ends of a merge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MergeVariant {
    /// `x == z` with both `x` and `z` chosen.
    #[default]
    Prose,
    /// `x == z` with both `x` and the middle vertex `y` chosen.
    Pseudocode,
}

/// Row index for the inclusion bits of the two endpoints.
#[inline]
pub fn row(bx: bool, by: bool) -> usize {
    (bx as usize) << 1 | by as usize
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeTable {
    pub x: Vertex,
    pub y: Vertex,
    /// Vertices in the subtree's subgraph.
    pub size: usize,
    /// Rows `00, 01, 10, 11`; columns `0..=min(k, size)`.
    pub cells: [Vec<Value>; 4],
    /// Whether cells with both ends chosen count the edge `(x, y)`.
    pub counts_end_edge: bool,
}

impl EdgeTable {
    pub fn get(&self, bx: bool, by: bool, k: usize) -> Value {
        self.cells[row(bx, by)].get(k).copied().unwrap_or(Value::ABSENT)
    }

    pub fn columns(&self) -> usize {
        self.cells[0].len()
    }

    /// Best value per column over all rows.
    pub fn column_max(&self) -> Vec<Value> {
        (0..self.columns())
            .map(|k| self.cells.iter().fold(Value::ABSENT, |m, r| m.max(r[k])))
            .collect()
    }
}

/// Table of a one-edge subtree. A bridge copy counts nothing.
pub fn leaf_table(x: Vertex, y: Vertex, kind: EdgeKind, k: usize) -> EdgeTable {
    let a = Value::ABSENT;
    let z = Value::ZERO;
    let both = if kind.is_real() { Value::new(1) } else { z };
    let cols = k.min(2) + 1;
    let mut cells = [vec![z, a, a], vec![a, z, a], vec![a, z, a], vec![a, a, both]];
    for r in &mut cells {
        r.truncate(cols);
    }
    EdgeTable {
        x,
        y,
        size: 2,
        cells,
        counts_end_edge: kind.is_real(),
    }
}

/// Table of a lone vertex, labelled `(v, v)`.
pub fn single_table(v: Vertex, k: usize) -> EdgeTable {
    let a = Value::ABSENT;
    let z = Value::ZERO;
    let cols = k.min(1) + 1;
    let mut cells = [vec![z, a], vec![a, a], vec![a, a], vec![a, z]];
    for r in &mut cells {
        r.truncate(cols);
    }
    EdgeTable {
        x: v,
        y: v,
        size: 1,
        cells,
        counts_end_edge: false,
    }
}

/// Argmax of a merged cell: middle bit and the two column indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Choice {
    pub by: bool,
    pub kx: u32,
    pub kz: u32,
}

pub type Choices = [Vec<Option<Choice>>; 4];

/// Merges `(x, y)` with `(y, z)` into `(x, z)`. `xz_real` says whether
/// `(x, z)` is a real edge; `k` caps the columns.
pub fn merge(
    left: &EdgeTable,
    right: &EdgeTable,
    k: usize,
    xz_real: bool,
    variant: MergeVariant,
) -> (EdgeTable, Choices) {
    debug_assert_eq!(left.y, right.x);
    let (x, y, z) = (left.x, left.y, right.y);
    let closes = x == z && x != y;
    let size = left.size + right.size - 1 - closes as usize;
    let cols = k.min(size) + 1;
    let add_xz = x != z && xz_real && !((y == z && left.counts_end_edge) || (x == y && right.counts_end_edge));
    let twice_xy = closes && left.counts_end_edge && right.counts_end_edge;

    let mut cells: [Vec<Value>; 4] = Default::default();
    let mut choices: Choices = Default::default();
    for bx in [false, true] {
        for bz in [false, true] {
            let r = row(bx, bz);
            cells[r] = vec![Value::ABSENT; cols];
            choices[r] = vec![None; cols];
            if x == z && bx != bz {
                continue;
            }
            for kk in 0..cols {
                let mut best = Value::ABSENT;
                let mut arg = None;
                for by in [false, true] {
                    let shared = match variant {
                        MergeVariant::Prose => bx && bz,
                        MergeVariant::Pseudocode => bx && by,
                    };
                    let extra = (closes && shared) as usize + by as usize;
                    let mut bonus: i64 = 0;
                    if add_xz && bx && bz {
                        bonus += 1;
                    }
                    if twice_xy && bx && by {
                        bonus -= 1;
                    }
                    for kx in 0..=kk.min(left.columns() - 1) {
                        let kz = kk + extra - kx;
                        if kz >= right.columns() {
                            continue;
                        }
                        let v = left.cells[row(bx, by)][kx] + right.cells[row(by, bz)][kz];
                        if v.is_absent() {
                            continue;
                        }
                        let v = v.offset(bonus);
                        if best.is_absent() || v.get() > best.get() {
                            best = v;
                            arg = Some(Choice {
                                by,
                                kx: kx as u32,
                                kz: kz as u32,
                            });
                        }
                    }
                }
                cells[r][kk] = best;
                choices[r][kk] = arg;
            }
        }
    }
    let table = EdgeTable {
        x,
        y: z,
        size,
        cells,
        counts_end_edge: x != z && xz_real,
    };
    (table, choices)
}

/// How an intermediate table was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Leaf,
    /// Merge of the accumulated tables labelled `left` with the child `right`.
    Merge {
        left: (Vertex, Vertex),
        right: (Vertex, Vertex),
    },
}

/// One table in the order it was computed.
#[derive(Debug, Clone)]
pub struct TableRecord {
    pub node: usize,
    pub step: Step,
    /// Whether this is the finished table of `node`.
    pub is_node_table: bool,
    pub table: EdgeTable,
}

#[derive(Debug, Clone, Default)]
pub struct OuterplanarOptions {
    /// Root dart `(z, u)`: the tree root is `(z, z)` with leftmost child
    /// `(z, u)`. `(z, u)` must be an outer edge.
    pub root: Option<(Vertex, Vertex)>,
    pub variant: MergeVariant,
    pub witness: bool,
    pub dump: bool,
}

/// Result for one connected component.
#[derive(Debug, Clone)]
pub struct ComponentSolution {
    pub tree: ComponentTree,
    pub root_table: EdgeTable,
    /// Best value per `k' = 0..=min(k, size)`.
    pub values: Vec<u32>,
    pub records: Vec<TableRecord>,
    /// Witness per `k'` when requested.
    pub witnesses: Vec<Vec<Vertex>>,
    pub cells: usize,
}

/// An outerplanar component prepared for the dynamic program: bridges
/// doubled and the root dart chosen.
#[derive(Debug, Clone)]
pub struct PreparedComponent {
    pub plane: PlaneGraph,
    pub root_dart: Option<Dart>,
    pub single: Option<Vertex>,
}

/// Embeds a connected outerplanar graph and picks the root dart.
pub fn prepare(g: &Graph, root: Option<(Vertex, Vertex)>) -> Result<PreparedComponent> {
    let emb = recognize_outerplanar(g)?;
    let Some(outer) = emb.outer_dart else {
        if g.n() == 1 {
            return Ok(PreparedComponent {
                plane: emb.plane,
                root_dart: None,
                single: Some(0),
            });
        }
        return Err(Error::InvalidGraph("empty graph"));
    };
    let mut plane = emb.plane;
    let mut tracked = [outer];
    plane.double_bridges(&mut tracked);
    let outer = tracked[0];
    let walk = plane.face_darts(outer);
    let root_dart = match root {
        Some((z, u)) => {
            if let Some(&d) = walk.iter().find(|&&d| plane.tail(d) == z && plane.head(d) == u) {
                d
            } else if walk.iter().any(|&d| plane.tail(d) == u && plane.head(d) == z) {
                plane = plane.mirrored();
                let walk = plane.face_darts(crate::plane::twin(outer));
                *walk
                    .iter()
                    .find(|&&d| plane.tail(d) == z && plane.head(d) == u)
                    .ok_or(Error::InvalidGraph("root is not an outer edge"))?
            } else {
                return Err(Error::InvalidGraph("root is not an outer edge"));
            }
        }
        None => *walk
            .iter()
            .min_by_key(|&&d| {
                let (t, h) = (plane.tail(d), plane.head(d));
                (t.min(h), t.max(h), t, plane.kind(d) != EdgeKind::Real)
            })
            .expect("walk is not empty"),
    };
    Ok(PreparedComponent {
        plane,
        root_dart: Some(root_dart),
        single: None,
    })
}

/// Runs the dynamic program on one prepared component.
pub fn solve_component(prep: &PreparedComponent, k: usize, opts: &OuterplanarOptions) -> ComponentSolution {
    let tree = match (prep.single, prep.root_dart) {
        (Some(v), _) => ComponentTree::single(v),
        (None, Some(d)) => ComponentTree::build(&prep.plane, d),
        _ => unreachable!("prepared component has a root"),
    };
    let plane = &prep.plane;
    let mut tables: Vec<Option<EdgeTable>> = vec![None; tree.len()];
    let mut steps: Vec<Vec<Choices>> = vec![Vec::new(); tree.len()];
    let mut records = Vec::new();
    let mut cells = 0usize;
    for id in tree.post_order() {
        let node = &tree.nodes[id];
        let table = match node.kind {
            NodeKind::Single => single_table(node.x, k),
            NodeKind::Leaf => leaf_table(node.x, node.y, plane.kind(node.dart), k),
            _ => {
                let mut acc = tables[node.children[0]].take().expect("child table");
                for (j, &c) in node.children.iter().enumerate().skip(1) {
                    let child = tables[c].take().expect("child table");
                    let (x, z) = (acc.x, child.y);
                    let xz_real = x != z && plane.has_real_edge(x, z);
                    let (merged, choices) = merge(&acc, &child, k, xz_real, opts.variant);
                    if opts.dump && j + 1 < node.children.len() {
                        records.push(TableRecord {
                            node: id,
                            step: Step::Merge {
                                left: (acc.x, acc.y),
                                right: (child.x, child.y),
                            },
                            is_node_table: false,
                            table: merged.clone(),
                        });
                    }
                    if opts.witness {
                        steps[id].push(choices);
                    }
                    acc = merged;
                }
                if node.x != node.y && !acc.counts_end_edge && plane.has_real_edge(node.x, node.y) {
                    let r = row(true, true);
                    for v in acc.cells[r].iter_mut() {
                        *v = v.offset(1);
                    }
                    acc.counts_end_edge = true;
                }
                acc
            }
        };
        cells += table.cells.iter().map(|r| r.len()).sum::<usize>();
        if opts.dump {
            let step = if node.is_leaf() {
                Step::Leaf
            } else {
                let c = &node.children;
                let last = &tree.nodes[c[c.len() - 1]];
                let left_y = if c.len() > 1 {
                    tree.nodes[c[c.len() - 2]].y
                } else {
                    node.x
                };
                Step::Merge {
                    left: (node.x, left_y),
                    right: (last.x, last.y),
                }
            };
            records.push(TableRecord {
                node: id,
                step,
                is_node_table: true,
                table: table.clone(),
            });
        }
        tables[id] = Some(table);
    }
    let root_table = tables[tree.root].take().expect("root table");
    let values: Vec<u32> = root_table
        .column_max()
        .into_iter()
        .map(|v| v.get().expect("every column of the root table is reachable"))
        .collect();
    let witnesses = if opts.witness {
        (0..values.len())
            .map(|kk| {
                let r = (0..4)
                    .find(|&r| root_table.cells[r][kk].get() == Some(values[kk]))
                    .expect("maximum is attained");
                let mut out = Vec::new();
                trace(&tree, &steps, tree.root, r & 2 != 0, r & 1 != 0, kk, &mut out);
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect()
    } else {
        Vec::new()
    };
    ComponentSolution {
        tree,
        root_table,
        values,
        records,
        witnesses,
        cells,
    }
}

/// Collects the vertices chosen by cell `(bx, by, k)` of node `id`.
fn trace(tree: &ComponentTree, steps: &[Vec<Choices>], id: usize, bx: bool, by: bool, k: usize, out: &mut Vec<Vertex>) {
    let mut work = vec![(id, bx, by, k)];
    while let Some((id, bx, by, k)) = work.pop() {
        let node = &tree.nodes[id];
        if node.is_leaf() {
            if bx {
                out.push(node.x);
            }
            if by {
                out.push(node.y);
            }
            continue;
        }
        // Unwind the fold: step j merged the first j + 1 children.
        let (mut cur_bz, mut cur_k) = (by, k);
        for j in (1..node.children.len()).rev() {
            let c = steps[id][j - 1][row(bx, cur_bz)][cur_k].expect("traced cell is defined");
            work.push((node.children[j], c.by, cur_bz, c.kz as usize));
            cur_bz = c.by;
            cur_k = c.kx as usize;
        }
        work.push((node.children[0], bx, cur_bz, cur_k));
    }
}

/// Full result of the outerplanar solver.
#[derive(Debug, Clone)]
pub struct OuterplanarSolution {
    /// Optimum per `k' = 0..=k`.
    pub values: Vec<u32>,
    pub witnesses: Vec<VertexSet>,
    pub components: Vec<(Vec<Vertex>, ComponentSolution)>,
    pub cells: usize,
}

/// Solves every `k' <= k` exactly on an outerplanar graph.
pub fn solve_outerplanar(g: &Graph, k: usize, opts: &OuterplanarOptions) -> Result<OuterplanarSolution> {
    if k > g.n() {
        return Err(Error::KTooLarge { k, n: g.n() });
    }
    let mut components = Vec::new();
    for comp in connected_components(g) {
        let verts = comp.to_vec();
        let (sub, map) = g.induced_subgraph(&verts);
        let local = |v: Vertex| verts.iter().position(|&w| w == v).map(|i| i as Vertex);
        let root = opts.root.and_then(|(z, u)| Some((local(z)?, local(u)?)));
        let prep = prepare(&sub, root)?;
        let local_opts = OuterplanarOptions { root, ..opts.clone() };
        let mut sol = solve_component(&prep, k, &local_opts);
        for w in &mut sol.witnesses {
            for v in w.iter_mut() {
                *v = map[*v as usize];
            }
        }
        components.push((map, sol));
    }
    let vectors: Vec<Vec<u32>> = components.iter().map(|(_, s)| s.values.clone()).collect();
    let values = convolve::combine_counts(&vectors, k);
    let witnesses = if opts.witness {
        combine_witnesses(g.n(), &components, &values)
    } else {
        Vec::new()
    };
    let cells = components.iter().map(|(_, s)| s.cells).sum();
    Ok(OuterplanarSolution {
        values,
        witnesses,
        components,
        cells,
    })
}

/// Splits each optimum across components and joins their witnesses.
fn combine_witnesses(n: usize, components: &[(Vec<Vertex>, ComponentSolution)], values: &[u32]) -> Vec<VertexSet> {
    // prefix[i][k]: best using the first i components with k vertices.
    let m = components.len();
    let kmax = values.len() - 1;
    let mut prefix = vec![vec![None::<u32>; kmax + 1]; m + 1];
    prefix[0][0] = Some(0);
    for (i, (_, s)) in components.iter().enumerate() {
        for k in 0..=kmax {
            let Some(base) = prefix[i][k] else { continue };
            for (j, &v) in s.values.iter().enumerate() {
                if k + j > kmax {
                    break;
                }
                let cand = base + v;
                if prefix[i + 1][k + j].is_none_or(|b| cand > b) {
                    prefix[i + 1][k + j] = Some(cand);
                }
            }
        }
    }
    (0..=kmax)
        .map(|k| {
            let mut set = VertexSet::new(n);
            let mut left = k;
            for i in (0..m).rev() {
                let s = &components[i].1;
                let target = prefix[i + 1][left].expect("reachable");
                let j = (0..s.values.len().min(left + 1))
                    .find(|&j| prefix[i][left - j].is_some_and(|b| b + s.values[j] == target))
                    .expect("split exists");
                for &v in &s.witnesses[j] {
                    set.insert(v);
                }
                left -= j;
            }
            set
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::induced_edge_count;
    use crate::oracle::{brute_force_all, DEFAULT_CAP};

    fn solve(g: &Graph) -> Vec<u32> {
        solve_outerplanar(g, g.n(), &OuterplanarOptions::default())
            .unwrap()
            .values
    }

    #[test]
    fn leaf_table_matches_layout() {
        let t = leaf_table(1, 0, EdgeKind::Real, 5);
        assert_eq!(t.cells[3], vec![Value::ABSENT, Value::ABSENT, Value::new(1)]);
        assert_eq!(t.cells[0], vec![Value::ZERO, Value::ABSENT, Value::ABSENT]);
        let d = leaf_table(1, 0, EdgeKind::BridgeDouble, 5);
        assert_eq!(d.cells[3][2], Value::ZERO);
    }

    #[test]
    fn small_graphs_match_oracle() {
        let graphs = [
            Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap(),
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap(),
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
            Graph::from_edges(1, &[]).unwrap(),
            Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap(),
        ];
        for g in &graphs {
            let truth = brute_force_all(g, DEFAULT_CAP).unwrap().values;
            assert_eq!(solve(g), truth);
        }
    }

    #[test]
    fn witnesses_realise_values() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let opts = OuterplanarOptions {
            witness: true,
            ..Default::default()
        };
        let sol = solve_outerplanar(&g, 6, &opts).unwrap();
        for (k, w) in sol.witnesses.iter().enumerate() {
            assert_eq!(w.len(), k);
            assert_eq!(induced_edge_count(&g, w) as u32, sol.values[k]);
        }
    }
}
