//! Face trees for every level component of a triangulated leveled
//! embedding, with boundary numbers, boundaries and slices.
//!
//! A tree of a level `i > 1` component `C` sits inside a face `f` of the
//! enclosing level `i - 1` component. The children `u_1, .., u_r` of the node
//! of `f` are labelled `(z_1, z_2), .., (z_r, z_{r+1})`, and every node of
//! `C`'s tree gets a left and right boundary number in `1..=r+1` saying which
//! `z_p` its boundary passes through. Boundaries then run from the node's own
//! vertex outward to level 1, one vertex per level.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Vertex;
use crate::levels::LeveledEmbedding;
use crate::plane::{twin, Dart};
use crate::tree::{ComponentTree, NodeKind};

/// A node of one component's tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeRef {
    pub comp: usize,
    pub node: usize,
}

/// Boundary numbers (zero on level 1) and boundaries, innermost first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeInfo {
    pub lbn: u32,
    pub rbn: u32,
    /// Leaves on levels above 1: index of the `z` closing the triangle on
    /// the outer side of the leaf's edge.
    pub pivot: u32,
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

/// Every component tree of a triangulated leveled embedding, annotated.
#[derive(Debug, Clone)]
pub struct SliceForest {
    pub le: LeveledEmbedding,
    pub trees: Vec<ComponentTree>,
    pub info: Vec<Vec<NodeInfo>>,
    /// Component whose face a node represents encloses, if any.
    pub enclosed: Vec<Vec<Option<usize>>>,
    /// Node of the face enclosing each component; `None` on level 1.
    pub enclosing: Vec<Option<NodeRef>>,
    /// The level-1 component.
    pub top: usize,
}

/// Vertices and real edges of a slice, with its boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slice {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Vertex, Vertex)>,
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

fn norm(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    (u.min(v), u.max(v))
}

impl SliceForest {
    /// Builds and annotates all trees. `le` must be triangulated. The level-1
    /// tree is rooted at the outer dart, or at position `top_root` of the
    /// outer walk when given.
    pub fn new(le: LeveledEmbedding, top_root: Option<usize>) -> Result<Self> {
        let nc = le.components.len();
        let mut order: Vec<usize> = (0..nc).collect();
        order.sort_by_key(|&c| le.components[c].level);
        let top = order[0];
        if le.components.iter().filter(|c| c.level == 1).count() != 1 {
            return Err(Error::EmbeddingInconsistent("level 1 is not one component"));
        }
        let mut f = SliceForest {
            trees: vec![ComponentTree::single(0); nc],
            info: vec![Vec::new(); nc],
            enclosed: vec![Vec::new(); nc],
            enclosing: vec![None; nc],
            top,
            le,
        };
        // Face of a component's plane to the tree node representing it.
        let mut face_node: Vec<Vec<usize>> = vec![Vec::new(); nc];
        for &c in &order {
            f.build_tree(c, top_root, &face_node)?;
            let comp = &f.le.components[c];
            let (face, nf) = comp.plane.faces();
            let mut map = vec![usize::MAX; nf];
            for (id, node) in f.trees[c].nodes.iter().enumerate() {
                if node.has_face() {
                    map[face[node.dart]] = id;
                }
            }
            face_node[c] = map;
            f.enclosed[c] = vec![None; f.trees[c].len()];
            if let Some(p) = f.enclosing[c] {
                if f.enclosed[p.comp][p.node].replace(c).is_some() {
                    return Err(Error::EmbeddingInconsistent("face encloses two components"));
                }
            }
            f.annotate(c)?;
        }
        Ok(f)
    }

    fn build_tree(&mut self, c: usize, top_root: Option<usize>, face_node: &[Vec<usize>]) -> Result<()> {
        let le = &self.le;
        let comp = &le.components[c];
        if comp.level == 1 {
            self.trees[c] = match comp.outer_dart {
                None => ComponentTree::single(comp.vertices[0]),
                Some(d) => {
                    let root = match top_root {
                        None => d,
                        Some(i) => {
                            let walk = comp.plane.face_darts(d);
                            walk[i % walk.len()]
                        }
                    };
                    ComponentTree::build(&comp.plane, root)
                }
            };
            return Ok(());
        }
        let (pc, pd) = comp
            .enclosing
            .ok_or(Error::EmbeddingInconsistent("component is not enclosed"))?;
        let (face, _) = le.components[pc].plane.faces();
        let node = face_node[pc][face[pd]];
        if node == usize::MAX {
            return Err(Error::EmbeddingInconsistent("enclosing face has no tree node"));
        }
        self.enclosing[c] = Some(NodeRef { comp: pc, node });
        let parent = &le.components[pc];
        let pn = &self.trees[pc].nodes[node];
        let plane = &le.plane;
        let in_c = |v: Vertex| le.component_of[v as usize] == c;
        // Dart from the chosen component vertex to the first `z` of the
        // enclosing face, along the triangle that starts the walk.
        let zx = if pn.kind == NodeKind::Face {
            plane.face_next(plane.face_next(parent.full_dart[pn.dart]))
        } else {
            let first = self.trees[pc].nodes[node]
                .children
                .iter()
                .map(|&u| &self.trees[pc].nodes[u])
                .find(|u| u.kind != NodeKind::Excursion)
                .ok_or(Error::EmbeddingInconsistent("face without edges"))?;
            twin(plane.prev(parent.full_dart[first.dart]))
        };
        let z = plane.tail(zx);
        if !in_c(z) {
            return Err(Error::TriangulationIncomplete(pn.x));
        }
        if comp.vertices.len() == 1 {
            self.trees[c] = ComponentTree::single(z);
            return Ok(());
        }
        let root = le.sector_dart(c, zx).ok_or(Error::TriangulationIncomplete(z))?;
        self.trees[c] = ComponentTree::build(&comp.plane, root);
        Ok(())
    }

    /// Labels `z_1..z_{r+1}` along the children of an enclosing node.
    pub fn enclosing_labels(&self, at: NodeRef) -> Vec<Vertex> {
        let t = &self.trees[at.comp];
        let ch = &t.nodes[at.node].children;
        let mut ys: Vec<Vertex> = ch.iter().map(|&u| t.nodes[u].x).collect();
        ys.push(t.nodes[*ch.last().unwrap()].y);
        ys
    }

    /// Corners of the face of `encl`, keyed by the full dart that closes
    /// each corner turning counterclockwise, with the ranges of `z` indices
    /// sitting in the corner. The cutpoint corner of an excursion carries
    /// two ranges, the one starting the walk first.
    fn corner_ranges(&self, encl: NodeRef) -> BTreeMap<Dart, Vec<(u32, u32)>> {
        let t = &self.trees[encl.comp];
        let pn = &t.nodes[encl.node];
        let parent = &self.le.components[encl.comp];
        let r = pn.children.len() as u32;
        let mut darts = pn
            .children
            .iter()
            .map(|&u| &t.nodes[u])
            .filter(|u| u.kind != NodeKind::Excursion)
            .map(|u| u.dart);
        let first = darts.next();
        let mut map: BTreeMap<Dart, Vec<(u32, u32)>> = BTreeMap::new();
        let mut lo = 1;
        for j in 1..=r + 1 {
            let out = if j <= r {
                let u = &t.nodes[pn.children[j as usize - 1]];
                if u.kind == NodeKind::Excursion {
                    continue;
                }
                u.dart
            } else if pn.kind == NodeKind::Face {
                twin(pn.dart)
            } else {
                match first {
                    Some(d) => d,
                    None => continue,
                }
            };
            map.entry(parent.full_dart[out]).or_default().push((lo, j));
            lo = j + 1;
        }
        map
    }

    fn annotate(&mut self, c: usize) -> Result<()> {
        let tree = &self.trees[c];
        let len = tree.len();
        let mut info = vec![
            NodeInfo {
                lbn: 0,
                rbn: 0,
                pivot: 0,
                left: Vec::new(),
                right: Vec::new(),
            };
            len
        ];
        let Some(encl) = self.enclosing[c] else {
            for (i, n) in tree.nodes.iter().enumerate() {
                info[i].left = vec![n.x];
                info[i].right = vec![n.y];
            }
            self.info[c] = info;
            return Ok(());
        };
        let ys = self.enclosing_labels(encl);
        let r = ys.len() as u32 - 1;
        if tree.walk.is_empty() {
            info[tree.root].lbn = 1;
            info[tree.root].rbn = r + 1;
            info[tree.root].pivot = r + 1;
        } else {
            let t = tree.walk.len();
            let corners = self.corner_ranges(encl);
            let plane = &self.le.plane;
            let comp = &self.le.components[c];
            let mut pivot = vec![0u32; t];
            let mut started = false;
            for j in 0..t {
                let d = comp.full_dart[tree.walk[j]];
                let x = plane.tail(d);
                let apex = twin(plane.next(d));
                let mut e = plane.next(apex);
                while e != apex && self.le.local_dart(encl.comp, e).is_none() {
                    e = plane.next(e);
                }
                let ranges = corners.get(&e).ok_or(Error::NoDividingPoint(x))?;
                let p = if ranges.len() == 2 && started {
                    ranges[1].0
                } else {
                    ranges[0].0
                };
                started |= ranges.len() == 1;
                if j > 0 && p < pivot[j - 1] {
                    return Err(Error::NoDividingPoint(x));
                }
                pivot[j] = p;
            }
            let mut lbn = vec![1u32; t];
            lbn[1..t].copy_from_slice(&pivot[..t - 1]);
            for j in 0..t {
                let leaf = tree.leaves[j];
                info[leaf].lbn = lbn[j];
                info[leaf].pivot = pivot[j];
                info[leaf].rbn = if j + 1 < t { lbn[j + 1] } else { r + 1 };
            }
            for id in tree.post_order() {
                let n = &tree.nodes[id];
                if !n.is_leaf() {
                    info[id].lbn = info[n.children[0]].lbn;
                    info[id].rbn = info[*n.children.last().unwrap()].rbn;
                }
            }
        }
        let pinfo = &self.info[encl.comp];
        let pch = &self.trees[encl.comp].nodes[encl.node].children;
        let left_at = |p: u32| -> &Vec<Vertex> {
            if p <= r {
                &pinfo[pch[p as usize - 1]].left
            } else {
                &pinfo[pch[r as usize - 1]].right
            }
        };
        let right_at = |q: u32| -> &Vec<Vertex> {
            if q >= 1 {
                &pinfo[pch[q as usize - 1]].right
            } else {
                &pinfo[pch[0]].left
            }
        };
        for (i, n) in tree.nodes.iter().enumerate() {
            let mut left = vec![n.x];
            left.extend_from_slice(left_at(info[i].lbn));
            let mut right = vec![n.y];
            right.extend_from_slice(right_at(info[i].rbn - 1));
            info[i].left = left;
            info[i].right = right;
        }
        self.info[c] = info;
        Ok(())
    }

    pub fn level(&self, c: usize) -> u32 {
        self.le.components[c].level
    }

    pub fn root(&self, c: usize) -> NodeRef {
        NodeRef {
            comp: c,
            node: self.trees[c].root,
        }
    }

    pub fn info(&self, at: NodeRef) -> &NodeInfo {
        &self.info[at.comp][at.node]
    }

    /// Every node, components in level order and each tree in post-order.
    pub fn all_nodes(&self) -> Vec<NodeRef> {
        let mut comps: Vec<usize> = (0..self.trees.len()).collect();
        comps.sort_by_key(|&c| self.level(c));
        comps
            .into_iter()
            .flat_map(|c| {
                self.trees[c]
                    .post_order()
                    .into_iter()
                    .map(move |node| NodeRef { comp: c, node })
            })
            .collect()
    }

    /// Children `u_1..u_r` of the enclosing node of `c`.
    pub fn enclosing_children(&self, c: usize) -> Vec<NodeRef> {
        match self.enclosing[c] {
            None => Vec::new(),
            Some(e) => self.trees[e.comp].nodes[e.node]
                .children
                .iter()
                .map(|&node| NodeRef { comp: e.comp, node })
                .collect(),
        }
    }

    /// The boundary through `z_p`: left boundary of `u_p`, or right boundary
    /// of `u_r` past the end.
    pub fn boundary_at(&self, c: usize, p: u32) -> Vec<Vertex> {
        let ch = self.enclosing_children(c);
        if (p as usize) <= ch.len() {
            self.info(ch[p as usize - 1]).left.clone()
        } else {
            self.info(*ch.last().unwrap()).right.clone()
        }
    }

    /// Builds the slice of a node straight from the slice rules.
    pub fn materialize_slice(&self, at: NodeRef) -> Slice {
        let mut vs = BTreeSet::new();
        let mut es = BTreeSet::new();
        self.collect(at, &mut vs, &mut es);
        let info = self.info(at);
        Slice {
            vertices: vs.into_iter().collect(),
            edges: es.into_iter().collect(),
            left: info.left.clone(),
            right: info.right.clone(),
        }
    }

    fn collect(&self, at: NodeRef, vs: &mut BTreeSet<Vertex>, es: &mut BTreeSet<(Vertex, Vertex)>) {
        let plane = &self.le.plane;
        let node = &self.trees[at.comp].nodes[at.node];
        let (x, y) = (node.x, node.y);
        let edge = |u: Vertex, v: Vertex, vs: &mut BTreeSet<Vertex>, es: &mut BTreeSet<(Vertex, Vertex)>| {
            vs.insert(u);
            vs.insert(v);
            if u != v && plane.has_real_edge(u, v) {
                es.insert(norm(u, v));
            }
        };
        if !node.is_leaf() {
            match self.enclosed[at.comp][at.node] {
                Some(c) => self.collect(self.root(c), vs, es),
                None => {
                    for &ch in &node.children {
                        self.collect(
                            NodeRef {
                                comp: at.comp,
                                node: ch,
                            },
                            vs,
                            es,
                        );
                    }
                }
            }
            edge(x, y, vs, es);
            return;
        }
        edge(x, y, vs, es);
        if self.level(at.comp) == 1 {
            return;
        }
        let info = self.info(at);
        let ch = self.enclosing_children(at.comp);
        let zs = self.enclosing_labels(self.enclosing[at.comp].unwrap());
        if info.lbn != info.rbn {
            for j in info.lbn..info.rbn {
                self.collect(ch[j as usize - 1], vs, es);
            }
        } else {
            let b = self.boundary_at(at.comp, info.lbn);
            vs.extend(b.iter().copied());
            for w in b.windows(2) {
                edge(w[0], w[1], vs, es);
            }
        }
        for j in info.lbn..=info.pivot {
            edge(x, zs[j as usize - 1], vs, es);
        }
        for j in info.pivot..=info.rbn {
            edge(y, zs[j as usize - 1], vs, es);
        }
    }
}
