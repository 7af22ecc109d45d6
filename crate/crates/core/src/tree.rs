//! Rooted ordered face trees of outerplanar plane graphs.
//!
//! A tree has one leaf per dart of the outer walk (so a bridge, stored as two
//! parallel copies, yields two leaves), one node per interior face, and one
//! `(w, w)` node for every excursion of the outer walk into a block hanging
//! off a cutpoint `w`. Reading the leaves left to right retraces the outer
//! walk from the root dart, and the labels of a node's children chain from
//! the node's first vertex to its second.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Vertex;
use crate::plane::{twin, Dart, PlaneGraph, NO_DART};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    /// A dart of the outer walk.
    Leaf,
    /// An interior face entered through the dart `x -> y`.
    Face,
    /// An interior face entered at a cutpoint; label `(w, w)`.
    Excursion,
    /// Joins several excursions from the root vertex.
    Root,
    /// The only node of a one-vertex component.
    Single,
}

#[derive(Debug, Clone)]
pub struct TreeNode {
    pub x: Vertex,
    pub y: Vertex,
    pub kind: NodeKind,
    pub children: Vec<usize>,
    /// Leaf: its outer dart. Face: the entry dart `x -> y` inside the face.
    /// Excursion: the first dart of the face after the cutpoint.
    pub dart: Dart,
    pub parent: Option<usize>,
    /// First and last walk positions covered by the subtree.
    pub lo: usize,
    pub hi: usize,
}

impl TreeNode {
    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, NodeKind::Leaf | NodeKind::Single)
    }

    /// Whether the node stands for an interior face of the component.
    pub fn has_face(&self) -> bool {
        matches!(self.kind, NodeKind::Face | NodeKind::Excursion)
    }
}

#[derive(Debug, Clone)]
pub struct ComponentTree {
    pub nodes: Vec<TreeNode>,
    pub root: usize,
    /// Outer walk darts starting at the root dart.
    pub walk: Vec<Dart>,
    /// Leaf node per walk position.
    pub leaves: Vec<usize>,
}

struct Builder<'a> {
    plane: &'a PlaneGraph,
    walk: Vec<Dart>,
    pos: Vec<usize>,
    nodes: Vec<TreeNode>,
    leaves: Vec<usize>,
}

impl<'a> Builder<'a> {
    fn push(&mut self, node: TreeNode) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    fn leaf(&mut self, d: Dart, parent: usize) -> usize {
        let p = self.pos[d];
        let id = self.push(TreeNode {
            x: self.plane.tail(d),
            y: self.plane.head(d),
            kind: NodeKind::Leaf,
            children: Vec::new(),
            dart: d,
            parent: Some(parent),
            lo: p,
            hi: p,
        });
        debug_assert_eq!(self.leaves[p], usize::MAX, "walk dart reached twice");
        self.leaves[p] = id;
        id
    }

    /// Creates the subtree for the face left of `start` and returns its id.
    /// For a face node `start` is the entry dart and is not a child; for an
    /// excursion it is the first child.
    fn expand(&mut self, kind: NodeKind, start: Dart, parent: Option<usize>) -> usize {
        let (x, y) = match kind {
            NodeKind::Face => (self.plane.tail(start), self.plane.head(start)),
            _ => (self.plane.head(start), self.plane.head(start)),
        };
        let top = self.push(TreeNode {
            x,
            y,
            kind,
            children: Vec::new(),
            dart: start,
            parent,
            lo: 0,
            hi: 0,
        });
        let mut stack = vec![top];
        while let Some(id) = stack.pop() {
            let entry = self.nodes[id].dart;
            let first = match self.nodes[id].kind {
                NodeKind::Face => self.plane.face_prev(entry),
                _ => entry,
            };
            let mut g = first;
            let mut children = Vec::new();
            loop {
                let c = twin(g);
                let child = if self.pos[c] != usize::MAX {
                    self.leaf(c, id)
                } else {
                    let cid = self.push(TreeNode {
                        x: self.plane.tail(c),
                        y: self.plane.head(c),
                        kind: NodeKind::Face,
                        children: Vec::new(),
                        dart: c,
                        parent: Some(id),
                        lo: 0,
                        hi: 0,
                    });
                    stack.push(cid);
                    cid
                };
                children.push(child);
                g = self.plane.face_prev(g);
                if g == entry {
                    break;
                }
                if g == first {
                    break;
                }
            }
            self.nodes[id].children = children;
        }
        for id in (top..self.nodes.len()).rev() {
            let n = &self.nodes[id];
            if n.kind == NodeKind::Leaf {
                continue;
            }
            let (lo, hi) = (self.nodes[n.children[0]].lo, self.nodes[*n.children.last().unwrap()].hi);
            self.nodes[id].lo = lo;
            self.nodes[id].hi = hi;
        }
        top
    }

    /// Builds excursions covering walk positions `from..=to`, all starting
    /// and ending at the same vertex, as children of `parent`.
    fn excursions(&mut self, from: usize, to: usize, parent: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut s = from;
        while s <= to {
            let id = self.expand(NodeKind::Excursion, twin(self.walk[s]), Some(parent));
            s = self.nodes[id].hi + 1;
            out.push(id);
        }
        out
    }

    /// Inserts excursion nodes wherever consecutive children of a node leave
    /// part of the walk uncovered.
    fn fill_gaps(&mut self, from: usize) {
        let mut id = from;
        while id < self.nodes.len() {
            if !self.nodes[id].is_leaf() {
                let old = core::mem::take(&mut self.nodes[id].children);
                let mut children: Vec<usize> = Vec::with_capacity(old.len());
                for (i, &c) in old.iter().enumerate() {
                    if i > 0 {
                        let prev_hi = self.nodes[*children.last().unwrap()].hi;
                        let lo = self.nodes[c].lo;
                        if lo > prev_hi + 1 {
                            children.extend(self.excursions(prev_hi + 1, lo - 1, id));
                        }
                    }
                    children.push(c);
                }
                self.nodes[id].children = children;
            }
            id += 1;
        }
    }
}

impl ComponentTree {
    /// The tree of a one-vertex component.
    pub fn single(v: Vertex) -> Self {
        ComponentTree {
            nodes: vec![TreeNode {
                x: v,
                y: v,
                kind: NodeKind::Single,
                children: Vec::new(),
                dart: NO_DART,
                parent: None,
                lo: 0,
                hi: 0,
            }],
            root: 0,
            walk: Vec::new(),
            leaves: Vec::new(),
        }
    }

    /// Builds the tree of the component containing `root_dart`, which must
    /// have the outer face on its left, with bridges doubled. The root is
    /// labelled `(z, z)` for `z` the tail of `root_dart`, and its leftmost
    /// child is the leaf of `root_dart`.
    pub fn build(plane: &PlaneGraph, root_dart: Dart) -> Self {
        let walk = plane.face_darts(root_dart);
        let mut pos = vec![usize::MAX; plane.dart_count()];
        for (i, &d) in walk.iter().enumerate() {
            pos[d] = i;
        }
        let len = walk.len();
        let mut b = Builder {
            plane,
            walk,
            pos,
            nodes: Vec::new(),
            leaves: vec![usize::MAX; len],
        };
        let first = b.expand(NodeKind::Excursion, twin(root_dart), None);
        let root = if b.nodes[first].hi + 1 < len {
            let z = plane.tail(root_dart);
            let root = b.push(TreeNode {
                x: z,
                y: z,
                kind: NodeKind::Root,
                children: Vec::new(),
                dart: NO_DART,
                parent: None,
                lo: 0,
                hi: len - 1,
            });
            let hi = b.nodes[first].hi;
            let mut children = vec![first];
            children.extend(b.excursions(hi + 1, len - 1, root));
            b.nodes[first].parent = Some(root);
            b.nodes[root].children = children;
            root
        } else {
            first
        };
        b.fill_gaps(0);
        debug_assert!(b.leaves.iter().all(|&l| l != usize::MAX));
        ComponentTree {
            nodes: b.nodes,
            root,
            walk: b.walk,
            leaves: b.leaves,
        }
    }

    pub fn node(&self, id: usize) -> &TreeNode {
        &self.nodes[id]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node ids with every child before its parent.
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((id, done)) = stack.pop() {
            if done {
                out.push(id);
                continue;
            }
            stack.push((id, true));
            for &c in self.nodes[id].children.iter().rev() {
                stack.push((c, false));
            }
        }
        out
    }

    /// Leaf ids in left-to-right order.
    pub fn leaf_order(&self) -> Vec<usize> {
        self.post_order()
            .into_iter()
            .filter(|&id| self.nodes[id].is_leaf())
            .collect()
    }

    /// Whether every non-leaf label spans its children's chained labels.
    pub fn labels_chain(&self) -> bool {
        self.nodes.iter().all(|n| {
            if n.is_leaf() {
                return true;
            }
            let c = &n.children;
            self.nodes[c[0]].x == n.x
                && self.nodes[*c.last().unwrap()].y == n.y
                && c.windows(2).all(|w| self.nodes[w[0]].y == self.nodes[w[1]].x)
        })
    }
}
