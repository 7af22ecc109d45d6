//! Structural checks on an annotated slice forest, shared with the
//! acceptance suite.

use dks_core::slices::{NodeRef, SliceForest};

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every parent's label runs from its first child's tail to its last
/// child's head, and siblings share endpoints.
pub fn labels_chain(f: &SliceForest) -> Result<(), String> {
    for (c, t) in f.trees.iter().enumerate() {
        for (i, n) in t.nodes.iter().enumerate() {
            let ch = &n.children;
            if ch.is_empty() {
                continue;
            }
            let (first, last) = (&t.nodes[ch[0]], &t.nodes[*ch.last().unwrap()]);
            ensure(first.x == n.x && last.y == n.y, || {
                format!("component {c} node {i}: ends")
            })?;
            for w in ch.windows(2) {
                ensure(t.nodes[w[0]].y == t.nodes[w[1]].x, || {
                    format!("component {c} node {i}: siblings")
                })?;
            }
        }
    }
    Ok(())
}

/// Leaves cover `1..=r+1` left to right with `rbn(v_i) = lbn(v_{i+1})`, and
/// inner nodes span their outer children.
pub fn boundary_numbers(f: &SliceForest) -> Result<(), String> {
    for (c, t) in f.trees.iter().enumerate() {
        if f.level(c) == 1 {
            continue;
        }
        let r = f.enclosing_children(c).len() as u32;
        let info = |node| f.info(NodeRef { comp: c, node });
        let leaves = t.leaf_order();
        ensure(info(leaves[0]).lbn == 1, || format!("component {c}: first lbn"))?;
        ensure(info(*leaves.last().unwrap()).rbn == r + 1, || {
            format!("component {c}: last rbn")
        })?;
        for &l in &leaves {
            let i = info(l);
            ensure(i.lbn <= i.rbn, || format!("component {c} leaf {l}: lbn > rbn"))?;
            ensure(i.lbn <= i.pivot && i.pivot <= i.rbn, || {
                format!("component {c} leaf {l}: pivot")
            })?;
        }
        for w in leaves.windows(2) {
            ensure(info(w[0]).rbn == info(w[1]).lbn, || {
                format!("component {c}: leaves {w:?} do not chain")
            })?;
        }
        for (i, n) in t.nodes.iter().enumerate() {
            if let (Some(&a), Some(&b)) = (n.children.first(), n.children.last()) {
                ensure(info(i).lbn == info(a).lbn && info(i).rbn == info(b).rbn, || {
                    format!("component {c} node {i}: span")
                })?;
            }
        }
    }
    Ok(())
}

/// Boundaries of a level-i node hold i vertices, one per level, innermost
/// first, and consecutive leaves share a boundary.
pub fn boundary_lengths(f: &SliceForest) -> Result<(), String> {
    let level = &f.le.level;
    for at in f.all_nodes() {
        let i = f.level(at.comp);
        let info = f.info(at);
        for b in [&info.left, &info.right] {
            ensure(b.len() == i as usize, || format!("{at:?}: boundary {b:?} on level {i}"))?;
            for (j, &v) in b.iter().enumerate() {
                ensure(level[v as usize] == i - j as u32, || {
                    format!("{at:?}: boundary {b:?} levels")
                })?;
            }
        }
    }
    for (c, t) in f.trees.iter().enumerate() {
        for w in t.leaf_order().windows(2) {
            let (a, b) = (NodeRef { comp: c, node: w[0] }, NodeRef { comp: c, node: w[1] });
            ensure(f.info(a).right == f.info(b).left, || {
                format!("{a:?} and {b:?} disagree")
            })?;
        }
    }
    Ok(())
}

/// The slice of the outermost root is the whole graph.
pub fn root_slice_is_everything(f: &SliceForest) -> Result<(), String> {
    let s = f.materialize_slice(f.root(f.top));
    let p = &f.le.plane;
    let real = (0..p.edge_count()).filter(|&e| p.kind(2 * e) == dks_core::graph::EdgeKind::Real);
    ensure(s.vertices.len() == p.n(), || {
        format!("root slice has {} of {} vertices", s.vertices.len(), p.n())
    })?;
    ensure(s.edges.len() == real.count(), || "root slice misses edges".into())
}

pub fn check_forest(f: &SliceForest) -> Result<(), String> {
    labels_chain(f)?;
    boundary_numbers(f)?;
    boundary_lengths(f)?;
    root_slice_is_everything(f)
}
