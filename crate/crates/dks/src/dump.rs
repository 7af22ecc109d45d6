//! Table dumps as TSV, trace lines and DOT drawings.
//!
//! Outerplanar tables print one block per table: a label line, then rows
//! `00`, `01`, `10`, `11` (inclusion of the label's two ends) with one column
//! per `k`, `∅` marking cells no vertex set reaches. Boundary tables print
//! the boundary vertices once and label rows by inclusion pattern over them.

use std::collections::HashMap;
use std::fmt::Write;

use dks_core::bouter::{BouterSolution, Branch, TraceEntry};
use dks_core::graph::{EdgeKind, Vertex};
use dks_core::outerplanar::{OuterplanarSolution, Step, TableRecord};
use dks_core::slices::{NodeRef, SliceForest};
use dks_core::value::Value;
use dks_core::Graph;

const ROWS: [&str; 4] = ["00", "01", "10", "11"];

fn cells(out: &mut String, row: &[Value]) {
    for v in row {
        write!(out, "\t{v}").unwrap();
    }
    out.push('\n');
}

/// Label of one outerplanar record, e.g. `T(b,e)` or `Merge(T(b,e),T(e,f))`.
pub fn record_label(g: &Graph, map: &[Vertex], rec: &TableRecord) -> String {
    let name = |v: Vertex| g.name(map[v as usize]);
    match (&rec.step, rec.is_node_table) {
        (Step::Merge { left, right }, false) => format!(
            "Merge(T({},{}),T({},{}))",
            name(left.0),
            name(left.1),
            name(right.0),
            name(right.1)
        ),
        _ => format!("T({},{})", name(rec.table.x), name(rec.table.y)),
    }
}

pub fn outerplanar_tsv(g: &Graph, sol: &OuterplanarSolution) -> String {
    let mut out = String::new();
    for (map, comp) in &sol.components {
        for rec in &comp.records {
            out.push_str(&record_label(g, map, rec));
            out.push('\n');
            for (r, label) in ROWS.iter().enumerate() {
                out.push_str(label);
                cells(&mut out, &rec.table.cells[r]);
            }
            out.push('\n');
        }
    }
    out
}

pub fn branch_name(b: Branch) -> String {
    match b {
        Branch::Fold => "Fold".into(),
        Branch::Enclosing => "Enclosing".into(),
        Branch::OuterLeaf => "OuterLeaf".into(),
        Branch::InnerLeaf { pivot } => format!("InnerLeaf pivot={pivot}"),
    }
}

fn trace_labels(trace: &[TraceEntry]) -> HashMap<NodeRef, (Vertex, Vertex)> {
    trace.iter().map(|t| (t.node, t.label)).collect()
}

pub fn bouterplanar_tsv(g: &Graph, sol: &BouterSolution) -> String {
    let mut out = String::new();
    for (c, (map, comp)) in sol.components.iter().enumerate() {
        let name = |v: Vertex| g.name(map[v as usize]);
        let labels = trace_labels(&comp.trace);
        for (at, t) in &comp.tables {
            let (x, y) = labels.get(at).copied().unwrap_or((t.left[0], t.right[0]));
            writeln!(
                out,
                "T({},{})\tcomponent={c}\tslice={}.{}",
                name(x),
                name(y),
                at.comp,
                at.node
            )
            .unwrap();
            let list = |vs: &[Vertex]| vs.iter().map(|&v| name(v)).collect::<Vec<_>>().join(",");
            writeln!(out, "left\t{}", list(&t.left)).unwrap();
            writeln!(out, "right\t{}", list(&t.right)).unwrap();
            writeln!(out, "pattern\t{}", list(&t.verts)).unwrap();
            for mask in 0..t.rows() {
                let pattern: String = (0..t.verts.len())
                    .map(|i| if mask >> i & 1 == 1 { '1' } else { '0' })
                    .collect();
                out.push_str(if pattern.is_empty() { "-" } else { &pattern });
                cells(&mut out, t.row(mask));
            }
            out.push('\n');
        }
    }
    out
}

/// One line per tree node: label, level component and branch.
pub fn trace_lines(g: &Graph, sol: &BouterSolution) -> Vec<String> {
    let mut lines = Vec::new();
    for (map, comp) in &sol.components {
        let name = |v: Vertex| g.name(map[v as usize]);
        for t in &comp.trace {
            lines.push(format!(
                "T({},{}) slice={}.{} {}",
                name(t.label.0),
                name(t.label.1),
                t.node.comp,
                t.node.node,
                branch_name(t.branch)
            ));
        }
    }
    lines
}

/// The leveled, triangulated graph with fake edges dashed and vertices
/// grouped by level.
pub fn leveled_dot(g: &Graph, forests: &[(Vec<Vertex>, SliceForest)]) -> String {
    let mut out = String::from("graph leveled {\n");
    for (map, f) in forests {
        let le = &f.le;
        let name = |v: Vertex| g.name(map[v as usize]);
        for v in 0..le.plane.n() as Vertex {
            writeln!(
                out,
                "  \"{}\" [label=\"{} (L{})\"];",
                name(v),
                name(v),
                le.level[v as usize]
            )
            .unwrap();
        }
        for d in (0..le.plane.dart_count()).step_by(2) {
            let (u, v) = (le.plane.tail(d), le.plane.head(d));
            let style = match le.plane.kind(d) {
                EdgeKind::Real => "",
                EdgeKind::BridgeDouble => " [style=dotted]",
                EdgeKind::Fake => " [style=dashed]",
            };
            writeln!(out, "  \"{}\" -- \"{}\"{style};", name(u), name(v)).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// The outerplanar tree of every component, labels on the nodes.
pub fn outerplanar_tree_dot(g: &Graph, sol: &OuterplanarSolution) -> String {
    let mut out = String::from("digraph tree {\n");
    for (c, (map, comp)) in sol.components.iter().enumerate() {
        let name = |v: Vertex| g.name(map[v as usize]);
        for (i, node) in comp.tree.nodes.iter().enumerate() {
            writeln!(out, "  n{c}_{i} [label=\"({},{})\"];", name(node.x), name(node.y)).unwrap();
            for &ch in &node.children {
                writeln!(out, "  n{c}_{i} -> n{c}_{ch};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Every slice tree, nodes annotated with boundary numbers and boundaries.
/// Dashed arcs run from a face node to the root of the component it encloses.
pub fn slice_tree_dot(g: &Graph, forests: &[(Vec<Vertex>, SliceForest)]) -> String {
    let mut out = String::from("digraph slices {\n");
    for (i, (map, f)) in forests.iter().enumerate() {
        let name = |v: Vertex| g.name(map[v as usize]);
        let list = |vs: &[Vertex]| vs.iter().map(|&v| name(v)).collect::<Vec<_>>().join(",");
        let id = |at: NodeRef| format!("s{i}_{}_{}", at.comp, at.node);
        for at in f.all_nodes() {
            let node = &f.trees[at.comp].nodes[at.node];
            let info = f.info(at);
            writeln!(
                out,
                "  {} [label=\"({},{}) L{}\\nlbn={} rbn={}\\nleft {}\\nright {}\"];",
                id(at),
                name(node.x),
                name(node.y),
                f.level(at.comp),
                info.lbn,
                info.rbn,
                list(&info.left),
                list(&info.right)
            )
            .unwrap();
            for &ch in &node.children {
                writeln!(
                    out,
                    "  {} -> {};",
                    id(at),
                    id(NodeRef {
                        comp: at.comp,
                        node: ch
                    })
                )
                .unwrap();
            }
            if let Some(c) = f.enclosed[at.comp][at.node] {
                writeln!(out, "  {} -> {} [style=dashed];", id(at), id(f.root(c))).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}
