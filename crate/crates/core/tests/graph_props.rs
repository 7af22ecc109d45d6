use std::collections::BTreeSet;

use dks_core::graph::{
    bridges_and_cutpoints, connected_components, induced_edge_count, EdgeKind, Graph, Vertex, VertexSet,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(Vertex, Vertex)> = (0..n as Vertex)
            .flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)))
            .collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Components counted by union-find over the kept edges and vertices.
fn count_components(n: usize, edges: &[(Vertex, Vertex)], alive: &[bool]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(u, v) in edges {
        if alive[u as usize] && alive[v as usize] {
            let (a, b) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
            parent[a] = b;
        }
    }
    (0..n).filter(|&v| alive[v] && find(&mut parent, v) == v).count()
}

proptest! {
    #[test]
    fn bridges_disconnect(g in arb_graph(10)) {
        let edges: Vec<_> = g.real_edges().collect();
        let alive = vec![true; g.n()];
        let base = count_components(g.n(), &edges, &alive);
        let dec = bridges_and_cutpoints(&g);
        for (i, &(u, v)) in edges.iter().enumerate() {
            let mut rest = edges.clone();
            rest.remove(i);
            let is_bridge = count_components(g.n(), &rest, &alive) > base;
            prop_assert_eq!(is_bridge, dec.bridges.contains(&(u.min(v), u.max(v))));
        }
    }

    #[test]
    fn cutpoints_disconnect(g in arb_graph(10)) {
        let edges: Vec<_> = g.real_edges().collect();
        let mut alive = vec![true; g.n()];
        let base = count_components(g.n(), &edges, &alive);
        let dec = bridges_and_cutpoints(&g);
        for v in 0..g.n() {
            alive[v] = false;
            // Removing an isolated vertex drops a component; anything else
            // that raises the count marks a cutpoint.
            let after = count_components(g.n(), &edges, &alive) + usize::from(g.degree(v as Vertex) == 0);
            alive[v] = true;
            prop_assert_eq!(after > base, dec.cutpoints.contains(&(v as Vertex)), "vertex {}", v);
        }
    }

    #[test]
    fn blocks_partition_the_edges(g in arb_graph(10)) {
        let dec = bridges_and_cutpoints(&g);
        let mut seen: Vec<usize> = dec.blocks.iter().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..g.edges().len()).collect::<Vec<_>>());
        let singles = dec.blocks.iter().filter(|b| b.len() == 1).count();
        prop_assert_eq!(singles, dec.bridges.len());
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph(12)) {
        let comps = connected_components(&g);
        let mut all: Vec<Vertex> = comps.iter().flat_map(|c| c.to_vec()).collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.n() as Vertex).collect::<Vec<_>>());
        let edges: Vec<_> = g.real_edges().collect();
        prop_assert_eq!(comps.len(), count_components(g.n(), &edges, &vec![true; g.n()]));
        for (u, v) in edges {
            prop_assert!(comps.iter().any(|c| c.contains(u) && c.contains(v)));
        }
    }

    #[test]
    fn induced_counts_agree(g in arb_graph(12), mask in any::<u16>()) {
        let vs: Vec<Vertex> = (0..g.n() as Vertex).filter(|&v| mask >> v & 1 == 1).collect();
        let set = VertexSet::from_vertices(g.n(), vs.iter().copied());
        let direct = g.real_edges().filter(|&(u, v)| set.contains(u) && set.contains(v)).count();
        prop_assert_eq!(induced_edge_count(&g, &set), direct);
        let (sub, map) = g.induced_subgraph(&vs);
        prop_assert_eq!(sub.real_edge_count(), direct);
        for (a, b) in sub.real_edges() {
            prop_assert!(g.has_real_edge(map[a as usize], map[b as usize]));
        }
    }

    #[test]
    fn fake_edges_are_never_counted(g in arb_graph(10), extra in proptest::collection::vec((any::<u8>(), any::<u8>()), 0..20), mask in any::<u16>()) {
        let n = g.n() as Vertex;
        let set = VertexSet::from_vertices(g.n(), (0..n).filter(|&v| mask >> v & 1 == 1));
        let before = induced_edge_count(&g, &set);
        let mut h = g.clone();
        for (a, b) in extra {
            let (u, v) = (a as Vertex % n, b as Vertex % n);
            if u != v {
                h.add_edge_kind(u, v, EdgeKind::Fake).unwrap();
            }
        }
        prop_assert_eq!(induced_edge_count(&h, &set), before);
        prop_assert_eq!(h.real_edge_count(), g.real_edge_count());
    }

    #[test]
    fn vertex_sets_behave_like_sets(n in 1usize..200, ops in proptest::collection::vec((any::<bool>(), any::<u8>()), 0..60)) {
        let mut s = VertexSet::new(n);
        let mut model = BTreeSet::new();
        for (add, x) in ops {
            let v = x as Vertex % n as Vertex;
            if add {
                s.insert(v);
                model.insert(v);
            } else {
                s.remove(v);
                model.remove(&v);
            }
        }
        prop_assert_eq!(s.len(), model.len());
        prop_assert_eq!(s.to_vec(), model.iter().copied().collect::<Vec<_>>());
    }
}

#[test]
fn loops_and_repeats_are_rejected() {
    assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
    assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
    assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
}
