use std::collections::BTreeMap;

use dks_core::bouter::{solve_bouterplanar, BouterOptions};
use dks_core::gen::{gen_outerplanar, gen_outerplanar_blocks, GenSpec};
use dks_core::graph::{induced_edge_count, Graph, Vertex};
use dks_core::oracle::{brute_force_all, DEFAULT_CAP};
use dks_core::outerplanar::{prepare, row, solve_component, solve_outerplanar, OuterplanarOptions};
use dks_core::planarity::outer_face;
use dks_core::plane::PlaneGraph;
use dks_core::value::Value;
use proptest::prelude::*;

fn instance(seed: u64) -> Graph {
    let n = 4 + seed as usize % 9;
    let rho = (seed % 5) as f64 / 4.0;
    if seed.is_multiple_of(3) {
        gen_outerplanar_blocks(&GenSpec::new(n, 1, rho, seed)).unwrap()
    } else {
        gen_outerplanar(&GenSpec::new(n, 1, rho, seed)).unwrap().graph
    }
}

#[test]
fn matches_the_oracle_with_witnesses() {
    for seed in 0..150 {
        let g = instance(seed);
        let n = g.n();
        let opts = OuterplanarOptions {
            witness: true,
            ..Default::default()
        };
        let sol = solve_outerplanar(&g, n, &opts).unwrap();
        let want = brute_force_all(&g, DEFAULT_CAP).unwrap().values;
        assert_eq!(sol.values, want, "seed {seed}");
        for (k, w) in sol.witnesses.iter().enumerate() {
            assert_eq!(w.len(), k, "seed {seed} k {k}");
            assert_eq!(induced_edge_count(&g, w) as u32, want[k], "seed {seed} k {k}");
        }
    }
}

#[test]
fn values_grow_with_k_and_end_at_m() {
    for seed in 0..100 {
        let g = instance(seed);
        let v = solve_outerplanar(&g, g.n(), &OuterplanarOptions::default())
            .unwrap()
            .values;
        assert!(v.windows(2).all(|w| w[0] <= w[1]), "seed {seed}");
        assert_eq!(*v.last().unwrap() as usize, g.real_edge_count());
    }
}

#[test]
fn every_root_gives_the_same_answer() {
    for seed in 0..60 {
        let inst = gen_outerplanar(&GenSpec::new(5 + seed as usize % 8, 1, 0.6, seed)).unwrap();
        let g = &inst.graph;
        let prep = prepare(g, None).unwrap();
        let walk = prep.plane.face_darts(prep.root_dart.unwrap());
        let base = solve_outerplanar(g, g.n(), &OuterplanarOptions::default())
            .unwrap()
            .values;
        let mut roots = 0;
        for &d in walk.iter().step_by(1.max(walk.len() / 6)) {
            let root = Some((prep.plane.tail(d), prep.plane.head(d)));
            let opts = OuterplanarOptions {
                root,
                ..Default::default()
            };
            assert_eq!(solve_outerplanar(g, g.n(), &opts).unwrap().values, base, "seed {seed}");
            roots += 1;
        }
        assert!(roots >= 5);
    }
}

/// Node tables keyed by label.
fn node_tables(g: &Graph, root: (Vertex, Vertex)) -> BTreeMap<(Vertex, Vertex), [Vec<Value>; 4]> {
    let prep = prepare(g, Some(root)).unwrap();
    let opts = OuterplanarOptions {
        dump: true,
        ..Default::default()
    };
    let sol = solve_component(&prep, g.n(), &opts);
    sol.records
        .iter()
        .filter(|r| r.is_node_table)
        .map(|r| ((r.table.x, r.table.y), r.table.cells.clone()))
        .collect()
}

#[test]
fn mirrored_trees_give_transposed_tables() {
    for seed in 0..60 {
        let inst = gen_outerplanar(&GenSpec::new(4 + seed as usize % 9, 1, 0.7, seed)).unwrap();
        let g = &inst.graph;
        let prep = prepare(g, None).unwrap();
        let plane = &prep.plane;
        // A root vertex without chords keeps the root face the same in both
        // orientations.
        let walk = plane.face_darts(prep.root_dart.unwrap());
        let i = (0..walk.len()).find(|&i| g.degree(plane.tail(walk[i])) == 2).unwrap();
        let d = walk[i];
        let before = walk[(i + walk.len() - 1) % walk.len()];
        let z = plane.tail(d);
        let a = node_tables(g, (z, plane.head(d)));
        let b = node_tables(g, (z, plane.tail(before)));
        assert_eq!(a.len(), b.len());
        for (&(x, y), cells) in &a {
            let other = &b[&(y, x)];
            for (bx, by) in [(false, false), (false, true), (true, false), (true, true)] {
                assert_eq!(cells[row(bx, by)], other[row(by, bx)], "seed {seed} node ({x},{y})");
            }
        }
    }
}

#[test]
fn defined_cells_respect_the_outerplanar_edge_bound() {
    for seed in 0..80 {
        let inst = gen_outerplanar(&GenSpec::new(4 + seed as usize % 9, 1, 1.0, seed)).unwrap();
        let g = &inst.graph;
        let prep = prepare(g, None).unwrap();
        let opts = OuterplanarOptions {
            dump: true,
            ..Default::default()
        };
        for rec in solve_component(&prep, g.n(), &opts).records {
            for r in &rec.table.cells {
                for (k, v) in r.iter().enumerate() {
                    if let Some(v) = v.get() {
                        let bound = if k >= 2 { 2 * k - 3 } else { 0 };
                        assert!(v as usize <= bound, "seed {seed} k {k}");
                    }
                }
            }
        }
    }
}

#[test]
fn leveled_solver_agrees_on_outerplanar_inputs() {
    for seed in 0..100 {
        let inst = gen_outerplanar(&GenSpec::new(4 + seed as usize % 9, 1, (seed % 5) as f64 / 4.0, seed)).unwrap();
        let g = &inst.graph;
        let outer = |p: &PlaneGraph, _: &[Vertex]| Ok(outer_face(p));
        let sol = solve_bouterplanar(g, &inst.rotation, &outer, g.n(), &BouterOptions::default()).unwrap();
        assert_eq!(sol.depth, 1);
        let want = solve_outerplanar(g, g.n(), &OuterplanarOptions::default())
            .unwrap()
            .values;
        assert_eq!(sol.values, want, "seed {seed}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_instances_match_the_oracle(seed in any::<u64>(), n in 1usize..14, rho in 0.0f64..=1.0) {
        let g = gen_outerplanar_blocks(&GenSpec::new(n, 1, rho, seed)).unwrap();
        let got = solve_outerplanar(&g, g.n(), &OuterplanarOptions::default()).unwrap().values;
        prop_assert_eq!(got, brute_force_all(&g, DEFAULT_CAP).unwrap().values);
    }
}
