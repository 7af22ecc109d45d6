use dks_core::bouter::{build_forest, solve_forest, BouterOptions};
use dks_core::gen::{gen_bouterplanar, gen_planar, GenSpec, Instance};
use dks_core::graph::induced_edge_count;
use dks_core::levels::ZipOrder;
use dks_core::oracle::{brute_force_all, brute_force_slice_table, DEFAULT_CAP};
use dks_core::solve::{solve, GivenEmbedding, SolveOptions, SolverKind};
use dks_core::value::Value;
use proptest::prelude::*;

fn instance(seed: u64, b: u32) -> (GenSpec, Instance) {
    let n = 3 * (b as usize - 1) + 1 + seed as usize % 9;
    let spec = GenSpec::new(n, b, [0.5, 0.8, 1.0][seed as usize % 3], seed);
    let inst = gen_bouterplanar(&spec).unwrap();
    (spec, inst)
}

fn values(inst: &Instance, opts: &BouterOptions) -> Vec<Value> {
    let (plane, d) = inst.plane().unwrap();
    let f = build_forest(&plane, d, opts).unwrap();
    solve_forest(&f, inst.graph.n(), opts).unwrap().values
}

#[test]
fn values_and_slice_tables_match_the_oracle() {
    for seed in 0..100u64 {
        for b in 2..=4 {
            let (spec, inst) = instance(seed, b);
            let n = inst.graph.n();
            let (plane, d) = inst.plane().unwrap();
            let opts = BouterOptions {
                dump: true,
                ..Default::default()
            };
            let f = build_forest(&plane, d, &opts).unwrap();
            let sol = solve_forest(&f, n, &opts).unwrap();
            let want = brute_force_all(&inst.graph, DEFAULT_CAP).unwrap().values;
            let got: Vec<u32> = sol.values.iter().map(|v| v.get().unwrap()).collect();
            assert_eq!(got, want, "{spec:?}");
            assert_eq!(sol.calls, f.trees.iter().map(|t| t.len()).sum::<usize>());
            for (at, t) in &sol.tables {
                let s = f.materialize_slice(*at);
                let oracle = brute_force_slice_table(&s.vertices, &s.edges, &t.verts, n, DEFAULT_CAP).unwrap();
                for (mask, row) in oracle.iter().enumerate() {
                    assert_eq!(t.row(mask), &row[..], "{spec:?} at {at:?} mask {mask}");
                }
            }
        }
    }
}

#[test]
fn zip_order_does_not_change_values() {
    for seed in 0..120u64 {
        let (spec, inst) = instance(seed, 2 + (seed % 3) as u32);
        let outer = values(&inst, &BouterOptions::default());
        let inner = values(
            &inst,
            &BouterOptions {
                order: ZipOrder::InnerFirst,
                ..Default::default()
            },
        );
        assert_eq!(outer, inner, "{spec:?}");
    }
}

#[test]
fn root_position_does_not_change_values() {
    for seed in 0..60u64 {
        let (spec, inst) = instance(seed, 2 + (seed % 2) as u32);
        let base = values(&inst, &BouterOptions::default());
        for root in 1..6 {
            let opts = BouterOptions {
                root: Some(root),
                ..Default::default()
            };
            assert_eq!(values(&inst, &opts), base, "{spec:?} root {root}");
        }
    }
}

#[test]
fn planar_inputs_report_witnesses() {
    for seed in 0..80u64 {
        let inst = gen_planar(&GenSpec::new(4 + seed as usize % 10, 0, 0.6, seed)).unwrap();
        let g = &inst.graph;
        let emb = GivenEmbedding {
            rotation: Some(inst.rotation.clone()),
            outer_face: None,
        };
        let opts = SolveOptions {
            witness: true,
            force: Some(SolverKind::Bouterplanar),
            ..Default::default()
        };
        let rep = solve(g, &emb, g.n(), &opts).unwrap();
        let want = brute_force_all(g, DEFAULT_CAP).unwrap().values;
        assert_eq!(rep.values, want, "seed {seed}");
        for (k, w) in rep.witnesses.iter().enumerate() {
            assert_eq!(w.len(), k, "seed {seed}");
            assert_eq!(induced_edge_count(g, w) as u32, want[k], "seed {seed} k {k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_leveled_instances_match_the_oracle(seed in any::<u64>(), b in 2u32..=3, extra in 0usize..7, rho in 0.3f64..=1.0) {
        let spec = GenSpec::new(3 * (b as usize - 1) + 1 + extra, b, rho, seed);
        let inst = gen_bouterplanar(&spec).unwrap();
        let got: Vec<u32> = values(&inst, &BouterOptions::default()).iter().map(|v| v.get().unwrap()).collect();
        prop_assert_eq!(got, brute_force_all(&inst.graph, DEFAULT_CAP).unwrap().values);
    }
}
