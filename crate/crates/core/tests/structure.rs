#[path = "support/structure.rs"]
mod structure;

use dks_core::bouter::{build_forest, BouterOptions};
use dks_core::gen::{gen_bouterplanar, gen_outerplanar, gen_planar, GenSpec};
use dks_core::levels::ZipOrder;

#[test]
fn generated_forests_satisfy_the_structural_invariants() {
    let mut deep = 0;
    for seed in 0..150u64 {
        let b = 2 + (seed % 3) as u32;
        let n = 3 * (b as usize - 1) + 1 + seed as usize % 12;
        let spec = GenSpec::new(n, b, [0.4, 0.7, 1.0][seed as usize % 3], seed);
        let leveled = gen_bouterplanar(&spec).unwrap();
        let planar = gen_planar(&GenSpec::new(4 + seed as usize % 14, 0, 0.5, seed)).unwrap();
        for (what, inst) in [(format!("{spec:?}"), leveled), (format!("planar seed {seed}"), planar)] {
            let (plane, d) = inst.plane().unwrap();
            for order in [ZipOrder::OuterFirst, ZipOrder::InnerFirst] {
                for root in [None, Some(seed as usize)] {
                    let opts = BouterOptions {
                        order,
                        root,
                        ..Default::default()
                    };
                    let f = build_forest(&plane, d, &opts).unwrap();
                    deep += (0..f.trees.len()).filter(|&c| f.level(c) > 1).count();
                    if let Err(e) = structure::check_forest(&f) {
                        panic!("{what} {order:?} root {root:?}: {e}");
                    }
                }
            }
        }
    }
    assert!(deep > 1000, "only {deep} deeper components");
}

#[test]
fn biconnected_outerplanar_trees_have_one_node_per_edge_plus_one() {
    for seed in 0..100u64 {
        let inst = gen_outerplanar(&GenSpec::new(3 + seed as usize % 12, 1, (seed % 5) as f64 / 4.0, seed)).unwrap();
        let (plane, d) = inst.plane().unwrap();
        let f = build_forest(&plane, d, &BouterOptions::default()).unwrap();
        assert_eq!(f.trees.len(), 1);
        assert_eq!(f.trees[0].len(), inst.graph.real_edge_count() + 1, "seed {seed}");
        structure::check_forest(&f).unwrap();
    }
}
