use dks_core::gen::{gen_bouterplanar, gen_planar, GenSpec, Instance};
use dks_core::graph::EdgeKind;
use dks_core::levels::{compute_levels, triangulate, LeveledEmbedding, ZipOrder};
use dks_core::plane::{Dart, PlaneGraph};

fn instances() -> Vec<(String, Instance)> {
    let mut out = Vec::new();
    for seed in 0..120u64 {
        let b = 2 + (seed % 3) as u32;
        let n = 3 * (b as usize - 1) + 1 + seed as usize % 9;
        let spec = GenSpec::new(n, b, [0.4, 0.7, 1.0][seed as usize % 3], seed);
        out.push((format!("{spec:?}"), gen_bouterplanar(&spec).unwrap()));
        let spec = GenSpec::new(5 + seed as usize % 12, 0, 0.5, seed);
        out.push((format!("planar {spec:?}"), gen_planar(&spec).unwrap()));
    }
    out
}

fn face_vertices(plane: &PlaneGraph, d: Dart) -> Vec<u32> {
    plane.face_darts(d).into_iter().map(|x| plane.tail(x)).collect()
}

/// Levels read off the peeling definition one face at a time: level-1
/// vertices lie on the outer face, no face touches levels two apart, and
/// every deeper vertex shares a face with the level above.
fn check_levels(plane: &PlaneGraph, outer: Dart, level: &[u32], what: &str) {
    for v in face_vertices(plane, outer) {
        assert_eq!(level[v as usize], 1, "{what}");
    }
    let (face, nf) = plane.faces();
    let mut rep = vec![usize::MAX; nf];
    for d in 0..plane.dart_count() {
        rep[face[d]] = rep[face[d]].min(d);
    }
    let mut touches_above = vec![false; plane.n()];
    for &d in &rep {
        let vs = face_vertices(plane, d);
        let lo = vs.iter().map(|&v| level[v as usize]).min().unwrap();
        let hi = vs.iter().map(|&v| level[v as usize]).max().unwrap();
        assert!(hi <= lo + 1, "{what}: face spans levels {lo}..{hi}");
        if face[d] != face[outer] {
            for &v in &vs {
                if level[v as usize] == lo + 1 {
                    touches_above[v as usize] = true;
                }
            }
        }
    }
    let outer_set = face_vertices(plane, outer);
    for v in 0..plane.n() as u32 {
        if level[v as usize] > 1 {
            assert!(!outer_set.contains(&v), "{what}");
            assert!(touches_above[v as usize] || plane.degree(v) == 0, "{what}: vertex {v}");
        }
    }
}

#[test]
fn levels_follow_the_peeling_definition() {
    for (what, inst) in instances() {
        let (plane, outer) = inst.plane().unwrap();
        let level = compute_levels(&plane, outer);
        check_levels(&plane, outer, &level, &what);
    }
}

#[test]
fn generated_instances_have_the_requested_depth() {
    for seed in 0..150u64 {
        let b = 2 + (seed % 3) as u32;
        let spec = GenSpec::new(3 * (b as usize - 1) + 1 + seed as usize % 9, b, 0.6, seed);
        let inst = gen_bouterplanar(&spec).unwrap();
        let (plane, outer) = inst.plane().unwrap();
        assert_eq!(compute_levels(&plane, outer).into_iter().max(), Some(b), "{spec:?}");
    }
}

#[test]
fn triangulation_adds_only_fake_edges_between_adjacent_levels() {
    for order in [ZipOrder::OuterFirst, ZipOrder::InnerFirst] {
        for (what, inst) in instances() {
            let (plane, outer) = inst.plane().unwrap();
            let mut le = LeveledEmbedding::new(&plane, outer).unwrap();
            triangulate(&mut le, order).unwrap();
            let p = &le.plane;
            assert!(p.is_plane(), "{what}");
            let real = (0..p.edge_count()).filter(|&e| p.kind(2 * e) == EdgeKind::Real).count();
            assert_eq!(real, inst.graph.real_edge_count(), "{what}");
            for e in 0..p.edge_count() {
                let (u, v) = (p.tail(2 * e), p.head(2 * e));
                let (lu, lv) = (le.level[u as usize], le.level[v as usize]);
                assert!(lu.abs_diff(lv) <= 1, "{what}: edge {u}-{v} spans levels {lu},{lv}");
            }
            // Every face meeting two levels is now a triangle.
            let (face, nf) = p.faces();
            let mut seen = vec![false; nf];
            for d in 0..p.dart_count() {
                if std::mem::replace(&mut seen[face[d]], true) {
                    continue;
                }
                let vs = face_vertices(p, d);
                let lo = vs.iter().map(|&v| le.level[v as usize]).min().unwrap();
                let hi = vs.iter().map(|&v| le.level[v as usize]).max().unwrap();
                if lo != hi {
                    assert_eq!(vs.len(), 3, "{what}: face {vs:?}");
                }
            }
            check_levels(p, le.outer_dart, &le.level, &what);
        }
    }
}

/// Whether some zip of the face at `d` (a monotone path of rungs between
/// its two level arcs) avoids every edge already present.
fn face_has_clean_zip(plane: &PlaneGraph, level: &[u32], d: Dart) -> bool {
    let vs = face_vertices(plane, d);
    let len = vs.len();
    let lv: Vec<u32> = vs.iter().map(|&v| level[v as usize]).collect();
    let lo = *lv.iter().min().unwrap();
    let start = (0..len)
        .find(|&i| lv[i] == lo && lv[(i + len - 1) % len] != lo)
        .unwrap();
    let walk: Vec<u32> = (0..len).map(|i| vs[(start + i) % len]).collect();
    let split = walk.iter().take_while(|&&v| level[v as usize] == lo).count();
    let (p, q) = walk.split_at(split);
    let s = p.len() - 1;
    fn dfs(plane: &PlaneGraph, p: &[u32], q: &[u32], a: usize, b: usize) -> bool {
        let t = q.len() - 1;
        if (a, b) == (0, t) {
            return true;
        }
        let step =
            |a2: usize, b2: usize| ((a2, b2) == (0, t) || !plane.has_edge(p[a2], q[b2])) && dfs(plane, p, q, a2, b2);
        (a > 0 && step(a - 1, b)) || (b < t && step(a, b + 1))
    }
    dfs(plane, p, q, s, 0)
}

#[test]
fn fake_edges_parallel_real_ones_only_when_no_clean_zip_exists() {
    let mut forced = 0;
    for (what, inst) in instances() {
        let (plane, outer) = inst.plane().unwrap();
        let mut le = LeveledEmbedding::new(&plane, outer).unwrap();
        let before = le.plane.clone();
        let (face, nf) = before.faces();
        let mut seen = vec![false; nf];
        let mut clean = true;
        for d in 0..before.dart_count() {
            if std::mem::replace(&mut seen[face[d]], true) {
                continue;
            }
            let lvs: Vec<u32> = face_vertices(&before, d)
                .iter()
                .map(|&v| le.level[v as usize])
                .collect();
            if lvs.iter().min() != lvs.iter().max() && !face_has_clean_zip(&before, &le.level, d) {
                clean = false;
            }
        }
        triangulate(&mut le, ZipOrder::OuterFirst).unwrap();
        let p = &le.plane;
        let parallel = (0..p.edge_count())
            .any(|e| p.kind(2 * e) == EdgeKind::Fake && p.has_real_edge(p.tail(2 * e), p.head(2 * e)));
        if clean {
            assert!(!parallel, "{what}");
        } else {
            forced += 1;
        }
    }
    println!("{forced} instances have a face without a clean zip");
}
