//! One entry point over both dynamic programs.
//!
//! Outerplanar inputs go to the edge-table program. Everything else is
//! embedded (or takes the embedding it comes with), leveled and handed to
//! the boundary-table program.

use alloc::vec;
use alloc::vec::Vec;

use crate::bouter::{build_forest, solve_bouterplanar, BouterOptions, BouterSolution};
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, Vertex, VertexSet};
use crate::outerplanar::{solve_outerplanar, OuterplanarOptions, OuterplanarSolution};
use crate::planarity::{outer_face, planar_rotation};
use crate::plane::{Dart, PlaneGraph};
use crate::slices::SliceForest;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverKind {
    Outerplanar,
    Bouterplanar,
}

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    /// Skip detection and use this solver.
    pub force: Option<SolverKind>,
    pub witness: bool,
    pub outerplanar: OuterplanarOptions,
    pub bouter: BouterOptions,
}

/// An embedding supplied with the input.
#[derive(Debug, Clone, Default)]
pub struct GivenEmbedding {
    pub rotation: Option<Vec<Vec<Vertex>>>,
    /// Vertices of the outer face in walk order, either orientation.
    pub outer_face: Option<Vec<Vertex>>,
}

#[derive(Debug, Clone)]
pub enum Detail {
    Outerplanar(OuterplanarSolution),
    Bouterplanar(BouterSolution),
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub solver: SolverKind,
    /// Optimum edge count for every `k' = 0..=k`.
    pub values: Vec<u32>,
    /// One optimal vertex set per `k'`, when requested.
    pub witnesses: Vec<VertexSet>,
    /// Number of levels (1 for the outerplanar solver).
    pub depth: u32,
    /// Table cells allocated.
    pub cells: usize,
    pub detail: Detail,
}

/// Solves every size up to `k`, picking the solver as described above.
pub fn solve(g: &Graph, emb: &GivenEmbedding, k: usize, opts: &SolveOptions) -> Result<SolveReport> {
    if k > g.n() {
        return Err(Error::KTooLarge { k, n: g.n() });
    }
    if opts.force != Some(SolverKind::Bouterplanar) {
        let op = OuterplanarOptions {
            witness: opts.witness,
            ..opts.outerplanar.clone()
        };
        match solve_outerplanar(g, k, &op) {
            Ok(sol) => {
                return Ok(SolveReport {
                    solver: SolverKind::Outerplanar,
                    values: sol.values.clone(),
                    witnesses: sol.witnesses.clone(),
                    depth: 1,
                    cells: sol.cells,
                    detail: Detail::Outerplanar(sol),
                })
            }
            Err(e) if opts.force == Some(SolverKind::Outerplanar) => return Err(e),
            Err(Error::NotOuterplanar) => {}
            Err(e) => return Err(e),
        }
    }
    let rotation = rotation_for(g, emb)?;
    let outer = |plane: &PlaneGraph, back: &[Vertex]| pick_outer(emb, plane, back);
    let sol = solve_bouterplanar(g, &rotation, &outer, k, &opts.bouter)?;
    let witnesses = if opts.witness {
        (0..=k)
            .map(|kk| reduce_witness(g, &rotation, kk, sol.values[kk]))
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    Ok(SolveReport {
        solver: SolverKind::Bouterplanar,
        values: sol.values.clone(),
        witnesses,
        depth: sol.depth,
        cells: sol.cells,
        detail: Detail::Bouterplanar(sol),
    })
}

/// The given rotation after checking it, or a computed one.
pub fn rotation_for(g: &Graph, emb: &GivenEmbedding) -> Result<Vec<Vec<Vertex>>> {
    match &emb.rotation {
        Some(r) => {
            let plane = PlaneGraph::from_rotation(g, r)?;
            if !plane.is_plane() {
                return Err(Error::EmbeddingInconsistent("rotation is not a plane embedding"));
            }
            Ok(r.clone())
        }
        None => planar_rotation(g),
    }
}

/// Outer dart of one component: the given face when it lies in the
/// component, else the longest face.
fn pick_outer(emb: &GivenEmbedding, plane: &PlaneGraph, back: &[Vertex]) -> Result<Dart> {
    match &emb.outer_face {
        Some(face) if back.contains(&face[0]) => given_face(plane, back, face),
        _ => Ok(outer_face(plane)),
    }
}

/// The leveled, triangulated slice forest of every component with more than
/// one vertex, with the input vertex behind each local one.
pub fn leveled_components(
    g: &Graph,
    emb: &GivenEmbedding,
    opts: &BouterOptions,
) -> Result<Vec<(Vec<Vertex>, SliceForest)>> {
    let rotation = rotation_for(g, emb)?;
    let mut local = vec![Vertex::MAX; g.n()];
    let mut out = Vec::new();
    for comp in connected_components(g) {
        let (sub, map) = g.induced_subgraph(&comp.to_vec());
        if sub.n() < 2 {
            continue;
        }
        for (i, &v) in map.iter().enumerate() {
            local[v as usize] = i as Vertex;
        }
        let rot: Vec<Vec<Vertex>> = map
            .iter()
            .map(|&v| rotation[v as usize].iter().map(|&w| local[w as usize]).collect())
            .collect();
        let plane = PlaneGraph::from_rotation(&sub, &rot)?;
        let d = pick_outer(emb, &plane, &map)?;
        out.push((map, build_forest(&plane, d, opts)?));
    }
    Ok(out)
}

/// The dart whose left face walks `face` (given in input labels).
fn given_face(plane: &PlaneGraph, back: &[Vertex], face: &[Vertex]) -> Result<Dart> {
    let local: Option<Vec<Vertex>> = face
        .iter()
        .map(|v| back.iter().position(|w| w == v).map(|i| i as Vertex))
        .collect();
    let local = local.ok_or(Error::EmbeddingInconsistent("outer face spans several components"))?;
    if local.len() == 1 {
        return Ok(outer_face(plane));
    }
    let mut reversed = local.clone();
    reversed.reverse();
    for walk in [&local, &reversed] {
        for d in plane.darts_around(walk[0]) {
            if plane.head(d) != walk[1] {
                continue;
            }
            let tails: Vec<Vertex> = plane.face_darts(d).iter().map(|&x| plane.tail(x)).collect();
            if &tails == walk {
                return Ok(d);
            }
        }
    }
    Err(Error::EmbeddingInconsistent("outer face is not a face of the rotation"))
}

/// An optimal `k`-set found by deleting vertices while the optimum survives.
fn reduce_witness(g: &Graph, rotation: &[Vec<Vertex>], k: usize, target: u32) -> Result<VertexSet> {
    let n = g.n();
    let mut alive = VertexSet::full(n);
    let outer = |p: &PlaneGraph, _: &[Vertex]| Ok(outer_face(p));
    for v in 0..n as Vertex {
        if alive.len() == k {
            break;
        }
        alive.remove(v);
        let keep = alive.to_vec();
        let (sub, map) = g.induced_subgraph(&keep);
        let mut local = vec![Vertex::MAX; n];
        for (i, &w) in map.iter().enumerate() {
            local[w as usize] = i as Vertex;
        }
        let rot: Vec<Vec<Vertex>> = map
            .iter()
            .map(|&w| {
                rotation[w as usize]
                    .iter()
                    .filter(|&&x| alive.contains(x))
                    .map(|&x| local[x as usize])
                    .collect()
            })
            .collect();
        let best = solve_bouterplanar(&sub, &rot, &outer, k, &BouterOptions::default())?.values[k];
        if best < target {
            alive.insert(v);
        }
    }
    Ok(alive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::induced_edge_count;

    #[test]
    fn k4_goes_to_the_leveled_solver() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let opts = SolveOptions {
            witness: true,
            ..Default::default()
        };
        let r = solve(&g, &GivenEmbedding::default(), 4, &opts).unwrap();
        assert_eq!(r.solver, SolverKind::Bouterplanar);
        assert_eq!(r.values, vec![0, 0, 1, 3, 6]);
        for (k, w) in r.witnesses.iter().enumerate() {
            assert_eq!(w.len(), k);
            assert_eq!(induced_edge_count(&g, w) as u32, r.values[k]);
        }
    }

    #[test]
    fn cycle_goes_to_the_outerplanar_solver() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let r = solve(&g, &GivenEmbedding::default(), 5, &SolveOptions::default()).unwrap();
        assert_eq!(r.solver, SolverKind::Outerplanar);
        assert_eq!(r.values, vec![0, 0, 1, 2, 3, 5]);
    }

    #[test]
    fn forced_leveled_solver_agrees() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let opts = SolveOptions {
            force: Some(SolverKind::Bouterplanar),
            ..Default::default()
        };
        let r = solve(&g, &GivenEmbedding::default(), 5, &opts).unwrap();
        assert_eq!(r.solver, SolverKind::Bouterplanar);
        assert_eq!(r.values, vec![0, 0, 1, 3, 4, 6]);
    }

    #[test]
    fn k5_is_not_solvable() {
        let mut es = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                es.push((u, v));
            }
        }
        let g = Graph::from_edges(5, &es).unwrap();
        let e = solve(&g, &GivenEmbedding::default(), 3, &SolveOptions::default()).unwrap_err();
        assert_eq!(e, Error::NotPlanar);
    }
}
