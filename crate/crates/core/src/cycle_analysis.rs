//! Bounded-length cycle enumeration, chord classification, cycle adjacency,
//! membership in the family `A` (no four pairwise edge-sharing cycles of
//! lengths 3, 4, 5, 6) and separating 3-cycles.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::plane_graph::{FaceId, GraphError, PlaneGraph, VertexId};

pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("cycle enumeration exceeded the cap of {0}")]
    LimitExceeded(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A simple cycle, canonicalized so the vertex sequence starts at its
/// smallest vertex and runs toward the smaller of the two neighbors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct EmbeddedCycle {
    pub vertices: Vec<VertexId>,
    pub edge_set: Vec<(VertexId, VertexId)>,
}

impl EmbeddedCycle {
    pub fn new(vertices: Vec<VertexId>) -> EmbeddedCycle {
        let mut edge_set: Vec<(VertexId, VertexId)> = vertices
            .iter()
            .zip(vertices.iter().cycle().skip(1))
            .map(|(&a, &b)| (a.min(b), a.max(b)))
            .collect();
        edge_set.sort_unstable();
        EmbeddedCycle { vertices, edge_set }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_set.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn shared_edges(&self, other: &EmbeddedCycle) -> Vec<(VertexId, VertexId)> {
        self.edge_set
            .iter()
            .filter(|&&(u, v)| other.contains_edge(u, v))
            .copied()
            .collect()
    }
}

/// Every simple cycle of length `3..=max_len`, each exactly once up to
/// rotation and reflection. Paths grow only through vertices larger than the
/// anchor, and a cycle is emitted in the direction that makes the second
/// vertex smaller than the last, which picks one representative per class.
pub fn enumerate_cycles(
    g: &PlaneGraph,
    max_len: usize,
    cap: usize,
) -> Result<Vec<EmbeddedCycle>, CycleError> {
    assert!((3..=8).contains(&max_len), "max_len must be in 3..=8");
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut path: Vec<VertexId> = Vec::with_capacity(max_len);
    let mut on_path = vec![false; n];
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        extend(g, s, max_len, cap, &mut path, &mut on_path, &mut out)?;
        on_path[s] = false;
        path.pop();
    }
    Ok(out)
}

fn extend(
    g: &PlaneGraph,
    anchor: VertexId,
    max_len: usize,
    cap: usize,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    out: &mut Vec<EmbeddedCycle>,
) -> Result<(), CycleError> {
    let last = *path.last().unwrap();
    for &u in g.neighbors(last) {
        if u == anchor && path.len() >= 3 && path[1] < last {
            if out.len() == cap {
                return Err(CycleError::LimitExceeded(cap));
            }
            out.push(EmbeddedCycle::new(path.clone()));
            continue;
        }
        if u > anchor && !on_path[u] && path.len() < max_len {
            path.push(u);
            on_path[u] = true;
            extend(g, anchor, max_len, cap, path, on_path, out)?;
            on_path[u] = false;
            path.pop();
        }
    }
    Ok(())
}

/// Cycles are adjacent when they share at least one edge. Sharing only a
/// vertex does not count.
pub fn cycles_adjacent(a: &EmbeddedCycle, b: &EmbeddedCycle) -> bool {
    a.edge_set.iter().any(|&(u, v)| b.contains_edge(u, v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChordSide {
    Internal,
    External,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChordClassification {
    pub chord: (VertexId, VertexId),
    pub side: ChordSide,
    pub triangular: bool,
}

/// The two face regions separated by an embedded cycle: `with_reference`
/// holds the faces on the same side as the reference (outer) face.
pub struct CycleSides {
    pub with_reference: Vec<FaceId>,
    pub opposite: Vec<FaceId>,
}

/// Splits the faces of `g` into the two regions bounded by `cycle`. The
/// reference face is the designated outer face, or face 0 when none is set.
pub fn cycle_sides(g: &PlaneGraph, cycle: &EmbeddedCycle) -> CycleSides {
    let reference = g.outer_face().unwrap_or(0);
    let k = cycle.len();
    let mut side = vec![u8::MAX; g.faces().len()];
    let mut queue = Vec::new();
    for i in 0..k {
        let u = cycle.vertices[i];
        let v = cycle.vertices[(i + 1) % k];
        let d = g.dart_between(u, v).expect("cycle edge must exist");
        for (dart, tag) in [(d, 0u8), (g.twin(d), 1u8)] {
            let f = g.dart_face(dart);
            assert_ne!(side[f], 1 - tag, "face on both sides of a cycle");
            if side[f] == u8::MAX {
                side[f] = tag;
                queue.push(f);
            }
        }
    }
    while let Some(f) = queue.pop() {
        let tag = side[f];
        for &d in &g.face(f).boundary_walk {
            let u = g.dart_origin(d);
            let v = g.dart_target(d);
            if cycle.contains_edge(u, v) {
                continue;
            }
            let other = g.dart_face(g.twin(d));
            if side[other] == u8::MAX {
                side[other] = tag;
                queue.push(other);
            } else {
                assert_eq!(side[other], tag, "cycle regions merged");
            }
        }
    }
    let ref_tag = side[reference];
    debug_assert_ne!(ref_tag, u8::MAX);
    let mut with_reference = Vec::new();
    let mut opposite = Vec::new();
    for (f, &t) in side.iter().enumerate() {
        debug_assert_ne!(t, u8::MAX, "every face lies on one side");
        if t == ref_tag {
            with_reference.push(f);
        } else {
            opposite.push(f);
        }
    }
    CycleSides { with_reference, opposite }
}

/// Vertices strictly inside / outside `cycle`, relative to the designated
/// outer face (inside = the side away from it).
pub fn cycle_interior_exterior(
    g: &PlaneGraph,
    cycle: &EmbeddedCycle,
) -> (Vec<VertexId>, Vec<VertexId>) {
    let sides = cycle_sides(g, cycle);
    let mut inner_face = vec![false; g.faces().len()];
    for &f in &sides.opposite {
        inner_face[f] = true;
    }
    let on_cycle: BTreeSet<VertexId> = cycle.vertices.iter().copied().collect();
    let mut interior = Vec::new();
    let mut exterior = Vec::new();
    for v in 0..g.vertex_count() {
        if on_cycle.contains(&v) {
            continue;
        }
        let faces = g.incident_faces(v).unwrap();
        if faces.iter().any(|&f| inner_face[f]) {
            interior.push(v);
        } else {
            exterior.push(v);
        }
    }
    (interior, exterior)
}

/// Classifies every chord of `cycle`: an edge between two cycle vertices
/// that is not a cycle edge. The side is read off the embedding, relative
/// to the outer face (or face 0 when none is designated); `triangular`
/// means the chord closes a 3-cycle with two cycle edges.
pub fn classify_chords(g: &PlaneGraph, cycle: &EmbeddedCycle) -> Vec<ChordClassification> {
    let k = cycle.len();
    let pos: std::collections::BTreeMap<VertexId, usize> = cycle
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let mut chords = Vec::new();
    for (i, &u) in cycle.vertices.iter().enumerate() {
        for &v in g.neighbors(u) {
            if v <= u {
                continue;
            }
            if let Some(&j) = pos.get(&v) {
                if cycle.contains_edge(u, v) {
                    continue;
                }
                let dist = (i as i64 - j as i64).rem_euclid(k as i64) as usize;
                let triangular = dist == 2 || dist == k - 2;
                chords.push(((u, v), triangular));
            }
        }
    }
    if chords.is_empty() {
        return vec![];
    }
    let sides = cycle_sides(g, cycle);
    let mut external_face = vec![false; g.faces().len()];
    for &f in &sides.with_reference {
        external_face[f] = true;
    }
    chords
        .into_iter()
        .map(|((u, v), triangular)| {
            let d = g.dart_between(u, v).unwrap();
            let side = if external_face[g.dart_face(d)] {
                ChordSide::External
            } else {
                ChordSide::Internal
            };
            ChordClassification { chord: (u, v), side, triangular }
        })
        .collect()
}

/// Four pairwise adjacent cycles of lengths exactly 3, 4, 5 and 6.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyAWitness {
    pub c3: EmbeddedCycle,
    pub c4: EmbeddedCycle,
    pub c5: EmbeddedCycle,
    pub c6: EmbeddedCycle,
}

impl FamilyAWitness {
    pub fn cycles(&self) -> [&EmbeddedCycle; 4] {
        [&self.c3, &self.c4, &self.c5, &self.c6]
    }

    /// The six pairwise shared edge sets; all must be nonempty.
    pub fn pairwise_shared_edges(&self) -> Vec<Vec<(VertexId, VertexId)>> {
        let cs = self.cycles();
        let mut out = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                out.push(cs[i].shared_edges(cs[j]));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub enum FamilyAVerdict {
    Member,
    Witness(FamilyAWitness),
}

impl FamilyAVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, FamilyAVerdict::Member)
    }
}

/// Decides membership in the family `A`: planar graphs with no pairwise
/// adjacent 3-, 4-, 5- and 6-cycle. Returns the first witness quadruple in
/// canonical cycle order otherwise.
pub fn in_family_a(g: &PlaneGraph) -> Result<FamilyAVerdict, CycleError> {
    in_family_a_capped(g, DEFAULT_CYCLE_CAP)
}

pub fn in_family_a_capped(g: &PlaneGraph, cap: usize) -> Result<FamilyAVerdict, CycleError> {
    let mut cycles = enumerate_cycles(g, 6, cap)?;
    cycles.sort();
    let by_len = |l: usize| -> Vec<&EmbeddedCycle> {
        cycles.iter().filter(|c| c.len() == l).collect()
    };
    let c3s = by_len(3);
    let c4s = by_len(4);
    let c5s = by_len(5);
    let c6s = by_len(6);
    if c3s.is_empty() || c4s.is_empty() || c5s.is_empty() || c6s.is_empty() {
        return Ok(FamilyAVerdict::Member);
    }
    for c3 in &c3s {
        for c4 in &c4s {
            if !cycles_adjacent(c3, c4) {
                continue;
            }
            for c5 in &c5s {
                if !cycles_adjacent(c3, c5) || !cycles_adjacent(c4, c5) {
                    continue;
                }
                for c6 in &c6s {
                    if cycles_adjacent(c3, c6)
                        && cycles_adjacent(c4, c6)
                        && cycles_adjacent(c5, c6)
                    {
                        return Ok(FamilyAVerdict::Witness(FamilyAWitness {
                            c3: (*c3).clone(),
                            c4: (*c4).clone(),
                            c5: (*c5).clone(),
                            c6: (*c6).clone(),
                        }));
                    }
                }
            }
        }
    }
    Ok(FamilyAVerdict::Member)
}

#[derive(Debug, Clone, Serialize)]
pub struct SeparatingCycle {
    pub cycle: EmbeddedCycle,
    pub interior: Vec<VertexId>,
    pub exterior: Vec<VertexId>,
}

/// Every 3-cycle with vertices strictly on both sides, relative to the
/// designated outer face.
pub fn find_separating_3cycles(g: &PlaneGraph) -> Result<Vec<SeparatingCycle>, CycleError> {
    if g.outer_face().is_none() {
        return Err(GraphError::MissingOuterFace.into());
    }
    let mut cycles = enumerate_cycles(g, 3, DEFAULT_CYCLE_CAP)?;
    cycles.sort();
    let mut out = Vec::new();
    for cycle in cycles {
        let (interior, exterior) = cycle_interior_exterior(g, &cycle);
        if !interior.is_empty() && !exterior.is_empty() {
            out.push(SeparatingCycle { cycle, interior, exterior });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config_catalog::{build_pattern, ConfigPattern};
    use crate::plane_graph::tests_support::{cube, k4, triangle};

    #[test]
    fn k4_cycle_census() {
        let g = k4();
        let cycles = enumerate_cycles(&g, 6, DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
        assert_eq!(cycles.iter().filter(|c| c.len() > 4).count(), 0);
    }

    #[test]
    fn triangle_single_cycle() {
        let g = triangle();
        let cycles = enumerate_cycles(&g, 6, DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices, vec![0, 1, 2]);
    }

    #[test]
    fn cube_cycles() {
        let g = cube();
        let cycles = enumerate_cycles(&g, 4, DEFAULT_CYCLE_CAP).unwrap();
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 0);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 6);
    }

    #[test]
    fn cap_is_enforced() {
        let g = k4();
        assert!(matches!(
            enumerate_cycles(&g, 6, 3),
            Err(CycleError::LimitExceeded(3))
        ));
    }

    #[test]
    fn adjacency_is_edge_sharing_and_symmetric() {
        let a = EmbeddedCycle::new(vec![0, 1, 2]);
        let b = EmbeddedCycle::new(vec![0, 1, 2, 3]);
        let c = EmbeddedCycle::new(vec![4, 5, 6]);
        let d = EmbeddedCycle::new(vec![2, 7, 8]);
        assert!(cycles_adjacent(&a, &b) && cycles_adjacent(&b, &a));
        assert!(!cycles_adjacent(&a, &c));
        // Sharing exactly one vertex is intersecting, not adjacent.
        assert!(!cycles_adjacent(&a, &d));
    }

    #[test]
    fn chords_of_six_cycle_with_triangular_chord() {
        // C(3,5): hexagon 0..5 with chord 0-2.
        let g = build_pattern(&ConfigPattern::C2(3, 5)).unwrap();
        let hexagon = EmbeddedCycle::new(vec![0, 1, 2, 3, 4, 5]);
        let chords = classify_chords(&g, &hexagon);
        assert_eq!(chords.len(), 1);
        assert_eq!(chords[0].chord, (0, 2));
        assert!(chords[0].triangular);
        assert_eq!(chords[0].side, ChordSide::Internal);
    }

    #[test]
    fn chordless_square_has_no_chords() {
        let g = PlaneGraph::build_from_rotation(
            vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]],
            None,
        )
        .unwrap();
        let square = EmbeddedCycle::new(vec![0, 1, 2, 3]);
        assert!(classify_chords(&g, &square).is_empty());
    }

    #[test]
    fn k4_outer_triangle_has_no_chords() {
        let g = k4();
        let outer = EmbeddedCycle::new(vec![0, 1, 2]);
        assert!(classify_chords(&g, &outer).is_empty());
    }

    #[test]
    fn k4_is_in_family_a() {
        assert!(in_family_a(&k4()).unwrap().is_member());
    }

    #[test]
    fn c334_has_witness() {
        let g = build_pattern(&ConfigPattern::C3(3, 3, 4)).unwrap();
        match in_family_a(&g).unwrap() {
            FamilyAVerdict::Witness(w) => {
                for shared in w.pairwise_shared_edges() {
                    assert!(!shared.is_empty());
                }
                assert_eq!(w.c3.len(), 3);
                assert_eq!(w.c4.len(), 4);
                assert_eq!(w.c5.len(), 5);
                assert_eq!(w.c6.len(), 6);
            }
            FamilyAVerdict::Member => panic!("C(3,3,4) must leave the family"),
        }
    }

    #[test]
    fn k4_has_no_separating_3cycles() {
        let mut g = k4();
        g.designate_outer([0, 1, 2]).unwrap();
        assert!(find_separating_3cycles(&g).unwrap().is_empty());
    }

    #[test]
    fn hub_plus_pocket_vertex_separates() {
        // Triangle 0,1,2 with hub 3 on 0,1,2 and an extra vertex 4 joined to
        // 0,1 inside face {0,1,3}: the 3-cycle 0,1,3 separates 4 from 2.
        let mut g = PlaneGraph::build_from_rotation(
            vec![
                vec![1, 4, 3, 2],
                vec![2, 3, 4, 0],
                vec![0, 3, 1],
                vec![0, 1, 2],
                vec![0, 1],
            ],
            None,
        )
        .unwrap();
        g.designate_outer([0, 1, 2]).unwrap();
        let seps = find_separating_3cycles(&g).unwrap();
        assert_eq!(seps.len(), 1);
        assert_eq!(seps[0].cycle.vertices, vec![0, 1, 3]);
        assert_eq!(seps[0].interior, vec![4]);
        assert_eq!(seps[0].exterior, vec![2]);
    }

    #[test]
    fn plain_triangle_has_no_separating_cycles() {
        let mut g = triangle();
        g.designate_outer([0, 1, 2]).unwrap();
        assert!(find_separating_3cycles(&g).unwrap().is_empty());
    }
}
