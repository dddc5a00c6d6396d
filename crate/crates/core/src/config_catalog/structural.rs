//! The minimal-counterexample checklist. The scan reports violations rather
//! than failing: arbitrary graphs legitimately violate these properties, and
//! the discharging verdicts consume the report to annotate negative charges.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cycle_analysis::{find_separating_3cycles, CycleError, SeparatingCycle};
use crate::plane_graph::{FaceId, GraphError, PlaneGraph, VertexId};

use super::classify::{classify, Classification};

#[derive(Debug, Clone, Serialize)]
pub struct FacePairViolation {
    pub faces: (FaceId, FaceId),
    pub degrees: (usize, usize),
    pub shared_edges: Vec<(VertexId, VertexId)>,
    pub shared_vertices: Vec<VertexId>,
}

/// A recognized Figure-1 or Figure-2 gluing; face pairs wholly inside its
/// vertex set are sanctioned rather than reported.
#[derive(Debug, Clone, Serialize)]
pub struct RecognizedGluing {
    pub kind: &'static str,
    pub faces: (FaceId, FaceId),
    pub vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexPatternViolation {
    pub vertex: VertexId,
    pub triple: (usize, usize, usize),
}

#[derive(Debug, Clone, Serialize)]
pub struct W5AdjacencyViolation {
    pub hub: VertexId,
    pub face: FaceId,
    pub face_degree: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructuralReport {
    /// Vertices of degree at most 3 strictly inside the outer triangle.
    pub interior_small_vertices: Vec<(VertexId, usize)>,
    pub separating_3cycles: Vec<SeparatingCycle>,
    /// Bounded faces of degree at most 6 whose boundary is not a cycle.
    pub noncycle_small_faces: Vec<FaceId>,
    pub face_pair_violations: Vec<FacePairViolation>,
    pub recognized_gluings: Vec<RecognizedGluing>,
    pub vertex_pattern_violations: Vec<VertexPatternViolation>,
    pub w5_adjacency_violations: Vec<W5AdjacencyViolation>,
}

impl StructuralReport {
    pub fn is_clean(&self) -> bool {
        self.interior_small_vertices.is_empty()
            && self.separating_3cycles.is_empty()
            && self.noncycle_small_faces.is_empty()
            && self.face_pair_violations.is_empty()
            && self.vertex_pattern_violations.is_empty()
            && self.w5_adjacency_violations.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "interior 3-vertices: {}, separating 3-cycles: {}, non-cycle small faces: {}, \
             face-pair violations: {}, vertex patterns: {}, wheel adjacencies: {}",
            self.interior_small_vertices.len(),
            self.separating_3cycles.len(),
            self.noncycle_small_faces.len(),
            self.face_pair_violations.len(),
            self.vertex_pattern_violations.len(),
            self.w5_adjacency_violations.len(),
        )
    }
}

const FORBIDDEN_TRIPLES: [(usize, usize, usize); 5] =
    [(3, 3, 4), (3, 3, 5), (3, 4, 3), (3, 4, 4), (4, 3, 5)];

pub fn structural_scan(g: &PlaneGraph) -> Result<StructuralReport, CycleError> {
    let classification = classify(g).map_err(CycleError::Graph)?;
    structural_scan_with(g, &classification)
}

pub fn structural_scan_with(
    g: &PlaneGraph,
    classification: &Classification,
) -> Result<StructuralReport, CycleError> {
    let outer = g.outer_face().ok_or(GraphError::MissingOuterFace)?;
    let outer_vertices = g.face(outer).incident_vertices.clone();

    let interior_small_vertices: Vec<(VertexId, usize)> = (0..g.vertex_count())
        .filter(|v| !outer_vertices.contains(v))
        .map(|v| (v, g.degree(v).unwrap()))
        .filter(|&(_, d)| d <= 3)
        .collect();

    let separating_3cycles = find_separating_3cycles(g)?;

    let noncycle_small_faces: Vec<FaceId> = g
        .faces()
        .iter()
        .filter(|f| f.id != outer && f.degree <= 6 && !f.boundary_is_cycle)
        .map(|f| f.id)
        .collect();

    let (face_pair_violations, recognized_gluings) = scan_face_pairs(g);

    let mut vertex_pattern_violations = Vec::new();
    for v in 0..g.vertex_count() {
        if outer_vertices.contains(&v) {
            continue;
        }
        let slots = &classification.vertex(v).face_degrees;
        let k = slots.len();
        if k < 3 {
            continue;
        }
        let mut seen_triples = BTreeSet::new();
        for i in 0..k {
            let t = (slots[i], slots[(i + 1) % k], slots[(i + 2) % k]);
            let r = (t.2, t.1, t.0);
            if FORBIDDEN_TRIPLES.contains(&t) || FORBIDDEN_TRIPLES.contains(&r) {
                let canon = t.min(r);
                if seen_triples.insert((i, canon)) {
                    vertex_pattern_violations.push(VertexPatternViolation { vertex: v, triple: canon });
                }
            }
        }
    }

    let mut w5_adjacency_violations = Vec::new();
    for cluster in &classification.w5_clusters {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for i in 0..4 {
            let a = cluster.rim[i];
            let b = cluster.rim[(i + 1) % 4];
            edges.push((a.min(b), a.max(b)));
            let h = cluster.hub;
            edges.push((h.min(a), h.max(a)));
        }
        edges.sort_unstable();
        for f in g.faces() {
            if f.id == outer || f.degree > 6 || cluster.wedges.contains(&f.id) {
                continue;
            }
            let shares = f.boundary_walk.iter().any(|&d| {
                let u = g.dart_origin(d);
                let v = g.dart_target(d);
                edges.binary_search(&(u.min(v), u.max(v))).is_ok()
            });
            if shares {
                w5_adjacency_violations.push(W5AdjacencyViolation {
                    hub: cluster.hub,
                    face: f.id,
                    face_degree: f.degree,
                });
            }
        }
    }

    Ok(StructuralReport {
        interior_small_vertices,
        separating_3cycles,
        noncycle_small_faces,
        face_pair_violations,
        recognized_gluings,
        vertex_pattern_violations,
        w5_adjacency_violations,
    })
}

/// Scans adjacent bounded face pairs: with degree sum at most 8 (or a 4-face
/// with a 5-face, or two 5-faces) their union must be a chorded cycle
/// sharing exactly one edge and two vertices, unless the pair sits inside a
/// recognized Figure-1/Figure-2 gluing.
fn scan_face_pairs(g: &PlaneGraph) -> (Vec<FacePairViolation>, Vec<RecognizedGluing>) {
    let outer = g.outer_face().unwrap();
    let mut pairs: BTreeSet<(FaceId, FaceId)> = BTreeSet::new();
    for d in (0..g.dart_count()).step_by(2) {
        let f1 = g.dart_face(d);
        let f2 = g.dart_face(g.twin(d));
        if f1 == f2 || f1 == outer || f2 == outer {
            continue;
        }
        pairs.insert((f1.min(f2), f1.max(f2)));
    }

    let relevant = |k1: usize, k2: usize| {
        k1 + k2 <= 8 || (k1.min(k2) == 4 && k1.max(k2) == 5) || (k1 == 5 && k2 == 5)
    };

    // First pass: recognize the sanctioned gluings.
    let mut gluings: Vec<RecognizedGluing> = Vec::new();
    for &(f1, f2) in &pairs {
        let (r1, r2) = (g.face(f1), g.face(f2));
        if !r1.boundary_is_cycle || !r2.boundary_is_cycle {
            continue;
        }
        let (k1, k2) = (r1.degree, r2.degree);
        let shared = shared_structure(g, f1, f2);
        if shared.edges.len() != 1 || shared.vertices.len() != 3 {
            continue;
        }
        let (u, v) = shared.edges[0];
        let z = *shared
            .vertices
            .iter()
            .find(|&&x| x != u && x != v)
            .unwrap();
        if k1.min(k2) == 4 && k1.max(k2) == 5 && f_shape_holds(g, f1, f2, (u, v), z) {
            let mut verts: Vec<VertexId> = r1
                .incident_vertices
                .iter()
                .chain(r2.incident_vertices.iter())
                .copied()
                .collect();
            verts.sort_unstable();
            verts.dedup();
            gluings.push(RecognizedGluing { kind: "F", faces: (f1, f2), vertices: verts });
        } else if k1 == 5 && k2 == 5 && h_shape_holds(g, f1, f2, (u, v), z) {
            let mut verts: Vec<VertexId> = r1
                .incident_vertices
                .iter()
                .chain(r2.incident_vertices.iter())
                .copied()
                .collect();
            verts.sort_unstable();
            verts.dedup();
            gluings.push(RecognizedGluing { kind: "H", faces: (f1, f2), vertices: verts });
        }
    }

    let mut violations = Vec::new();
    for &(f1, f2) in &pairs {
        let (r1, r2) = (g.face(f1), g.face(f2));
        if !r1.boundary_is_cycle || !r2.boundary_is_cycle {
            continue; // reported as non-cycle boundaries instead
        }
        let (k1, k2) = (r1.degree, r2.degree);
        if !relevant(k1, k2) {
            continue;
        }
        let shared = shared_structure(g, f1, f2);
        if shared.edges.len() == 1 && shared.vertices.len() == 2 {
            continue; // the chorded-cycle shape
        }
        let mut union: Vec<VertexId> = r1
            .incident_vertices
            .iter()
            .chain(r2.incident_vertices.iter())
            .copied()
            .collect();
        union.sort_unstable();
        union.dedup();
        let sanctioned = gluings
            .iter()
            .any(|gl| union.iter().all(|v| gl.vertices.contains(v)));
        if !sanctioned {
            violations.push(FacePairViolation {
                faces: (f1, f2),
                degrees: (k1, k2),
                shared_edges: shared.edges,
                shared_vertices: shared.vertices,
            });
        }
    }
    (violations, gluings)
}

struct SharedStructure {
    edges: Vec<(VertexId, VertexId)>,
    vertices: Vec<VertexId>,
}

fn shared_structure(g: &PlaneGraph, f1: FaceId, f2: FaceId) -> SharedStructure {
    let r1 = g.face(f1);
    let r2 = g.face(f2);
    let vertices: Vec<VertexId> = r1
        .incident_vertices
        .iter()
        .filter(|v| r2.incident_vertices.contains(v))
        .copied()
        .collect();
    let mut edges: Vec<(VertexId, VertexId)> = r1
        .boundary_walk
        .iter()
        .filter(|&&d| g.dart_face(g.twin(d)) == f2)
        .map(|&d| {
            let (a, b) = (g.dart_origin(d), g.dart_target(d));
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    SharedStructure { edges, vertices }
}

/// Boundary cycle of a face, as the vertex sequence along the walk.
fn boundary_cycle(g: &PlaneGraph, f: FaceId) -> Vec<VertexId> {
    g.face(f).boundary_walk.iter().map(|&d| g.dart_origin(d)).collect()
}

fn cycle_distance(cycle: &[VertexId], a: VertexId, b: VertexId) -> Option<usize> {
    let k = cycle.len();
    let pa = cycle.iter().position(|&x| x == a)?;
    let pb = cycle.iter().position(|&x| x == b)?;
    let d = (pa as i64 - pb as i64).rem_euclid(k as i64) as usize;
    Some(d.min(k - d))
}

/// Figure-1 shape: the third shared vertex `z` is adjacent to one endpoint
/// `e` of the shared edge along the 4-face, reaches `e` through a common
/// 5-face neighbor `y`, and the triangle `z,e,y` is the designated outer
/// face.
fn f_shape_holds(
    g: &PlaneGraph,
    f1: FaceId,
    f2: FaceId,
    (u, v): (VertexId, VertexId),
    z: VertexId,
) -> bool {
    let (four, five) = if g.face(f1).degree == 4 { (f1, f2) } else { (f2, f1) };
    let c4 = boundary_cycle(g, four);
    let c5 = boundary_cycle(g, five);
    let outer = match g.outer_triangle() {
        Some(mut t) => {
            t.sort_unstable();
            t
        }
        None => return false,
    };
    for e in [u, v] {
        if cycle_distance(&c4, z, e) != Some(1) {
            continue;
        }
        // Common neighbor of z and e on the 5-face, distinct from the
        // shared edge.
        let k = c5.len();
        for (i, &y) in c5.iter().enumerate() {
            if y == u || y == v || y == z {
                continue;
            }
            let prev = c5[(i + k - 1) % k];
            let next = c5[(i + 1) % k];
            let touches_z = prev == z || next == z;
            let touches_e = prev == e || next == e;
            if touches_z && touches_e {
                let mut t = [z, e, y];
                t.sort_unstable();
                if t == outer {
                    return true;
                }
            }
        }
    }
    false
}

/// Figure-2 shape: `z` sits at distance two from both endpoints of the
/// shared edge along both 5-face boundaries, giving seven vertices and nine
/// edges in the union.
fn h_shape_holds(
    g: &PlaneGraph,
    f1: FaceId,
    f2: FaceId,
    (u, v): (VertexId, VertexId),
    z: VertexId,
) -> bool {
    let c1 = boundary_cycle(g, f1);
    let c2 = boundary_cycle(g, f2);
    for c in [&c1, &c2] {
        if cycle_distance(c, z, u) != Some(2) || cycle_distance(c, z, v) != Some(2) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config_catalog::{build_pattern, ConfigPattern};
    use crate::plane_graph::tests_support::k4;

    #[test]
    fn k4_reports_interior_3_vertex() {
        let mut g = k4();
        g.designate_outer([0, 1, 2]).unwrap();
        let report = structural_scan(&g).unwrap();
        assert_eq!(report.interior_small_vertices, vec![(3, 3)]);
        assert!(!report.is_clean());
    }

    #[test]
    fn f_pattern_is_sanctioned() {
        let g = build_pattern(&ConfigPattern::FFig1).unwrap();
        let report = structural_scan(&g).unwrap();
        assert!(report.face_pair_violations.is_empty(), "{:?}", report.face_pair_violations);
        assert!(report.recognized_gluings.iter().any(|x| x.kind == "F"));
    }

    #[test]
    fn h_pattern_is_sanctioned() {
        // H has no 3-face, so attach an apex 7 in the outer 4-face r,s,w,v
        // across the edge r-s to give the scan an outer triangle.
        let g = build_pattern(&ConfigPattern::HFig2).unwrap();
        let mut rot: Vec<Vec<usize>> = g.rotations().to_vec();
        rot.push(vec![0, 1]);
        rot[0] = vec![1, 4, 7]; // r: insert 7 after the incoming corner at v
        rot[1] = vec![5, 6, 2, 0, 7]; // s: insert 7 after the corner at r
        let mut h = crate::plane_graph::PlaneGraph::build_from_rotation(rot, None).unwrap();
        h.designate_outer([0, 1, 7]).unwrap();
        let report = structural_scan(&h).unwrap();
        let gluing = report
            .recognized_gluings
            .iter()
            .find(|x| x.kind == "H")
            .expect("H gluing recognized");
        // The H pair itself is never reported as a violation; the scaffold
        // pentagon introduced by the apex legitimately is.
        assert!(!report
            .face_pair_violations
            .iter()
            .any(|v| v.faces == gluing.faces || (v.faces.1, v.faces.0) == gluing.faces));
    }

    #[test]
    fn vertex_pattern_detection() {
        // The trio host has apex 3 with face degrees (3,3,3,...) around it;
        // no forbidden triple appears.
        let g = crate::plane_graph::tests_support::trio_host();
        let report = structural_scan(&g).unwrap();
        assert!(report.vertex_pattern_violations.is_empty());
    }
}
