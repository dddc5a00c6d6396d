//! Face and vertex classification: poor/semi-rich/rich, inner/extreme,
//! flaw 4-vertices, trios and wheel clusters.

use serde::Serialize;

use crate::plane_graph::{FaceId, GraphError, PlaneGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Richness {
    /// No incident 5⁺-vertex.
    Poor,
    /// Exactly one.
    SemiRich,
    /// At least two.
    Rich,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FacePosition {
    Inner,
    Extreme,
    Unbounded,
}

#[derive(Debug, Clone, Serialize)]
pub struct FaceClass {
    pub face: FaceId,
    pub richness: Richness,
    pub position: FacePosition,
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexProfile {
    pub vertex: VertexId,
    pub degree: usize,
    /// Face degrees around the vertex in rotation order, with multiplicity.
    pub face_degrees: Vec<usize>,
    /// True when the vertex is not on the outer triangle.
    pub interior: bool,
    /// Number of distinct incident 3-faces (bounded ones).
    pub incident_3faces: usize,
    pub flaw: bool,
    /// 4-vertex whose four incident faces are all 3-faces.
    pub w5_hub: bool,
}

/// A trio: three inner 3-faces glued along two edges through a common apex,
/// with five distinct vertices, all strictly inside the outer triangle.
#[derive(Debug, Clone, Serialize)]
pub struct TrioRecord {
    /// End face, middle face, end face.
    pub faces: [FaceId; 3],
    /// x1 (the apex), x2, x3, x4, x5.
    pub vertices: [VertexId; 5],
    pub apex: VertexId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TrioRoleKind {
    Bad,
    Worse,
    Worst,
}

impl TrioRecord {
    /// Role of `v` for the faces of this trio: incident to one, two or all
    /// three of them.
    pub fn role_of(&self, g: &PlaneGraph, v: VertexId) -> Option<TrioRoleKind> {
        let count = self
            .faces
            .iter()
            .filter(|&&f| g.face(f).incident_vertices.contains(&v))
            .count();
        match count {
            1 => Some(TrioRoleKind::Bad),
            2 => Some(TrioRoleKind::Worse),
            3 => Some(TrioRoleKind::Worst),
            _ => None,
        }
    }
}

/// A 4-vertex hub whose four incident faces are inner 3-faces, together
/// with its rim; the wedge faces form one redistribution cluster.
#[derive(Debug, Clone, Serialize)]
pub struct W5ClusterRecord {
    pub hub: VertexId,
    pub rim: [VertexId; 4],
    pub wedges: [FaceId; 4],
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub face_classes: Vec<FaceClass>,
    pub vertex_profiles: Vec<VertexProfile>,
    pub trios: Vec<TrioRecord>,
    pub w5_clusters: Vec<W5ClusterRecord>,
}

impl Classification {
    pub fn face(&self, f: FaceId) -> &FaceClass {
        &self.face_classes[f]
    }

    pub fn vertex(&self, v: VertexId) -> &VertexProfile {
        &self.vertex_profiles[v]
    }
}

/// Classifies every face and vertex relative to the designated outer face.
pub fn classify(g: &PlaneGraph) -> Result<Classification, GraphError> {
    let outer = g.outer_face().ok_or(GraphError::MissingOuterFace)?;
    let outer_vertices = g.face(outer).incident_vertices.clone();

    let face_classes: Vec<FaceClass> = g
        .faces()
        .iter()
        .map(|f| {
            let five_plus = f
                .incident_vertices
                .iter()
                .filter(|&&v| g.degree(v).unwrap() >= 5)
                .count();
            let richness = match five_plus {
                0 => Richness::Poor,
                1 => Richness::SemiRich,
                _ => Richness::Rich,
            };
            let position = if f.id == outer {
                FacePosition::Unbounded
            } else if f.incident_vertices.iter().any(|v| outer_vertices.contains(v)) {
                FacePosition::Extreme
            } else {
                FacePosition::Inner
            };
            FaceClass { face: f.id, richness, position }
        })
        .collect();

    let inner = |f: FaceId| face_classes[f].position == FacePosition::Inner;

    let mut vertex_profiles = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let faces = g.incident_faces(v)?;
        let face_degrees: Vec<usize> = faces.iter().map(|&f| g.face(f).degree).collect();
        let degree = g.degree(v)?;
        let interior = !outer_vertices.contains(&v);
        let mut distinct_3: Vec<FaceId> = faces
            .iter()
            .copied()
            .filter(|&f| f != outer && g.face(f).degree == 3)
            .collect();
        distinct_3.sort_unstable();
        distinct_3.dedup();
        let incident_3faces = distinct_3.len();
        let w5_hub = degree == 4 && face_degrees.iter().all(|&d| d == 3);
        let flaw = degree == 4
            && is_flaw_profile(&face_degrees)
            && faces.iter().all(|&f| inner(f))
            && faces.iter().any(|&f| {
                g.face(f).degree == 5 && face_classes[f].richness == Richness::Poor
            });
        vertex_profiles.push(VertexProfile {
            vertex: v,
            degree,
            face_degrees,
            interior,
            incident_3faces,
            flaw,
            w5_hub,
        });
    }

    let trios = find_trios(g, &face_classes);
    let w5_clusters = find_w5_clusters(g, &vertex_profiles, &face_classes);

    Ok(Classification { face_classes, vertex_profiles, trios, w5_clusters })
}

/// Cyclic profile (3,5,3,5⁺) in either direction.
fn is_flaw_profile(slots: &[usize]) -> bool {
    if slots.len() != 4 {
        return false;
    }
    (0..4).any(|r| {
        let s = |i: usize| slots[(r + i) % 4];
        s(0) == 3 && s(1) == 5 && s(2) == 3 && s(3) >= 5
    })
}

fn face_across(g: &PlaneGraph, f: FaceId, u: VertexId, v: VertexId) -> Option<FaceId> {
    let d = g.dart_between(u, v)?;
    let (a, b) = (g.dart_face(d), g.dart_face(g.twin(d)));
    if a == f {
        Some(b)
    } else if b == f {
        Some(a)
    } else {
        None
    }
}

fn find_trios(g: &PlaneGraph, face_classes: &[FaceClass]) -> Vec<TrioRecord> {
    let inner_3 = |f: FaceId| {
        face_classes[f].position == FacePosition::Inner
            && g.face(f).degree == 3
            && g.face(f).boundary_is_cycle
    };
    let mut out: Vec<TrioRecord> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for middle in g.faces() {
        if !inner_3(middle.id) {
            continue;
        }
        let vs = &middle.incident_vertices;
        for &apex in vs {
            let others: Vec<VertexId> = vs.iter().copied().filter(|&x| x != apex).collect();
            let (a, b) = (others[0], others[1]);
            let t1 = match face_across(g, middle.id, apex, a) {
                Some(f) if inner_3(f) => f,
                _ => continue,
            };
            let t3 = match face_across(g, middle.id, apex, b) {
                Some(f) if inner_3(f) => f,
                _ => continue,
            };
            if t1 == t3 || t1 == middle.id || t3 == middle.id {
                continue;
            }
            let third = |f: FaceId, not_a: VertexId, not_b: VertexId| {
                g.face(f)
                    .incident_vertices
                    .iter()
                    .copied()
                    .find(|&x| x != not_a && x != not_b)
            };
            let x2 = match third(t1, apex, a) {
                Some(x) => x,
                None => continue,
            };
            let x5 = match third(t3, apex, b) {
                Some(x) => x,
                None => continue,
            };
            // Five distinct vertices.
            let quint = [apex, x2, a, b, x5];
            let mut sorted = quint;
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let mut key = [t1, middle.id, t3];
            key.sort_unstable();
            if seen.insert(key) {
                out.push(TrioRecord {
                    faces: [t1, middle.id, t3],
                    vertices: quint,
                    apex,
                });
            }
        }
    }
    out
}

fn find_w5_clusters(
    g: &PlaneGraph,
    profiles: &[VertexProfile],
    face_classes: &[FaceClass],
) -> Vec<W5ClusterRecord> {
    let mut out = Vec::new();
    for p in profiles {
        if p.degree != 4 || !p.w5_hub {
            continue;
        }
        let faces = g.incident_faces(p.vertex).unwrap();
        if faces
            .iter()
            .any(|&f| face_classes[f].position != FacePosition::Inner)
        {
            continue;
        }
        let mut wedges = [0; 4];
        let mut distinct = faces.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != 4 {
            continue;
        }
        wedges.copy_from_slice(&faces);
        let nbrs = g.neighbors(p.vertex);
        out.push(W5ClusterRecord {
            hub: p.vertex,
            rim: [nbrs[0], nbrs[1], nbrs[2], nbrs[3]],
            wedges,
        });
    }
    out
}
