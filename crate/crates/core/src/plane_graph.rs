//! Rotation-system representation of finite simple connected plane graphs.
//!
//! A plane graph is stored as a set of darts (half-edges). Every edge {u,v}
//! contributes the dart pair `2e` (u -> v) and `2e+1` (v -> u); `twin`
//! flips the pair. `next_at_origin` walks the clockwise rotation at the
//! dart's origin vertex. Faces are the orbits of `d -> rot_next(twin(d))`
//! ("twin then rotation successor"), traced once at construction time and
//! cached. A construction that does not satisfy Euler's formula
//! `V - E + F = 2` is rejected: the input was not a sphere embedding.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

pub type VertexId = usize;
pub type DartId = usize;
pub type FaceId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph is not simple: {0}")]
    NonSimple(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("not a sphere embedding: V - E + F = {0}, expected 2")]
    NotSphereEmbedding(i64),
    #[error("inconsistent rotation: edge ({0},{1}) present on one side only")]
    InconsistentRotation(VertexId, VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertices {0:?} do not bound a face")]
    NoSuchFace([VertexId; 3]),
    #[error("vertices {0:?} do not form a triangle face")]
    NotATriangle([VertexId; 3]),
    #[error("no outer face designated")]
    MissingOuterFace,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PlgError {
    #[error("line {0}: {1}")]
    Syntax(usize, String),
    #[error("missing V line")]
    MissingHeader,
    #[error("rotation line missing for vertex {0}")]
    MissingRotation(VertexId),
    #[error("duplicate rotation line for vertex {0}")]
    DuplicateRotation(VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One half-edge of the embedding, exposed as a plain record.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dart {
    pub id: DartId,
    pub origin: VertexId,
    pub twin: DartId,
    pub next_at_origin: DartId,
}

/// A traced face boundary. `degree` counts walk steps, so a vertex that the
/// walk visits twice is counted twice; `boundary_is_cycle` is true exactly
/// when no vertex repeats.
#[derive(Debug, Clone, Serialize)]
pub struct FaceRecord {
    pub id: FaceId,
    pub boundary_walk: Vec<DartId>,
    pub degree: usize,
    pub boundary_is_cycle: bool,
    pub incident_vertices: Vec<VertexId>,
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    vertex_count: usize,
    rotations: Vec<Vec<VertexId>>,
    labels: Option<Vec<String>>,
    dart_origin: Vec<VertexId>,
    dart_target: Vec<VertexId>,
    dart_next: Vec<DartId>,
    dart_face: Vec<FaceId>,
    dart_by_ends: BTreeMap<(VertexId, VertexId), DartId>,
    faces: Vec<FaceRecord>,
    outer_face: Option<FaceId>,
    outer_triangle: Option<[VertexId; 3]>,
}

impl PlaneGraph {
    /// Builds the embedding from clockwise neighbor lists, traces all faces
    /// and checks simplicity, connectivity and Euler's formula.
    pub fn build_from_rotation(
        rotations: Vec<Vec<VertexId>>,
        labels: Option<Vec<String>>,
    ) -> Result<PlaneGraph, GraphError> {
        let n = rotations.len();
        if let Some(ref l) = labels {
            assert_eq!(l.len(), n, "labels must cover every vertex");
        }

        let mut dart_origin = Vec::new();
        let mut dart_target = Vec::new();
        let mut dart_by_ends: BTreeMap<(VertexId, VertexId), DartId> = BTreeMap::new();
        for (v, nbrs) in rotations.iter().enumerate() {
            let mut seen = vec![];
            for &u in nbrs {
                if u >= n {
                    return Err(GraphError::UnknownVertex(u));
                }
                if u == v {
                    return Err(GraphError::NonSimple(format!("loop at vertex {v}")));
                }
                if seen.contains(&u) {
                    return Err(GraphError::NonSimple(format!(
                        "parallel edge between {v} and {u}"
                    )));
                }
                seen.push(u);
                if v < u {
                    let d = dart_origin.len();
                    dart_origin.push(v);
                    dart_target.push(u);
                    dart_origin.push(u);
                    dart_target.push(v);
                    dart_by_ends.insert((v, u), d);
                    dart_by_ends.insert((u, v), d + 1);
                }
            }
        }
        // Every edge must appear in both rotation lists.
        for (v, nbrs) in rotations.iter().enumerate() {
            for &u in nbrs {
                if !rotations[u].contains(&v) {
                    return Err(GraphError::InconsistentRotation(v, u));
                }
            }
        }

        // Connectivity.
        if n > 0 {
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for &u in &rotations[v] {
                    if !seen[u] {
                        seen[u] = true;
                        count += 1;
                        stack.push(u);
                    }
                }
            }
            if count != n {
                return Err(GraphError::Disconnected);
            }
        }

        // Rotation successor per dart.
        let dart_count = dart_origin.len();
        let mut dart_next = vec![0; dart_count];
        for (v, nbrs) in rotations.iter().enumerate() {
            let k = nbrs.len();
            for (i, &u) in nbrs.iter().enumerate() {
                let d = dart_by_ends[&(v, u)];
                let w = nbrs[(i + 1) % k];
                dart_next[d] = dart_by_ends[&(v, w)];
            }
        }

        // Face tracing: orbits of d -> rot_next(twin(d)).
        let mut dart_face = vec![usize::MAX; dart_count];
        let mut faces = Vec::new();
        for start in 0..dart_count {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                dart_face[d] = id;
                walk.push(d);
                d = dart_next[d ^ 1];
                if d == start {
                    break;
                }
            }
            let mut verts: Vec<VertexId> = walk.iter().map(|&d| dart_origin[d]).collect();
            let degree = walk.len();
            verts.sort_unstable();
            verts.dedup();
            let boundary_is_cycle = verts.len() == degree;
            faces.push(FaceRecord {
                id,
                boundary_walk: walk,
                degree,
                boundary_is_cycle,
                incident_vertices: verts,
            });
        }
        if n == 1 && dart_count == 0 {
            // A single vertex embeds on the sphere with one (empty) face.
            faces.push(FaceRecord {
                id: 0,
                boundary_walk: vec![],
                degree: 0,
                boundary_is_cycle: false,
                incident_vertices: vec![],
            });
        }

        let edges = (dart_count / 2) as i64;
        let euler = n as i64 - edges + faces.len() as i64;
        if euler != 2 {
            return Err(GraphError::NotSphereEmbedding(euler));
        }
        debug_assert_eq!(
            faces.iter().map(|f| f.degree).sum::<usize>(),
            dart_count,
            "face degrees must sum to 2E"
        );

        Ok(PlaneGraph {
            vertex_count: n,
            rotations,
            labels,
            dart_origin,
            dart_target,
            dart_next,
            dart_face,
            dart_by_ends,
            faces,
            outer_face: None,
            outer_triangle: None,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.dart_origin.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.dart_origin.len()
    }

    pub fn dart(&self, id: DartId) -> Dart {
        Dart {
            id,
            origin: self.dart_origin[id],
            twin: id ^ 1,
            next_at_origin: self.dart_next[id],
        }
    }

    pub fn dart_origin(&self, d: DartId) -> VertexId {
        self.dart_origin[d]
    }

    pub fn dart_target(&self, d: DartId) -> VertexId {
        self.dart_target[d]
    }

    pub fn twin(&self, d: DartId) -> DartId {
        d ^ 1
    }

    pub fn dart_face(&self, d: DartId) -> FaceId {
        self.dart_face[d]
    }

    /// The dart from `u` to `v`, if the edge exists.
    pub fn dart_between(&self, u: VertexId, v: VertexId) -> Option<DartId> {
        self.dart_by_ends.get(&(u, v)).copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.dart_by_ends.contains_key(&(u, v))
    }

    /// Edges as normalized `(min,max)` pairs, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.dart_by_ends.keys().filter(|(u, v)| u < v).copied().collect()
    }

    pub fn faces(&self) -> &[FaceRecord] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &FaceRecord {
        &self.faces[id]
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.rotations
            .get(v)
            .map(|r| r.len())
            .ok_or(GraphError::UnknownVertex(v))
    }

    /// Clockwise neighbor list of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<VertexId>] {
        &self.rotations
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label_of(&self, v: VertexId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn vertex_by_label(&self, name: &str) -> Option<VertexId> {
        self.labels
            .as_ref()
            .and_then(|l| l.iter().position(|s| s == name))
    }

    /// Faces around `v` in rotation order, one entry per incident dart, so a
    /// face pinched at `v` appears with multiplicity.
    pub fn incident_faces(&self, v: VertexId) -> Result<Vec<FaceId>, GraphError> {
        let nbrs = self.rotations.get(v).ok_or(GraphError::UnknownVertex(v))?;
        Ok(nbrs
            .iter()
            .map(|&u| self.dart_face[self.dart_by_ends[&(v, u)]])
            .collect())
    }

    pub fn outer_face(&self) -> Option<FaceId> {
        self.outer_face
    }

    pub fn outer_triangle(&self) -> Option<[VertexId; 3]> {
        self.outer_triangle
    }

    /// Marks an arbitrary traced face as the unbounded one. Used by the
    /// pattern builders; file input goes through [`PlaneGraph::designate_outer`].
    pub(crate) fn set_outer_face(&mut self, id: FaceId) {
        assert!(id < self.faces.len());
        self.outer_face = Some(id);
        let f = &self.faces[id];
        self.outer_triangle = if f.degree == 3 && f.boundary_is_cycle {
            let w = &f.boundary_walk;
            Some([
                self.dart_origin[w[0]],
                self.dart_origin[w[1]],
                self.dart_origin[w[2]],
            ])
        } else {
            None
        };
    }

    /// Designates the unbounded face `D` as the 3-face bounded by `triple`.
    /// Everything downstream that distinguishes inner from extreme faces is
    /// relative to this choice.
    pub fn designate_outer(&mut self, triple: [VertexId; 3]) -> Result<(), GraphError> {
        let mut sorted = triple;
        sorted.sort_unstable();
        if sorted[0] == sorted[1] || sorted[1] == sorted[2] {
            return Err(GraphError::NotATriangle(triple));
        }
        for &v in &triple {
            if v >= self.vertex_count {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        let mut bounding: Option<&FaceRecord> = None;
        for f in &self.faces {
            if f.incident_vertices == sorted {
                if f.degree == 3 {
                    bounding = Some(f);
                    break;
                }
                // The triple's vertices bound this face but the walk revisits
                // some of them, so it is not a triangle.
                if bounding.is_none() {
                    bounding = Some(f);
                }
            }
        }
        match bounding {
            None => Err(GraphError::NoSuchFace(triple)),
            Some(f) if f.degree != 3 => Err(GraphError::NotATriangle(triple)),
            Some(f) => {
                let id = f.id;
                self.set_outer_face(id);
                Ok(())
            }
        }
    }

    /// Initial discharging charge of every vertex (`2d-6`) and face (`d-6`).
    /// Their total is `-12` on every sphere embedding.
    pub fn charge_sum(&self) -> i64 {
        let v: i64 = (0..self.vertex_count)
            .map(|v| 2 * self.rotations[v].len() as i64 - 6)
            .sum();
        let f: i64 = self.faces.iter().map(|f| f.degree as i64 - 6).sum();
        v + f
    }

    /// Serializes to the PLG text format.
    pub fn to_plg(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "V {}", self.vertex_count);
        for (v, nbrs) in self.rotations.iter().enumerate() {
            let list = nbrs.iter().map(|u| u.to_string()).collect::<Vec<_>>().join(" ");
            if list.is_empty() {
                let _ = writeln!(out, "R {v}:");
            } else {
                let _ = writeln!(out, "R {v}: {list}");
            }
        }
        if let Some(t) = self.outer_triangle {
            let _ = writeln!(out, "O {} {} {}", t[0], t[1], t[2]);
        }
        out
    }

    /// Parses the PLG text format:
    ///
    /// ```text
    /// V <n>
    /// R <v>: <u1> <u2> ... <uk>     # clockwise rotation at v
    /// O <a> <b> <c>                 # optional outer 3-face
    /// ```
    ///
    /// Lines starting with `#` and blank lines are ignored; rotation lines
    /// may appear in any order but every vertex must have one.
    pub fn parse_plg(text: &str) -> Result<PlaneGraph, PlgError> {
        let mut n: Option<usize> = None;
        let mut rot: Vec<Option<Vec<VertexId>>> = Vec::new();
        let mut outer: Option<[VertexId; 3]> = None;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("V") => {
                    let count: usize = parts
                        .next()
                        .ok_or_else(|| PlgError::Syntax(lineno, "V needs a count".into()))?
                        .parse()
                        .map_err(|_| PlgError::Syntax(lineno, "bad vertex count".into()))?;
                    if parts.next().is_some() {
                        return Err(PlgError::Syntax(lineno, "trailing tokens after V".into()));
                    }
                    if n.is_some() {
                        return Err(PlgError::Syntax(lineno, "duplicate V line".into()));
                    }
                    n = Some(count);
                    rot = vec![None; count];
                }
                Some("R") => {
                    let count = n.ok_or(PlgError::MissingHeader)?;
                    let head = parts
                        .next()
                        .ok_or_else(|| PlgError::Syntax(lineno, "R needs a vertex".into()))?;
                    let head = head
                        .strip_suffix(':')
                        .ok_or_else(|| PlgError::Syntax(lineno, "expected 'R <v>:'".into()))?;
                    let v: usize = head
                        .parse()
                        .map_err(|_| PlgError::Syntax(lineno, "bad vertex id".into()))?;
                    if v >= count {
                        return Err(PlgError::Syntax(lineno, format!("vertex {v} out of range")));
                    }
                    if rot[v].is_some() {
                        return Err(PlgError::DuplicateRotation(v));
                    }
                    let mut nbrs = Vec::new();
                    for tok in parts {
                        let u: usize = tok
                            .parse()
                            .map_err(|_| PlgError::Syntax(lineno, "bad neighbor id".into()))?;
                        nbrs.push(u);
                    }
                    rot[v] = Some(nbrs);
                }
                Some("O") => {
                    let mut t = [0usize; 3];
                    for slot in &mut t {
                        *slot = parts
                            .next()
                            .ok_or_else(|| PlgError::Syntax(lineno, "O needs three vertices".into()))?
                            .parse()
                            .map_err(|_| PlgError::Syntax(lineno, "bad vertex id".into()))?;
                    }
                    if parts.next().is_some() {
                        return Err(PlgError::Syntax(lineno, "trailing tokens after O".into()));
                    }
                    outer = Some(t);
                }
                Some(other) => {
                    return Err(PlgError::Syntax(lineno, format!("unknown directive {other}")));
                }
                None => unreachable!(),
            }
        }
        let count = n.ok_or(PlgError::MissingHeader)?;
        let mut lists = Vec::with_capacity(count);
        for (v, r) in rot.into_iter().enumerate() {
            lists.push(r.ok_or(PlgError::MissingRotation(v))?);
        }
        let mut g = PlaneGraph::build_from_rotation(lists, None)?;
        if let Some(t) = outer {
            g.designate_outer(t)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
pub(crate) mod tests_support {
    use super::PlaneGraph;

    pub(crate) fn triangle() -> PlaneGraph {
        PlaneGraph::build_from_rotation(vec![vec![1, 2], vec![2, 0], vec![0, 1]], None).unwrap()
    }

    /// Hub 0 adjacent to rim 1,2,3,4; rim edges 12, 23, 34, 41.
    pub(crate) fn wheel5() -> PlaneGraph {
        PlaneGraph::build_from_rotation(
            vec![
                vec![1, 2, 3, 4],
                vec![2, 0, 4],
                vec![3, 0, 1],
                vec![4, 0, 2],
                vec![1, 0, 3],
            ],
            None,
        )
        .unwrap()
    }

    /// Inner square 0..3, outer square 4..7, spokes i -- i+4.
    pub(crate) fn cube() -> PlaneGraph {
        PlaneGraph::build_from_rotation(
            vec![
                vec![4, 1, 3],
                vec![0, 5, 2],
                vec![3, 1, 6],
                vec![0, 2, 7],
                vec![5, 0, 7],
                vec![4, 6, 1],
                vec![7, 2, 5],
                vec![4, 3, 6],
            ],
            None,
        )
        .unwrap()
    }

    /// Triangle 0,1,2 with vertex 3 inside adjacent to all three.
    pub(crate) fn k4() -> PlaneGraph {
        PlaneGraph::build_from_rotation(
            vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]],
            None,
        )
        .unwrap()
    }

    /// Apex 3 with the fan 4,5,6,7 strictly inside the outer triangle 0,1,2,
    /// hanging from vertex 0. Faces: triangles (3,4,5), (3,5,6), (3,6,7)
    /// forming a trio, the outer triangle, and a bounded 10-walk.
    pub(crate) fn trio_host() -> PlaneGraph {
        let mut g = PlaneGraph::build_from_rotation(
            vec![
                vec![2, 3, 1],
                vec![0, 2],
                vec![1, 0],
                vec![0, 7, 6, 5, 4],
                vec![3, 5],
                vec![4, 3, 6],
                vec![5, 3, 7],
                vec![6, 3],
            ],
            None,
        )
        .unwrap();
        g.designate_outer([0, 1, 2]).unwrap();
        g
    }
}

#[cfg(test)]
mod tests {
    use super::tests_support::{cube, triangle, wheel5};
    use super::*;

    #[test]
    fn triangle_counts() {
        let g = triangle();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.faces().len(), 2);
        assert!(g.faces().iter().all(|f| f.degree == 3 && f.boundary_is_cycle));
    }

    #[test]
    fn wheel_counts_and_faces() {
        let g = wheel5();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(g.faces().len(), 5);
        let mut degs: Vec<usize> = g.faces().iter().map(|f| f.degree).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 3, 3, 3, 4]);
    }

    #[test]
    fn path_is_connected_single_face() {
        let g =
            PlaneGraph::build_from_rotation(vec![vec![1], vec![0, 2], vec![1]], None).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.faces().len(), 1);
        assert_eq!(g.faces()[0].degree, 4);
        assert!(!g.faces()[0].boundary_is_cycle);
    }

    #[test]
    fn cube_has_six_quadrilateral_faces() {
        let g = cube();
        assert_eq!(g.faces().len(), 6);
        assert!(g.faces().iter().all(|f| f.degree == 4 && f.boundary_is_cycle));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            PlaneGraph::build_from_rotation(vec![vec![0]], None),
            Err(GraphError::NonSimple(_))
        ));
        assert!(matches!(
            PlaneGraph::build_from_rotation(vec![vec![1, 1], vec![0, 0]], None),
            Err(GraphError::NonSimple(_))
        ));
        assert!(matches!(
            PlaneGraph::build_from_rotation(vec![vec![1], vec![0], vec![3], vec![2]], None),
            Err(GraphError::Disconnected)
        ));
        // Edge 0->1 missing from 1's rotation.
        assert!(matches!(
            PlaneGraph::build_from_rotation(vec![vec![1, 2], vec![2], vec![0, 1]], None),
            Err(GraphError::InconsistentRotation(_, _))
        ));
    }

    #[test]
    fn degree_and_incident_faces() {
        let g = wheel5();
        assert_eq!(g.degree(0).unwrap(), 4);
        let hub_faces = g.incident_faces(0).unwrap();
        assert_eq!(hub_faces.len(), 4);
        assert!(hub_faces.iter().all(|&f| g.face(f).degree == 3));
        let rim_faces = g.incident_faces(1).unwrap();
        let mut degs: Vec<usize> = rim_faces.iter().map(|&f| g.face(f).degree).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 3, 4]);
        assert!(matches!(g.degree(9), Err(GraphError::UnknownVertex(9))));

        let c = cube();
        let fdegs: Vec<usize> = c
            .incident_faces(0)
            .unwrap()
            .iter()
            .map(|&f| c.face(f).degree)
            .collect();
        assert_eq!(fdegs, vec![4, 4, 4]);
    }

    #[test]
    fn designate_outer_cases() {
        let mut g = triangle();
        g.designate_outer([0, 1, 2]).unwrap();
        assert!(g.outer_face().is_some());
        assert_eq!(g.outer_triangle(), Some([0, 1, 2]));

        let mut w = wheel5();
        w.designate_outer([0, 1, 2]).unwrap();
        assert_eq!(w.face(w.outer_face().unwrap()).degree, 3);
        // 1,2,3 is a path on the rim plus hub edges, not a face.
        assert!(matches!(
            wheel5().designate_outer([1, 2, 3]),
            Err(GraphError::NoSuchFace(_))
        ));
        assert!(matches!(
            wheel5().designate_outer([1, 1, 2]),
            Err(GraphError::NotATriangle(_))
        ));
    }

    #[test]
    fn charge_sum_is_minus_twelve() {
        for g in [triangle(), wheel5(), cube()] {
            assert_eq!(g.charge_sum(), -12);
        }
    }

    #[test]
    fn dart_invariants() {
        let g = wheel5();
        for d in 0..g.dart_count() {
            let dart = g.dart(d);
            assert_eq!(g.dart(dart.twin).twin, d);
            assert_ne!(dart.twin, d);
            assert_eq!(g.dart_origin(dart.next_at_origin), dart.origin);
        }
        // next_at_origin is one cycle per vertex.
        for v in 0..g.vertex_count() {
            let start = g.dart_between(v, g.neighbors(v)[0]).unwrap();
            let mut d = start;
            let mut seen = 0;
            loop {
                seen += 1;
                d = g.dart(d).next_at_origin;
                if d == start {
                    break;
                }
            }
            assert_eq!(seen, g.degree(v).unwrap());
        }
    }

    #[test]
    fn face_tracing_partitions_darts() {
        let g = cube();
        let mut counts = vec![0usize; g.faces().len()];
        for d in 0..g.dart_count() {
            counts[g.dart_face(d)] += 1;
        }
        let total: usize = counts.iter().sum();
        assert_eq!(total, g.dart_count());
        for f in g.faces() {
            assert_eq!(f.boundary_walk.len(), f.degree);
        }
    }

    #[test]
    fn plg_round_trip() {
        let mut g = wheel5();
        g.designate_outer([0, 1, 2]).unwrap();
        let text = g.to_plg();
        let h = PlaneGraph::parse_plg(&text).unwrap();
        assert_eq!(h.rotations(), g.rotations());
        assert_eq!(h.outer_triangle(), g.outer_triangle());
        assert_eq!(h.to_plg(), text);
    }

    #[test]
    fn plg_parse_errors() {
        assert!(matches!(
            PlaneGraph::parse_plg("R 0: 1"),
            Err(PlgError::MissingHeader)
        ));
        assert!(matches!(
            PlaneGraph::parse_plg("V 2\nR 0: 1\n"),
            Err(PlgError::MissingRotation(1))
        ));
        assert!(matches!(
            PlaneGraph::parse_plg("V 2\nR 0: 1\nR 0: 1\nR 1: 0\n"),
            Err(PlgError::DuplicateRotation(0))
        ));
        assert!(PlaneGraph::parse_plg("V 1\nR 0:\n# comment\n\n").is_ok());
        assert!(matches!(
            PlaneGraph::parse_plg("V 2\nR 0: 1\nR 1: 0\nQ 1\n"),
            Err(PlgError::Syntax(4, _))
        ));
    }
}
