//! Canonical plane embeddings of the named configurations.

use serde::Serialize;
use thiserror::Error;

use crate::plane_graph::{GraphError, PlaneGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PatternError {
    #[error("bad parameters for {0}: every section must be at least 3")]
    BadParameters(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A named configuration.
///
/// `C2(m,n)` is a cycle `x1..x_{m+n-2}` with the internal chord `x1 x_m`;
/// `C3` and `C4` add a second and third chord fanning out of `x1`. `W5` is
/// the wheel on five vertices. `FFig1` and `HFig2` are the two sanctioned
/// gluings of small faces (see [`build_pattern`] for their exact shape).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConfigPattern {
    C2(usize, usize),
    C3(usize, usize, usize),
    C4(usize, usize, usize, usize),
    W5,
    FFig1,
    HFig2,
}

impl ConfigPattern {
    pub fn name(&self) -> String {
        match self {
            ConfigPattern::C2(m, n) => format!("C({m},{n})"),
            ConfigPattern::C3(l, m, n) => format!("C({l},{m},{n})"),
            ConfigPattern::C4(m, n, p, q) => format!("C({m},{n},{p},{q})"),
            ConfigPattern::W5 => "W5".into(),
            ConfigPattern::FFig1 => "F".into(),
            ConfigPattern::HFig2 => "H".into(),
        }
    }

    pub fn sections(&self) -> Option<Vec<usize>> {
        match *self {
            ConfigPattern::C2(m, n) => Some(vec![m, n]),
            ConfigPattern::C3(l, m, n) => Some(vec![l, m, n]),
            ConfigPattern::C4(m, n, p, q) => Some(vec![m, n, p, q]),
            _ => None,
        }
    }
}

/// Builds the pattern as a concrete plane graph in its canonical embedding:
/// fan chords are drawn inside the outer cycle, `W5` has its hub inside the
/// rim, `F` is embedded with the triangle `t,u,y` outside (and designated as
/// the outer face), `H` with the 4-cycle `r,s,w,v` outside.
pub fn build_pattern(p: &ConfigPattern) -> Result<PlaneGraph, PatternError> {
    match p {
        ConfigPattern::C2(..) | ConfigPattern::C3(..) | ConfigPattern::C4(..) => {
            build_fan(p, &p.sections().unwrap())
        }
        ConfigPattern::W5 => {
            let mut g = PlaneGraph::build_from_rotation(
                vec![
                    vec![1, 2, 3, 4],
                    vec![2, 0, 4],
                    vec![3, 0, 1],
                    vec![4, 0, 2],
                    vec![1, 0, 3],
                ],
                Some(stringify_labels(&["v", "w", "x", "y", "z"])),
            )
            .map_err(PatternError::Graph)?;
            let rim = g
                .faces()
                .iter()
                .find(|f| f.degree == 4)
                .expect("wheel rim face")
                .id;
            g.set_outer_face(rim);
            Ok(g)
        }
        ConfigPattern::FFig1 => {
            // 0=s 1=t 2=u 3=v 4=w 5=y. Faces: the 4-face s,t,u,v, the 5-face
            // u,v,w,t,y, the 4-face s,t,w,v and the outer triangle t,u,y.
            let mut g = PlaneGraph::build_from_rotation(
                vec![
                    vec![3, 1],
                    vec![2, 0, 4, 5],
                    vec![5, 3, 1],
                    vec![4, 0, 2],
                    vec![3, 1],
                    vec![1, 2],
                ],
                Some(stringify_labels(&["s", "t", "u", "v", "w", "y"])),
            )
            .map_err(PatternError::Graph)?;
            g.designate_outer([1, 2, 5]).map_err(PatternError::Graph)?;
            Ok(g)
        }
        ConfigPattern::HFig2 => {
            // 0=r 1=s 2=t 3=u 4=v 5=w 6=y. Faces: the 5-faces r,s,t,u,v and
            // u,v,w,s,y, the 4-face t,s,y,u and the outer 4-face r,s,w,v.
            let mut g = PlaneGraph::build_from_rotation(
                vec![
                    vec![1, 4],
                    vec![5, 6, 2, 0],
                    vec![1, 3],
                    vec![2, 6, 4],
                    vec![0, 3, 5],
                    vec![1, 4],
                    vec![1, 3],
                ],
                Some(stringify_labels(&["r", "s", "t", "u", "v", "w", "y"])),
            )
            .map_err(PatternError::Graph)?;
            let outer = g
                .faces()
                .iter()
                .find(|f| f.degree == 4 && f.incident_vertices == vec![0, 1, 4, 5])
                .expect("outer 4-face of H")
                .id;
            g.set_outer_face(outer);
            Ok(g)
        }
    }
}

fn stringify_labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn build_fan(p: &ConfigPattern, sections: &[usize]) -> Result<PlaneGraph, PatternError> {
    if sections.iter().any(|&l| l < 3) {
        return Err(PatternError::BadParameters(p.name()));
    }
    let k = sections.len();
    let n = sections.iter().sum::<usize>() - 2 * (k - 1);
    // Chord targets: x_{l1}, x_{l1+l2-2}, ... (1-indexed), all from x1.
    let mut chords = Vec::new();
    let mut acc = 0usize;
    for (j, &l) in sections.iter().enumerate().take(k - 1) {
        acc += l;
        chords.push(acc - 2 * j - 1); // 0-indexed target
    }
    let mut rotations: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        if v == 0 {
            let mut r = vec![1];
            r.extend(chords.iter().copied());
            r.push(n - 1);
            rotations.push(r);
        } else if chords.contains(&v) {
            rotations.push(vec![(v + 1) % n, 0, v - 1]);
        } else {
            rotations.push(vec![(v + 1) % n, (v + n - 1) % n]);
        }
    }
    let mut g = PlaneGraph::build_from_rotation(rotations, None).map_err(PatternError::Graph)?;
    let outer = g
        .faces()
        .iter()
        .find(|f| f.degree == n && f.incident_vertices.len() == n)
        .expect("fan exterior face")
        .id;
    g.set_outer_face(outer);
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c33_is_k4_minus_edge() {
        let g = build_pattern(&ConfigPattern::C2(3, 3)).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 5);
        let mut degs: Vec<usize> = g.faces().iter().map(|f| f.degree).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 3, 4]);
        assert_eq!(g.face(g.outer_face().unwrap()).degree, 4);
    }

    #[test]
    fn c334_has_expected_chords() {
        let g = build_pattern(&ConfigPattern::C3(3, 3, 4)).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert!(g.has_edge(0, 2));
        assert!(g.has_edge(0, 3));
        let mut degs: Vec<usize> = g.faces().iter().map(|f| f.degree).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 3, 4, 6]);
    }

    #[test]
    fn c5353_fan() {
        let g = build_pattern(&ConfigPattern::C4(5, 3, 5, 3)).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert!(g.has_edge(0, 4));
        assert!(g.has_edge(0, 5));
        assert!(g.has_edge(0, 8));
        let mut degs: Vec<usize> = g.faces().iter().map(|f| f.degree).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 3, 5, 5, 10]);
    }

    #[test]
    fn w5_shape() {
        let g = build_pattern(&ConfigPattern::W5).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 8);
        assert_eq!(
            g.faces().iter().filter(|f| f.degree == 3).count(),
            4
        );
        assert_eq!(g.vertex_by_label("v"), Some(0));
    }

    #[test]
    fn f_gluing_shape() {
        let g = build_pattern(&ConfigPattern::FFig1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 8));
        let mut degs: Vec<usize> = g.faces().iter().map(|f| f.degree).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![3, 4, 4, 5]);
        // Outer face is the triangle t,u,y.
        assert_eq!(g.outer_triangle(), Some([1, 2, 5]));
    }

    #[test]
    fn h_gluing_shape() {
        let g = build_pattern(&ConfigPattern::HFig2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 9));
        let mut degs: Vec<usize> = g.faces().iter().map(|f| f.degree).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![4, 4, 5, 5]);
        // The two 5-faces share the edge u,v and the vertex s.
        let fives: Vec<_> = g.faces().iter().filter(|f| f.degree == 5).collect();
        let shared: Vec<usize> = fives[0]
            .incident_vertices
            .iter()
            .filter(|v| fives[1].incident_vertices.contains(v))
            .copied()
            .collect();
        assert_eq!(shared, vec![1, 3, 4]); // s, u, v
    }

    #[test]
    fn bad_parameters() {
        assert!(matches!(
            build_pattern(&ConfigPattern::C2(2, 4)),
            Err(PatternError::BadParameters(_))
        ));
        assert!(matches!(
            build_pattern(&ConfigPattern::C4(3, 3, 2, 3)),
            Err(PatternError::BadParameters(_))
        ));
    }
}
