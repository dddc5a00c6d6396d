//! Greedy-counting certificates for reducibility arguments.
//!
//! A certificate names a coloring order and optional save-moves of the form
//! "pick the chooser's color keeping at least two colors in the protected
//! neighbor's residual list". The check is purely arithmetic over the size
//! profile: it tracks a lower bound on every residual list and succeeds when
//! each vertex still has a color available at its turn, for every assignment
//! meeting the profile.

use serde::Serialize;
use thiserror::Error;

use super::SizeProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpecialMove {
    /// When `chooser` is colored, pick its color `c` so that the protected
    /// neighbor keeps at least two colors. Sound when the protected vertex
    /// still has three colors (any `c` leaves two) or the chooser's current
    /// lower bound exceeds the protected vertex's full list size (a color
    /// outside that list exists).
    KeepTwo { chooser: usize, protected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibilityCertificate {
    pub order: Vec<usize>,
    pub special_moves: Vec<SpecialMove>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("order is not a permutation of the configuration vertices")]
    OrderNotPermutation,
    #[error("special move references vertex {0} outside the configuration")]
    UnknownVertex(usize),
    #[error("chooser and protected vertex of a save-move must be adjacent and distinct")]
    BadSaveMove,
    #[error("protected vertex must be colored after its chooser")]
    SaveOrder,
}

#[derive(Debug, Clone, Serialize)]
pub struct StepTrace {
    pub vertex: usize,
    pub lower_bound: usize,
    pub colored_neighbors: usize,
    pub exempted: usize,
    pub slack: i64,
    pub save_valid: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateCheck {
    pub holds: bool,
    pub steps: Vec<StepTrace>,
}

/// Runs the counting argument. `holds` is true iff every vertex, at its
/// turn, has more remaining colors than colored neighbors (honoring the
/// save-moves), which makes greedy coloring succeed for every assignment
/// with the profile's list sizes.
pub fn check_certificate(
    adj: &[Vec<usize>],
    profile: &SizeProfile,
    cert: &ReducibilityCertificate,
) -> Result<CertificateCheck, CertificateError> {
    let n = adj.len();
    if cert.order.len() != n {
        return Err(CertificateError::OrderNotPermutation);
    }
    let mut seen = vec![false; n];
    for &v in &cert.order {
        if v >= n || seen[v] {
            return Err(CertificateError::OrderNotPermutation);
        }
        seen[v] = true;
    }
    let pos: Vec<usize> = {
        let mut p = vec![0; n];
        for (i, &v) in cert.order.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    let mut saves_by_chooser: Vec<Vec<usize>> = vec![Vec::new(); n];
    for m in &cert.special_moves {
        let SpecialMove::KeepTwo { chooser, protected } = *m;
        if chooser >= n || protected >= n {
            return Err(CertificateError::UnknownVertex(chooser.max(protected)));
        }
        if chooser == protected || !adj[chooser].contains(&protected) {
            return Err(CertificateError::BadSaveMove);
        }
        if pos[protected] <= pos[chooser] {
            return Err(CertificateError::SaveOrder);
        }
        saves_by_chooser[chooser].push(protected);
    }

    // Dynamic lower bound on each vertex's residual list.
    let mut lb: Vec<i64> = profile.bounds.iter().map(|&b| b as i64).collect();
    let mut colored = vec![false; n];
    let mut exempt: Vec<Vec<usize>> = vec![Vec::new(); n]; // protected -> choosers
    let mut steps = Vec::new();
    let mut holds = true;
    for &v in &cert.order {
        let colored_nbrs = adj[v].iter().filter(|&&u| colored[u]).count();
        let exempted = exempt[v]
            .iter()
            .filter(|&&u| colored[u])
            .count();
        let slack = lb[v];
        steps.push(StepTrace {
            vertex: v,
            lower_bound: profile.bounds[v],
            colored_neighbors: colored_nbrs,
            exempted,
            slack,
            save_valid: None,
        });
        if slack < 1 {
            holds = false;
            break;
        }
        // Validate this vertex's save-moves before applying its coloring.
        for &p in &saves_by_chooser[v] {
            let valid = lb[p] >= 3 || lb[v] > profile.bounds[p] as i64;
            if let Some(last) = steps.last_mut() {
                last.save_valid = Some(valid);
            }
            if !valid {
                holds = false;
            }
        }
        if !holds {
            break;
        }
        colored[v] = true;
        for &u in &adj[v] {
            if colored[u] {
                continue;
            }
            if saves_by_chooser[v].contains(&u) {
                // The chosen color leaves the protected list with >= 2.
                lb[u] = (lb[u] - 1).max(2);
                exempt[u].push(v);
            } else {
                lb[u] -= 1;
            }
        }
    }
    Ok(CertificateCheck { holds, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::list_coloring::reducible::{verify_reducible, w5_adjacency};

    fn h_adjacency() -> Vec<Vec<usize>> {
        // 0=r 1=s 2=t 3=u 4=v 5=w 6=y, edges uv, rs, sw, wv, vr, ts, sy, yu, tu.
        vec![
            vec![1, 4],
            vec![5, 6, 2, 0],
            vec![1, 3],
            vec![2, 6, 4],
            vec![0, 3, 5],
            vec![1, 4],
            vec![1, 3],
        ]
    }

    fn h_profile() -> SizeProfile {
        // s: 4, u: 3, rest: 2.
        SizeProfile { bounds: vec![2, 4, 2, 3, 2, 2, 2] }
    }

    #[test]
    fn h_certificate_passes() {
        // Color u first, protecting y, then v, r, w, t, s, y.
        let cert = ReducibilityCertificate {
            order: vec![3, 4, 0, 5, 2, 1, 6],
            special_moves: vec![SpecialMove::KeepTwo { chooser: 3, protected: 6 }],
        };
        let check = check_certificate(&h_adjacency(), &h_profile(), &cert).unwrap();
        assert!(check.holds, "{:?}", check.steps);
    }

    #[test]
    fn h_wrong_order_fails() {
        // Coloring s first and then u with no save-move starves r.
        let cert = ReducibilityCertificate {
            order: vec![1, 3, 4, 0, 5, 2, 6],
            special_moves: vec![],
        };
        let check = check_certificate(&h_adjacency(), &h_profile(), &cert).unwrap();
        assert!(!check.holds);
        let starved = check.steps.last().unwrap();
        assert!(starved.slack < 1);
    }

    #[test]
    fn certificate_soundness_on_h() {
        // check_certificate true must imply exhaustive verification.
        let cert = ReducibilityCertificate {
            order: vec![3, 4, 0, 5, 2, 1, 6],
            special_moves: vec![SpecialMove::KeepTwo { chooser: 3, protected: 6 }],
        };
        let check = check_certificate(&h_adjacency(), &h_profile(), &cert).unwrap();
        assert!(check.holds);
        let out = verify_reducible(&h_adjacency(), &h_profile(), None, 1 << 34).unwrap();
        assert!(out.is_verified());
    }

    #[test]
    fn malformed_certificates() {
        let adj = w5_adjacency();
        let profile = SizeProfile::uniform(5, 3);
        assert!(matches!(
            check_certificate(
                &adj,
                &profile,
                &ReducibilityCertificate { order: vec![0, 1, 2], special_moves: vec![] }
            ),
            Err(CertificateError::OrderNotPermutation)
        ));
        assert!(matches!(
            check_certificate(
                &adj,
                &profile,
                &ReducibilityCertificate {
                    order: vec![0, 1, 2, 3, 4],
                    special_moves: vec![SpecialMove::KeepTwo { chooser: 1, protected: 3 }],
                }
            ),
            Err(CertificateError::BadSaveMove)
        ));
        assert!(matches!(
            check_certificate(
                &adj,
                &profile,
                &ReducibilityCertificate {
                    order: vec![0, 1, 2, 3, 4],
                    special_moves: vec![SpecialMove::KeepTwo { chooser: 1, protected: 0 }],
                }
            ),
            Err(CertificateError::SaveOrder)
        ));
    }
}
