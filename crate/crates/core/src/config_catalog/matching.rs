//! Injective edge-preserving occurrence search for the catalog patterns,
//! with matches deduplicated up to pattern automorphism.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::cycle_analysis::{enumerate_cycles, CycleError, DEFAULT_CYCLE_CAP};
use crate::plane_graph::{PlaneGraph, VertexId};

use super::patterns::{build_pattern, ConfigPattern, PatternError};

pub const DEFAULT_MATCH_CAP: usize = 100_000;

#[derive(Debug, Error)]
pub enum MatchError {
    #[error("match enumeration exceeded the cap of {0}")]
    LimitExceeded(usize),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Cycle(#[from] CycleError),
}

/// One occurrence of a pattern: `vertex_map[i]` is the host vertex playing
/// pattern vertex `i`. `face_constraints_met` reports whether the mapped
/// faces required by a face-anchored pattern are traced faces of the host.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigMatch {
    pub pattern: ConfigPattern,
    pub vertex_map: Vec<VertexId>,
    pub face_constraints_met: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatchReport {
    pub matches: Vec<ConfigMatch>,
    /// Number of injective edge-preserving maps before automorphism
    /// deduplication.
    pub raw_count: usize,
}

/// All injective edge-preserving maps from `pattern_adj` into `g`, as raw
/// vertex tuples. Non-edges of the pattern may land on host edges.
pub fn find_subgraph_occurrences(
    g: &PlaneGraph,
    pattern_adj: &[Vec<usize>],
    cap: usize,
) -> Result<Vec<Vec<VertexId>>, MatchError> {
    let k = pattern_adj.len();
    let n = g.vertex_count();
    if k > n {
        return Ok(vec![]);
    }
    // Order pattern vertices so each one after the first attaches to a
    // previously mapped neighbor where possible (the patterns are connected).
    let order = matching_order(pattern_adj);
    let mut pos_in_order = vec![0usize; k];
    for (i, &p) in order.iter().enumerate() {
        pos_in_order[p] = i;
    }
    // For each pattern vertex, the neighbors that are mapped earlier.
    let earlier_nbrs: Vec<Vec<usize>> = order
        .iter()
        .map(|&p| {
            pattern_adj[p]
                .iter()
                .copied()
                .filter(|&q| pos_in_order[q] < pos_in_order[p])
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; n];
    backtrack(
        g,
        pattern_adj,
        &order,
        &earlier_nbrs,
        0,
        &mut map,
        &mut used,
        cap,
        &mut out,
    )?;
    Ok(out)
}

fn matching_order(pattern_adj: &[Vec<usize>]) -> Vec<usize> {
    let k = pattern_adj.len();
    let start = (0..k).max_by_key(|&v| pattern_adj[v].len()).unwrap();
    let mut order = vec![start];
    let mut seen = vec![false; k];
    seen[start] = true;
    while order.len() < k {
        // Next: unvisited vertex with most visited neighbors, ties by degree.
        let next = (0..k)
            .filter(|&v| !seen[v])
            .max_by_key(|&v| {
                let attached = pattern_adj[v].iter().filter(|&&u| seen[u]).count();
                (attached, pattern_adj[v].len())
            })
            .unwrap();
        seen[next] = true;
        order.push(next);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    g: &PlaneGraph,
    pattern_adj: &[Vec<usize>],
    order: &[usize],
    earlier_nbrs: &[Vec<usize>],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    cap: usize,
    out: &mut Vec<Vec<VertexId>>,
) -> Result<(), MatchError> {
    if depth == order.len() {
        if out.len() == cap {
            return Err(MatchError::LimitExceeded(cap));
        }
        out.push(map.clone());
        return Ok(());
    }
    let p = order[depth];
    let needed = pattern_adj[p].len();
    // Candidates: host neighbors of an already-mapped pattern neighbor, or
    // every unused vertex for the root.
    let candidates: Vec<usize> = if let Some(&q) = earlier_nbrs[depth].first() {
        g.neighbors(map[q]).to_vec()
    } else {
        (0..g.vertex_count()).collect()
    };
    'cand: for c in candidates {
        if used[c] || g.neighbors(c).len() < needed {
            continue;
        }
        for &q in &earlier_nbrs[depth] {
            if !g.has_edge(c, map[q]) {
                continue 'cand;
            }
        }
        map[p] = c;
        used[c] = true;
        backtrack(g, pattern_adj, order, earlier_nbrs, depth + 1, map, used, cap, out)?;
        used[c] = false;
        map[p] = usize::MAX;
    }
    Ok(())
}

/// The automorphism group of a small graph, as vertex permutations.
pub fn pattern_automorphisms(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let k = adj.len();
    let g = adjacency_matrix(adj);
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; k];
    let mut used = vec![false; k];
    fn rec(
        g: &Vec<Vec<bool>>,
        deg: &[usize],
        depth: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let k = g.len();
        if depth == k {
            out.push(perm.clone());
            return;
        }
        'cand: for c in 0..k {
            if used[c] || deg[c] != deg[depth] {
                continue;
            }
            for q in 0..depth {
                if g[depth][q] != g[c][perm[q]] {
                    continue 'cand;
                }
            }
            perm[depth] = c;
            used[c] = true;
            rec(g, deg, depth + 1, perm, used, out);
            used[c] = false;
            perm[depth] = usize::MAX;
        }
    }
    let deg: Vec<usize> = adj.iter().map(|r| r.len()).collect();
    rec(&g, &deg, 0, &mut perm, &mut used, &mut out);
    out
}

fn adjacency_matrix(adj: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let k = adj.len();
    let mut m = vec![vec![false; k]; k];
    for (v, nbrs) in adj.iter().enumerate() {
        for &u in nbrs {
            m[v][u] = true;
        }
    }
    m
}

/// Every occurrence of `p` in `g`, deduplicated up to pattern automorphism.
/// For the face-anchored gluings `F` and `H` only matches whose required
/// faces are traced host faces are returned (for `F` this includes `t,u,y`
/// being the designated outer triangle); fan patterns and `W5` are matched
/// as abstract subgraphs, with `face_constraints_met` reporting whether the
/// `W5` wedges happen to be inner host 3-faces.
pub fn find_matches(g: &PlaneGraph, p: &ConfigPattern) -> Result<MatchReport, MatchError> {
    find_matches_capped(g, p, DEFAULT_MATCH_CAP)
}

pub fn find_matches_capped(
    g: &PlaneGraph,
    p: &ConfigPattern,
    cap: usize,
) -> Result<MatchReport, MatchError> {
    let pattern_graph = build_pattern(p)?;
    let pattern_adj: Vec<Vec<usize>> = pattern_graph.rotations().to_vec();
    let raw = find_subgraph_occurrences(g, &pattern_adj, cap)?;
    let raw_count = raw.len();
    let autos = pattern_automorphisms(&pattern_adj);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut matches = Vec::new();
    for map in raw {
        let canon = autos
            .iter()
            .map(|a| {
                let mut img: Vec<usize> = (0..map.len()).map(|i| map[a[i]]).collect();
                // Canonical member of the orbit: compare as tuples.
                img.shrink_to_fit();
                img
            })
            .min()
            .unwrap();
        if !seen.insert(canon) {
            continue;
        }
        let (keep, faces_ok) = match p {
            ConfigPattern::FFig1 => {
                let ok = f_faces_present(g, &pattern_graph, &map);
                (ok, ok)
            }
            ConfigPattern::HFig2 => {
                let ok = h_faces_present(g, &pattern_graph, &map);
                (ok, ok)
            }
            ConfigPattern::W5 => (true, w5_faces_inner(g, &map)),
            _ => (true, true),
        };
        if keep {
            matches.push(ConfigMatch {
                pattern: *p,
                vertex_map: map,
                face_constraints_met: faces_ok,
            });
        }
    }
    matches.sort_by(|a, b| a.vertex_map.cmp(&b.vertex_map));
    Ok(MatchReport { matches, raw_count })
}

/// Does the host have a traced face whose boundary is exactly the cycle on
/// `verts`?
fn host_face_on(g: &PlaneGraph, verts: &[VertexId]) -> Option<usize> {
    let mut sorted = verts.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != verts.len() {
        return None;
    }
    g.faces()
        .iter()
        .find(|f| f.degree == verts.len() && f.boundary_is_cycle && f.incident_vertices == sorted)
        .map(|f| f.id)
}

fn f_faces_present(g: &PlaneGraph, pat: &PlaneGraph, map: &[VertexId]) -> bool {
    let v = |name: &str| map[pat.vertex_by_label(name).unwrap()];
    let four = [v("s"), v("t"), v("u"), v("v")];
    let five = [v("u"), v("v"), v("w"), v("t"), v("y")];
    let c0 = {
        let mut t = [v("t"), v("u"), v("y")];
        t.sort_unstable();
        t
    };
    let outer_ok = match g.outer_triangle() {
        Some(mut ot) => {
            ot.sort_unstable();
            ot == c0
        }
        None => false,
    };
    host_face_on(g, &four).is_some() && host_face_on(g, &five).is_some() && outer_ok
}

fn h_faces_present(g: &PlaneGraph, pat: &PlaneGraph, map: &[VertexId]) -> bool {
    let v = |name: &str| map[pat.vertex_by_label(name).unwrap()];
    let f = [v("r"), v("s"), v("t"), v("u"), v("v")];
    let gg = [v("u"), v("v"), v("w"), v("s"), v("y")];
    host_face_on(g, &f).is_some() && host_face_on(g, &gg).is_some()
}

fn w5_faces_inner(g: &PlaneGraph, map: &[VertexId]) -> bool {
    // Pattern vertex 0 is the hub, 1..4 the rim in cyclic order.
    let hub = map[0];
    let outer_verts: Option<Vec<VertexId>> = g
        .outer_face()
        .map(|of| g.face(of).incident_vertices.clone());
    for i in 0..4 {
        let a = map[1 + i];
        let b = map[1 + (i + 1) % 4];
        match host_face_on(g, &[hub, a, b]) {
            None => return false,
            Some(f) => {
                if let Some(ref ov) = outer_verts {
                    let inner = g
                        .face(f)
                        .incident_vertices
                        .iter()
                        .all(|x| !ov.contains(x));
                    if !inner {
                        return false;
                    }
                } else {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Debug, Clone, Serialize)]
pub struct ForbiddenFinding {
    pub name: String,
    pub matched: ConfigMatch,
    pub detail: Option<String>,
}

/// Scans for the five forbidden chorded-cycle configurations and for a `W5`
/// sharing exactly one edge with a cycle of length at most 6. On any graph
/// inside the family `A` this list is empty.
pub fn forbidden_scan(g: &PlaneGraph) -> Result<Vec<ForbiddenFinding>, MatchError> {
    let mut out = Vec::new();
    let patterns = [
        ConfigPattern::C3(3, 3, 4),
        ConfigPattern::C3(3, 3, 5),
        ConfigPattern::C3(3, 4, 3),
        ConfigPattern::C3(3, 4, 4),
        ConfigPattern::C3(4, 3, 5),
    ];
    for p in patterns {
        for m in find_matches(g, &p)?.matches {
            out.push(ForbiddenFinding { name: p.name(), matched: m, detail: None });
        }
    }
    let w5 = find_matches(g, &ConfigPattern::W5)?;
    if !w5.matches.is_empty() {
        let cycles = enumerate_cycles(g, 6, DEFAULT_CYCLE_CAP)?;
        for m in w5.matches {
            let hub = m.vertex_map[0];
            let mut w5_edges: Vec<(usize, usize)> = Vec::new();
            for i in 0..4 {
                let a = m.vertex_map[1 + i];
                let b = m.vertex_map[1 + (i + 1) % 4];
                w5_edges.push((a.min(b), a.max(b)));
                w5_edges.push((hub.min(a), hub.max(a)));
            }
            w5_edges.sort_unstable();
            for c in &cycles {
                let shared = c
                    .edge_set
                    .iter()
                    .filter(|e| w5_edges.binary_search(e).is_ok())
                    .count();
                if shared == 1 {
                    out.push(ForbiddenFinding {
                        name: format!("W5+C{}", c.len()),
                        matched: m.clone(),
                        detail: Some(format!("cycle {:?}", c.vertices)),
                    });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle_analysis::in_family_a;
    use crate::plane_graph::tests_support::{cube, k4};

    #[test]
    fn identity_match_up_to_automorphism() {
        let host = build_pattern(&ConfigPattern::C3(3, 3, 4)).unwrap();
        let report = find_matches(&host, &ConfigPattern::C3(3, 3, 4)).unwrap();
        assert_eq!(report.matches.len(), 1);
        assert!(report.raw_count >= 1);
    }

    #[test]
    fn k4_contains_c33() {
        let report = find_matches(&k4(), &ConfigPattern::C2(3, 3)).unwrap();
        assert!(!report.matches.is_empty());
    }

    #[test]
    fn cube_has_no_wheel() {
        let report = find_matches(&cube(), &ConfigPattern::W5).unwrap();
        assert!(report.matches.is_empty());
    }

    #[test]
    fn forbidden_scan_finds_c335_and_family_agrees() {
        let g = build_pattern(&ConfigPattern::C3(3, 3, 5)).unwrap();
        let findings = forbidden_scan(&g).unwrap();
        assert!(findings.iter().any(|f| f.name == "C(3,3,5)"));
        assert!(!in_family_a(&g).unwrap().is_member());
    }

    #[test]
    fn forbidden_scan_empty_on_k4() {
        assert!(forbidden_scan(&k4()).unwrap().is_empty());
    }

    #[test]
    fn w5_automorphism_count() {
        let w5 = build_pattern(&ConfigPattern::W5).unwrap();
        // Dihedral group of the rim square.
        assert_eq!(pattern_automorphisms(w5.rotations()).len(), 8);
    }
}
