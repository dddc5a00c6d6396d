//! Complete backtracking solver for list coloring with optional pins.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::plane_graph::{GraphError, PlaneGraph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("vertex {0} has no list")]
    MissingList(VertexId),
    #[error("more than 64 distinct colors in the assignment")]
    PaletteTooLarge,
    #[error("pin on vertex {0} conflicts with its list or a neighboring pin")]
    PinConflict(VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Per-vertex color lists; colors are arbitrary small integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    pub lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<u32>>) -> ListAssignment {
        ListAssignment { lists }
    }

    pub fn uniform(n: usize, colors: &[u32]) -> ListAssignment {
        ListAssignment { lists: vec![colors.to_vec(); n] }
    }
}

/// A proper coloring within the lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: Vec<u32>,
}

/// Decides L-colorability of the graph given by `adj`, extending the given
/// pins. The search is complete: `Ok(None)` means no proper in-list
/// coloring extending the pins exists.
pub fn solve(
    adj: &[Vec<usize>],
    lists: &ListAssignment,
    pins: &[(VertexId, u32)],
) -> Result<Option<Coloring>, ColoringError> {
    let n = adj.len();
    if lists.lists.len() < n {
        return Err(ColoringError::MissingList(lists.lists.len()));
    }
    // Compact the palette into bit positions.
    let mut palette: Vec<u32> = lists.lists.iter().flatten().copied().collect();
    palette.sort_unstable();
    palette.dedup();
    if palette.len() > 64 {
        return Err(ColoringError::PaletteTooLarge);
    }
    let index: BTreeMap<u32, usize> = palette.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut domains: Vec<u64> = lists
        .lists
        .iter()
        .take(n)
        .map(|l| l.iter().fold(0u64, |m, c| m | 1 << index[c]))
        .collect();

    let mut fixed: Vec<Option<usize>> = vec![None; n];
    for &(v, c) in pins {
        if v >= n {
            return Err(ColoringError::PinConflict(v));
        }
        let bit = match index.get(&c) {
            Some(&b) if domains[v] >> b & 1 == 1 => b,
            _ => return Err(ColoringError::PinConflict(v)),
        };
        if let Some(prev) = fixed[v] {
            if prev != bit {
                return Err(ColoringError::PinConflict(v));
            }
        }
        fixed[v] = Some(bit);
    }
    for &(v, _) in pins {
        for &u in &adj[v] {
            if fixed.get(u).copied().flatten() == fixed[v] && fixed[v].is_some() && u != v {
                return Err(ColoringError::PinConflict(v));
            }
        }
    }
    for (v, f) in fixed.iter().enumerate() {
        if let Some(bit) = f {
            domains[v] = 1 << bit;
        }
    }

    let mut colors = vec![usize::MAX; n];
    if !assign(adj, &mut domains, &mut colors) {
        return Ok(None);
    }
    Ok(Some(Coloring {
        assignment: colors.into_iter().map(|b| palette[b]).collect(),
    }))
}

/// MRV backtracking with forward pruning of neighbor domains.
fn assign(adj: &[Vec<usize>], domains: &mut [u64], colors: &mut [usize]) -> bool {
    let n = adj.len();
    let mut best: Option<(u32, usize)> = None;
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let size = domains[v].count_ones();
        if size == 0 {
            return false;
        }
        match best {
            Some((s, _)) if s <= size => {}
            _ => best = Some((size, v)),
        }
    }
    let (_, v) = match best {
        Some(b) => b,
        None => return true,
    };
    let saved = domains[v];
    let mut avail = saved;
    while avail != 0 {
        let bit = avail.trailing_zeros() as usize;
        avail &= avail - 1;
        colors[v] = bit;
        domains[v] = 1 << bit;
        let mut touched: Vec<(usize, u64)> = Vec::new();
        let mut dead = false;
        for &u in &adj[v] {
            if colors[u] == usize::MAX && domains[u] >> bit & 1 == 1 {
                touched.push((u, domains[u]));
                domains[u] &= !(1 << bit);
                if domains[u] == 0 {
                    dead = true;
                }
            } else if colors[u] == bit {
                dead = true;
            }
        }
        if !dead && assign(adj, domains, colors) {
            return true;
        }
        for (u, d) in touched {
            domains[u] = d;
        }
        colors[v] = usize::MAX;
        domains[v] = saved;
    }
    false
}

/// Residual list assignment on `h`: the original list of each vertex minus
/// the colors `phi` gives to its neighbors outside `h`.
pub fn residual(
    adj: &[Vec<usize>],
    h: &[VertexId],
    phi: &BTreeMap<VertexId, u32>,
    lists: &ListAssignment,
) -> Vec<Vec<u32>> {
    h.iter()
        .map(|&v| {
            lists.lists[v]
                .iter()
                .copied()
                .filter(|c| {
                    !adj[v]
                        .iter()
                        .any(|u| !h.contains(u) && phi.get(u) == Some(c))
                })
                .collect()
        })
        .collect()
}

/// Extends a proper precoloring of the outer triangle to the whole graph,
/// or decides that no extension exists.
pub fn extend_precolored_triangle(
    g: &PlaneGraph,
    lists: &ListAssignment,
    phi0: &[(VertexId, u32); 3],
) -> Result<Option<Coloring>, ColoringError> {
    let triangle = g.outer_triangle().ok_or(GraphError::MissingOuterFace)?;
    for (v, _) in phi0 {
        if !triangle.contains(v) {
            return Err(ColoringError::PinConflict(*v));
        }
    }
    solve(g.rotations(), lists, phi0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::tests_support::k4;

    fn cycle(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect()
    }

    #[test]
    fn odd_cycle_same_lists_unsat() {
        let adj = cycle(3);
        let lists = ListAssignment::uniform(3, &[1, 2]);
        assert_eq!(solve(&adj, &lists, &[]).unwrap(), None);
    }

    #[test]
    fn even_cycle_same_lists_sat() {
        let adj = cycle(4);
        let lists = ListAssignment::uniform(4, &[1, 2]);
        let c = solve(&adj, &lists, &[]).unwrap().unwrap();
        for i in 0..4 {
            assert_ne!(c.assignment[i], c.assignment[(i + 1) % 4]);
        }
    }

    #[test]
    fn k4_four_colors() {
        let g = k4();
        let lists = ListAssignment::uniform(4, &[1, 2, 3, 4]);
        let c = solve(g.rotations(), &lists, &[]).unwrap().unwrap();
        let mut cs = c.assignment.clone();
        cs.sort_unstable();
        cs.dedup();
        assert_eq!(cs.len(), 4);
    }

    #[test]
    fn pins_are_respected_and_checked() {
        let adj = cycle(4);
        let lists = ListAssignment::uniform(4, &[1, 2]);
        let c = solve(&adj, &lists, &[(0, 1)]).unwrap().unwrap();
        assert_eq!(c.assignment[0], 1);
        assert!(matches!(
            solve(&adj, &lists, &[(0, 7)]),
            Err(ColoringError::PinConflict(0))
        ));
        assert!(matches!(
            solve(&adj, &lists, &[(0, 1), (1, 1)]),
            Err(ColoringError::PinConflict(_))
        ));
    }

    #[test]
    fn residual_subtracts_outside_colors() {
        // Path 0-1-2; h = {1}; outside neighbors 0,2 colored 1 and 2.
        let adj = vec![vec![1], vec![0, 2], vec![1]];
        let lists = ListAssignment::uniform(3, &[1, 2, 3, 4]);
        let phi: BTreeMap<usize, u32> = [(0, 1), (2, 2)].into();
        assert_eq!(residual(&adj, &[1], &phi, &lists), vec![vec![3, 4]]);
        // No outside neighbors: identity.
        let lonely = residual(&adj, &[0, 1, 2], &phi, &lists);
        assert_eq!(lonely[0], vec![1, 2, 3, 4]);
    }

    #[test]
    fn extend_k4_triangle() {
        let mut g = k4();
        g.designate_outer([0, 1, 2]).unwrap();
        let lists = ListAssignment::uniform(4, &[1, 2, 3, 4]);
        let c = extend_precolored_triangle(&g, &lists, &[(0, 1), (1, 2), (2, 3)])
            .unwrap()
            .unwrap();
        assert_eq!(c.assignment[3], 4);
    }
}
