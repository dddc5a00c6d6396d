//! Exhaustive check of the even-cycle characterization: a cycle with
//! 2-lists is colorable iff its length is even or not all lists coincide.

use serde::Serialize;

/// Outcome of checking every 2-assignment class on the cycle.
#[derive(Debug, Clone, Serialize)]
pub struct Lemma21Outcome {
    pub n: usize,
    pub verified: bool,
    pub classes_checked: u64,
    /// Assignments where colorability disagreed with the characterization,
    /// as per-vertex color pairs.
    pub failures: Vec<Vec<(u32, u32)>>,
}

/// Enumerates all 2-assignments on the cycle `C_n` up to color renaming
/// (colors are introduced in first-use order, which picks one canonical
/// representative per renaming class) and confirms that the assignment is
/// colorable exactly when `n` is even or some two lists differ.
pub fn lemma21_oracle(n: usize) -> Lemma21Outcome {
    assert!((3..=8).contains(&n), "cycle length must be in 3..=8");
    let mut lists: Vec<(u32, u32)> = Vec::with_capacity(n);
    let mut outcome = Lemma21Outcome { n, verified: true, classes_checked: 0, failures: Vec::new() };
    enumerate(n, 0, &mut lists, &mut outcome);
    outcome
}

fn enumerate(n: usize, used: u32, lists: &mut Vec<(u32, u32)>, out: &mut Lemma21Outcome) {
    if lists.len() == n {
        out.classes_checked += 1;
        let colorable = cycle_colorable(lists);
        let all_same = lists.iter().all(|&l| l == lists[0]);
        let expected = n % 2 == 0 || !all_same;
        if colorable != expected {
            out.verified = false;
            out.failures.push(lists.clone());
        }
        return;
    }
    // Existing pairs.
    for a in 0..used {
        for b in a + 1..used {
            lists.push((a, b));
            enumerate(n, used, lists, out);
            lists.pop();
        }
    }
    // One new color.
    for a in 0..used {
        lists.push((a, used));
        enumerate(n, used + 1, lists, out);
        lists.pop();
    }
    // Two new colors.
    lists.push((used, used + 1));
    enumerate(n, used + 2, lists, out);
    lists.pop();
}

/// Exact decision for a cycle under 2-lists: fix the color of vertex 0 and
/// propagate feasible sets along the path, excluding that color at the end.
fn cycle_colorable(lists: &[(u32, u32)]) -> bool {
    let n = lists.len();
    let mask = |l: (u32, u32)| (1u64 << l.0) | (1u64 << l.1);
    for c in [lists[0].0, lists[0].1] {
        let cbit = 1u64 << c;
        let mut feasible: u64 = mask(lists[1]) & !cbit;
        for i in 2..n {
            let mut m = mask(lists[i]);
            if i == n - 1 {
                m &= !cbit;
            }
            feasible = match feasible.count_ones() {
                0 => 0,
                1 => m & !feasible,
                _ => m,
            };
        }
        if feasible != 0 {
            return true;
        }
    }
    false
}
