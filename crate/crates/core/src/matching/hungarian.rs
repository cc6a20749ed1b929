use num_traits::Zero;

use super::Matching;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Minimum-weight matching saturating the smaller side of a bipartite graph
/// (a perfect matching when both sides have equal size).
///
/// `edges` holds `(l, r, weight)` with `l < left` and `r < right`; the
/// returned matching uses the same `(l, r, weight)` layout. Missing pairs
/// are forbidden, not zero.
pub fn min_weight_perfect_bipartite_matching(
    left: usize,
    right: usize,
    edges: &[(usize, usize, Rational)],
) -> Result<Matching> {
    for (l, r, _) in edges {
        if *l >= left || *r >= right {
            return Err(Error::InvalidInstance(format!(
                "edge ({l}, {r}) outside a {left}×{right} bipartite graph"
            )));
        }
    }
    let transpose = left > right;
    let (rows, cols) = if transpose { (right, left) } else { (left, right) };
    let mut cost: Vec<Vec<Option<Rational>>> = vec![vec![None; cols]; rows];
    for (l, r, w) in edges {
        let (i, j) = if transpose { (*r, *l) } else { (*l, *r) };
        let cell = &mut cost[i][j];
        if cell.as_ref().is_none_or(|c| w < c) {
            *cell = Some(w.clone());
        }
    }
    let assignment = assign(&cost, cols).ok_or_else(|| {
        Error::Infeasible(format!(
            "no matching saturates the smaller side of a {left}×{right} graph"
        ))
    })?;
    let pairs = assignment
        .into_iter()
        .enumerate()
        .map(|(i, j)| {
            let w = cost[i][j].clone().expect("assigned pairs are edges");
            if transpose {
                (j, i, w)
            } else {
                (i, j, w)
            }
        })
        .collect();
    Ok(Matching::from_edges(pairs))
}

/// Shortest-augmenting-path Hungarian method on a `rows × cols` matrix with
/// `rows ≤ cols`; `None` entries are absent edges. Returns the column of
/// every row, or `None` when no complete assignment exists.
fn assign(cost: &[Vec<Option<Rational>>], cols: usize) -> Option<Vec<usize>> {
    let rows = cost.len();
    let zero = Rational::zero;
    // 1-based rows and columns; column 0 is a virtual root.
    let mut u = vec![zero(); rows + 1];
    let mut v = vec![zero(); cols + 1];
    let mut owner = vec![0usize; cols + 1];
    let mut way = vec![0usize; cols + 1];
    for i in 1..=rows {
        owner[0] = i;
        let mut j0 = 0;
        let mut minv: Vec<Option<Rational>> = vec![None; cols + 1];
        let mut used = vec![false; cols + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta: Option<Rational> = None;
            let mut j1 = 0;
            for j in 1..=cols {
                if used[j] {
                    continue;
                }
                if let Some(c) = &cost[i0 - 1][j - 1] {
                    let cur = c - &u[i0] - &v[j];
                    if minv[j].as_ref().is_none_or(|m| cur < *m) {
                        minv[j] = Some(cur);
                        way[j] = j0;
                    }
                }
                if let Some(m) = &minv[j] {
                    if delta.as_ref().is_none_or(|d| m < d) {
                        delta = Some(m.clone());
                        j1 = j;
                    }
                }
            }
            let delta = delta?;
            for j in 0..=cols {
                if used[j] {
                    u[owner[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(m) = &mut minv[j] {
                    *m -= &delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut out = vec![0; rows];
    for j in 1..=cols {
        if owner[j] != 0 {
            out[owner[j] - 1] = j - 1;
        }
    }
    Some(out)
}
