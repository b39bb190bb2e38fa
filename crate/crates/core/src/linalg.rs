//! Exact Gaussian elimination over the rationals.
//!
//! Used for nullspace dimensions (the defining equation of u(2,2)), span
//! membership of matrix sets, and Laplacian ranks on polynomial spaces.
//! All matrices here are small (at most a few hundred rows).

use crate::exact::Rat;
use num_traits::Zero;

/// Reduce `m` to reduced row echelon form in place; returns the rank.
pub fn rref(m: &mut [Vec<Rat>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for entry in m[pivot_row][col..cols].iter_mut() {
            *entry = &*entry * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let v = &m[r][c] - &(&factor * &m[pivot_row][c]);
                    m[r][c] = v;
                }
            }
        }
        pivot_row += 1;
    }
    pivot_row
}

pub fn rank(mut m: Vec<Vec<Rat>>) -> usize {
    rref(&mut m)
}

/// Solve A c = t for every target column, where A's columns are `basis`.
///
/// Returns one coefficient vector per target, or `None` for targets outside
/// the column span. Exact throughout.
pub fn solve_in_span(basis: &[Vec<Rat>], targets: &[Vec<Rat>]) -> Vec<Option<Vec<Rat>>> {
    let n_rows = basis.first().map_or(0, |c| c.len());
    let n_basis = basis.len();
    let n_targets = targets.len();
    for t in targets {
        assert_eq!(t.len(), n_rows, "target dimension mismatch");
    }
    // Augmented matrix [A | T].
    let mut m: Vec<Vec<Rat>> = (0..n_rows)
        .map(|r| {
            let mut row = Vec::with_capacity(n_basis + n_targets);
            for b in basis {
                row.push(b[r].clone());
            }
            for t in targets {
                row.push(t[r].clone());
            }
            row
        })
        .collect();
    rref(&mut m);

    // Locate pivot columns within the A-block.
    let mut pivot_col_of_row = Vec::new();
    for row in &m {
        if let Some(col) = (0..n_basis).find(|&c| !row[c].is_zero()) {
            pivot_col_of_row.push(Some(col));
        } else {
            pivot_col_of_row.push(None);
        }
    }

    (0..n_targets)
        .map(|ti| {
            let tcol = n_basis + ti;
            let mut coeffs = vec![Rat::zero(); n_basis];
            for (r, pivot) in pivot_col_of_row.iter().enumerate() {
                match pivot {
                    Some(col) => coeffs[*col] = m[r][tcol].clone(),
                    None => {
                        // Zero row in A-block: any nonzero target entry means inconsistent.
                        if !m[r][tcol].is_zero() {
                            return None;
                        }
                    }
                }
            }
            Some(coeffs)
        })
        .collect()
}
