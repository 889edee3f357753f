//! Exact Gaussian elimination over the rationals.

use crate::exactnum::scalar::{self, Scalar};
use num_traits::Zero;

/// Reduced row echelon form in place; returns pivot columns.
fn rref(m: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = scalar::one() / &m[row][col];
        for v in &mut m[row][col..] {
            *v = &*v * &inv;
        }
        let pivot_row = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r != row && !line[col].is_zero() {
                let f = line[col].clone();
                for (v, pv) in line[col..].iter_mut().zip(&pivot_row[col..]) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

/// Rank of a dense matrix given as rows.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// A basis of `{c : sum_j c_j * cols[j] = 0}` where `cols` are column vectors.
pub fn nullspace(cols: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = cols.len();
    let nrows = cols.first().map_or(0, |c| c.len());
    let mut m: Vec<Vec<Scalar>> = (0..nrows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let pivots = rref(&mut m, n);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![scalar::zero(); n];
        v[free] = scalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Some `c` with `sum_j c_j * cols[j] = target`, if one exists.
pub fn solve(cols: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = cols.len();
    let nrows = target.len();
    let mut m: Vec<Vec<Scalar>> = (0..nrows)
        .map(|r| {
            let mut row: Vec<Scalar> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![scalar::zero(); n];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][n].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use scalar::int;

    #[test]
    fn small_system() {
        let cols = vec![
            vec![int(1), int(2)],
            vec![int(2), int(4)],
            vec![int(0), int(1)],
        ];
        assert_eq!(
            rank(&[vec![int(1), int(2), int(0)], vec![int(2), int(4), int(1)]]),
            2
        );
        let ns = nullspace(&cols);
        assert_eq!(ns, vec![vec![int(-2), int(1), int(0)]]);
        let x = solve(&cols, &[int(1), int(3)]).unwrap();
        assert_eq!(x, vec![int(1), int(0), int(1)]);
        assert!(solve(&cols[..2], &[int(1), int(3)]).is_none());
    }
}
