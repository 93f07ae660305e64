//! Row reduction, rank, inversion and solving over GF(q).
//!
//! Matrices are dense `Vec<Vec<Elem>>` in row-major order. Sizes here are
//! tiny (at most m ≤ 9 columns), so plain Gaussian elimination is enough.

use crate::field::{Elem, FieldSpec};

/// Reduced row echelon form. Returns (rref rows with zero rows dropped,
/// pivot column per kept row).
pub(crate) fn rref(field: &FieldSpec, rows: &[Vec<Elem>]) -> (Vec<Vec<Elem>>, Vec<usize>) {
    let mut mat: Vec<Vec<Elem>> = rows.to_vec();
    let ncols = mat.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, piv);
        let scale = field.inv(mat[rank][col]);
        for x in mat[rank].iter_mut() {
            *x = field.mul(*x, scale);
        }
        for r in 0..mat.len() {
            if r != rank && !mat[r][col].is_zero() {
                let factor = mat[r][col];
                for c in 0..ncols {
                    let delta = field.mul(factor, mat[rank][c]);
                    mat[r][c] = field.sub(mat[r][c], delta);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    mat.truncate(rank);
    (mat, pivots)
}

/// Inverse of a square matrix, or None when singular.
pub(crate) fn invert(field: &FieldSpec, mat: &[Vec<Elem>]) -> Option<Vec<Vec<Elem>>> {
    let n = mat.len();
    let mut work: Vec<Vec<Elem>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix not square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Elem::ONE } else { Elem::ZERO }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, piv);
        let scale = field.inv(work[col][col]);
        for x in work[col].iter_mut() {
            *x = field.mul(*x, scale);
        }
        for r in 0..n {
            if r != col && !work[r][col].is_zero() {
                let factor = work[r][col];
                for c in 0..2 * n {
                    let delta = field.mul(factor, work[col][c]);
                    work[r][c] = field.sub(work[r][c], delta);
                }
            }
        }
    }
    Some(work.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Basis of the right nullspace {x : M·x = 0} of an r×c matrix.
pub(crate) fn nullspace(field: &FieldSpec, rows: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let (red, pivots) = rref(field, rows);
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Elem::ZERO; ncols];
        v[free] = Elem::ONE;
        for (row, &p) in red.iter().zip(&pivots) {
            v[p] = field.neg(row[free]);
        }
        basis.push(v);
    }
    basis
}

pub(crate) fn mat_vec(field: &FieldSpec, mat: &[Vec<Elem>], v: &[Elem]) -> Vec<Elem> {
    mat.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Elem::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
        })
        .collect()
}

pub(crate) fn dot(field: &FieldSpec, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}
