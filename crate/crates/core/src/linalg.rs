//! Dense linear algebra over F_p: echelon forms, kernels and subspace intersection.

use crate::fieldpoly::PrimeField;

/// Brings `rows` to reduced row echelon form in place, drops zero rows and returns the
/// pivot column of each remaining row.
pub fn rref(field: &PrimeField, rows: &mut Vec<Vec<u32>>) -> Vec<usize> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = field.inv(rows[r][col]).expect("pivot is nonzero");
        for v in rows[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                if *y != 0 {
                    *x = field.sub(*x, field.mul(factor, *y));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(field: &PrimeField, rows: &[Vec<u32>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Basis of `{x in F_p^n : sum_i x_i * images[i] = 0}` where `images[i]` is the image of
/// the i-th standard basis vector (all images have the same length).
pub fn kernel(field: &PrimeField, images: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let n = images.len();
    if n == 0 {
        return Vec::new();
    }
    let m = images[0].len();
    // rows of the matrix whose columns are the images
    let mut rows: Vec<Vec<u32>> = (0..m).map(|i| images.iter().map(|v| v[i]).collect()).collect();
    let pivots = rref(field, &mut rows);
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !is_pivot[*c]) {
        let mut v = vec![0u32; n];
        v[free] = 1;
        for (row, &pc) in rows.iter().zip(pivots.iter()) {
            v[pc] = field.neg(row[free]);
        }
        basis.push(v);
    }
    basis
}

/// Intersection of two subspaces of F_p^n given by spanning sets; the result is in
/// reduced row echelon form.
pub fn intersect(field: &PrimeField, u: &[Vec<u32>], w: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut u = u.to_vec();
    let mut w = w.to_vec();
    rref(field, &mut u);
    rref(field, &mut w);
    if u.is_empty() || w.is_empty() {
        return Vec::new();
    }
    let mut images = u.clone();
    images.extend(w.iter().map(|v| v.iter().map(|x| field.neg(*x)).collect()));
    let ker = kernel(field, &images);
    let n = u[0].len();
    let mut out: Vec<Vec<u32>> = ker
        .iter()
        .map(|coeffs| {
            let mut v = vec![0u32; n];
            for (a, ui) in coeffs.iter().zip(u.iter()) {
                if *a != 0 {
                    for (x, y) in v.iter_mut().zip(ui.iter()) {
                        *x = field.add(*x, field.mul(*a, *y));
                    }
                }
            }
            v
        })
        .collect();
    rref(field, &mut out);
    out
}
