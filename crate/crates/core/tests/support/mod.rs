//! Degree-by-degree linear algebra oracles for homogeneous ideals. Nothing here touches
//! Gröbner bases: membership and colength come from ranks of spans of monomial multiples.

#![allow(dead_code)]

use std::collections::HashMap;

use thilb_core::fieldpoly::{Monomial, Polynomial};

pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::from_exponents(cur).unwrap());
            return;
        }
        for a in 0..=left {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::from_exponents(&[]).unwrap());
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

fn rank_mod_p(p: u64, mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let inv = |a: u64| -> u64 {
        let mut r = 1u64;
        let mut b = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&i| rows[i][c] % p != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let iv = inv(rows[rank][c]);
        for v in rows[rank].iter_mut() {
            *v = *v * iv % p;
        }
        let piv = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(piv.iter()) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rows spanning the degree-`d` part of the ideal generated by homogeneous `gens`.
fn degree_part(gens: &[Polynomial], nvars: usize, d: u32) -> (Vec<Monomial>, Vec<Vec<u64>>) {
    let basis = monomials_of_degree(nvars, d);
    let index: HashMap<Monomial, usize> =
        basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        let Some(gd) = g.total_degree() else { continue };
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(nvars, d - gd) {
            let mut row = vec![0u64; basis.len()];
            for (t, c) in g.terms() {
                row[index[&t.mul(&m).unwrap()]] = *c as u64;
            }
            rows.push(row);
        }
    }
    (basis, rows)
}

/// Whether homogeneous `f` lies in the ideal generated by homogeneous `gens`.
pub fn homogeneous_member(gens: &[Polynomial], f: &Polynomial) -> bool {
    if f.is_zero() {
        return true;
    }
    let p = f.ring().characteristic() as u64;
    let nvars = f.ring().nvars();
    let d = f.total_degree().unwrap();
    let (basis, mut rows) = degree_part(gens, nvars, d);
    let before = rank_mod_p(p, rows.clone());
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut row = vec![0u64; basis.len()];
    for (t, c) in f.terms() {
        row[index[t]] = *c as u64;
    }
    rows.push(row);
    rank_mod_p(p, rows) == before
}

/// `dim (P/I)_d` for homogeneous generators.
pub fn homogeneous_hilbert_function(gens: &[Polynomial], nvars: usize, p: u64, d: u32) -> u64 {
    let (basis, rows) = degree_part(gens, nvars, d);
    (basis.len() - rank_mod_p(p, rows)) as u64
}

/// `dim P/I` for an ideal with homogeneous generators, summing the Hilbert function until
/// it vanishes; `None` if it has not vanished by `max_degree`.
pub fn homogeneous_colength(gens: &[Polynomial], nvars: usize, p: u64, max_degree: u32) -> Option<u64> {
    let mut total = 0;
    for d in 0..=max_degree {
        let h = homogeneous_hilbert_function(gens, nvars, p, d);
        if h == 0 {
            return Some(total);
        }
        total += h;
    }
    None
}
