//! Counting standard monomials: vector-space lengths, graded Hilbert functions and
//! Krull dimension, all read off the leading-term ideal.

use std::fmt;

use super::Ideal;
use crate::error::{Error, Result};
use crate::fieldpoly::Monomial;

/// `dim_{F_p} P/I`, which may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Length::Finite(_))
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => write!(f, "infinite"),
        }
    }
}

fn exps(ms: &[Monomial]) -> Vec<Vec<u32>> {
    ms.iter().map(|m| m.exponents().to_vec()).collect()
}

fn has_pure_powers(gens: &[Vec<u32>], nvars: usize) -> bool {
    (0..nvars).all(|i| {
        gens.iter()
            .any(|g| g[i] > 0 && g.iter().enumerate().all(|(j, e)| j == i || *e == 0))
    })
}

/// Number of monomials in the first `nvars` variables outside the monomial ideal; the
/// caller guarantees that every variable has a pure power among `gens`.
fn count_standard(gens: &[Vec<u32>], nvars: usize) -> u64 {
    if gens.iter().any(|g| g[..nvars].iter().all(|e| *e == 0)) {
        return 0;
    }
    if nvars == 0 {
        return 1;
    }
    let v = nvars - 1;
    let bound = gens
        .iter()
        .filter(|g| g[v] > 0 && g[..v].iter().all(|e| *e == 0))
        .map(|g| g[v])
        .min()
        .expect("pure power present");
    let mut breaks: Vec<u32> = gens.iter().map(|g| g[v]).filter(|e| *e < bound).collect();
    breaks.push(0);
    breaks.push(bound);
    breaks.sort_unstable();
    breaks.dedup();
    let mut total = 0u64;
    for w in breaks.windows(2) {
        let (a, b) = (w[0], w[1]);
        let slice: Vec<Vec<u32>> = gens.iter().filter(|g| g[v] <= a).cloned().collect();
        total += (b - a) as u64 * count_standard(&slice, v);
    }
    total
}

/// Number of standard monomials of `P/I`, or `Infinite`.
pub fn vs_length(ideal: &Ideal) -> Result<Length> {
    let lms = exps(&ideal.leading_monomials()?);
    let n = ideal.ring().nvars();
    if lms.iter().any(|g| g.iter().all(|e| *e == 0)) {
        return Ok(Length::Finite(0));
    }
    if !has_pure_powers(&lms, n) {
        return Ok(Length::Infinite);
    }
    Ok(Length::Finite(count_standard(&lms, n)))
}

/// The monomials outside the leading-term ideal, in increasing order. Fails when there
/// are infinitely many or more than `limit`.
pub fn standard_monomials(ideal: &Ideal, limit: usize) -> Result<Vec<Monomial>> {
    let lms = ideal.leading_monomials()?;
    let n = ideal.ring().nvars();
    match vs_length(ideal)? {
        Length::Infinite => return Err(Error::NotLocalAtOrigin),
        Length::Finite(k) if k as usize > limit => {
            return Err(Error::BudgetExceeded(format!(
                "{k} standard monomials exceed the limit {limit}"
            )))
        }
        _ => {}
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, cur: &mut Vec<u32>, lms: &[Monomial], out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::from_exponents(cur).unwrap());
            return;
        }
        loop {
            let m = Monomial::from_exponents(cur).unwrap();
            // divisibility is monotone in each coordinate: once divisible, stop increasing
            if lms.iter().any(|l| l.divides(&m)) {
                break;
            }
            rec(i + 1, cur, lms, out);
            cur[i] += 1;
        }
        cur[i] = 0;
    }
    rec(0, &mut cur, &lms, &mut out);
    let order = ideal.order();
    out.sort_by(|a, b| order.compare(a, b));
    Ok(out)
}

/// Dimension of `P/I`: the largest set of variables no leading monomial is supported on.
pub fn krull_dimension(ideal: &Ideal) -> Result<usize> {
    let lms = ideal.leading_monomials()?;
    if lms.iter().any(|m| m.is_one()) {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.ring().nvars();
    let supports: Vec<u64> = lms
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = 0;
    for set in 0u64..(1u64 << n) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|s| s & !set != 0) {
            best = size;
        }
    }
    Ok(best)
}

fn count_degree(gens: &[Vec<u32>], nvars: usize, deg: u32) -> u64 {
    if gens.iter().any(|g| g[..nvars].iter().all(|e| *e == 0)) {
        return 0;
    }
    if nvars == 0 {
        return u64::from(deg == 0);
    }
    if nvars == 1 {
        return u64::from(gens.iter().all(|g| g[0] > deg));
    }
    let v = nvars - 1;
    (0..=deg)
        .map(|a| {
            let slice: Vec<Vec<u32>> = gens.iter().filter(|g| g[v] <= a).cloned().collect();
            count_degree(&slice, v, deg - a)
        })
        .sum()
}

/// `dim_{F_p} (P/I)_n` for a homogeneous ideal.
pub fn graded_hilbert_function(ideal: &Ideal, n: u32) -> Result<u64> {
    if let Some(g) = ideal.gens().iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    let lms = exps(&ideal.leading_monomials()?);
    Ok(count_degree(&lms, ideal.ring().nvars(), n))
}
