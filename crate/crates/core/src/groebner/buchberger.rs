//! Buchberger's algorithm with Gebauer–Möller pair elimination and the normal selection
//! strategy.

use std::cmp::Ordering;
use std::sync::Arc;

use super::Budget;
use crate::error::{Error, Result};
use crate::fieldpoly::{Monomial, PolyRing, Polynomial};

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Full reduction of `f` by `basis` (only the entries flagged in `active`).
pub(crate) fn reduce(f: &Polynomial, basis: &[Polynomial], active: &[bool]) -> Polynomial {
    let ring = f.ring().clone();
    let field = *ring.field();
    let mut rest = f.clone();
    let mut done: Vec<(Monomial, u32)> = Vec::new();
    'outer: while let Some(lm) = rest.leading_monomial().cloned() {
        let lc = rest.leading_coeff().unwrap();
        for (g, _) in basis.iter().zip(active.iter()).filter(|(_, a)| **a) {
            let glm = g.leading_monomial().unwrap();
            if glm.divides(&lm) {
                let c = field.mul(lc, field.inv(g.leading_coeff().unwrap()).unwrap());
                rest = rest.sub_mul_term(c, &lm.div(glm), g);
                continue 'outer;
            }
        }
        // lead term is irreducible; move it to the result
        done.push((lm, lc));
        rest = Polynomial::drop_lead(&rest);
    }
    ring.from_sorted_terms(done)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let a = f
        .monic()
        .mul_term(&lcm.div(f.leading_monomial().unwrap()), 1)
        .expect("lcm bounded by budget");
    a.sub_mul_term(1, &lcm.div(g.leading_monomial().unwrap()), &g.monic())
}

struct State {
    ring: Arc<PolyRing>,
    basis: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].leading_monomial().unwrap()
    }

    /// Gebauer–Möller update for a new element `h` (already pushed at index `k`).
    fn update(&mut self, k: usize) {
        let hlm = self.lm(k).clone();
        let mut c: Vec<Pair> = (0..k)
            .filter(|&i| self.active[i])
            .map(|i| Pair {
                i,
                j: k,
                lcm: self.lm(i).lcm(&hlm),
            })
            .collect();

        // criterion M / F: keep a pair only if no other new pair's lcm properly divides it
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            let coprime = self.lm(p.i).is_coprime(&hlm);
            let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                d.push(p);
            }
        }
        // product criterion
        let e: Vec<Pair> = d
            .into_iter()
            .filter(|p| !self.lm(p.i).is_coprime(&hlm))
            .collect();

        // chain criterion on old pairs
        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let lcm_ih = self.lm(p.i).lcm(&hlm);
            let lcm_jh = self.lm(p.j).lcm(&hlm);
            let drop = hlm.divides(&p.lcm) && lcm_ih != p.lcm && lcm_jh != p.lcm;
            if !drop {
                self.pairs.push(p);
            }
        }
        self.pairs.extend(e);

        for i in 0..k {
            if self.active[i] && hlm.divides(self.lm(i)) {
                self.active[i] = false;
            }
        }
    }

    fn push(&mut self, h: Polynomial) {
        self.basis.push(h.monic());
        self.active.push(true);
        let k = self.basis.len() - 1;
        self.update(k);
    }

    /// Index of the pair with the smallest lcm (normal strategy); ties by index.
    fn select(&self) -> usize {
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let o = self.ring.order().compare(&self.pairs[k].lcm, &self.pairs[best].lcm);
            if o == Ordering::Less {
                best = k;
            }
        }
        best
    }
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens` in `ring`'s order.
pub fn reduced_groebner_basis(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    let mut state = State {
        ring: ring.clone(),
        basis: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    // deterministic start: sort input by leading monomial, smallest first
    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.sort_by(|a, b| {
        ring.order()
            .compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then_with(|| a.len().cmp(&b.len()))
    });
    for g in input {
        let h = reduce(&g, &state.basis, &state.active);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![ring.one()]);
        }
        check_degree(&h, budget)?;
        state.push(h);
    }

    let mut processed: u64 = 0;
    while !state.pairs.is_empty() {
        let k = state.select();
        let pair = state.pairs.swap_remove(k);
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::BudgetExceeded(format!(
                "more than {} S-pairs",
                budget.max_pairs
            )));
        }
        if pair.lcm.degree() > budget.max_degree {
            return Err(Error::BudgetExceeded(format!(
                "S-pair degree {} above limit {}",
                pair.lcm.degree(),
                budget.max_degree
            )));
        }
        let s = s_polynomial(&state.basis[pair.i], &state.basis[pair.j], &pair.lcm);
        let h = reduce(&s, &state.basis, &state.active);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![ring.one()]);
        }
        check_degree(&h, budget)?;
        state.push(h);
    }

    // minimal basis: the active elements have pairwise non-dividing leading monomials
    let minimal: Vec<Polynomial> = state
        .basis
        .iter()
        .zip(state.active.iter())
        .filter(|(_, a)| **a)
        .map(|(g, _)| g.clone())
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<bool> = (0..minimal.len()).map(|i| i != k).collect();
        let lead = ring.term(g.leading_monomial().unwrap().clone(), 1);
        let tail = &g.monic() - &lead;
        let tail = reduce(&tail, &minimal, &others);
        reduced.push(&lead + &tail);
    }
    reduced.sort_by(|a, b| {
        ring.order()
            .compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    Ok(reduced)
}

fn check_degree(h: &Polynomial, budget: &Budget) -> Result<()> {
    let d = h.total_degree().unwrap_or(0);
    if d > budget.max_degree {
        return Err(Error::BudgetExceeded(format!(
            "basis element of degree {d} above limit {}",
            budget.max_degree
        )));
    }
    Ok(())
}
