use std::sync::Arc;

use super::Ideal;
use crate::error::{Error, Result};
use crate::fieldpoly::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// Ring with `k` fresh variables prepended, ordered by `Block(k)`.
fn extended_ring(ring: &Arc<PolyRing>, k: usize) -> Result<Arc<PolyRing>> {
    let mut names: Vec<String> = Vec::with_capacity(ring.nvars() + k);
    let mut fresh = 0usize;
    while names.len() < k {
        let cand = format!("_t{fresh}");
        fresh += 1;
        if ring.var_index(&cand).is_none() {
            names.push(cand);
        }
    }
    names.extend(ring.vars().iter().cloned());
    PolyRing::with_field(*ring.field(), &names, MonomialOrder::Block(k))
}

/// Drops the first `k` variables, which must not occur in `f`.
fn drop_leading_vars(f: &Polynomial, k: usize, target: &Arc<PolyRing>) -> Polynomial {
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| {
            debug_assert!(m.exponents()[..k].iter().all(|e| *e == 0));
            (Monomial::from_exponents(&m.exponents()[k..]).unwrap(), *c)
        })
        .collect();
    target.from_terms(terms)
}

fn free_of_leading_vars(f: &Polynomial, k: usize) -> bool {
    f.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|e| *e == 0))
}

/// Generators of `I ∩ F_p[x_{k+1}, ...]`, returned in the ring of `I`.
pub fn eliminate(ideal: &Ideal, k: usize) -> Result<Ideal> {
    if k == 0 {
        return Ok(ideal.clone());
    }
    if k > ideal.ring().nvars() {
        return Err(Error::Invalid(format!(
            "cannot eliminate {k} of {} variables",
            ideal.ring().nvars()
        )));
    }
    let elim = ideal.with_order(MonomialOrder::Block(k));
    let kept: Vec<Polynomial> = elim
        .groebner_basis()?
        .iter()
        .filter(|g| free_of_leading_vars(g, k))
        .cloned()
        .collect();
    Ideal::new(ideal.ring(), kept)
}

/// `I ∩ J`, by eliminating `t` from `t·I + (1 − t)·J`.
pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    let ring = a.ring();
    if !ring.same_signature(b.ring()) {
        return Err(Error::SignatureMismatch);
    }
    if a.gens().is_empty() || b.gens().is_empty() {
        return Ok(Ideal::zero(ring));
    }
    let ext = extended_ring(ring, 1)?;
    let shift: Vec<usize> = (1..=ring.nvars()).collect();
    let t = ext.var(0);
    let one_minus_t = &ext.one() - &t;
    let mut gens = Vec::new();
    for f in a.gens() {
        gens.push(&t * &f.transport(&ext, &shift));
    }
    for g in b.gens() {
        gens.push(&one_minus_t * &g.transport(&ext, &shift));
    }
    let big = Ideal::new(&ext, gens)?;
    let kept: Vec<Polynomial> = big
        .groebner_basis()?
        .iter()
        .filter(|g| free_of_leading_vars(g, 1))
        .map(|g| drop_leading_vars(g, 1, ring))
        .collect();
    Ideal::new(ring, kept)
}

/// Exact division `h / g`; `None` when `g` does not divide `h`.
pub(crate) fn divide_exact(h: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let ring = h.ring();
    let field = ring.field();
    let glm = g.leading_monomial()?;
    let ginv = field.inv(g.leading_coeff()?).ok()?;
    let mut rest = h.clone();
    let mut quot = ring.zero();
    while let Some(lm) = rest.leading_monomial().cloned() {
        if !glm.divides(&lm) {
            return None;
        }
        let c = field.mul(rest.leading_coeff().unwrap(), ginv);
        let m = lm.div(glm);
        quot = &quot + &ring.term(m.clone(), c);
        rest = rest.sub_mul_term(c, &m, g);
    }
    Some(quot)
}

/// `(I : g)`, or `(I : g^∞)` when `saturate` is set.
pub fn ideal_quotient(ideal: &Ideal, g: &Polynomial, saturate: bool) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::Invalid("colon by the zero polynomial".into()));
    }
    let ring = ideal.ring();
    let g = g.reorder(ring);
    let step = |cur: &Ideal| -> Result<Ideal> {
        let inter = ideal_intersect(cur, &Ideal::new(ring, [g.clone()])?)?;
        let gens: Vec<Polynomial> = inter
            .groebner_basis()?
            .iter()
            .map(|h| divide_exact(h, &g).expect("elements of (g) are divisible by g"))
            .collect();
        Ideal::new(ring, gens)
    };
    let mut cur = step(ideal)?;
    if !saturate {
        return Ok(cur);
    }
    let mut prev = ideal.clone();
    while !cur.same_ideal(&prev)? {
        prev = cur;
        cur = step(&prev)?;
    }
    Ok(cur)
}

/// `(I : J)` as the intersection of the colons by the generators of `J`; with `saturate`
/// this is `(I : J^∞)`.
pub fn ideal_quotient_by_ideal(ideal: &Ideal, by: &Ideal, saturate: bool) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for g in by.gens() {
        let q = ideal_quotient(ideal, g, saturate)?;
        acc = Some(match acc {
            None => q,
            Some(a) => ideal_intersect(&a, &q)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::new(ideal.ring(), [ideal.ring().one()]).unwrap()))
}

/// The Frobenius power `I^{[p^e]}`, generated by the `p^e`-th powers of the generators.
pub fn bracket_power(ideal: &Ideal, e: u32) -> Result<Ideal> {
    if e == 0 {
        return Err(Error::Invalid("bracket power exponent must be positive".into()));
    }
    let gens = ideal
        .gens()
        .iter()
        .map(|g| g.frobenius_pow(e))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}
