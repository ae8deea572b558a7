//! Randomized property suites with fixed seeds. Each returns the number of cases checked
//! or a description of the first counterexample.

#![allow(dead_code)]

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use thilb_core::closures::{closure_candidate, frobenius_map, generator_independence_check, limit_closure};
use thilb_core::fieldpoly::{parse_poly, Monomial, MonomialOrder, PolyRing, Polynomial};
use thilb_core::groebner::Ideal;
use thilb_core::hilbert::{binom, extract_coefficients, hilbert_polynomial};
use thilb_core::quotient::{is_sop, make_ring, IdealInR, ParameterIdeal, PresentedRing};

pub type SuiteResult = Result<usize, String>;

fn random_poly(rng: &mut StdRng, r: &Arc<PolyRing>, max_deg: u32, max_terms: usize) -> Polynomial {
    let p = r.characteristic();
    let n = r.nvars();
    let terms = (0..rng.gen_range(0..=max_terms))
        .map(|_| {
            let mut left = rng.gen_range(0..=max_deg);
            let mut exps = vec![0u32; n];
            for e in exps.iter_mut() {
                let a = rng.gen_range(0..=left);
                *e = a;
                left -= a;
            }
            exps.shuffle(rng);
            (Monomial::from_exponents(&exps).unwrap(), rng.gen_range(0..p))
        })
        .collect();
    r.from_terms(terms)
}

fn random_linear(rng: &mut StdRng, r: &Arc<PolyRing>) -> Polynomial {
    let p = r.characteristic();
    let terms = (0..r.nvars())
        .map(|i| (Monomial::var_power(r.nvars(), i, 1), rng.gen_range(0..p)))
        .collect();
    r.from_terms(terms)
}

/// A random system of parameters of linear forms, retrying until one is found.
fn random_sop(rng: &mut StdRng, ring: &Arc<PresentedRing>) -> ParameterIdeal {
    let r = ring.poly_ring();
    loop {
        let xs: Vec<Polynomial> = (0..ring.dim()).map(|_| random_linear(rng, r)).collect();
        if is_sop(&xs, ring).unwrap() {
            return ParameterIdeal::new(ring, xs).unwrap();
        }
    }
}

/// Equidimensional example rings with a test element.
fn closure_rings() -> Vec<(Arc<PresentedRing>, &'static str)> {
    vec![
        (make_ring(5, &["x", "y"], &[]).unwrap(), "1"),
        (make_ring(3, &["x", "y", "z"], &[]).unwrap(), "x"),
        (
            make_ring(5, &["x", "y", "z", "w"], &["x*z", "x*w", "y*z", "y*w"]).unwrap(),
            "x*y + z*w",
        ),
        (make_ring(2, &["x", "y", "z"], &["x^3 + y^3 + z^3"]).unwrap(), "x"),
    ]
}

/// `f ↦ c·f^q mod I^[q] + J` is additive and `F_p`-homogeneous.
pub fn frobenius_linearity(cases: usize) -> SuiteResult {
    let mut rng = StdRng::seed_from_u64(21);
    let rings = closure_rings();
    for k in 0..cases {
        let (ring, c) = &rings[k % rings.len()];
        let r = ring.poly_ring();
        let q = random_sop(&mut rng, ring);
        let c = ring.parse(c).unwrap();
        let e = rng.gen_range(1..=2);
        let f = random_poly(&mut rng, r, 3, 4);
        let g = random_poly(&mut rng, r, 3, 4);
        let a = rng.gen_range(0..r.characteristic());
        let b = rng.gen_range(0..r.characteristic());
        let phi = |h: &Polynomial| frobenius_map(q.ideal(), &c, e, h).unwrap();
        let lhs = phi(&(&f.scale(a) + &g.scale(b)));
        let rhs = &phi(&f).scale(a) + &phi(&g).scale(b);
        if lhs != rhs {
            return Err(format!("map not linear on {f} and {g} (e = {e}, a = {a}, b = {b})"));
        }
    }
    Ok(cases)
}

/// `Q ⊆ Q^lim ⊆ Q + ∩ K_e` for random parameter ideals.
pub fn closure_chain(cases: usize) -> SuiteResult {
    let mut rng = StdRng::seed_from_u64(22);
    let rings = closure_rings();
    for k in 0..cases {
        let (ring, c) = &rings[k % rings.len()];
        let q = random_sop(&mut rng, ring);
        let c = ring.parse(c).unwrap();
        let lim = limit_closure(&q).map_err(|e| e.to_string())?;
        let cand = closure_candidate(q.ideal(), &c, 2).map_err(|e| e.to_string())?.closure;
        if !lim.contains_ideal(q.ideal()).unwrap() {
            return Err(format!("Q not inside Q^lim for Q = {:?}", q.ideal().display_generators()));
        }
        if !cand.contains_ideal(&lim).unwrap() {
            return Err(format!("Q^lim not inside candidate for Q = {:?}", q.ideal().display_generators()));
        }
    }
    Ok(cases)
}

/// Changing generators by elementary row operations leaves `Q^lim` unchanged.
pub fn limit_independence(cases: usize) -> SuiteResult {
    let mut rng = StdRng::seed_from_u64(23);
    let rings = closure_rings();
    for k in 0..cases {
        let (ring, _) = &rings[k % rings.len()];
        let p = ring.characteristic();
        let q = random_sop(&mut rng, ring);
        let mut alt = q.elements().to_vec();
        for _ in 0..3 {
            let i = rng.gen_range(0..alt.len());
            let j = rng.gen_range(0..alt.len());
            if i == j {
                alt[i] = alt[i].scale(rng.gen_range(1..p));
            } else {
                alt[i] = &alt[i] + &alt[j].scale(rng.gen_range(0..p));
            }
        }
        if !generator_independence_check(&q, &alt).map_err(|e| e.to_string())? {
            return Err(format!("limit closures differ for {:?} and {alt:?}", q.elements()));
        }
    }
    Ok(cases)
}

/// Exact binomial polynomials are recovered with `stable_from = 0`; corrupting the first
/// `k` values moves `stable_from` to `k`.
pub fn coefficient_exactness(cases: usize) -> SuiteResult {
    let mut rng = StdRng::seed_from_u64(24);
    let mut done = 0;
    while done < cases {
        let d = rng.gen_range(0..=3usize);
        let mut e: Vec<i64> = (0..=d).map(|_| rng.gen_range(-4..=4)).collect();
        e[0] = rng.gen_range(1..=9);
        let n_max = d + 3 + rng.gen_range(0..4);
        let h: Vec<i64> = (0..=n_max as i64).map(|n| hilbert_polynomial(&e, n)).collect();
        if h.iter().any(|v| *v < 0) {
            continue;
        }
        let values: Vec<u64> = h.iter().map(|v| *v as u64).collect();
        let fit = extract_coefficients(&values, d).map_err(|e| e.to_string())?;
        if fit.e != e || fit.stable_from != 0 || !fit.valid {
            return Err(format!("fit {fit:?} for e = {e:?}, values {values:?}"));
        }
        let k = rng.gen_range(1..=n_max - d - 1);
        let mut bent = values.clone();
        bent[k - 1] += 1 + rng.gen_range(0..3);
        let fit = extract_coefficients(&bent, d).map_err(|e| e.to_string())?;
        if fit.e != e || fit.stable_from != k || !fit.valid {
            return Err(format!("fit {fit:?} for e = {e:?} corrupted below {k}"));
        }
        done += 1;
    }
    // the leading coefficient of binom(n + d, d) is the only nonzero one
    for d in 0..=4usize {
        let values: Vec<u64> = (0..=(d as i64 + 4)).map(|n| binom(n + d as i64, d as i64) as u64).collect();
        let fit = extract_coefficients(&values, d).map_err(|e| e.to_string())?;
        let mut want = vec![0i64; d + 1];
        want[0] = 1;
        if fit.e != want {
            return Err(format!("binom(n+{d},{d}) fitted as {:?}", fit.e));
        }
    }
    Ok(cases)
}

/// Reduced Gröbner bases do not depend on the order of the generators.
pub fn gb_permutation(cases: usize) -> SuiteResult {
    let mut rng = StdRng::seed_from_u64(25);
    let orders = [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::Block(1)];
    for k in 0..cases {
        let r = PolyRing::new(7, &["x", "y", "z"], orders[k % orders.len()]).unwrap();
        let mut gens: Vec<Polynomial> = (0..rng.gen_range(2..=4)).map(|_| random_poly(&mut rng, &r, 3, 3)).collect();
        let a = Ideal::new(&r, gens.clone()).unwrap();
        gens.shuffle(&mut rng);
        let b = Ideal::new(&r, gens).unwrap();
        if a.groebner_basis().unwrap() != b.groebner_basis().unwrap() {
            return Err(format!("bases differ for {:?}", a.gens()));
        }
    }
    Ok(cases)
}

/// Formatting a polynomial and parsing it back gives the same polynomial, and ideals
/// printed through their generator lists reparse to the same ideal.
pub fn parse_round_trip(cases: usize) -> SuiteResult {
    let mut rng = StdRng::seed_from_u64(26);
    let primes = [2u64, 3, 5, 101, 2_147_483_647];
    for k in 0..cases {
        let p = primes[k % primes.len()];
        let r = PolyRing::new(p, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let f = random_poly(&mut rng, &r, 4, 5);
        let back = parse_poly(&f.to_string(), &r).map_err(|e| e.to_string())?;
        if back != f {
            return Err(format!("{f} reparsed as {back}"));
        }
        if p < 1000 {
            let ring = make_ring(p, &["x", "y", "z"], &[]).unwrap();
            let pr = ring.poly_ring();
            let gens = vec![random_poly(&mut rng, pr, 2, 3), random_poly(&mut rng, pr, 2, 3)];
            let i = IdealInR::new(&ring, gens).unwrap();
            let text = i.display_generators().unwrap().join(", ");
            if text.is_empty() {
                continue;
            }
            let j = IdealInR::new(&ring, ring.parse_list(&text).map_err(|e| e.to_string())?).unwrap();
            if !i.same_ideal(&j).unwrap() {
                return Err(format!("ideal {text} did not round trip"));
            }
        }
    }
    Ok(cases)
}
