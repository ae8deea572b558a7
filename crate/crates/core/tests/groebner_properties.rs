mod support;

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use thilb_core::fieldpoly::{Monomial, MonomialOrder, PolyRing, Polynomial};
use thilb_core::groebner::{
    bracket_power, ideal_intersect, ideal_quotient, vs_length, Ideal, Length,
};

const CASES: usize = 120;

fn ring(p: u64) -> Arc<PolyRing> {
    PolyRing::new(p, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap()
}

fn random_homogeneous(rng: &mut StdRng, r: &Arc<PolyRing>, d: u32, max_terms: usize) -> Polynomial {
    let monos = support::monomials_of_degree(r.nvars(), d);
    let p = r.characteristic();
    let terms = (0..rng.gen_range(1..=max_terms))
        .map(|_| (monos.choose(rng).unwrap().clone(), rng.gen_range(1..p)))
        .collect();
    r.from_terms(terms)
}

fn random_homogeneous_ideal(rng: &mut StdRng, r: &Arc<PolyRing>) -> Vec<Polynomial> {
    (0..rng.gen_range(1..=3))
        .map(|_| {
            let d = rng.gen_range(1..=3);
            random_homogeneous(rng, r, d, 3)
        })
        .filter(|g| !g.is_zero())
        .collect()
}

#[test]
fn membership_agrees_with_linear_algebra() {
    let mut rng = StdRng::seed_from_u64(11);
    let r = ring(5);
    let mut positives = 0;
    for _ in 0..CASES {
        let gens = random_homogeneous_ideal(&mut rng, &r);
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        // half the probes are built inside the ideal
        let f = if rng.gen_bool(0.5) {
            let mut acc = r.zero();
            for g in &gens {
                let gd = g.total_degree().unwrap();
                if gd <= 4 {
                    acc = &acc + &(&random_homogeneous(&mut rng, &r, 4 - gd, 3) * g);
                }
            }
            acc
        } else {
            random_homogeneous(&mut rng, &r, 4, 4)
        };
        let engine = ideal.normal_form(&f).unwrap().is_zero();
        let oracle = support::homogeneous_member(&gens, &f);
        assert_eq!(engine, oracle, "ideal {gens:?}, probe {f}");
        positives += engine as usize;
    }
    assert!(positives > 10);
}

#[test]
fn length_agrees_with_degreewise_count() {
    let mut rng = StdRng::seed_from_u64(13);
    let r = ring(3);
    for _ in 0..CASES {
        let mut gens = random_homogeneous_ideal(&mut rng, &r);
        for i in 0..3 {
            let e = rng.gen_range(2..=4);
            gens.push(r.term(Monomial::var_power(3, i, e), 1));
        }
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let engine = vs_length(&ideal).unwrap();
        let oracle = support::homogeneous_colength(&gens, 3, 3, 20).unwrap();
        assert_eq!(engine, Length::Finite(oracle));
    }
}

fn random_monomial_ideal(rng: &mut StdRng, r: &Arc<PolyRing>) -> Vec<Monomial> {
    (0..rng.gen_range(1..=3))
        .map(|_| {
            let e: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
            Monomial::from_exponents(&e).unwrap()
        })
        .filter(|m| !m.is_one())
        .chain(std::iter::once(Monomial::var_power(r.nvars(), 0, 5)))
        .collect()
}

#[test]
fn monomial_intersection_and_colon_match_combinatorics() {
    let mut rng = StdRng::seed_from_u64(14);
    let r = ring(5);
    for _ in 0..CASES {
        let a = random_monomial_ideal(&mut rng, &r);
        let b = random_monomial_ideal(&mut rng, &r);
        let ia = Ideal::from_monomials(&r, &a);
        let ib = Ideal::from_monomials(&r, &b);

        let lcms: Vec<Monomial> = a.iter().flat_map(|m| b.iter().map(move |n| m.lcm(n))).collect();
        let expected = Ideal::from_monomials(&r, &lcms);
        let meet = ideal_intersect(&ia, &ib).unwrap();
        assert!(meet.contains_ideal(&expected).unwrap() && expected.contains_ideal(&meet).unwrap());

        let g = b[0].clone();
        let quotients: Vec<Monomial> = a
            .iter()
            .map(|m| {
                let e: Vec<u32> = m
                    .exponents()
                    .iter()
                    .zip(g.exponents())
                    .map(|(x, y)| x.saturating_sub(*y))
                    .collect();
                Monomial::from_exponents(&e).unwrap()
            })
            .collect();
        let expected = Ideal::from_monomials(&r, &quotients);
        let colon = ideal_quotient(&ia, &r.term(g, 1), false).unwrap();
        assert!(colon.same_ideal(&expected).unwrap());
    }
}

#[test]
fn bracket_power_ignores_choice_of_generators() {
    let mut rng = StdRng::seed_from_u64(15);
    for p in [2u64, 3] {
        let r = ring(p);
        for _ in 0..CASES / 2 {
            let gens: Vec<Polynomial> = (0..2)
                .map(|_| {
                    let d = rng.gen_range(1..=2);
                    random_homogeneous(&mut rng, &r, d, 3)
                })
                .collect();
            if gens.iter().any(|g| g.is_zero()) {
                continue;
            }
            let c = rng.gen_range(1..p as u32);
            let d0 = gens[0].total_degree().unwrap();
            let d1 = gens[1].total_degree().unwrap();
            let shifted = if d0 >= d1 {
                let m = random_homogeneous(&mut rng, &r, d0 - d1, 1);
                vec![&gens[0] + &(&m * &gens[1]).scale(c), gens[1].clone()]
            } else {
                let m = random_homogeneous(&mut rng, &r, d1 - d0, 1);
                vec![gens[0].clone(), &gens[1] + &(&m * &gens[0]).scale(c)]
            };
            let a = bracket_power(&Ideal::new(&r, gens).unwrap(), 1).unwrap();
            let b = bracket_power(&Ideal::new(&r, shifted).unwrap(), 1).unwrap();
            assert_eq!(a.groebner_basis().unwrap(), b.groebner_basis().unwrap());
        }
    }
}
