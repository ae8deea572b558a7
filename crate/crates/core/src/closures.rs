//! Closure operations on parameter ideals: limit closure, Frobenius and tight closure
//! candidates, and contraction from a module-finite extension.
//!
//! Tight closure is only semi-decidable. The candidate computed here is
//! `Q + ∩_{e=1..E} K_e` where `K_e` is the kernel of the `F_p`-linear map
//! `v ↦ c·v^q mod Q^[q]` on `R/Q`; reports carry the per-exponent kernel dimensions and a
//! stabilization flag rather than a claim of exactness.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fieldpoly::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::groebner::{bracket_power, eliminate, Ideal};
use crate::linalg;
use crate::quotient::{ideal_power_in_r, FiniteQuotient, IdealInR, ParameterIdeal, PresentedRing};
use crate::semigroup::{Exp, SemigroupRing};

/// Largest `n` tried before the limit-closure chain is declared non-stabilizing.
pub const LIMIT_MAX_STEPS: u32 = 64;

/// `Q^lim`: the first colon `L_n = (x_1^{n+1}, ..., x_d^{n+1}) : (x_1⋯x_d)^n` with
/// `L_n = L_{n+1} = L_{n+2}`. The chain is checked to be ascending along the way.
pub fn limit_closure(q: &ParameterIdeal) -> Result<IdealInR> {
    let ring = q.ring();
    let xs = q.elements();
    let mut prod = ring.poly_ring().one();
    for x in xs {
        prod = prod.checked_mul(x)?;
    }
    let step = |n: u32| -> Result<IdealInR> {
        let powers = xs.iter().map(|x| x.pow(n as u64 + 1)).collect::<Result<Vec<_>>>()?;
        IdealInR::new(ring, powers)?.colon(&prod.pow(n as u64)?)
    };
    let mut chain = vec![step(0)?, step(1)?];
    for n in 2..LIMIT_MAX_STEPS {
        chain.push(step(n)?);
        let k = chain.len();
        if !chain[k - 1].contains_ideal(&chain[k - 2])? {
            return Err(Error::Invalid(format!("limit closure chain is not ascending at n = {n}")));
        }
        if chain[k - 3].same_ideal(&chain[k - 2])? && chain[k - 2].same_ideal(&chain[k - 1])? {
            return Ok(chain.swap_remove(k - 3));
        }
    }
    Err(Error::BudgetExceeded(format!(
        "limit closure did not stabilize within {LIMIT_MAX_STEPS} colons"
    )))
}

/// Whether two generating sets of the same parameter ideal have the same limit closure.
pub fn generator_independence_check(q: &ParameterIdeal, alt: &[Polynomial]) -> Result<bool> {
    let other = ParameterIdeal::new(q.ring(), alt.to_vec())?;
    if !other.ideal().same_ideal(q.ideal())? {
        return Err(Error::Invalid("the two generator lists span different ideals".into()));
    }
    limit_closure(q)?.same_ideal(&limit_closure(&other)?)
}

fn bracket_with_defining(i: &IdealInR, e: u32) -> Result<Ideal> {
    let ring = i.ring();
    let base = Ideal::new(ring.poly_ring(), i.gens().iter().cloned())?;
    bracket_power(&base, e)?.with_generators(ring.defining().gens().iter().cloned())
}

/// `c·f^q` reduced modulo `I^[q] + J`, with `f^q` computed by repeated multiplication.
pub fn frobenius_map(i: &IdealInR, c: &Polynomial, e: u32, f: &Polynomial) -> Result<Polynomial> {
    let q = (i.ring().characteristic() as u64).pow(e);
    let target = bracket_with_defining(i, e)?;
    target.normal_form(&c.checked_mul(&f.pow(q)?)?)
}

/// Basis of the kernel of `v ↦ c·v^q mod I^[q] + J` on `P/I`, as coordinate vectors
/// in the quotient `fq` of `I`.
fn kernel_vectors(fq: &FiniteQuotient, c: &Polynomial, e: u32) -> Result<Vec<Vec<u32>>> {
    let target = bracket_with_defining(fq.ideal(), e)?;
    let mut images = Vec::with_capacity(fq.dim());
    for m in fq.basis() {
        let q = (fq.field().characteristic() as u64).pow(e);
        let mq = m.pow(q)?;
        images.push(target.normal_form(&c.mul_term(&mq, 1)?)?);
    }
    let mut support: HashMap<Monomial, usize> = HashMap::new();
    for f in &images {
        for (m, _) in f.terms() {
            let next = support.len();
            support.entry(m.clone()).or_insert(next);
        }
    }
    let vecs: Vec<Vec<u32>> = images
        .iter()
        .map(|f| {
            let mut v = vec![0u32; support.len()];
            for (m, c) in f.terms() {
                v[support[m]] = *c;
            }
            v
        })
        .collect();
    if support.is_empty() {
        // every image vanishes
        return Ok((0..fq.dim())
            .map(|k| {
                let mut v = vec![0u32; fq.dim()];
                v[k] = 1;
                v
            })
            .collect());
    }
    Ok(linalg::kernel(fq.field(), &vecs))
}

fn check_test_element(ring: &PresentedRing, c: &Polynomial) -> Result<()> {
    if ring.is_zero(c)? {
        return Err(Error::Invalid("test element reduces to zero in the ring".into()));
    }
    Ok(())
}

/// `K_e`: representatives `v` of `R/Q` with `c·v^q ∈ Q^[q]`. Elements of `Q` pass
/// automatically, so `K_e + Q = {f : c·f^q ∈ Q^[q]}`.
pub fn frobenius_kernel(q: &ParameterIdeal, c: &Polynomial, e: u32) -> Result<Vec<Polynomial>> {
    check_test_element(q.ring(), c)?;
    let fq = FiniteQuotient::new(q.ideal())?;
    Ok(kernel_vectors(&fq, c, e)?.iter().map(|v| fq.lift(v)).collect())
}

#[derive(Debug, Clone)]
pub struct TightClosureResult {
    pub closure: IdealInR,
    pub test_element: Polynomial,
    pub e_bound: u32,
    /// `dim K_e` for `e = 1..=e_bound`.
    pub kernel_dims: Vec<usize>,
    /// The intersection did not change between `e_bound - 1` and `e_bound`.
    pub stabilized: bool,
    /// Whether the candidate contains the limit closure (checked for parameter ideals).
    pub contains_limit: Option<bool>,
}

/// `I + ∩_{e=1..E} K_e` for an ideal `I` of finite colength.
pub fn closure_candidate(i: &IdealInR, c: &Polynomial, e_bound: u32) -> Result<TightClosureResult> {
    if e_bound < 2 {
        return Err(Error::Invalid(format!("exponent bound {e_bound} is below 2")));
    }
    check_test_element(i.ring(), c)?;
    let fq = FiniteQuotient::new(i)?;
    let mut kernel_dims = Vec::new();
    let mut meet: Option<Vec<Vec<u32>>> = None;
    let mut previous_dim = usize::MAX;
    let mut stabilized = false;
    for e in 1..=e_bound {
        let k = kernel_vectors(&fq, c, e)?;
        kernel_dims.push(k.len());
        let next = match meet {
            None => {
                let mut k = k;
                linalg::rref(fq.field(), &mut k);
                k
            }
            Some(m) => linalg::intersect(fq.field(), &m, &k),
        };
        if e == e_bound {
            stabilized = next.len() == previous_dim;
        }
        previous_dim = next.len();
        meet = Some(next);
    }
    let closure = fq.extend(&meet.unwrap_or_default())?;
    Ok(TightClosureResult {
        closure,
        test_element: c.clone(),
        e_bound,
        kernel_dims,
        stabilized,
        contains_limit: None,
    })
}

/// Tight closure candidate of a parameter ideal; also checks `Q^lim ⊆ candidate`.
pub fn tight_closure_candidate(q: &ParameterIdeal, c: &Polynomial, e_bound: u32) -> Result<TightClosureResult> {
    let mut res = closure_candidate(q.ideal(), c, e_bound)?;
    let lim = limit_closure(q)?;
    res.contains_limit = Some(res.closure.contains_ideal(&lim)?);
    Ok(res)
}

/// Frobenius closure candidate: the test element is 1.
pub fn frobenius_closure_candidate(i: &IdealInR, e_bound: u32) -> Result<TightClosureResult> {
    closure_candidate(i, &i.ring().poly_ring().one(), e_bound)
}

/// A module-finite extension `R → S`.
#[derive(Debug, Clone)]
pub enum ExtensionData {
    /// `S` presented, with the images of the variables of `R`.
    Presented {
        source: Arc<PresentedRing>,
        target: Arc<PresentedRing>,
        map: Vec<Polynomial>,
    },
    /// `R = F_p[S]` presented on the semigroup generators, extended to the saturation.
    SemigroupSaturation {
        source: Arc<PresentedRing>,
        semigroup: Arc<SemigroupRing>,
    },
}

impl ExtensionData {
    /// Validates that `map` defines a ring homomorphism `source → target`.
    pub fn presented(source: &Arc<PresentedRing>, target: &Arc<PresentedRing>, map: Vec<Polynomial>) -> Result<Self> {
        if map.len() != source.poly_ring().nvars() {
            return Err(Error::Invalid(format!(
                "map gives {} images for {} variables",
                map.len(),
                source.poly_ring().nvars()
            )));
        }
        for f in &map {
            if !f.ring().same_signature(target.poly_ring()) {
                return Err(Error::SignatureMismatch);
            }
        }
        for g in source.defining().gens() {
            if !target.is_zero(&g.substitute(&map)?)? {
                return Err(Error::Invalid(format!("map is not a ring homomorphism: {g} does not map to zero")));
            }
        }
        Ok(Self::Presented {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    /// Checks that `source` is a presentation of `F_p[S]` on its generators.
    pub fn semigroup(source: &Arc<PresentedRing>, semigroup: &Arc<SemigroupRing>) -> Result<Self> {
        if source.poly_ring().nvars() != semigroup.gens().len() {
            return Err(Error::Invalid("ring variables do not match the semigroup generators".into()));
        }
        let field = source.poly_ring().field();
        for g in source.defining().gens() {
            // under x_i ↦ t^{gen_i} the coefficients of each exponent must cancel
            let mut seen = std::collections::BTreeMap::<Exp, u32>::new();
            for (m, c) in g.terms() {
                let s = seen.entry(exponent_of(semigroup, m)).or_insert(0);
                *s = field.add(*s, *c);
            }
            if seen.values().any(|c| *c != 0) {
                return Err(Error::Invalid(format!("{g} does not vanish on the semigroup")));
            }
        }
        Ok(Self::SemigroupSaturation {
            source: source.clone(),
            semigroup: semigroup.clone(),
        })
    }

    pub fn source(&self) -> &Arc<PresentedRing> {
        match self {
            Self::Presented { source, .. } | Self::SemigroupSaturation { source, .. } => source,
        }
    }
}

fn exponent_of(s: &SemigroupRing, m: &Monomial) -> Exp {
    m.exponents()
        .iter()
        .zip(s.gens())
        .fold([0, 0], |a, (e, g)| [a[0] + *e as i64 * g[0], a[1] + *e as i64 * g[1]])
}

/// `Q^n S ∩ R`.
pub fn contracted_closure(q: &ParameterIdeal, n: u32, ext: &ExtensionData) -> Result<IdealInR> {
    let ring = q.ring();
    if !Arc::ptr_eq(ring, ext.source()) {
        return Err(Error::Invalid("extension does not start at the ring of the parameter ideal".into()));
    }
    if n == 0 {
        return Ok(IdealInR::unit(ring));
    }
    let power = ideal_power_in_r(q.ideal(), n)?;
    match ext {
        ExtensionData::Presented { target, map, .. } => contract_presented(ring, target, map, power.gens()),
        ExtensionData::SemigroupSaturation { semigroup, .. } => {
            let mut exps = Vec::new();
            for g in q.elements() {
                if g.len() != 1 {
                    return Err(Error::Invalid(format!("{g} is not a monomial")));
                }
                exps.push(exponent_of(semigroup, &g.terms()[0].0));
            }
            let base = semigroup.ideal(&exps)?;
            let contracted = semigroup.contract(&semigroup.power(&base, n)?)?;
            let gens = contracted
                .gens()
                .iter()
                .map(|v| semigroup.monomial(ring, *v))
                .collect::<Result<Vec<_>>>()?;
            IdealInR::new(ring, gens)
        }
    }
}

/// Preimage of `(φ(gens))S` in `R`, by eliminating the variables of `S` from the graph.
fn contract_presented(
    source: &Arc<PresentedRing>,
    target: &Arc<PresentedRing>,
    map: &[Polynomial],
    gens: &[Polynomial],
) -> Result<IdealInR> {
    let sp = source.poly_ring();
    let tp = target.poly_ring();
    let k = tp.nvars();
    let mut names: Vec<String> = (0..k).map(|i| format!("_s{i}")).collect();
    names.extend(sp.vars().iter().cloned());
    let big = PolyRing::with_field(*sp.field(), &names, MonomialOrder::Block(k))?;
    let from_target: Vec<usize> = (0..k).collect();
    let mut all = Vec::new();
    for g in target.defining().gens() {
        all.push(g.transport(&big, &from_target));
    }
    for (i, img) in map.iter().enumerate() {
        all.push(&big.var(k + i) - &img.transport(&big, &from_target));
    }
    for g in gens {
        all.push(g.substitute(map)?.transport(&big, &from_target));
    }
    let kept = eliminate(&Ideal::new(&big, all)?, k)?;
    let mut back = vec![0usize; k];
    back.extend(0..sp.nvars());
    let lifted: Vec<Polynomial> = kept.gens().iter().map(|f| f.transport(sp, &back)).collect();
    IdealInR::new(source, lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::{length_in_r, local_length, make_ring};

    fn regular(p: u64) -> Arc<PresentedRing> {
        make_ring(p, &["x", "y"], &[]).unwrap()
    }

    fn two_planes() -> Arc<PresentedRing> {
        make_ring(5, &["x", "y", "z", "w"], &["x*z", "x*w", "y*z", "y*w"]).unwrap()
    }

    #[test]
    fn limit_closure_in_regular_ring() {
        let r = regular(5);
        let q = ParameterIdeal::parse(&r, "x, y").unwrap();
        assert!(limit_closure(&q).unwrap().same_ideal(q.ideal()).unwrap());
    }

    #[test]
    fn limit_closure_of_two_planes() {
        let r = two_planes();
        let q = ParameterIdeal::parse(&r, "x + z, y + w").unwrap();
        let lim = limit_closure(&q).unwrap();
        assert_eq!(local_length(q.ideal()).unwrap(), 3);
        assert_eq!(local_length(&lim).unwrap(), 1);
        assert!(lim.contains_ideal(q.ideal()).unwrap());
    }

    #[test]
    fn generator_independence() {
        let r = regular(5);
        let q = ParameterIdeal::parse(&r, "x, y").unwrap();
        assert!(generator_independence_check(&q, &r.parse_list("x, x + y").unwrap()).unwrap());
        assert!(generator_independence_check(&q, &r.parse_list("x, x + y^2").unwrap()).is_err());
        let t = two_planes();
        let q = ParameterIdeal::parse(&t, "x + z, y + w").unwrap();
        assert!(generator_independence_check(&q, &t.parse_list("x + z, x + y + z + w").unwrap()).unwrap());
    }

    #[test]
    fn regular_ring_is_f_regular_on_this_example() {
        let r = regular(2);
        let q = ParameterIdeal::parse(&r, "x, y").unwrap();
        assert!(frobenius_kernel(&q, &r.poly_ring().one(), 1).unwrap().is_empty());
        let res = tight_closure_candidate(&q, &r.parse("x + y").unwrap(), 3).unwrap();
        assert!(res.closure.same_ideal(q.ideal()).unwrap());
        assert!(res.stabilized);
        assert_eq!(res.contains_limit, Some(true));
        assert!(closure_candidate(q.ideal(), &r.poly_ring().one(), 1).is_err());
    }

    #[test]
    fn fermat_cubic_witness() {
        let r = make_ring(2, &["x", "y", "z"], &["x^3 + y^3 + z^3"]).unwrap();
        let q = ParameterIdeal::parse(&r, "x, y").unwrap();
        let c = r.parse("x").unwrap();
        let z2 = r.parse("z^2").unwrap();
        for e in 1..=3 {
            // independent check by direct bracket-power membership
            let qq = 1u64 << e;
            let direct = bracket_with_defining(q.ideal(), e).unwrap();
            assert!(direct.contains(&c.checked_mul(&z2.pow(qq).unwrap()).unwrap()).unwrap());
            let ker = frobenius_kernel(&q, &c, e).unwrap();
            let span = IdealInR::new(&r, ker).unwrap().sum(q.ideal()).unwrap();
            assert!(span.contains(&z2).unwrap());
        }
        let res = tight_closure_candidate(&q, &c, 4).unwrap();
        assert!(local_length(&res.closure).unwrap() < local_length(q.ideal()).unwrap());
        assert_eq!(res.contains_limit, Some(true));
    }

    #[test]
    fn test_element_must_be_nonzero() {
        let r = make_ring(2, &["x", "y", "z"], &["x^3 + y^3 + z^3"]).unwrap();
        let q = ParameterIdeal::parse(&r, "x, y").unwrap();
        assert!(frobenius_kernel(&q, &r.parse("x^3 + y^3 + z^3").unwrap(), 1).is_err());
    }

    #[test]
    fn identity_extension() {
        let r = two_planes();
        let q = ParameterIdeal::parse(&r, "x + z, y + w").unwrap();
        let ext = ExtensionData::presented(&r, &r, (0..4).map(|i| r.poly_ring().var(i)).collect()).unwrap();
        for n in 1..=2 {
            let c = contracted_closure(&q, n, &ext).unwrap();
            assert!(c.same_ideal(&q.power(n).unwrap()).unwrap());
        }
    }

    #[test]
    fn non_homomorphism_rejected() {
        let r = two_planes();
        let s = make_ring(5, &["x", "y", "z", "w"], &[]).unwrap();
        let bad = ExtensionData::presented(&s, &r, (0..4).map(|i| r.poly_ring().var(i)).collect());
        assert!(bad.is_ok());
        let back = ExtensionData::presented(&r, &s, (0..4).map(|i| s.poly_ring().var(i)).collect());
        assert!(matches!(back, Err(Error::Invalid(_))));
    }

    #[test]
    fn veronese_contraction_both_ways() {
        let sg = SemigroupRing::new(&[[5, 0], [4, 1], [1, 4], [0, 5]]).unwrap();
        let pres = sg.to_presentation(5).unwrap();
        let r = pres.ring.clone();
        assert_eq!(r.dim(), 2);
        let q = ParameterIdeal::parse(&r, "a, d").unwrap();
        let comb = ExtensionData::semigroup(&r, &sg).unwrap();
        let alg = ExtensionData::presented(&r, &pres.saturation, pres.map.clone()).unwrap();
        let c1 = contracted_closure(&q, 1, &comb).unwrap();
        let c2 = contracted_closure(&q, 1, &alg).unwrap();
        assert_eq!(length_in_r(&c1).unwrap().finite(), Some(3));
        assert!(c1.same_ideal(&c2).unwrap());
        let lim = limit_closure(&q).unwrap();
        assert!(lim.same_ideal(&c1).unwrap());
    }

    #[test]
    fn veronese_tight_candidate_matches_contraction() {
        let sg = SemigroupRing::new(&[[5, 0], [4, 1], [1, 4], [0, 5]]).unwrap();
        let pres = sg.to_presentation(5).unwrap();
        let r = pres.ring.clone();
        let q = ParameterIdeal::parse(&r, "a, d").unwrap();
        let res = tight_closure_candidate(&q, &r.parse("a").unwrap(), 2).unwrap();
        assert_eq!(local_length(&res.closure).unwrap(), 3);
    }
}
