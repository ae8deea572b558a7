//! Presented rings `R = P/J` studied locally at the origin.
//!
//! Every ideal of `R` is carried by its preimage in `P` (which contains `J`). Lengths are
//! vector-space dimensions of `P/(A + J)`; they agree with lengths over the local ring
//! at the origin exactly when the quotient is supported only at the origin, which
//! [`origin_supported`] checks.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fieldpoly::{parse_poly, parse_poly_list, Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::groebner::{
    ideal_intersect, ideal_quotient, krull_dimension, standard_monomials, vs_length, Ideal, Length,
};
use crate::linalg;

/// Largest quotient dimension handled by dense linear algebra.
pub const DENSE_LIMIT: usize = 20_000;

/// `R = F_p[vars]/J` with its Krull dimension.
#[derive(Debug)]
pub struct PresentedRing {
    poly: Arc<PolyRing>,
    defining: Ideal,
    dim: usize,
}

impl PresentedRing {
    pub fn new(poly: &Arc<PolyRing>, defining: Vec<Polynomial>) -> Result<Arc<Self>> {
        let defining = Ideal::new(poly, defining)?;
        if defining.is_unit()? {
            return Err(Error::UnitIdeal);
        }
        let dim = krull_dimension(&defining)?;
        Ok(Arc::new(Self {
            poly: poly.clone(),
            defining,
            dim,
        }))
    }

    #[inline]
    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        &self.poly
    }

    #[inline]
    pub fn defining(&self) -> &Ideal {
        &self.defining
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn characteristic(&self) -> u32 {
        self.poly.characteristic()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse_poly(text, &self.poly)
    }

    pub fn parse_list(&self, text: &str) -> Result<Vec<Polynomial>> {
        parse_poly_list(text, &self.poly)
    }

    /// Reduced representative of `f` modulo `J`.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.defining.normal_form(f)
    }

    pub fn is_zero(&self, f: &Polynomial) -> Result<bool> {
        self.defining.contains(f)
    }
}

/// Builds `F_p[vars]/(defining)` from text, grevlex order.
pub fn make_ring(p: u64, vars: &[&str], defining: &[&str]) -> Result<Arc<PresentedRing>> {
    let poly = PolyRing::new(p, vars, MonomialOrder::GrevLex)?;
    let gens = defining
        .iter()
        .map(|t| parse_poly(t, &poly))
        .collect::<Result<Vec<_>>>()?;
    PresentedRing::new(&poly, gens)
}

/// An ideal of a presented ring, carried by generators in `P` plus the defining ideal.
#[derive(Debug, Clone)]
pub struct IdealInR {
    ring: Arc<PresentedRing>,
    gens: Vec<Polynomial>,
    lifted: Ideal,
}

impl IdealInR {
    pub fn new(ring: &Arc<PresentedRing>, gens: Vec<Polynomial>) -> Result<Self> {
        let lifted = ring.defining.with_generators(gens.iter().cloned())?;
        Ok(Self {
            ring: ring.clone(),
            gens,
            lifted,
        })
    }

    /// Wraps an ideal of `P` that already contains `J`.
    pub(crate) fn from_lifted(ring: &Arc<PresentedRing>, lifted: Ideal) -> Result<Self> {
        debug_assert!(lifted.contains_ideal(ring.defining()).unwrap_or(true));
        let gens = lifted.groebner_basis()?.to_vec();
        let lifted = Ideal::new(ring.poly_ring(), gens.clone())?;
        Ok(Self {
            ring: ring.clone(),
            gens,
            lifted,
        })
    }

    pub fn maximal(ring: &Arc<PresentedRing>) -> Self {
        let p = ring.poly_ring();
        Self::new(ring, (0..p.nvars()).map(|i| p.var(i)).collect()).expect("same ring")
    }

    pub fn unit(ring: &Arc<PresentedRing>) -> Self {
        Self::new(ring, vec![ring.poly_ring().one()]).expect("same ring")
    }

    #[inline]
    pub fn ring(&self) -> &Arc<PresentedRing> {
        &self.ring
    }

    /// Generators in `P` (without those of `J`).
    #[inline]
    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    #[inline]
    pub fn lifted(&self) -> &Ideal {
        &self.lifted
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.lifted.contains(f)
    }

    pub fn contains_ideal(&self, other: &IdealInR) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality via reduced Gröbner bases of the lifts.
    pub fn same_ideal(&self, other: &IdealInR) -> Result<bool> {
        self.lifted.same_ideal(&other.lifted)
    }

    pub fn sum(&self, other: &IdealInR) -> Result<IdealInR> {
        IdealInR::new(&self.ring, self.gens.iter().chain(other.gens.iter()).cloned().collect())
    }

    pub fn product(&self, other: &IdealInR) -> Result<IdealInR> {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.checked_mul(g)?);
            }
        }
        IdealInR::new(&self.ring, gens)
    }

    /// `A : g`. When `P/A` is finite-dimensional this is the kernel of multiplication
    /// by `g` on it; otherwise it goes through elimination.
    pub fn colon(&self, g: &Polynomial) -> Result<IdealInR> {
        if vs_length(&self.lifted)?.is_finite() {
            let fq = FiniteQuotient::new(self)?;
            let images = fq
                .basis()
                .iter()
                .map(|m| fq.coords(&g.mul_term(m, 1)?))
                .collect::<Result<Vec<_>>>()?;
            let ker = linalg::kernel(fq.field(), &images);
            return fq.extend(&ker);
        }
        IdealInR::from_lifted(&self.ring, ideal_quotient(&self.lifted, g, false)?)
    }

    pub fn intersect(&self, other: &IdealInR) -> Result<IdealInR> {
        IdealInR::from_lifted(&self.ring, ideal_intersect(&self.lifted, &other.lifted)?)
    }

    /// Generators of the reduced Gröbner basis of the lift, minus those lying in `J`.
    pub fn display_generators(&self) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for g in self.lifted.groebner_basis()? {
            if !self.ring.defining().contains(g)? {
                out.push(g.to_string());
            }
        }
        Ok(out)
    }
}

/// `P/A` for a finite-dimensional quotient, with coordinates on its standard monomials.
#[derive(Debug)]
pub struct FiniteQuotient {
    ideal: IdealInR,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl FiniteQuotient {
    pub fn new(ideal: &IdealInR) -> Result<Self> {
        let basis = standard_monomials(&ideal.lifted, DENSE_LIMIT)?;
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(Self {
            ideal: ideal.clone(),
            basis,
            index,
        })
    }

    #[inline]
    pub fn ideal(&self) -> &IdealInR {
        &self.ideal
    }

    #[inline]
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> &crate::fieldpoly::PrimeField {
        self.ideal.ring.poly_ring().field()
    }

    /// Coordinates of the normal form of `f`.
    pub fn coords(&self, f: &Polynomial) -> Result<Vec<u32>> {
        let nf = self.ideal.lifted.normal_form(f)?;
        let mut v = vec![0u32; self.basis.len()];
        for (m, c) in nf.terms() {
            v[self.index[m]] = *c;
        }
        Ok(v)
    }

    pub fn lift(&self, v: &[u32]) -> Polynomial {
        let ring = self.ideal.ring.poly_ring();
        let terms = v
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| **c != 0)
            .map(|(c, m)| (m.clone(), *c))
            .collect();
        ring.from_terms(terms)
    }

    /// The image of an ideal `B ⊇ A` as a subspace, in reduced echelon form.
    pub fn subspace(&self, b: &IdealInR) -> Result<Vec<Vec<u32>>> {
        let mut rows = Vec::new();
        for g in b.gens() {
            for m in &self.basis {
                let v = self.coords(&g.mul_term(m, 1)?)?;
                if v.iter().any(|c| *c != 0) {
                    rows.push(v);
                }
            }
        }
        linalg::rref(self.field(), &mut rows);
        Ok(rows)
    }

    /// `A` plus lifts of the given vectors.
    pub fn extend(&self, vectors: &[Vec<u32>]) -> Result<IdealInR> {
        let extra: Vec<Polynomial> = vectors.iter().map(|v| self.lift(v)).filter(|f| !f.is_zero()).collect();
        let mut gens = self.ideal.gens.clone();
        gens.extend(extra);
        IdealInR::new(&self.ideal.ring, gens)
    }
}

/// `dim_{F_p} P/(A + J)`, possibly infinite.
pub fn length_in_r(a: &IdealInR) -> Result<Length> {
    vs_length(&a.lifted)
}

/// True when `P/(A + J)` is finite-dimensional and every variable is nilpotent in it, so
/// that the quotient is a local ring at the origin.
pub fn origin_supported(a: &IdealInR) -> Result<bool> {
    let len = match vs_length(&a.lifted)? {
        Length::Infinite => return Ok(false),
        Length::Finite(0) => return Ok(true),
        Length::Finite(n) => n,
    };
    let poly = a.ring.poly_ring();
    // a nilpotent element of an algebra of dimension n has n-th power zero
    let e = u32::try_from(len).map_err(|_| Error::ExponentOverflow)?;
    for i in 0..poly.nvars() {
        let pow = poly.term(crate::fieldpoly::Monomial::var_power(poly.nvars(), i, e), 1);
        if !a.lifted.contains(&pow)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Length over the local ring at the origin; fails unless [`origin_supported`] holds.
pub fn local_length(a: &IdealInR) -> Result<u64> {
    if !origin_supported(a)? {
        return Err(Error::NotLocalAtOrigin);
    }
    Ok(length_in_r(a)?.finite().expect("checked finite"))
}

/// Whether `elems` is a system of parameters of `R` at the origin.
pub fn is_sop(elems: &[Polynomial], ring: &Arc<PresentedRing>) -> Result<bool> {
    if elems.len() != ring.dim() {
        return Ok(false);
    }
    let q = IdealInR::new(ring, elems.to_vec())?;
    if q.lifted.is_unit()? {
        return Ok(false);
    }
    origin_supported(&q)
}

/// `Q^n` generated by all n-fold products of generators, plus `J`.
pub fn ideal_power_in_r(q: &IdealInR, n: u32) -> Result<IdealInR> {
    if n == 0 {
        return Ok(IdealInR::unit(&q.ring));
    }
    let base = Ideal::new(q.ring.poly_ring(), q.gens.iter().cloned())?;
    let pw = base.power(n)?;
    IdealInR::new(&q.ring, pw.gens().to_vec())
}

/// An ordered system of parameters `x_1, ..., x_d`.
#[derive(Debug, Clone)]
pub struct ParameterIdeal {
    elements: Vec<Polynomial>,
    ideal: IdealInR,
}

impl ParameterIdeal {
    pub fn new(ring: &Arc<PresentedRing>, elements: Vec<Polynomial>) -> Result<Self> {
        if !is_sop(&elements, ring)? {
            return Err(Error::Invalid(format!(
                "{} elements do not form a system of parameters of a ring of dimension {}",
                elements.len(),
                ring.dim()
            )));
        }
        let ideal = IdealInR::new(ring, elements.clone())?;
        Ok(Self { elements, ideal })
    }

    pub fn parse(ring: &Arc<PresentedRing>, text: &str) -> Result<Self> {
        Self::new(ring, ring.parse_list(text)?)
    }

    #[inline]
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    #[inline]
    pub fn ideal(&self) -> &IdealInR {
        &self.ideal
    }

    #[inline]
    pub fn ring(&self) -> &Arc<PresentedRing> {
        self.ideal.ring()
    }

    pub fn power(&self, n: u32) -> Result<IdealInR> {
        ideal_power_in_r(&self.ideal, n)
    }
}

/// Outcome of the bounded superficiality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperficialCheck {
    pub holds: bool,
    pub c: u32,
    pub n_max: u32,
    /// First `n` in the window where the equality fails.
    pub failed_at: Option<u32>,
}

/// Checks `(I^{n+1} : x) ∩ I^c = I^n` for every `n` in `c..=n_max`. This verifies the
/// definition on a finite window only.
pub fn is_superficial(x: &Polynomial, i: &IdealInR, c: u32, n_max: u32) -> Result<SuperficialCheck> {
    if c < 1 || n_max < c {
        return Err(Error::Invalid(format!("bad window c = {c}, n_max = {n_max}")));
    }
    if !i.contains(x)? {
        return Err(Error::Invalid(format!("{x} is not in the ideal")));
    }
    if !origin_supported(i)? {
        return Err(Error::NotLocalAtOrigin);
    }
    let ic = ideal_power_in_r(i, c)?;
    for n in c..=n_max {
        // everything lives in P/I^{n+1}, where I^n ⊆ (I^{n+1} : x) ∩ I^c always holds
        let fq = FiniteQuotient::new(&ideal_power_in_r(i, n + 1)?)?;
        let images = fq
            .basis()
            .iter()
            .map(|m| fq.coords(&x.mul_term(m, 1)?))
            .collect::<Result<Vec<_>>>()?;
        let colon = linalg::kernel(fq.field(), &images);
        let lhs = linalg::intersect(fq.field(), &colon, &fq.subspace(&ic)?);
        let rhs = fq.subspace(&ideal_power_in_r(i, n)?)?;
        if lhs.len() != rhs.len() {
            return Ok(SuperficialCheck {
                holds: false,
                c,
                n_max,
                failed_at: Some(n),
            });
        }
    }
    Ok(SuperficialCheck {
        holds: true,
        c,
        n_max,
        failed_at: None,
    })
}
