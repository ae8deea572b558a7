//! Gröbner bases and the ideal-arithmetic toolbox built on them.

mod buchberger;
mod count;
mod ops;

use std::sync::{Arc, OnceLock, RwLock};

pub use buchberger::reduced_groebner_basis;
pub use count::{graded_hilbert_function, krull_dimension, standard_monomials, vs_length, Length};
pub use ops::{bracket_power, eliminate, ideal_intersect, ideal_quotient, ideal_quotient_by_ideal};

use crate::error::{Error, Result};
use crate::fieldpoly::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// Resource caps for a single Gröbner basis computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: u64,
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_pairs: 2_000_000,
            max_degree: 1 << 20,
        }
    }
}

static BUDGET: RwLock<Budget> = RwLock::new(Budget {
    max_pairs: 2_000_000,
    max_degree: 1 << 20,
});

/// The budget used by every subsequent basis computation in this process.
pub fn set_budget(b: Budget) {
    *BUDGET.write().unwrap() = b;
}

pub fn budget() -> Budget {
    *BUDGET.read().unwrap()
}

/// An ideal of a polynomial ring with a lazily computed, cached reduced Gröbner basis.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Self {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl Ideal {
    /// Generators are moved into `ring`'s order; they must share its field and variables.
    pub fn new(ring: &Arc<PolyRing>, gens: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut out = Vec::new();
        for g in gens {
            if !g.ring().same_signature(ring) {
                return Err(Error::SignatureMismatch);
            }
            if !g.is_zero() {
                out.push(g.reorder(ring));
            }
        }
        Ok(Self {
            ring: ring.clone(),
            gens: out,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, []).expect("empty generator list")
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| ring.var(i))).expect("same ring")
    }

    pub fn from_monomials(ring: &Arc<PolyRing>, ms: &[Monomial]) -> Self {
        Self::new(ring, ms.iter().map(|m| ring.term(m.clone(), 1))).expect("same ring")
    }

    #[inline]
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    #[inline]
    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    /// The reduced Gröbner basis for the ring's order.
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let g = reduced_groebner_basis(&self.ring, &self.gens, &budget())?;
        // a concurrent writer produced the identical basis
        Ok(self.gb.get_or_init(|| g))
    }

    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self
            .groebner_basis()?
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().same_signature(&self.ring) {
            return Err(Error::SignatureMismatch);
        }
        let gb = self.groebner_basis()?;
        let active = vec![true; gb.len()];
        Ok(buchberger::reduce(&f.reorder(&self.ring), gb, &active))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.gens() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.iter().any(|g| g.is_constant()))
    }

    /// Equality of ideals, decided by comparing reduced bases in a common order.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        if !self.ring.same_signature(&other.ring) {
            return Err(Error::SignatureMismatch);
        }
        if self.ring.order() == other.ring.order() {
            return Ok(self.groebner_basis()? == other.groebner_basis()?);
        }
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    /// This ideal with its generators viewed in a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        let ring = self.ring.reordered(order);
        Ideal::new(&ring, self.gens.iter().cloned()).expect("same signature")
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        Ideal::new(&self.ring, self.gens.iter().chain(other.gens.iter()).cloned())
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        Ideal::new(&self.ring, self.gens.iter().cloned().chain(extra))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.checked_mul(g)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^n` generated by all n-fold products of generators (no minimalization).
    pub fn power(&self, n: u32) -> Result<Ideal> {
        let mut acc = Ideal::new(&self.ring, [self.ring.one()])?;
        for _ in 0..n {
            let mut gens: Vec<Polynomial> = Vec::new();
            for f in &acc.gens {
                for g in &self.gens {
                    let h = f.checked_mul(g)?;
                    if !gens.contains(&h) {
                        gens.push(h);
                    }
                }
            }
            acc = Ideal::new(&self.ring, gens)?;
        }
        Ok(acc)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }
}
