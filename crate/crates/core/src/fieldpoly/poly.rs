use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::field::PrimeField;
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// The ambient polynomial ring `F_p[x_1, ..., x_n]` together with its term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(p: u64, vars: &[S], order: MonomialOrder) -> Result<Arc<Self>> {
        Self::with_field(PrimeField::new(p)?, vars, order)
    }

    pub fn with_field<S: AsRef<str>>(
        field: PrimeField,
        vars: &[S],
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::Invalid(format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Invalid(format!("duplicate variable {v}")));
            }
        }
        Ok(Arc::new(Self { field, vars, order }))
    }

    /// Same field and variables, different order.
    pub fn reordered(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(Self {
            field: self.field,
            vars: self.vars.clone(),
            order,
        })
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(self: &Arc<Self>, c: i64) -> Polynomial {
        let c = self.field.from_i64(c);
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(1)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        self.term(Monomial::var_power(self.nvars(), i, 1), 1)
    }

    pub fn term(self: &Arc<Self>, m: Monomial, c: u32) -> Polynomial {
        debug_assert_eq!(m.nvars(), self.nvars());
        let terms = if c % self.characteristic() == 0 {
            Vec::new()
        } else {
            vec![(m, c % self.characteristic())]
        };
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(self: &Arc<Self>, terms: Vec<(Monomial, u32)>) -> Polynomial {
        let mut p = Polynomial {
            ring: self.clone(),
            terms,
        };
        p.normalize();
        p
    }

    /// Terms must already be strictly decreasing with nonzero coefficients.
    pub(crate) fn from_sorted_terms(self: &Arc<Self>, terms: Vec<(Monomial, u32)>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| self.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    /// Same field and variable names; the order may differ.
    pub fn same_signature(&self, other: &PolyRing) -> bool {
        self.field == other.field && self.vars == other.vars
    }
}

/// A sparse polynomial. Terms are kept sorted in decreasing order for the ring's term
/// order and never carry a zero coefficient.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, u32)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_signature(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Which binary operation [`poly_arith`] performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(kind: ArithKind, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    match kind {
        ArithKind::Add => f.checked_add(g),
        ArithKind::Sub => f.checked_sub(g),
        ArithKind::Mul => f.checked_mul(g),
    }
}

impl Polynomial {
    #[inline]
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    #[inline]
    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|(_, c)| *c)
    }

    /// Coefficient of a given monomial (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> u32 {
        self.terms
            .binary_search_by(|(t, _)| self.ring.cmp(m, t))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    fn normalize(&mut self) {
        let ring = self.ring.clone();
        let p = ring.characteristic();
        self.terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.drain(..) {
            let c = c % p;
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = ring.field().add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        self.terms = out;
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, 1, None))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let minus_one = self.ring.characteristic() - 1;
        Ok(self.merge(other, minus_one, None))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let degs = self.total_degree().unwrap_or(0) as u64 + other.total_degree().unwrap_or(0) as u64;
        if degs > u32::MAX as u64 {
            return Err(Error::ExponentOverflow);
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = self.ring.zero();
        for (m, c) in &small.terms {
            acc = acc.merge(big, *c, Some(m));
        }
        Ok(acc)
    }

    /// `self + c * m * other` in one pass over both term lists.
    fn merge(&self, other: &Polynomial, c: u32, m: Option<&Monomial>) -> Polynomial {
        let f = self.ring.field();
        let mut out = Vec::with_capacity(self.len() + other.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |t: &Monomial| -> Monomial {
            match m {
                Some(m) => t.mul(m).expect("exponent overflow in polynomial product"),
                None => t.clone(),
            }
        };
        let mut pending: Option<(Monomial, u32)> = other
            .terms
            .first()
            .map(|(t, tc)| (shifted(t), f.mul(*tc, c)));
        while i < self.terms.len() || pending.is_some() {
            let take_left = match (&self.terms.get(i), &pending) {
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some((a, _)), Some((b, _))) => self.ring.cmp(a, b),
                (None, None) => unreachable!(),
            };
            match take_left {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (b, bc) = pending.take().unwrap();
                    if bc != 0 {
                        out.push((b, bc));
                    }
                    j += 1;
                    pending = other.terms.get(j).map(|(t, tc)| (shifted(t), f.mul(*tc, c)));
                }
                Ordering::Equal => {
                    let (b, bc) = pending.take().unwrap();
                    let s = f.add(self.terms[i].1, bc);
                    if s != 0 {
                        out.push((b, s));
                    }
                    i += 1;
                    j += 1;
                    pending = other.terms.get(j).map(|(t, tc)| (shifted(t), f.mul(*tc, c)));
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// `self - c * m * g`, the basic reduction step. Rings must agree.
    pub(crate) fn sub_mul_term(&self, c: u32, m: &Monomial, g: &Polynomial) -> Polynomial {
        let f = self.ring.field();
        self.merge(g, f.neg(c), Some(m))
    }

    pub(crate) fn drop_lead(p: &Polynomial) -> Polynomial {
        Polynomial {
            ring: p.ring.clone(),
            terms: p.terms[1..].to_vec(),
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.ring.field();
        let c = c % f.characteristic();
        if c == 0 {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(*a, c))).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.characteristic() - 1)
    }

    /// Multiplication by a single term; fails on exponent overflow.
    pub fn mul_term(&self, m: &Monomial, c: u32) -> Result<Polynomial> {
        let f = self.ring.field();
        let c = c % f.characteristic();
        if c == 0 {
            return Ok(self.ring.zero());
        }
        let mut terms = Vec::with_capacity(self.len());
        for (t, a) in &self.terms {
            terms.push((t.mul(m)?, f.mul(*a, c)));
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c).expect("nonzero")),
        }
    }

    pub fn pow(&self, n: u64) -> Result<Polynomial> {
        if let Some(d) = self.total_degree() {
            if (d as u64).saturating_mul(n) > u32::MAX as u64 {
                return Err(Error::ExponentOverflow);
            }
        }
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `f^(p^e)`, computed termwise: over F_p the Frobenius is additive and fixes scalars.
    pub fn frobenius_pow(&self, e: u32) -> Result<Polynomial> {
        let q = (self.ring.characteristic() as u64)
            .checked_pow(e)
            .filter(|q| *q <= u32::MAX as u64)
            .ok_or(Error::ExponentOverflow)?;
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            terms.push((m.pow(q)?, *c));
        }
        // raising to a power preserves the order of monomials
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Re-expresses the polynomial in a ring with the same field, using `var_map[i]` as the
    /// target index of variable `i`.
    pub fn transport(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Polynomial {
        debug_assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[var_map[i]] += x;
                }
                (Monomial::from_exponents(&e).expect("degree unchanged"), *c)
            })
            .collect();
        target.from_terms(terms)
    }

    /// Same polynomial viewed in a ring that differs only in its term order.
    pub fn reorder(&self, target: &Arc<PolyRing>) -> Polynomial {
        debug_assert!(self.ring.same_signature(target));
        if Arc::ptr_eq(&self.ring, target) {
            return self.clone();
        }
        let mut p = Polynomial {
            ring: target.clone(),
            terms: self.terms.clone(),
        };
        if self.ring.order() != target.order() {
            p.terms.sort_by(|a, b| target.cmp(&b.0, &a.0));
        }
        p
    }

    /// Substitutes `images[i]` for variable `i`; the images live in the target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .ok_or_else(|| Error::Invalid("empty substitution".into()))?;
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(*c as i64);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.checked_mul(&images[i].pow(e as u64)?)?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }
}

macro_rules! impl_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics if the operands live in different rings.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

impl_op!(Add, add, checked_add);
impl_op!(Sub, sub, checked_sub);
impl_op!(Mul, mul, checked_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(p: u64) -> Arc<PolyRing> {
        PolyRing::new(p, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn additive_inverse_and_identity() {
        let r = ring(5);
        let x = r.var(0);
        assert!((&x + &x.neg()).is_zero());
        let f = &(&x * &r.var(1)) + &r.constant(3);
        assert_eq!(&f * &r.one(), f);
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(5);
        let (x, y) = (r.var(0), r.var(1));
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = ring(5);
        let b = ring(7);
        assert_eq!(a.var(0).checked_add(&b.var(0)), Err(Error::SignatureMismatch));
        assert_eq!(
            poly_arith(ArithKind::Mul, &a.var(0), &b.var(1)),
            Err(Error::SignatureMismatch)
        );
    }

    #[test]
    fn frobenius_examples() {
        let r2 = ring(2);
        let f = &r2.var(0) + &r2.var(1);
        assert_eq!(f.frobenius_pow(1).unwrap(), &(&r2.var(0) * &r2.var(0)) + &(&r2.var(1) * &r2.var(1)));
        assert_eq!(r2.one().frobenius_pow(3).unwrap(), r2.one());

        let r3 = ring(3);
        let f = &r3.var(0).scale(2) + &r3.var(1);
        let fr = f.frobenius_pow(2).unwrap();
        let mut by_mul = r3.one();
        for _ in 0..9 {
            by_mul = &by_mul * &f;
        }
        assert_eq!(fr, by_mul);
        let x9 = r3.term(Monomial::var_power(3, 0, 9), 2);
        let y9 = r3.term(Monomial::var_power(3, 1, 9), 1);
        assert_eq!(fr, &x9 + &y9);
    }

    #[test]
    fn frobenius_overflow() {
        let r = ring(2147483647);
        assert_eq!(r.var(0).frobenius_pow(2), Err(Error::ExponentOverflow));
    }

    fn arb_poly(r: Arc<PolyRing>) -> impl Strategy<Value = Polynomial> {
        let p = r.characteristic();
        proptest::collection::vec((proptest::collection::vec(0u32..3, 3), 0..p), 0..5).prop_map(
            move |ts| {
                r.from_terms(
                    ts.into_iter()
                        .map(|(e, c)| (Monomial::from_exponents(&e).unwrap(), c))
                        .collect(),
                )
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 128, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, rng_seed: proptest::test_runner::RngSeed::Fixed(7), failure_persistence: None, ..ProptestConfig::default() })]

        #[test]
        fn ring_axioms(f in arb_poly(ring(5)), g in arb_poly(ring(5)), h in arb_poly(ring(5))) {
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn frobenius_matches_iterated_product(
            (p, e) in prop_oneof![Just((2u64, 1u32)), Just((2, 2)), Just((2, 3)), Just((3, 1)), Just((5, 1)), Just((7, 1))],
            seed in 0u64..1000,
        ) {
            use rand::{Rng, SeedableRng};
            let r = ring(p);
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let terms = (0..rng.gen_range(0..4))
                .map(|_| {
                    let e: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
                    (Monomial::from_exponents(&e).unwrap(), rng.gen_range(0..p as u32))
                })
                .collect();
            let f = r.from_terms(terms);
            let q = p.pow(e);
            let mut by_mul = r.one();
            for _ in 0..q {
                by_mul = &by_mul * &f;
            }
            prop_assert_eq!(f.frobenius_pow(e).unwrap(), by_mul);
        }
    }
}
