use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// An exponent vector over a fixed number of variables. The total degree is cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 8]>,
    deg: u32,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: SmallVec::from_elem(0, nvars),
            deg: 0,
        }
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        let mut deg = 0u32;
        for &e in exps {
            deg = deg.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Self {
            exps: SmallVec::from_slice(exps),
            deg,
        })
    }

    /// The monomial `x_i^e`.
    pub fn var_power(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = e;
        m.deg = e;
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).ok_or(Error::ExponentOverflow)?;
        }
        let deg = self.deg.checked_add(other.deg).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, deg })
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        Monomial {
            exps,
            deg: self.deg - other.deg,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u32; 8]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u64) -> Result<Monomial> {
        let e32 = u32::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        let mut exps = self.exps.clone();
        for a in exps.iter_mut() {
            *a = a.checked_mul(e32).ok_or(Error::ExponentOverflow)?;
        }
        let deg = self.deg.checked_mul(e32).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, deg })
    }

    /// Set of variable indices occurring with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }
}

/// Monomial orders. `Block(k)` compares the first `k` variables by grevlex and breaks
/// ties with grevlex on the remaining ones, so it eliminates the first block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    Block(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b.iter()).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// `Greater` means `a` is the larger monomial.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrevLex => {
                match a.deg.cmp(&b.deg) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(k) => {
                let k = k.min(a.exps.len());
                match grevlex(&a.exps[..k], &b.exps[..k]) {
                    Ordering::Equal => grevlex(&a.exps[k..], &b.exps[k..]),
                    o => o,
                }
            }
        }
    }

    /// Whether the order refines total degree (so homogeneous data stays graded).
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }
}
