//! Length sequences `n ↦ ℓ(R/cl(Q^{n+1}))`, Hilbert coefficients, and checks of the
//! identities relating them to local cohomology.

mod coefficients;
mod identities;

use std::fmt;
use std::sync::Arc;

pub use coefficients::{
    binom, buchsbaum_colength_excess, buchsbaum_limit_e1_value, buchsbaum_limit_excess, extract_coefficients,
    hilbert_polynomial, predict_buchsbaum, tight_buchsbaum_e1_value, BuchsbaumPrediction, CoefficientVector,
};
pub use identities::{check_identities, CheckRecord, IdentityInputs, Relation, Verdict};

use crate::closures::{closure_candidate, contracted_closure, limit_closure, ExtensionData};
use crate::error::{Error, Result};
use crate::groebner::{graded_hilbert_function, ideal_quotient_by_ideal, Ideal};
use crate::quotient::{local_length, ParameterIdeal, PresentedRing};
use crate::semigroup::{Exp, SemigroupRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClosureTag {
    None,
    Limit,
    TightCandidate,
    FrobeniusCandidate,
    Contracted,
}

impl ClosureTag {
    pub fn name(self) -> &'static str {
        match self {
            ClosureTag::None => "none",
            ClosureTag::Limit => "limit",
            ClosureTag::TightCandidate => "tight",
            ClosureTag::FrobeniusCandidate => "frobenius",
            ClosureTag::Contracted => "contracted",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "none" => ClosureTag::None,
            "limit" => ClosureTag::Limit,
            "tight" => ClosureTag::TightCandidate,
            "frobenius" => ClosureTag::FrobeniusCandidate,
            "contracted" => ClosureTag::Contracted,
            _ => return None,
        })
    }
}

impl fmt::Display for ClosureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `h(n) = ℓ(R/cl(Q^{n+1}))` for `n = 0..values.len()`.
///
/// The limit closure is only defined for parameter ideals, so a `Limit` sequence holds
/// the single value `ℓ(R/Q^lim)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthSequence {
    pub tag: ClosureTag,
    pub values: Vec<u64>,
}

/// Inputs for closures that need more than the parameter ideal.
#[derive(Debug, Clone, Default)]
pub struct SequenceOptions {
    pub test_element: Option<crate::fieldpoly::Polynomial>,
    pub e_bound: u32,
    pub extension: Option<ExtensionData>,
}

/// Length sequence over a presented ring.
pub fn length_sequence(q: &ParameterIdeal, tag: ClosureTag, n_max: usize, opts: &SequenceOptions) -> Result<LengthSequence> {
    let mut values = Vec::with_capacity(n_max + 1);
    if tag == ClosureTag::Limit {
        values.push(local_length(&limit_closure(q)?)?);
        return Ok(LengthSequence { tag, values });
    }
    for n in 0..=n_max {
        let k = n as u32 + 1;
        let ideal = match tag {
            ClosureTag::None => q.power(k)?,
            ClosureTag::TightCandidate => {
                let c = opts
                    .test_element
                    .as_ref()
                    .ok_or_else(|| Error::Invalid("test element required".into()))?;
                closure_candidate(&q.power(k)?, c, opts.e_bound)?.closure
            }
            ClosureTag::FrobeniusCandidate => {
                let one = q.ring().poly_ring().one();
                closure_candidate(&q.power(k)?, &one, opts.e_bound)?.closure
            }
            ClosureTag::Contracted => {
                let ext = opts
                    .extension
                    .as_ref()
                    .ok_or_else(|| Error::Invalid("extension required for contracted closure".into()))?;
                contracted_closure(q, k, ext)?
            }
            ClosureTag::Limit => unreachable!(),
        };
        values.push(local_length(&ideal)?);
    }
    Ok(LengthSequence { tag, values })
}

/// Length sequence over a semigroup ring with parameters `q` (exponent vectors).
/// Contraction to the saturation stands in for the tight closure.
pub fn semigroup_length_sequence(s: &SemigroupRing, q: &[Exp], tag: ClosureTag, n_max: usize) -> Result<LengthSequence> {
    let base = s.ideal(q)?;
    let values = match tag {
        ClosureTag::Limit => vec![s.limit_closure(q)?.colength()],
        ClosureTag::None | ClosureTag::Contracted => (0..=n_max)
            .map(|n| {
                let pw = s.power(&base, n as u32 + 1)?;
                Ok(if tag == ClosureTag::Contracted {
                    s.contract(&pw)?.colength()
                } else {
                    pw.colength()
                })
            })
            .collect::<Result<Vec<_>>>()?,
        other => {
            return Err(Error::Invalid(format!(
                "closure {other} is not available for semigroup rings; use contracted"
            )))
        }
    };
    Ok(LengthSequence { tag, values })
}

/// Where a cohomology length came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    User,
    DerivedH0,
    DerivedExtension,
    /// `ℓ(Q*/Q^lim)` used in place of `ℓ(0*)`.
    Proxy,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::User => "user",
            Provenance::DerivedH0 => "derived-H0",
            Provenance::DerivedExtension => "derived-extension",
            Provenance::Proxy => "proxy",
        }
    }
}

/// `ℓ(H^i_m(R))` for `i < d`, each with provenance, and optionally `ℓ(0*_{H^d})`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CohomologyProfile {
    pub h_lengths: Vec<Option<(u64, Provenance)>>,
    pub zero_star: Option<(u64, Provenance)>,
}

impl CohomologyProfile {
    pub fn new(d: usize) -> Self {
        Self {
            h_lengths: vec![None; d],
            zero_star: None,
        }
    }

    pub fn set(&mut self, i: usize, value: u64, tag: Provenance) {
        if i >= self.h_lengths.len() {
            self.h_lengths.resize(i + 1, None);
        }
        self.h_lengths[i] = Some((value, tag));
    }

    pub fn get(&self, i: usize) -> Option<u64> {
        self.h_lengths.get(i).copied().flatten().map(|(v, _)| v)
    }

    /// All lengths, when every `H^i`, `i < d`, is known.
    pub fn complete(&self) -> Option<Vec<u64>> {
        self.h_lengths.iter().map(|e| e.map(|(v, _)| v)).collect()
    }
}

/// `ℓ(H^0_m(R)) = ℓ((J : m^∞)/J)` for homogeneous `J`, summed degree by degree.
pub fn h0_length(ring: &Arc<PresentedRing>) -> Result<u64> {
    let j = ring.defining();
    if !j.is_homogeneous() {
        return Err(Error::NotHomogeneous("defining ideal".into()));
    }
    let sat = ideal_quotient_by_ideal(j, &Ideal::maximal(ring.poly_ring()), true)?;
    let top = |i: &Ideal| -> Result<u32> {
        Ok(i.groebner_basis()?.iter().filter_map(|g| g.total_degree()).max().unwrap_or(0))
    };
    // past the largest basis degree both Hilbert functions are polynomial
    let bound = top(j)?.max(top(&sat)?) + 1;
    let mut total = 0u64;
    let mut zeros = 0;
    let mut n = 0u32;
    loop {
        let diff = graded_hilbert_function(j, n)? - graded_hilbert_function(&sat, n)?;
        total += diff;
        zeros = if diff == 0 { zeros + 1 } else { 0 };
        if n > bound && zeros >= 2 {
            return Ok(total);
        }
        n += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::make_ring;

    #[test]
    fn regular_sequence() {
        let r = make_ring(5, &["x", "y"], &[]).unwrap();
        let q = ParameterIdeal::parse(&r, "x, y").unwrap();
        let seq = length_sequence(&q, ClosureTag::None, 5, &SequenceOptions::default()).unwrap();
        assert_eq!(seq.values, (0..=5).map(|n| binom(n + 2, 2) as u64).collect::<Vec<_>>());
        let lim = length_sequence(&q, ClosureTag::Limit, 5, &SequenceOptions::default()).unwrap();
        assert_eq!(lim.values, vec![1]);
        assert!(length_sequence(&q, ClosureTag::TightCandidate, 2, &SequenceOptions::default()).is_err());
    }

    #[test]
    fn two_planes_sequence() {
        let r = make_ring(5, &["x", "y", "z", "w"], &["x*z", "x*w", "y*z", "y*w"]).unwrap();
        let q = ParameterIdeal::parse(&r, "x + z, y + w").unwrap();
        let seq = length_sequence(&q, ClosureTag::None, 5, &SequenceOptions::default()).unwrap();
        assert_eq!(seq.values[0], 3);
        let c = extract_coefficients(&seq.values, 2).unwrap();
        assert_eq!(c.e[0..2], [2, -1]);
        assert_eq!(c.stable_from, 0);
    }

    #[test]
    fn h0() {
        let r = make_ring(5, &["x", "y"], &[]).unwrap();
        assert_eq!(h0_length(&r).unwrap(), 0);
        let r = make_ring(5, &["x", "y"], &["x^2", "x*y"]).unwrap();
        assert_eq!(h0_length(&r).unwrap(), 1);
        let r = make_ring(5, &["x", "y", "z", "w"], &["x*z", "x*w", "y*z", "y*w"]).unwrap();
        assert_eq!(h0_length(&r).unwrap(), 0);
        let r = make_ring(5, &["x", "y"], &["x^2 - y"]).unwrap();
        assert!(matches!(h0_length(&r), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn semigroup_sequences() {
        let s = SemigroupRing::new(&[[5, 0], [4, 1], [1, 4], [0, 5]]).unwrap();
        let q = [[5, 0], [0, 5]];
        let c = semigroup_length_sequence(&s, &q, ClosureTag::Contracted, 6).unwrap();
        let fit = extract_coefficients(&c.values, 2).unwrap();
        assert_eq!(fit.e, vec![5, 0, -4]);
        assert_eq!(fit.stable_from, 1);
        let none = semigroup_length_sequence(&s, &q, ClosureTag::None, 6).unwrap();
        assert!(none.values.iter().zip(&c.values).all(|(a, b)| a >= b));
        assert_eq!(extract_coefficients(&none.values, 2).unwrap().e[0], 5);
        assert!(semigroup_length_sequence(&s, &q, ClosureTag::TightCandidate, 3).is_err());
    }
}
