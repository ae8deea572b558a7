//! Turns a ring description into a report: length sequences, coefficients, closures,
//! cohomology data and identity checks.

use std::collections::BTreeMap;
use std::sync::Arc;

use thilb_core::closures::{
    closure_candidate, contracted_closure, frobenius_closure_candidate, limit_closure, tight_closure_candidate,
    ExtensionData, TightClosureResult,
};
use thilb_core::fieldpoly::{MonomialOrder, PolyRing, Polynomial};
use thilb_core::groebner::{budget, set_budget, vs_length, Budget, Ideal, Length};
use thilb_core::hilbert::{
    check_identities, extract_coefficients, h0_length, length_sequence, semigroup_length_sequence, ClosureTag,
    CoefficientVector, CohomologyProfile, IdentityInputs, Provenance, SequenceOptions,
};
use thilb_core::quotient::{is_superficial, local_length, IdealInR, ParameterIdeal, PresentedRing};
use thilb_core::semigroup::{Exp, MonomialIdealInS, SemigroupRing};

use crate::report::{
    BudgetInfo, Check, ClosureInfo, ClosureReport, CohomologyInfo, CohomologyLength, Coefficients, Hypothesis,
    Report, SuperficialInfo,
};
use crate::spec::{parse_exponent_sum, parse_exponents, Engine, ExtensionSpec, RingSpec};
use crate::CliError;

/// Window of the bounded superficiality test.
const SUPERFICIAL_C: u32 = 3;
const SUPERFICIAL_N: u32 = 6;
/// Largest `n` in the rank identity `ℓ(R/Q^n Q*) - ℓ(R/Q^n)`.
const RANK_N: u32 = 4;

/// Command-line overrides of the `[options]` section.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub n_max: Option<usize>,
    pub closures: Option<Vec<String>>,
    pub e_bound: Option<u32>,
}

/// Reads `THILB_BUDGET` (`pairs` or `pairs,degree`) and installs the budget.
pub fn install_budget() -> Result<BudgetInfo, CliError> {
    let mut b = Budget::default();
    let mut source = "default";
    if let Ok(v) = std::env::var("THILB_BUDGET") {
        let bad = || CliError::Validation(format!("THILB_BUDGET must be `pairs` or `pairs,degree`, got `{v}`"));
        let mut parts = v.split(',').map(str::trim);
        b.max_pairs = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        if let Some(d) = parts.next() {
            b.max_degree = d.parse().map_err(|_| bad())?;
        }
        if parts.next().is_some() {
            return Err(bad());
        }
        source = "THILB_BUDGET";
    }
    set_budget(b);
    Ok(budget_info(source))
}

fn budget_info(source: &'static str) -> BudgetInfo {
    let b = budget();
    BudgetInfo {
        max_pairs: b.max_pairs,
        max_degree: b.max_degree,
        source,
    }
}

fn finite(l: Length, what: &str) -> Result<u64, CliError> {
    match l {
        Length::Finite(v) => Ok(v),
        Length::Infinite => Err(CliError::Validation(format!("{what} has infinite length"))),
    }
}

fn fit(values: &[u64], d: usize) -> Result<CoefficientVector, CliError> {
    Ok(extract_coefficients(values, d)?)
}

fn closure_info(ideal: &IdealInR) -> Result<ClosureInfo, CliError> {
    Ok(ClosureInfo {
        generators: ideal.display_generators()?,
        length: local_length(ideal)?,
        ..Default::default()
    })
}

fn candidate_info(res: &TightClosureResult) -> Result<ClosureInfo, CliError> {
    Ok(ClosureInfo {
        test_element: Some(res.test_element.to_string()),
        e_bound: Some(res.e_bound),
        kernel_dims: res.kernel_dims.clone(),
        stabilized: Some(res.stabilized),
        contains_limit: res.contains_limit,
        ..closure_info(&res.closure)?
    })
}

fn exp_text(v: &Exp) -> String {
    format!("({},{})", v[0], v[1])
}

fn sg_closure_info(i: &MonomialIdealInS) -> ClosureInfo {
    ClosureInfo {
        generators: i.gens().iter().map(exp_text).collect(),
        length: i.colength(),
        ..Default::default()
    }
}

/// The closures requested, in a fixed order.
fn requested(spec: &RingSpec, ov: &Overrides) -> Vec<ClosureTag> {
    let list = ov.closures.clone().or_else(|| spec.options.closures.clone());
    let mut tags: Vec<ClosureTag> = match list {
        Some(l) => l.iter().filter_map(|s| ClosureTag::parse(s)).collect(),
        None => {
            let mut t = vec![ClosureTag::None, ClosureTag::Limit];
            if spec.options.c.is_some() && spec.engine == Engine::Presented {
                t.push(ClosureTag::TightCandidate);
            }
            if matches!(
                spec.extension,
                Some(ExtensionSpec::Saturate | ExtensionSpec::Presented { .. })
            ) {
                t.push(ClosureTag::Contracted);
            }
            t
        }
    };
    tags.sort();
    tags.dedup();
    tags
}

/// Values derived per engine and fed to the checks.
#[derive(Default)]
struct Collected {
    lengths: BTreeMap<String, Vec<u64>>,
    colengths: BTreeMap<String, u64>,
    coefficients: BTreeMap<String, Coefficients>,
    closures: BTreeMap<String, ClosureInfo>,
    cohomology: CohomologyInfo,
    hypotheses: Vec<Hypothesis>,
    inputs: IdentityInputs,
}

impl Collected {
    fn sequence(&mut self, tag: ClosureTag, values: Vec<u64>, d: usize) -> Result<CoefficientVector, CliError> {
        let c = fit(&values, d)?;
        self.coefficients.insert(tag.name().to_string(), (&c).into());
        self.lengths.insert(tag.name().to_string(), values);
        Ok(c)
    }

    fn hypothesis(&mut self, name: &'static str, status: &'static str, detail: impl Into<String>) {
        debug_assert!(self.hypotheses.iter().all(|h| h.name != name));
        self.hypotheses.push(Hypothesis {
            name,
            status,
            detail: detail.into(),
        });
    }
}

pub fn analyze(spec: &RingSpec, ov: &Overrides) -> Result<Report, CliError> {
    let budget = budget_info(if std::env::var("THILB_BUDGET").is_ok() {
        "THILB_BUDGET"
    } else {
        "default"
    });
    let mut spec = spec.clone();
    if let Some(n) = ov.n_max {
        spec.options.n_max = n;
    }
    if let Some(e) = ov.e_bound {
        spec.options.e_bound = e;
    }
    let tags = requested(&spec, ov);
    spec.options.closures = Some(tags.iter().map(|t| t.name().to_string()).collect());
    let (dimension, mut col) = match spec.engine {
        Engine::Presented => presented(&spec, &tags)?,
        Engine::Semigroup => semigroup(&spec, &tags)?,
    };
    finish_hypotheses(&mut col, dimension);
    let checks = check_identities(&col.inputs).iter().map(Check::from).collect();
    Ok(Report {
        spec,
        dimension,
        lengths: col.lengths,
        colengths: col.colengths,
        coefficients: col.coefficients,
        closures: col.closures,
        cohomology: col.cohomology,
        checks,
        hypotheses: col.hypotheses,
        budget,
    })
}

/// A presented ring with its parameter ideal.
pub struct Presented {
    pub ring: Arc<PresentedRing>,
    pub q: ParameterIdeal,
}

pub fn build_presented(spec: &RingSpec) -> Result<Presented, CliError> {
    let poly = PolyRing::new(spec.p, &spec.vars, MonomialOrder::GrevLex)?;
    let defining = thilb_core::fieldpoly::parse_poly_list(&spec.defining, &poly)?;
    let ring = PresentedRing::new(&poly, defining)?;
    let q = ParameterIdeal::new(&ring, ring.parse_list(&spec.parameter)?)?;
    if q.elements().len() != ring.dim() {
        return Err(CliError::Validation(format!(
            "{} parameters given for a ring of dimension {}",
            q.elements().len(),
            ring.dim()
        )));
    }
    Ok(Presented { ring, q })
}

fn build_extension(spec: &RingSpec, ring: &Arc<PresentedRing>) -> Result<Option<ExtensionData>, CliError> {
    match &spec.extension {
        Some(ExtensionSpec::Presented { vars, defining, map }) => {
            let poly = PolyRing::with_field(*ring.poly_ring().field(), vars, MonomialOrder::GrevLex)?;
            let target = PresentedRing::new(&poly, thilb_core::fieldpoly::parse_poly_list(defining, &poly)?)?;
            let images = target.parse_list(map)?;
            Ok(Some(ExtensionData::presented(ring, &target, images)?))
        }
        _ => Ok(None),
    }
}

/// `ℓ(H^1)` from `J = I_1 ∩ I_2`: the sequence `0 → R → P/I_1 × P/I_2 → P/(I_1 + I_2) → 0`
/// identifies `H^1` with `P/(I_1 + I_2)` when the components are Cohen–Macaulay of
/// dimension at least two.
fn components_h1(ring: &Arc<PresentedRing>, ideals: &[String]) -> Result<Ideal, CliError> {
    let poly = ring.poly_ring();
    if ideals.len() != 2 {
        return Err(CliError::Validation(format!(
            "deriving H^1 needs exactly two components, got {}",
            ideals.len()
        )));
    }
    let a = Ideal::new(poly, ring.parse_list(&ideals[0])?)?;
    let b = Ideal::new(poly, ring.parse_list(&ideals[1])?)?;
    let meet = thilb_core::groebner::ideal_intersect(&a, &b)?;
    if !meet.same_ideal(ring.defining())? {
        return Err(CliError::Validation(
            "the components do not intersect to the defining ideal".into(),
        ));
    }
    Ok(a.sum(&b)?)
}

fn presented(spec: &RingSpec, tags: &[ClosureTag]) -> Result<(usize, Collected), CliError> {
    let Presented { ring, q } = build_presented(spec)?;
    let d = ring.dim();
    let n_max = spec.options.n_max;
    let e_bound = spec.options.e_bound;
    let mut col = Collected::default();
    let c = match &spec.options.c {
        Some(t) => Some(ring.parse(t)?),
        None => None,
    };
    let ext = build_extension(spec, &ring)?;
    let none = length_sequence(&q, ClosureTag::None, n_max, &SequenceOptions::default())?.values;
    col.colengths.insert("Q".into(), none[0]);
    let e = col.sequence(ClosureTag::None, none.clone(), d)?;
    col.inputs.e = Some(e);
    col.inputs.len_q = Some(none[0]);

    let mut star: Option<IdealInR> = None;
    for &tag in tags {
        match tag {
            ClosureTag::None => {}
            ClosureTag::Limit => {
                let lim = limit_closure(&q)?;
                let info = closure_info(&lim)?;
                col.colengths.insert("Q_lim".into(), info.length);
                col.lengths.insert("limit".into(), vec![info.length]);
                col.inputs.len_lim = Some(info.length);
                col.closures.insert("limit".into(), info);
            }
            ClosureTag::TightCandidate => {
                let c = c
                    .clone()
                    .ok_or_else(|| CliError::Validation("test element required for the tight closure candidate".into()))?;
                let res = tight_closure_candidate(&q, &c, e_bound)?;
                let info = candidate_info(&res)?;
                let opts = SequenceOptions {
                    test_element: Some(c.clone()),
                    e_bound,
                    extension: None,
                };
                let values = length_sequence(&q, tag, n_max, &opts)?.values;
                let es = col.sequence(tag, values, d)?;
                col.colengths.insert("Q_star".into(), info.length);
                col.inputs.len_star = Some(info.length);
                col.inputs.e_star = Some(es);
                col.closures.insert("tight".into(), info);
                star = Some(res.closure);
            }
            ClosureTag::FrobeniusCandidate => {
                let res = frobenius_closure_candidate(q.ideal(), e_bound)?;
                col.closures.insert("frobenius".into(), candidate_info(&res)?);
                let opts = SequenceOptions {
                    e_bound,
                    ..Default::default()
                };
                let values = length_sequence(&q, tag, n_max, &opts)?.values;
                col.sequence(tag, values, d)?;
            }
            ClosureTag::Contracted => {
                let ext = ext
                    .clone()
                    .ok_or_else(|| CliError::Validation("contracted closure needs an [extension] with vars and map".into()))?;
                col.closures.insert("contracted".into(), closure_info(&contracted_closure(&q, 1, &ext)?)?);
                let opts = SequenceOptions {
                    extension: Some(ext),
                    ..Default::default()
                };
                let values = length_sequence(&q, tag, n_max, &opts)?.values;
                col.sequence(tag, values, d)?;
            }
        }
    }

    if let Some(star) = &star {
        for n in 1..=RANK_N {
            let prod = q.power(n)?.product(star)?;
            let pw = local_length(&q.power(n)?)?;
            col.inputs.rank_data.push((n, local_length(&prod)?, pw));
        }
    }

    // cohomology
    let mut profile = CohomologyProfile::new(d);
    for (&i, &v) in &spec.cohomology.h {
        if i >= d {
            return Err(CliError::Validation(format!("h{i} given but the ring has dimension {d}")));
        }
        profile.set(i, v, Provenance::User);
    }
    if d > 0 && ring.defining().is_homogeneous() {
        let h0 = h0_length(&ring)?;
        if let Some(user) = spec.cohomology.h.get(&0) {
            if *user != h0 {
                return Err(CliError::Validation(format!("h0 = {user} given but l(H^0) = {h0} is computed")));
            }
        }
        profile.set(0, h0, Provenance::DerivedH0);
    }
    let a = match &spec.options.superficial {
        Some(t) => ring.parse(t)?,
        None => q.elements()[0].clone(),
    };
    let mut h1_module: Option<Ideal> = None;
    if let Some(ExtensionSpec::Components { ideals }) = &spec.extension {
        if d != 2 {
            return Err(CliError::Validation("component data is used for dimension two only".into()));
        }
        let k = components_h1(&ring, ideals)?;
        let h1 = finite(vs_length(&k)?, "P/(I_1 + I_2)")?;
        if let Some(user) = spec.cohomology.h.get(&1) {
            if *user != h1 {
                return Err(CliError::Validation(format!("h1 = {user} given but l(H^1) = {h1} is derived")));
            }
        }
        profile.set(1, h1, Provenance::DerivedExtension);
        col.hypothesis(
            "components-cohen-macaulay",
            "assumed",
            "P/I_1 and P/I_2 are Cohen-Macaulay of dimension 2, so H^1 = P/(I_1 + I_2)",
        );
        h1_module = Some(k);
    }
    if d == 2 {
        if let Some(k) = &h1_module {
            let kq = k.with_generators(q.elements().iter().cloned())?;
            let ka = k.with_generators([a.clone()])?;
            col.cohomology.h1_mod_q = Some(finite(vs_length(&kq)?, "H^1/QH^1")?);
            col.cohomology.h1_mod_a = Some(finite(vs_length(&ka)?, "H^1/aH^1")?);
        } else if profile.get(1) == Some(0) {
            col.cohomology.h1_mod_q = Some(0);
            col.cohomology.h1_mod_a = Some(0);
        }
        let sup = is_superficial(&a, q.ideal(), SUPERFICIAL_C, SUPERFICIAL_N)?;
        col.cohomology.superficial = Some(SuperficialInfo {
            element: a.to_string(),
            holds: sup.holds,
            c: sup.c,
            n_max: sup.n_max,
            failed_at: sup.failed_at,
        });
    }
    set_zero_star(spec, &mut profile, &col);
    col.cohomology.h = profile_lengths(&profile);
    col.cohomology.zero_star = profile.zero_star.map(|(v, p)| CohomologyLength {
        i: d,
        length: Some(v),
        provenance: Some(p.name()),
    });

    // hypotheses specific to presented rings
    let regular = ring.defining().gens().iter().all(|g| g.is_zero());
    for name in ["equidimensional", "unmixed", "reduced"] {
        if regular {
            col.hypothesis(name, "holds", "polynomial ring");
        } else {
            col.hypothesis(name, "unverified", "not decided by the tool");
        }
    }
    if let Some(c) = &c {
        if star.is_some() {
            if regular {
                col.hypothesis("test-element", "holds", format!("c = {c}; every nonzero element of a regular ring is a test element"));
            } else {
                col.hypothesis("test-element", "assumed", format!("c = {c} is taken to be a test element"));
            }
        }
    }
    col.inputs.d = d;
    col.inputs.profile = profile;
    col.inputs.h1_mod_q = col.cohomology.h1_mod_q;
    col.inputs.h1_mod_a = col.cohomology.h1_mod_a;
    col.inputs.superficial = col.cohomology.superficial.as_ref().map(|s| s.holds);
    col.inputs.buchsbaum = spec.cohomology.buchsbaum;
    Ok((d, col))
}

fn set_zero_star(spec: &RingSpec, profile: &mut CohomologyProfile, col: &Collected) {
    if let Some(z) = spec.cohomology.zero_star {
        profile.zero_star = Some((z, Provenance::User));
    } else if let (Some(lim), Some(st)) = (col.inputs.len_lim, col.inputs.len_star) {
        if lim >= st {
            profile.zero_star = Some((lim - st, Provenance::Proxy));
        }
    }
}

fn profile_lengths(profile: &CohomologyProfile) -> Vec<CohomologyLength> {
    profile
        .h_lengths
        .iter()
        .enumerate()
        .map(|(i, e)| CohomologyLength {
            i,
            length: e.map(|(v, _)| v),
            provenance: e.map(|(_, p)| p.name()),
        })
        .collect()
}

/// A semigroup ring with its parameter exponents.
pub struct Semigroup {
    pub s: Arc<SemigroupRing>,
    pub q: Vec<Exp>,
}

pub fn build_semigroup(spec: &RingSpec) -> Result<Semigroup, CliError> {
    let s = SemigroupRing::new(&spec.semigroup)?;
    let q = parse_exponents(&spec.parameter).map_err(CliError::Validation)?;
    if q.len() != s.dim() {
        return Err(CliError::Validation(format!(
            "{} parameters given for a semigroup ring of dimension {}",
            q.len(),
            s.dim()
        )));
    }
    for v in &q {
        if !s.contains(*v) {
            return Err(CliError::Validation(format!("parameter {} is not in the semigroup", exp_text(v))));
        }
    }
    s.ideal(&q)?;
    Ok(Semigroup { s, q })
}

fn semigroup(spec: &RingSpec, tags: &[ClosureTag]) -> Result<(usize, Collected), CliError> {
    let Semigroup { s, q } = build_semigroup(spec)?;
    let d = s.dim();
    let n_max = spec.options.n_max;
    let mut col = Collected::default();
    let base = s.ideal(&q)?;
    let none = semigroup_length_sequence(&s, &q, ClosureTag::None, n_max)?.values;
    col.colengths.insert("Q".into(), none[0]);
    col.inputs.e = Some(col.sequence(ClosureTag::None, none.clone(), d)?);
    col.inputs.len_q = Some(none[0]);

    let mut contracted = false;
    for &tag in tags {
        match tag {
            ClosureTag::None => {}
            ClosureTag::Limit => {
                let info = sg_closure_info(&s.limit_closure(&q)?);
                col.colengths.insert("Q_lim".into(), info.length);
                col.lengths.insert("limit".into(), vec![info.length]);
                col.inputs.len_lim = Some(info.length);
                col.closures.insert("limit".into(), info);
            }
            ClosureTag::Contracted => {
                let star = s.contract(&base)?;
                let info = sg_closure_info(&star);
                let values = semigroup_length_sequence(&s, &q, tag, n_max)?.values;
                let es = col.sequence(tag, values, d)?;
                col.colengths.insert("Q_star".into(), info.length);
                col.inputs.len_star = Some(info.length);
                col.inputs.e_star = Some(es);
                col.closures.insert("contracted".into(), info);
                for n in 1..=RANK_N {
                    let pw = s.power(&base, n)?;
                    col.inputs
                        .rank_data
                        .push((n, s.product(&pw, &star)?.colength(), pw.colength()));
                }
                contracted = true;
            }
            other => {
                return Err(CliError::Validation(format!(
                    "closure {other} is not available for semigroup rings; use contracted"
                )))
            }
        }
    }

    let mut profile = CohomologyProfile::new(d);
    if d > 0 {
        profile.set(0, 0, Provenance::DerivedH0);
    }
    let f: Vec<(Exp, u32)> = match &spec.options.superficial {
        Some(t) => parse_exponent_sum(t)
            .map_err(CliError::Validation)?
            .into_iter()
            .map(|(v, c)| (v, (c % spec.p) as u32))
            .collect(),
        None => q.iter().map(|v| (*v, 1)).collect(),
    };
    if d == 2 {
        let gm = s.gap_module(&q, Some(&f), spec.p)?;
        profile.set(1, gm.length, Provenance::DerivedExtension);
        col.cohomology.h1_mod_q = Some(gm.mod_q);
        col.cohomology.h1_mod_a = gm.mod_f;
        col.cohomology.gaps = s.gaps().iter().copied().collect();

        let pres = s.to_presentation(spec.p)?;
        let gens = q.iter().map(|v| s.monomial(&pres.ring, *v)).collect::<thilb_core::Result<Vec<_>>>()?;
        let qi = IdealInR::new(&pres.ring, gens)?;
        let mut a: Polynomial = pres.ring.poly_ring().zero();
        for (v, c) in &f {
            a = &a + &s.monomial(&pres.ring, *v)?.scale(*c);
        }
        let sup = is_superficial(&a, &qi, SUPERFICIAL_C, SUPERFICIAL_N)?;
        col.cohomology.superficial = Some(SuperficialInfo {
            element: f
                .iter()
                .map(|(v, c)| if *c == 1 { exp_text(v) } else { format!("{c}*{}", exp_text(v)) })
                .collect::<Vec<_>>()
                .join(" + "),
            holds: sup.holds,
            c: sup.c,
            n_max: sup.n_max,
            failed_at: sup.failed_at,
        });
    }
    for (&i, &v) in &spec.cohomology.h {
        match profile.get(i) {
            Some(derived) if derived != v => {
                return Err(CliError::Validation(format!("h{i} = {v} given but {derived} is derived")))
            }
            Some(_) => {}
            None => profile.set(i, v, Provenance::User),
        }
    }
    set_zero_star(spec, &mut profile, &col);
    col.cohomology.h = profile_lengths(&profile);
    col.cohomology.zero_star = profile.zero_star.map(|(v, p)| CohomologyLength {
        i: d,
        length: Some(v),
        provenance: Some(p.name()),
    });
    for name in ["equidimensional", "unmixed", "reduced"] {
        col.hypothesis(name, "holds", "semigroup rings are domains");
    }
    if contracted {
        col.hypothesis(
            "saturation-f-regular",
            "assumed",
            "the saturation is F-regular, so (Q^n)* = Q^n S ∩ R and the contracted sequence is the tight one",
        );
    }
    col.inputs.d = d;
    col.inputs.profile = profile;
    col.inputs.h1_mod_q = col.cohomology.h1_mod_q;
    col.inputs.h1_mod_a = col.cohomology.h1_mod_a;
    col.inputs.superficial = col.cohomology.superficial.as_ref().map(|s| s.holds);
    col.inputs.buchsbaum = spec.cohomology.buchsbaum;
    Ok((d, col))
}

fn finish_hypotheses(col: &mut Collected, d: usize) {
    let profile = col.inputs.profile.clone();
    let known: Vec<Option<u64>> = (0..d.min(2)).map(|i| profile.get(i)).collect();
    if d < 2 {
        col.hypothesis("S2", "holds", "dimension below two");
    } else if let Some(i) = known.iter().position(|v| matches!(v, Some(x) if *x > 0)) {
        col.hypothesis(
            "S2",
            "violated",
            format!("l(H^{i}) = {} > 0, so depth R < 2", known[i].unwrap_or(0)),
        );
    } else if known.iter().all(Option::is_some) {
        col.hypothesis("S2", "holds", "H^0 = H^1 = 0");
    } else {
        col.hypothesis("S2", "unverified", "l(H^1) unknown");
    }

    let cm = profile.complete().map(|h| h.iter().all(|v| *v == 0)).unwrap_or(false);
    if col.inputs.buchsbaum {
        col.hypothesis("buchsbaum", "assumed", "asserted in the ring file");
    } else if cm {
        col.inputs.buchsbaum = true;
        col.hypothesis("buchsbaum", "holds", "all l(H^i) = 0 for i < d, so R is Cohen-Macaulay");
    } else {
        col.hypothesis("buchsbaum", "not-asserted", "checks that need it are skipped");
    }

    if let Some(s) = &col.cohomology.superficial {
        let status = if s.holds { "holds" } else { "violated" };
        col.hypothesis(
            "superficial",
            status,
            format!("a = {}; (Q^(n+1) : a) ∩ Q^{} = Q^n checked for n <= {}", s.element, s.c, s.n_max),
        );
    }
    if col.inputs.e_star.is_some() {
        col.hypothesis(
            "tight-buchsbaum",
            "unverified",
            "needed for the tight identities reported as equalities",
        );
    }
    if let Some((_, p)) = profile.zero_star {
        if p == Provenance::Proxy {
            col.hypothesis("zero-star-proxy", "assumed", "l(0*) replaced by l(Q*/Q^lim)");
        }
    }
}

/// `thilb closure`: one closure of `Q^n`.
pub fn closure(spec: &RingSpec, which: ClosureTag, n: u32, e_bound: Option<u32>) -> Result<ClosureReport, CliError> {
    if n == 0 {
        return Err(CliError::Validation("n must be at least 1".into()));
    }
    let e_bound = e_bound.unwrap_or(spec.options.e_bound);
    let info = match spec.engine {
        Engine::Presented => {
            let Presented { ring, q } = build_presented(spec)?;
            match which {
                ClosureTag::None => closure_info(&q.power(n)?)?,
                ClosureTag::Limit => {
                    if n != 1 {
                        return Err(CliError::Validation("the limit closure is defined for Q itself (n = 1)".into()));
                    }
                    closure_info(&limit_closure(&q)?)?
                }
                ClosureTag::TightCandidate => {
                    let c = spec
                        .options
                        .c
                        .as_ref()
                        .ok_or_else(|| CliError::Validation("test element required".into()))?;
                    let c = ring.parse(c)?;
                    if n == 1 {
                        candidate_info(&tight_closure_candidate(&q, &c, e_bound)?)?
                    } else {
                        candidate_info(&closure_candidate(&q.power(n)?, &c, e_bound)?)?
                    }
                }
                ClosureTag::FrobeniusCandidate => candidate_info(&frobenius_closure_candidate(&q.power(n)?, e_bound)?)?,
                ClosureTag::Contracted => {
                    let ext = build_extension(spec, &ring)?
                        .ok_or_else(|| CliError::Validation("contracted closure needs an [extension] with vars and map".into()))?;
                    closure_info(&contracted_closure(&q, n, &ext)?)?
                }
            }
        }
        Engine::Semigroup => {
            let Semigroup { s, q } = build_semigroup(spec)?;
            let base = s.ideal(&q)?;
            match which {
                ClosureTag::None => sg_closure_info(&s.power(&base, n)?),
                ClosureTag::Limit => {
                    if n != 1 {
                        return Err(CliError::Validation("the limit closure is defined for Q itself (n = 1)".into()));
                    }
                    sg_closure_info(&s.limit_closure(&q)?)
                }
                ClosureTag::Contracted => sg_closure_info(&s.contract(&s.power(&base, n)?)?),
                other => {
                    return Err(CliError::Validation(format!(
                        "closure {other} is not available for semigroup rings; use contracted"
                    )))
                }
            }
        }
    };
    Ok(ClosureReport {
        ring: spec.name.clone(),
        which: which.name().to_string(),
        n,
        closure: info,
    })
}
