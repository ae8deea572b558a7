//! Affine semigroups in `N^2` and their monomial ideals.
//!
//! For a finitely generated semigroup `S ⊂ N^2` the saturation `S̄ = cone ∩ lattice` is
//! normal, and the gap set `S̄ ∖ S` is finite exactly when `F_p[S̄]/F_p[S]` has finite
//! length. Monomial ideals of `F_p[S]` are cofinite, so they are stored by their finite
//! complement in `S` together with minimal generators.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fieldpoly::{Monomial, MonomialOrder, PolyRing, PrimeField, Polynomial};
use crate::groebner::{eliminate, Ideal};
use crate::linalg;
use crate::quotient::PresentedRing;

pub type Exp = [i64; 2];

#[inline]
fn add(a: Exp, b: Exp) -> Exp {
    [a[0] + b[0], a[1] + b[1]]
}

#[inline]
fn sub(a: Exp, b: Exp) -> Exp {
    [a[0] - b[0], a[1] - b[1]]
}

#[inline]
fn scale(a: Exp, k: i64) -> Exp {
    [a[0] * k, a[1] * k]
}

#[inline]
fn cross(a: Exp, b: Exp) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

#[inline]
fn dot(a: Exp, b: Exp) -> i64 {
    a[0] * b[0] + a[1] * b[1]
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The subgroup of `Z^2` spanned by the generators, in Hermite normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lattice {
    /// `Z·b`.
    Rank1(Exp),
    /// Basis `(h11, h12), (0, h22)` with `h11, h22 > 0` and `0 <= h12 < h22`.
    Rank2 { h11: i64, h12: i64, h22: i64 },
}

impl Lattice {
    fn of(gens: &[Exp]) -> Self {
        let mut pivot: Option<Exp> = None;
        let mut rest = 0i64;
        for &g in gens {
            let mut r = g;
            match pivot.as_mut() {
                Some(p) if r[0] != 0 => {
                    while r[0] != 0 {
                        let q = p[0] / r[0];
                        let t = sub(*p, scale(r, q));
                        *p = r;
                        r = t;
                    }
                    rest = gcd(rest, r[1]);
                }
                None if r[0] != 0 => pivot = Some(r),
                _ => rest = gcd(rest, r[1]),
            }
        }
        match pivot {
            None => Lattice::Rank1([0, rest]),
            Some(mut p) => {
                if p[0] < 0 {
                    p = scale(p, -1);
                }
                if rest == 0 {
                    Lattice::Rank1(p)
                } else {
                    Lattice::Rank2 {
                        h11: p[0],
                        h12: p[1].rem_euclid(rest),
                        h22: rest,
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: Exp) -> bool {
        match *self {
            Lattice::Rank1(b) => {
                cross(v, b) == 0 && if b[0] != 0 { v[0] % b[0] == 0 } else { v[1] % b[1] == 0 }
            }
            Lattice::Rank2 { h11, h12, h22 } => {
                v[0] % h11 == 0 && (v[1] - (v[0] / h11) * h12) % h22 == 0
            }
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Lattice::Rank1(_) => 1,
            Lattice::Rank2 { .. } => 2,
        }
    }
}

/// Membership in the semigroup generated by `gens`, tabulated on a box.
struct Table {
    dims: [usize; 2],
    bits: Vec<bool>,
}

impl Table {
    fn new(gens: &[Exp], max: Exp) -> Self {
        let dims = [max[0].max(0) as usize + 1, max[1].max(0) as usize + 1];
        let mut bits = vec![false; dims[0] * dims[1]];
        bits[0] = true;
        for x in 0..dims[0] {
            for y in 0..dims[1] {
                if x + y == 0 {
                    continue;
                }
                let v = [x as i64, y as i64];
                bits[x * dims[1] + y] = gens.iter().any(|g| {
                    let w = sub(v, *g);
                    w[0] >= 0 && w[1] >= 0 && bits[w[0] as usize * dims[1] + w[1] as usize]
                });
            }
        }
        Self { dims, bits }
    }

    fn get(&self, v: Exp) -> bool {
        debug_assert!(v[0] < self.dims[0] as i64 && v[1] < self.dims[1] as i64);
        v[0] >= 0 && v[1] >= 0 && self.bits[v[0] as usize * self.dims[1] + v[1] as usize]
    }
}

/// `v ∈ N·gens`, by dynamic programming over the box below `v`.
pub fn sg_member(v: Exp, gens: &[Exp]) -> bool {
    if v[0] < 0 || v[1] < 0 {
        return false;
    }
    Table::new(gens, v).get(v)
}

/// Evidence that the gap set is finite: for every lattice point `p` of the fundamental
/// parallelogram, `p + a·u` and `p + b·w` lie in the semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapCertificate {
    pub search_bound: i64,
    pub residues: Vec<(Exp, i64, i64)>,
}

#[derive(Debug, Clone)]
pub struct SemigroupRing {
    gens: Vec<Exp>,
    lattice: Lattice,
    u: Exp,
    /// Second extremal generator; `None` in rank one.
    w: Option<Exp>,
    residues: Vec<Exp>,
    sat_gens: Vec<Exp>,
    gaps: BTreeSet<Exp>,
    certificate: GapCertificate,
}

/// Default search bound for the gap certificate; doubled until it succeeds or reaches
/// [`MAX_SEARCH_BOUND`].
pub const INITIAL_SEARCH_BOUND: i64 = 8;
pub const MAX_SEARCH_BOUND: i64 = 256;

impl SemigroupRing {
    /// Builds the semigroup with saturation and certified gap set.
    pub fn new(gens: &[Exp]) -> Result<Arc<Self>> {
        Self::with_bound(gens, INITIAL_SEARCH_BOUND, MAX_SEARCH_BOUND)
    }

    pub fn with_bound(gens: &[Exp], initial: i64, max: i64) -> Result<Arc<Self>> {
        if gens.is_empty() {
            return Err(Error::Invalid("semigroup needs at least one generator".into()));
        }
        for g in gens {
            if g[0] < 0 || g[1] < 0 || *g == [0, 0] {
                return Err(Error::Invalid(format!("generator ({}, {}) is not a nonzero vector in N^2", g[0], g[1])));
            }
        }
        let mut uniq: Vec<Exp> = gens.to_vec();
        uniq.sort();
        uniq.dedup();
        let lattice = Lattice::of(&uniq);
        let by_size = |a: &Exp, b: &Exp| (a[0] + a[1]).cmp(&(b[0] + b[1]));
        let (u, w, residues) = match lattice {
            Lattice::Rank1(b) => {
                let b = if b[0] < 0 || b[1] < 0 { scale(b, -1) } else { b };
                let u = *uniq.iter().min_by(|a, c| by_size(a, c)).unwrap();
                let steps = dot(u, b) / dot(b, b);
                (u, None, (0..steps).map(|t| scale(b, t)).collect::<Vec<_>>())
            }
            Lattice::Rank2 { .. } => {
                let mut u = uniq[0];
                let mut w = uniq[0];
                for &g in &uniq {
                    let cu = cross(g, u);
                    if cu > 0 || (cu == 0 && by_size(&g, &u).is_lt()) {
                        u = g;
                    }
                    let cw = cross(w, g);
                    if cw > 0 || (cw == 0 && by_size(&g, &w).is_lt()) {
                        w = g;
                    }
                }
                let residues = parallelogram_points(&lattice, u, w, false);
                (u, Some(w), residues)
            }
        };
        let mut bound = initial.max(1);
        loop {
            match certify(&uniq, u, w, &residues, bound) {
                Some(cert) => {
                    let mut ring = Self {
                        gens: uniq,
                        lattice,
                        u,
                        w,
                        residues,
                        sat_gens: Vec::new(),
                        gaps: BTreeSet::new(),
                        certificate: cert,
                    };
                    ring.gaps = ring.collect_gaps();
                    ring.sat_gens = ring.hilbert_basis();
                    return Ok(Arc::new(ring));
                }
                None if bound < max => bound *= 2,
                None => {
                    return Err(Error::InfiniteGaps(format!(
                        "certificate not found with search bound {bound}; input is not unmixed-compatible"
                    )))
                }
            }
        }
    }

    #[inline]
    pub fn gens(&self) -> &[Exp] {
        &self.gens
    }

    #[inline]
    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    /// Generators on the extremal rays.
    pub fn rays(&self) -> (Exp, Exp) {
        (self.u, self.w.unwrap_or(self.u))
    }

    #[inline]
    pub fn saturation_gens(&self) -> &[Exp] {
        &self.sat_gens
    }

    #[inline]
    pub fn gaps(&self) -> &BTreeSet<Exp> {
        &self.gaps
    }

    #[inline]
    pub fn certificate(&self) -> &GapCertificate {
        &self.certificate
    }

    pub fn dim(&self) -> usize {
        self.lattice.rank()
    }

    /// Scaled cone coordinates `(λ·D, μ·D)` of `v = λu + μw`, and `D`.
    fn cone_coords(&self, v: Exp) -> (i64, i64, i64) {
        match self.w {
            Some(w) => (cross(v, w), cross(self.u, v), cross(self.u, w)),
            None => (dot(v, self.u), 0, dot(self.u, self.u)),
        }
    }

    pub fn in_saturation(&self, v: Exp) -> bool {
        if !self.lattice.contains(v) {
            return false;
        }
        match self.w {
            Some(_) => {
                let (l, m, _) = self.cone_coords(v);
                l >= 0 && m >= 0
            }
            None => cross(v, self.u) == 0 && dot(v, self.u) >= 0,
        }
    }

    /// Membership in `S`, using the certified gap set.
    pub fn contains(&self, v: Exp) -> bool {
        self.in_saturation(v) && !self.gaps.contains(&v)
    }

    fn collect_gaps(&self) -> BTreeSet<Exp> {
        let mut cands = Vec::new();
        for &(p, a, b) in &self.certificate.residues {
            for i in 0..a {
                match self.w {
                    Some(w) => {
                        for j in 0..b {
                            cands.push(add(add(p, scale(self.u, i)), scale(w, j)));
                        }
                    }
                    None => cands.push(add(p, scale(self.u, i))),
                }
            }
        }
        let max = cands.iter().fold([0, 0], |m, v| [m[0].max(v[0]), m[1].max(v[1])]);
        let table = Table::new(&self.gens, max);
        cands.into_iter().filter(|v| !table.get(*v)).collect()
    }

    /// Irreducible elements of the saturation.
    fn hilbert_basis(&self) -> Vec<Exp> {
        let cands: Vec<Exp> = match self.w {
            Some(w) => parallelogram_points(&self.lattice, self.u, w, true),
            None => self.residues.iter().copied().chain([self.u]).collect(),
        }
        .into_iter()
        .filter(|v| *v != [0, 0])
        .collect();
        let mut basis: Vec<Exp> = cands
            .iter()
            .copied()
            .filter(|v| !cands.iter().any(|c| c != v && self.in_saturation(sub(*v, *c)) && sub(*v, *c) != [0, 0]))
            .collect();
        basis.sort();
        basis
    }

    /// All points of the saturation with at most `imax` steps along `u` and `jmax` along `w`
    /// beyond the fundamental parallelogram.
    fn region(&self, imax: i64, jmax: i64) -> Vec<Exp> {
        let mut out = Vec::new();
        for &p in &self.residues {
            for i in 0..=imax {
                let base = add(p, scale(self.u, i));
                match self.w {
                    Some(w) => out.extend((0..=jmax).map(|j| add(base, scale(w, j)))),
                    None => out.push(base),
                }
            }
        }
        out
    }

    /// Builds the monomial ideal generated by `gens`.
    pub fn ideal(&self, gens: &[Exp]) -> Result<MonomialIdealInS> {
        self.ideal_with(gens, false)
    }

    /// `I·S̄ ∩ R` for the ideal `I` generated by `gens`.
    pub fn contracted_ideal(&self, gens: &[Exp]) -> Result<MonomialIdealInS> {
        self.ideal_with(gens, true)
    }

    fn ideal_with(&self, gens: &[Exp], contracted: bool) -> Result<MonomialIdealInS> {
        for g in gens {
            if !self.contains(*g) {
                return Err(Error::Invalid(format!("({}, {}) is not in the semigroup", g[0], g[1])));
            }
        }
        let (_, _, d) = self.cone_coords(self.u);
        let gap_l = self.gaps.iter().map(|g| self.cone_coords(*g).0).max().unwrap_or(0);
        let gap_m = self.gaps.iter().map(|g| self.cone_coords(*g).1).max().unwrap_or(0);
        // a generator on each extremal ray bounds the complement
        let on_u = gens
            .iter()
            .filter(|g| self.cone_coords(**g).1 == 0)
            .map(|g| self.cone_coords(*g).0)
            .min();
        let on_w = match self.w {
            Some(_) => gens
                .iter()
                .filter(|g| self.cone_coords(**g).0 == 0)
                .map(|g| self.cone_coords(*g).1)
                .min(),
            None => Some(0),
        };
        let (Some(lu), Some(mw)) = (on_u, on_w) else {
            return Err(Error::NotCofinite);
        };
        let imax = (lu + gap_l) / d + 1;
        let jmax = (mw + gap_m) / d + 1;
        let outside: BTreeSet<Exp> = self
            .region(imax, jmax)
            .into_iter()
            .filter(|s| self.contains(*s))
            .filter(|s| {
                !gens.iter().any(|g| {
                    let t = sub(*s, *g);
                    if contracted {
                        self.in_saturation(t)
                    } else {
                        self.contains(t)
                    }
                })
            })
            .collect();
        Ok(self.ideal_from_outside(outside))
    }

    /// The ideal whose complement in `S` is `outside`; minimal generators are recovered
    /// from the complement.
    pub fn ideal_from_outside(&self, outside: BTreeSet<Exp>) -> MonomialIdealInS {
        let in_ideal = |v: Exp| self.contains(v) && !outside.contains(&v);
        let mut cands: BTreeSet<Exp> = outside
            .iter()
            .flat_map(|o| self.gens.iter().map(move |h| add(*o, *h)))
            .filter(|v| in_ideal(*v))
            .collect();
        if outside.is_empty() {
            cands.insert([0, 0]);
        }
        let gens = cands
            .into_iter()
            .filter(|s| !self.gens.iter().any(|h| in_ideal(sub(*s, *h))))
            .collect();
        MonomialIdealInS { gens, outside }
    }

    /// All `n`-fold sums of the generators of `q`.
    pub fn power(&self, q: &MonomialIdealInS, n: u32) -> Result<MonomialIdealInS> {
        let mut cur: BTreeSet<Exp> = [[0, 0]].into();
        for _ in 0..n {
            cur = cur.iter().flat_map(|a| q.gens.iter().map(move |g| add(*a, *g))).collect();
        }
        self.ideal(&cur.into_iter().collect::<Vec<_>>())
    }

    pub fn product(&self, a: &MonomialIdealInS, b: &MonomialIdealInS) -> Result<MonomialIdealInS> {
        let gens: BTreeSet<Exp> = a.gens.iter().flat_map(|x| b.gens.iter().map(move |y| add(*x, *y))).collect();
        self.ideal(&gens.into_iter().collect::<Vec<_>>())
    }

    /// `I : x^m`.
    pub fn colon(&self, i: &MonomialIdealInS, m: Exp) -> MonomialIdealInS {
        let outside = i
            .outside
            .iter()
            .map(|o| sub(*o, m))
            .filter(|s| self.contains(*s))
            .collect();
        self.ideal_from_outside(outside)
    }

    /// `I·S̄ ∩ R`.
    pub fn contract(&self, i: &MonomialIdealInS) -> Result<MonomialIdealInS> {
        self.contracted_ideal(&i.gens)
    }

    /// `Q^lim` for the parameter ideal generated by the monomials `xs`.
    pub fn limit_closure(&self, xs: &[Exp]) -> Result<MonomialIdealInS> {
        if xs.len() != self.dim() {
            return Err(Error::Invalid(format!(
                "{} parameters given for a semigroup ring of dimension {}",
                xs.len(),
                self.dim()
            )));
        }
        let prod = xs.iter().fold([0, 0], |a, x| add(a, *x));
        let step = |n: i64| -> Result<MonomialIdealInS> {
            let powers: Vec<Exp> = xs.iter().map(|x| scale(*x, n + 1)).collect();
            Ok(self.colon(&self.ideal(&powers)?, scale(prod, n)))
        };
        let mut chain = vec![step(0)?, step(1)?];
        for n in 2..=MAX_SEARCH_BOUND {
            chain.push(step(n)?);
            let k = chain.len();
            if !chain[k - 2].contains_ideal(&chain[k - 3]) || !chain[k - 1].contains_ideal(&chain[k - 2]) {
                return Err(Error::Invalid("limit closure chain is not ascending".into()));
            }
            if chain[k - 3] == chain[k - 2] && chain[k - 2] == chain[k - 1] {
                return Ok(chain.swap_remove(k - 3));
            }
        }
        Err(Error::BudgetExceeded("limit closure did not stabilize".into()))
    }

    /// `(ℓ(N), ℓ(N/QN), ℓ(N/fN))` for the gap module `N = S̄/S` over `F_p`. The element
    /// `f` is a list of `(exponent, coefficient)` pairs.
    pub fn gap_module(&self, q: &[Exp], f: Option<&[(Exp, u32)]>, p: u64) -> Result<GapModuleLengths> {
        let field = PrimeField::new(p)?;
        let gaps: Vec<Exp> = self.gaps.iter().copied().collect();
        let index: HashMap<Exp, usize> = gaps.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        let act = |terms: &[(Exp, u32)], g: Exp| -> Vec<u32> {
            let mut v = vec![0u32; gaps.len()];
            for (m, c) in terms {
                if let Some(&k) = index.get(&add(g, *m)) {
                    v[k] = field.add(v[k], field.from_i64(*c as i64));
                }
            }
            v
        };
        let mut rows = Vec::new();
        for x in q {
            for g in &gaps {
                rows.push(act(&[(*x, 1)], *g));
            }
        }
        let n = gaps.len() as u64;
        let mod_q = n - linalg::rank(&field, &rows) as u64;
        let mod_f = f.map(|terms| {
            let rows: Vec<Vec<u32>> = gaps.iter().map(|g| act(terms, *g)).collect();
            n - linalg::rank(&field, &rows) as u64
        });
        Ok(GapModuleLengths {
            length: n,
            mod_q,
            mod_f,
        })
    }

    /// Some expression of `v` as a sum of generators, as exponents on `self.gens()`.
    pub fn factor(&self, v: Exp, basis: &[Exp]) -> Option<Vec<u32>> {
        if v[0] < 0 || v[1] < 0 {
            return None;
        }
        let table = Table::new(basis, v);
        if !table.get(v) {
            return None;
        }
        let mut out = vec![0u32; basis.len()];
        let mut cur = v;
        while cur != [0, 0] {
            let (k, g) = basis
                .iter()
                .enumerate()
                .find(|(_, g)| table.get(sub(cur, **g)) && sub(cur, **g)[0] >= 0 && sub(cur, **g)[1] >= 0)
                .expect("table entry has a predecessor");
            out[k] += 1;
            cur = sub(cur, *g);
        }
        Some(out)
    }

    /// Toric presentations of `F_p[S]` and `F_p[S̄]` with the inclusion between them.
    pub fn to_presentation(&self, p: u64) -> Result<ToricPresentation> {
        let ring = toric_ring(p, &self.gens, "a")?;
        let saturation = toric_ring(p, &self.sat_gens, "b")?;
        let target = saturation.poly_ring();
        let map = self
            .gens
            .iter()
            .map(|g| {
                let e = self.factor(*g, &self.sat_gens).expect("generators lie in the saturation");
                Ok(target.term(Monomial::from_exponents(&e)?, 1))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ToricPresentation { ring, saturation, map })
    }

    /// The polynomial `x^v` written in the generator variables of [`to_presentation`].
    pub fn monomial(&self, ring: &Arc<PresentedRing>, v: Exp) -> Result<Polynomial> {
        let e = self
            .factor(v, &self.gens)
            .ok_or_else(|| Error::Invalid(format!("({}, {}) is not in the semigroup", v[0], v[1])))?;
        Ok(ring.poly_ring().term(Monomial::from_exponents(&e)?, 1))
    }
}

/// Lattice points `λu + μw` with `0 <= λ, μ < 1` (or `<= 1` when `closed`).
fn parallelogram_points(lattice: &Lattice, u: Exp, w: Exp, closed: bool) -> Vec<Exp> {
    let d = cross(u, w);
    let corner = add(u, w);
    let hi = [corner[0].max(u[0]).max(w[0]), corner[1].max(u[1]).max(w[1])];
    let mut out = Vec::new();
    for x in 0..=hi[0] {
        for y in 0..=hi[1] {
            let v = [x, y];
            if !lattice.contains(v) {
                continue;
            }
            let (l, m) = (cross(v, w), cross(u, v));
            let inside = if closed {
                (0..=d).contains(&l) && (0..=d).contains(&m)
            } else {
                (0..d).contains(&l) && (0..d).contains(&m)
            };
            if inside {
                out.push(v);
            }
        }
    }
    out
}

fn certify(gens: &[Exp], u: Exp, w: Option<Exp>, residues: &[Exp], bound: i64) -> Option<GapCertificate> {
    let far = |v: Exp| [v[0] * bound, v[1] * bound];
    let mut max = [0i64, 0i64];
    for p in residues {
        for q in [add(*p, far(u)), add(*p, far(w.unwrap_or(u)))] {
            max = [max[0].max(q[0]), max[1].max(q[1])];
        }
    }
    let table = Table::new(gens, max);
    let first = |p: Exp, step: Exp| (0..=bound).find(|k| table.get(add(p, scale(step, *k))));
    let mut out = Vec::with_capacity(residues.len());
    for &p in residues {
        let a = first(p, u)?;
        let b = match w {
            Some(w) => first(p, w)?,
            None => 1,
        };
        out.push((p, a, b));
    }
    Some(GapCertificate {
        search_bound: bound,
        residues: out,
    })
}

fn toric_ring(p: u64, gens: &[Exp], prefix: &str) -> Result<Arc<PresentedRing>> {
    let names: Vec<String> = if gens.len() <= 8 {
        let letters = if prefix == "a" { "abcdefgh" } else { "stuvwxyz" };
        letters.chars().take(gens.len()).map(String::from).collect()
    } else {
        (0..gens.len()).map(|i| format!("{prefix}{i}")).collect()
    };
    let mut all = vec!["_x".to_string(), "_y".to_string()];
    all.extend(names.iter().cloned());
    let big = PolyRing::new(p, &all, MonomialOrder::Block(2))?;
    let k = gens.len();
    let binomials = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut e = vec![0u32; k + 2];
            e[0] = g[0] as u32;
            e[1] = g[1] as u32;
            let torus = big.term(Monomial::from_exponents(&e)?, 1);
            Ok(&big.var(i + 2) - &torus)
        })
        .collect::<Result<Vec<_>>>()?;
    let kernel = eliminate(&Ideal::new(&big, binomials)?, 2)?;
    let small = PolyRing::new(p, &names, MonomialOrder::GrevLex)?;
    let mut var_map = vec![0usize, 0];
    var_map.extend(0..k);
    let defining = kernel.gens().iter().map(|f| f.transport(&small, &var_map)).collect();
    PresentedRing::new(&small, defining)
}

/// A toric ring, its saturation, and the images of the ring's variables.
#[derive(Debug, Clone)]
pub struct ToricPresentation {
    pub ring: Arc<PresentedRing>,
    pub saturation: Arc<PresentedRing>,
    pub map: Vec<Polynomial>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GapModuleLengths {
    pub length: u64,
    pub mod_q: u64,
    pub mod_f: Option<u64>,
}

/// A monomial ideal of `F_p[S]`: minimal generators and the finite set of semigroup
/// elements outside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdealInS {
    gens: Vec<Exp>,
    outside: BTreeSet<Exp>,
}

impl MonomialIdealInS {
    #[inline]
    pub fn gens(&self) -> &[Exp] {
        &self.gens
    }

    #[inline]
    pub fn outside(&self) -> &BTreeSet<Exp> {
        &self.outside
    }

    /// `ℓ(R/I)`.
    pub fn colength(&self) -> u64 {
        self.outside.len() as u64
    }

    pub fn contains_ideal(&self, other: &MonomialIdealInS) -> bool {
        self.outside.is_subset(&other.outside)
    }
}

/// `ℓ(R/Q^n)`, or `ℓ(R/(Q^n S̄ ∩ R))` when `contracted`.
pub fn sg_length(s: &SemigroupRing, q: &[Exp], n: u32, contracted: bool) -> Result<u64> {
    let base = s.ideal(q)?;
    let pw = s.power(&base, n)?;
    Ok(if contracted { s.contract(&pw)?.colength() } else { pw.colength() })
}

pub fn sg_make(gens: &[Exp]) -> Result<Arc<SemigroupRing>> {
    SemigroupRing::new(gens)
}
