use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thilb_core::hilbert::{CheckRecord, CoefficientVector};

use crate::spec::RingSpec;

#[derive(Debug, Clone, Serialize)]
pub struct Coefficients {
    pub e: Vec<i64>,
    pub stable_from: usize,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<String>,
}

impl From<&CoefficientVector> for Coefficients {
    fn from(c: &CoefficientVector) -> Self {
        Self {
            e: c.e.clone(),
            stable_from: c.stable_from,
            valid: c.valid,
            diagnostics: c.diagnostics.clone(),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ClosureInfo {
    pub generators: Vec<String>,
    pub length: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub test_element: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_bound: Option<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub kernel_dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilized: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contains_limit: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CohomologyLength {
    pub i: usize,
    pub length: Option<u64>,
    pub provenance: Option<&'static str>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuperficialInfo {
    pub element: String,
    pub holds: bool,
    pub c: u32,
    pub n_max: u32,
    pub failed_at: Option<u32>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CohomologyInfo {
    pub h: Vec<CohomologyLength>,
    pub zero_star: Option<CohomologyLength>,
    /// `ℓ(H^1/QH^1)`.
    pub h1_mod_q: Option<u64>,
    /// `ℓ(H^1/aH^1)`.
    pub h1_mod_a: Option<u64>,
    pub superficial: Option<SuperficialInfo>,
    /// Gap set of a semigroup ring, which spans `H^1`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub gaps: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub relation: &'static str,
    pub verdict: &'static str,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub note: String,
}

impl From<&CheckRecord> for Check {
    fn from(r: &CheckRecord) -> Self {
        Self {
            id: r.id.clone(),
            statement: r.statement.clone(),
            relation: r.relation.symbol(),
            verdict: r.verdict.name(),
            lhs: r.lhs,
            rhs: r.rhs,
            note: r.note.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Hypothesis {
    pub name: &'static str,
    /// One of `holds`, `violated`, `assumed`, `unverified`, `not-asserted`.
    pub status: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct BudgetInfo {
    pub max_pairs: u64,
    pub max_degree: u32,
    pub source: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub spec: RingSpec,
    pub dimension: usize,
    /// `h(n) = ℓ(R/cl(Q^{n+1}))` per closure.
    pub lengths: BTreeMap<String, Vec<u64>>,
    /// `ℓ(R/Q)`, `ℓ(R/Q^lim)`, `ℓ(R/Q*)`.
    pub colengths: BTreeMap<String, u64>,
    pub coefficients: BTreeMap<String, Coefficients>,
    pub closures: BTreeMap<String, ClosureInfo>,
    pub cohomology: CohomologyInfo,
    pub checks: Vec<Check>,
    pub hypotheses: Vec<Hypothesis>,
    pub budget: BudgetInfo,
}

impl Report {
    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let s = &self.spec;
        let _ = writeln!(out, "ring {} (p = {}, {:?} engine, dimension {})", s.name, s.p, s.engine, self.dimension);
        if !s.vars.is_empty() {
            let _ = writeln!(out, "  vars      {}", s.vars.join(", "));
            let _ = writeln!(out, "  defining  {}", if s.defining.is_empty() { "0" } else { &s.defining });
        } else {
            let gens: Vec<String> = s.semigroup.iter().map(|v| format!("({},{})", v[0], v[1])).collect();
            let _ = writeln!(out, "  gens      {}", gens.join(", "));
        }
        let _ = writeln!(out, "  Q         {}", s.parameter);
        let _ = writeln!(out, "\nlengths");
        for (k, v) in &self.colengths {
            let _ = writeln!(out, "  l(R/{k}) = {v}");
        }
        for (k, v) in &self.lengths {
            let vals: Vec<String> = v.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "  {k:<11} {}", vals.join(" "));
        }
        let _ = writeln!(out, "\ncoefficients");
        for (k, c) in &self.coefficients {
            let e: Vec<String> = c.e.iter().map(i64::to_string).collect();
            let _ = write!(out, "  {k:<11} e = ({}), stable from n = {}", e.join(", "), c.stable_from);
            if !c.valid {
                let _ = write!(out, " [not stable: {}]", c.diagnostics.as_deref().unwrap_or(""));
            }
            out.push('\n');
        }
        let _ = writeln!(out, "\nclosures");
        for (k, c) in &self.closures {
            let _ = writeln!(out, "  {k:<11} length {}  ({})", c.length, c.generators.join(", "));
            if let Some(st) = c.stabilized {
                let _ = writeln!(
                    out,
                    "              c = {}, E = {}, kernel dims {:?}, stabilized {st}",
                    c.test_element.as_deref().unwrap_or("?"),
                    c.e_bound.unwrap_or(0),
                    c.kernel_dims
                );
            }
        }
        let _ = writeln!(out, "\ncohomology");
        for h in &self.cohomology.h {
            match (h.length, h.provenance) {
                (Some(v), Some(p)) => {
                    let _ = writeln!(out, "  l(H^{}) = {v} [{p}]", h.i);
                }
                _ => {
                    let _ = writeln!(out, "  l(H^{}) unknown", h.i);
                }
            }
        }
        if let Some(z) = &self.cohomology.zero_star {
            let _ = writeln!(out, "  l(0*) = {} [{}]", z.length.unwrap_or(0), z.provenance.unwrap_or("?"));
        }
        if let Some(v) = self.cohomology.h1_mod_q {
            let _ = writeln!(out, "  l(H^1/QH^1) = {v}");
        }
        if let Some(v) = self.cohomology.h1_mod_a {
            let _ = writeln!(out, "  l(H^1/aH^1) = {v}");
        }
        if let Some(sf) = &self.cohomology.superficial {
            let _ = writeln!(
                out,
                "  a = {} superficial: {} (checked n <= {}, c = {})",
                sf.element, sf.holds, sf.n_max, sf.c
            );
        }
        let _ = writeln!(out, "\nchecks");
        for c in &self.checks {
            let sides = match (c.lhs, c.rhs) {
                (Some(l), Some(r)) => format!("{l} {} {r}", c.relation),
                _ => String::new(),
            };
            let _ = writeln!(out, "  {:<8}{:<32}{:<14}{}", c.verdict, c.id, sides, c.note);
        }
        let _ = writeln!(out, "\nhypotheses");
        for h in &self.hypotheses {
            let _ = writeln!(out, "  {:<28}{:<14}{}", h.name, h.status, h.detail);
        }
        let _ = writeln!(
            out,
            "\nbudget: {} pairs, degree {} ({})",
            self.budget.max_pairs, self.budget.max_degree, self.budget.source
        );
        out
    }
}

/// Output of `thilb closure`.
#[derive(Debug, Clone, Serialize)]
pub struct ClosureReport {
    pub ring: String,
    pub which: String,
    pub n: u32,
    pub closure: ClosureInfo,
}

impl ClosureReport {
    pub fn render(&self) -> String {
        let mut out = format!(
            "{} closure of Q^{} in {}\n  length {}\n",
            self.which, self.n, self.ring, self.closure.length
        );
        for g in &self.closure.generators {
            let _ = writeln!(out, "  {g}");
        }
        if let Some(st) = self.closure.stabilized {
            let _ = writeln!(
                out,
                "  c = {}, E = {}, kernel dims {:?}, stabilized {st}",
                self.closure.test_element.as_deref().unwrap_or("?"),
                self.closure.e_bound.unwrap_or(0),
                self.closure.kernel_dims
            );
        }
        out
    }
}
