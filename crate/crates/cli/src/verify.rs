//! `thilb verify-paper`: analyzes every bundled ring and compares a line summary of the
//! results with a golden file.

use std::collections::BTreeSet;

use crate::analysis::{analyze, Overrides};
use crate::bundled::RINGS;
use crate::report::Report;
use crate::spec::RingSpec;
use crate::CliError;

pub const GOLDEN: &str = include_str!("../golden/verify-paper.golden");

pub fn reports() -> Result<Vec<Report>, CliError> {
    RINGS
        .iter()
        .map(|(name, text)| analyze(&RingSpec::parse(name, text)?, &Overrides::default()))
        .collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// Stable one-fact-per-line summary of a report.
pub fn summary(r: &Report) -> Vec<String> {
    let mut out = vec![format!("[{}]", r.spec.name)];
    for (k, v) in &r.colengths {
        out.push(format!("colength {k} {v}"));
    }
    for (k, v) in &r.lengths {
        out.push(format!("lengths {k} {}", join(v)));
    }
    for (k, c) in &r.coefficients {
        out.push(format!("coefficients {k} {} from {} valid {}", join(&c.e), c.stable_from, c.valid));
    }
    let h = &r.cohomology;
    for l in &h.h {
        if let (Some(v), Some(p)) = (l.length, l.provenance) {
            out.push(format!("cohomology H{} {v} {p}", l.i));
        }
    }
    if let Some(z) = &h.zero_star {
        out.push(format!("cohomology zero-star {} {}", z.length.unwrap_or(0), z.provenance.unwrap_or("")));
    }
    if let Some(v) = h.h1_mod_q {
        out.push(format!("cohomology H1/QH1 {v}"));
    }
    if let Some(v) = h.h1_mod_a {
        out.push(format!("cohomology H1/aH1 {v}"));
    }
    if !h.gaps.is_empty() {
        let gaps: Vec<String> = h.gaps.iter().map(|g| format!("({},{})", g[0], g[1])).collect();
        out.push(format!("gaps {}", gaps.join(" ")));
    }
    for c in &r.checks {
        let sides = match (c.lhs, c.rhs) {
            (Some(l), Some(rh)) => format!(" {l} {} {rh}", c.relation),
            _ => String::new(),
        };
        out.push(format!("check {} {}{sides}", c.id, c.verdict));
    }
    for hy in &r.hypotheses {
        out.push(format!("hypothesis {} {}", hy.name, hy.status));
    }
    out
}

pub fn summary_text(reports: &[Report]) -> String {
    let mut s = String::new();
    for r in reports {
        for line in summary(r) {
            s.push_str(&line);
            s.push('\n');
        }
    }
    s
}

/// Lines only in the golden text (`-`) or only in the computed text (`+`), in file order.
pub fn diff(golden: &str, computed: &str) -> Vec<String> {
    let clean = |t: &str| -> Vec<String> {
        t.lines()
            .map(str::trim_end)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(String::from)
            .collect()
    };
    let g = clean(golden);
    let c = clean(computed);
    if g == c {
        return Vec::new();
    }
    let gs: BTreeSet<&String> = g.iter().collect();
    let cs: BTreeSet<&String> = c.iter().collect();
    let mut out: Vec<String> = g.iter().filter(|l| !cs.contains(l)).map(|l| format!("- {l}")).collect();
    out.extend(c.iter().filter(|l| !gs.contains(l)).map(|l| format!("+ {l}")));
    if out.is_empty() {
        out.push("~ same lines in a different order".into());
    }
    out
}
