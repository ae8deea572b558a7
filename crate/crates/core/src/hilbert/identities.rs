use std::fmt;

use super::coefficients::{
    binom, buchsbaum_colength_excess, buchsbaum_limit_e1_value, buchsbaum_limit_excess, predict_buchsbaum,
    tight_buchsbaum_e1_value, CoefficientVector,
};
use super::CohomologyProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ge,
    Le,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Le => "<=",
        }
    }

    fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
        }
    }
}

/// One identity or inequality evaluated on computed data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: String,
    pub statement: String,
    pub relation: Relation,
    pub verdict: Verdict,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub note: String,
}

/// Everything the checks may need; missing pieces lead to SKIPPED records.
#[derive(Debug, Clone, Default)]
pub struct IdentityInputs {
    pub d: usize,
    /// Coefficients of `ℓ(R/Q^{n+1})`.
    pub e: Option<CoefficientVector>,
    /// Coefficients of `ℓ(R/(Q^{n+1})*)`.
    pub e_star: Option<CoefficientVector>,
    pub len_q: Option<u64>,
    pub len_lim: Option<u64>,
    pub len_star: Option<u64>,
    pub profile: CohomologyProfile,
    /// The ring is asserted (not verified) to be Buchsbaum.
    pub buchsbaum: bool,
    /// `ℓ(H^1/QH^1)` and `ℓ(H^1/aH^1)` in dimension two.
    pub h1_mod_q: Option<u64>,
    pub h1_mod_a: Option<u64>,
    /// Result of the bounded superficiality test for `a`.
    pub superficial: Option<bool>,
    /// `(n, ℓ(R/Q^n Q*), ℓ(R/Q^n))`.
    pub rank_data: Vec<(u32, u64, u64)>,
}

struct Builder {
    out: Vec<CheckRecord>,
}

impl Builder {
    fn record(&mut self, id: &str, statement: &str, relation: Relation, sides: Result<(i64, i64), String>, note: &str) {
        let (verdict, lhs, rhs, note) = match sides {
            Ok((l, r)) => {
                let v = if relation.holds(l, r) { Verdict::Pass } else { Verdict::Fail };
                (v, Some(l), Some(r), note.to_string())
            }
            Err(reason) => (Verdict::Skipped, None, None, reason),
        };
        self.out.push(CheckRecord {
            id: id.to_string(),
            statement: statement.to_string(),
            relation,
            verdict,
            lhs,
            rhs,
            note,
        });
    }
}

fn need<T: Copy>(v: Option<T>, what: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("{what} not available"))
}

fn coeffs<'a>(c: &'a Option<CoefficientVector>, what: &str) -> Result<&'a CoefficientVector, String> {
    match c {
        Some(c) if c.valid => Ok(c),
        Some(_) => Err(format!("{what} did not stabilize on the computed range")),
        None => Err(format!("{what} not computed")),
    }
}

/// Evaluates every identity whose inputs are present.
pub fn check_identities(inp: &IdentityInputs) -> Vec<CheckRecord> {
    let d = inp.d;
    let mut b = Builder { out: Vec::new() };
    let e = coeffs(&inp.e, "Hilbert coefficients");
    let e_star = coeffs(&inp.e_star, "tight Hilbert coefficients");
    let h = inp.profile.complete();

    b.record(
        "e1-nonpositive",
        "e1 <= 0",
        Relation::Le,
        e.clone().and_then(|e| {
            if d == 0 {
                Err("dimension 0 has no e1".into())
            } else {
                Ok((e.e[1], 0))
            }
        }),
        "",
    );

    b.record(
        "tight-e1-lower-bound",
        "e1* >= e0 - l(R/Q*) + e1",
        Relation::Ge,
        (|| {
            let e = e.clone()?;
            let es = e_star.clone()?;
            let ls = need(inp.len_star, "l(R/Q*)")?;
            if d == 0 {
                return Err("dimension 0".into());
            }
            Ok((es.e[1], e.e[0] - ls as i64 + e.e[1]))
        })(),
        "requires R equidimensional and excellent",
    );

    b.record(
        "lim-e1-lower-bound",
        "e0 - l(R/Q^lim) + e1 >= 0",
        Relation::Ge,
        (|| {
            let e = e.clone()?;
            let ll = need(inp.len_lim, "l(R/Q^lim)")?;
            if d == 0 {
                return Err("dimension 0".into());
            }
            Ok((e.e[0] - ll as i64 + e.e[1], 0))
        })(),
        "bound proved for Buchsbaum rings satisfying (S2)",
    );

    if inp.buchsbaum {
        b.record(
            "lim-e1-buchsbaum",
            "e0 - l(R/Q^lim) + e1 = sum_{i=1}^{d-1} binom(d-2, i-2) l(H^i)",
            Relation::Eq,
            (|| {
                let e = e.clone()?;
                let ll = need(inp.len_lim, "l(R/Q^lim)")?;
                let h = h.clone().ok_or("cohomology profile incomplete")?;
                Ok((e.e[0] - ll as i64 + e.e[1], buchsbaum_limit_e1_value(&h, d)))
            })(),
            "Buchsbaum hypothesis asserted by the user",
        );
    }

    b.record(
        "lim-colength-buchsbaum",
        "l(Q^lim/Q) = sum_{i=0}^{d-1} binom(d, i) l(H^i)",
        Relation::Eq,
        (|| {
            if !inp.buchsbaum {
                return Err("Buchsbaum hypothesis not asserted".into());
            }
            let lq = need(inp.len_q, "l(R/Q)")?;
            let ll = need(inp.len_lim, "l(R/Q^lim)")?;
            let h = h.clone().ok_or("cohomology profile incomplete")?;
            Ok((lq as i64 - ll as i64, buchsbaum_limit_excess(&h, d)))
        })(),
        "Buchsbaum hypothesis asserted by the user",
    );

    b.record(
        "colength-buchsbaum",
        "l(R/Q) - e0 = sum_{i=0}^{d-1} binom(d-1, i) l(H^i)",
        Relation::Eq,
        (|| {
            if !inp.buchsbaum {
                return Err("Buchsbaum hypothesis not asserted".into());
            }
            let e = e.clone()?;
            let lq = need(inp.len_q, "l(R/Q)")?;
            let h = h.clone().ok_or("cohomology profile incomplete")?;
            Ok((lq as i64 - e.e[0], buchsbaum_colength_excess(&h, d)))
        })(),
        "Buchsbaum hypothesis asserted by the user",
    );

    if inp.buchsbaum {
        let pred = h.clone().map(|h| predict_buchsbaum(&h, d));
        for i in 1..=d {
            let sides = (|| {
                let e = e.clone()?;
                let p = pred.clone().ok_or("cohomology profile incomplete")?;
                Ok((e.e[i], p.zero_reading[i - 1]))
            })();
            let mut note = String::from("Buchsbaum hypothesis asserted by the user");
            if let (Ok(e), Some(p)) = (&e, &pred) {
                if p.ambiguous() {
                    let readings = p.matching_readings(&e.e[1..]);
                    note = format!(
                        "binom(-1,-1) is ambiguous; readings matching the fit: {}",
                        if readings.is_empty() { "none".to_string() } else { readings.join(", ") }
                    );
                }
                if e.stable_from != 0 {
                    note.push_str(&format!("; fit holds only from n = {}", e.stable_from));
                }
            }
            b.record(
                &format!("buchsbaum-e{i}"),
                &format!("e{i} = (-1)^{i} sum_j binom(d-{i}-1, j-1) l(H^j)"),
                Relation::Eq,
                sides,
                &note,
            );
        }
    }

    let dim2 = |what: &str| -> Result<(), String> {
        if d == 2 {
            Ok(())
        } else {
            Err(format!("{what} is a dimension-two statement"))
        }
    };

    b.record(
        "lim-h1-quotient",
        "e0 - l(R/Q^lim) = l(H^1/QH^1)",
        Relation::Eq,
        (|| {
            dim2("this identity")?;
            let e = e.clone()?;
            let ll = need(inp.len_lim, "l(R/Q^lim)")?;
            let hq = need(inp.h1_mod_q, "l(H^1/QH^1)")?;
            Ok((e.e[0] - ll as i64, hq as i64))
        })(),
        "requires R unmixed",
    );

    b.record(
        "lim-e1-superficial",
        "e0 - l(R/Q^lim) + e1 = l(H^1/QH^1) - l(H^1/aH^1)",
        Relation::Eq,
        (|| {
            dim2("this identity")?;
            let e = e.clone()?;
            let ll = need(inp.len_lim, "l(R/Q^lim)")?;
            let hq = need(inp.h1_mod_q, "l(H^1/QH^1)")?;
            let ha = need(inp.h1_mod_a, "l(H^1/aH^1)")?;
            match inp.superficial {
                Some(true) => {}
                Some(false) => return Err("a failed the bounded superficiality test".into()),
                None => return Err("superficiality of a not checked".into()),
            }
            Ok((e.e[0] - ll as i64 + e.e[1], hq as i64 - ha as i64))
        })(),
        "a superficial on the checked window; requires R unmixed",
    );

    b.record(
        "tight-buchsbaum-e1",
        "e1* = e0 - l(R/Q*) + e1",
        Relation::Eq,
        (|| {
            let e = e.clone()?;
            let es = e_star.clone()?;
            let ls = need(inp.len_star, "l(R/Q*)")?;
            if d == 0 {
                return Err("dimension 0".into());
            }
            Ok((es.e[1], e.e[0] - ls as i64 + e.e[1]))
        })(),
        "identity expected only under tight-Buchsbaum hypothesis",
    );

    if let Some((z, tag)) = inp.profile.zero_star {
        b.record(
            "tight-buchsbaum-e1-cohomology",
            "e1* = sum_{i=2}^{d-1} binom(d-2, i-2) l(H^i) + l(0*)",
            Relation::Eq,
            (|| {
                let es = e_star.clone()?;
                let h = h.clone().ok_or("cohomology profile incomplete")?;
                Ok((es.e[1], tight_buchsbaum_e1_value(&h, d, z)))
            })(),
            &format!(
                "identity expected only under tight-Buchsbaum hypothesis; l(0*) is {}",
                tag.name()
            ),
        );
    }

    if inp.rank_data.is_empty() {
        b.record(
            "tight-rank",
            "l(R/Q^n Q*) - l(R/Q^n) = binom(n+d-1, d-1) l(R/Q*)",
            Relation::Eq,
            Err("Q* not computed".into()),
            "",
        );
    }
    for &(n, prod, pw) in &inp.rank_data {
        b.record(
            &format!("tight-rank-n{n}"),
            "l(R/Q^n Q*) - l(R/Q^n) = binom(n+d-1, d-1) l(R/Q*)",
            Relation::Eq,
            (|| {
                let ls = need(inp.len_star, "l(R/Q*)")?;
                Ok((
                    prod as i64 - pw as i64,
                    binom(n as i64 + d as i64 - 1, d as i64 - 1) * ls as i64,
                ))
            })(),
            "requires R equidimensional and excellent",
        );
    }

    b.out
}
