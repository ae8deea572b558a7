use crate::error::{Error, Result};

/// `binom(a, b)` with `binom(a, b) = 0` for `b < 0` and the falling-factorial formula for
/// negative `a`.
pub fn binom(a: i64, b: i64) -> i64 {
    if b < 0 {
        return 0;
    }
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..b as i128 {
        num *= a as i128 - i;
        den *= i + 1;
    }
    (num / den) as i64
}

/// `Σ_{i=0}^{d} (-1)^i e_i binom(n+d-i, d-i)`.
pub fn hilbert_polynomial(e: &[i64], n: i64) -> i64 {
    let d = e.len() as i64 - 1;
    e.iter()
        .enumerate()
        .map(|(i, ei)| {
            let i = i as i64;
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * ei * binom(n + d - i, d - i)
        })
        .sum()
}

/// Hilbert coefficients fitted to a length sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientVector {
    /// `e_0, ..., e_d`.
    pub e: Vec<i64>,
    /// Least `n` from which the fitted polynomial reproduces every value.
    pub stable_from: usize,
    pub valid: bool,
    pub diagnostics: Option<String>,
}

impl CoefficientVector {
    pub fn e(&self, i: usize) -> i64 {
        self.e[i]
    }
}

/// Solves for `e` on the window `[n0, n0 + d]` by backward differences:
/// `∇ binom(n+k, k) = binom(n+k-1, k-1)`, so `∇^k` isolates the top remaining coefficient.
fn fit_window(values: &[i64], n0: usize, d: usize) -> Vec<i64> {
    let mut w: Vec<i64> = values[n0..=n0 + d].to_vec();
    let n_last = (n0 + d) as i64;
    // a[k] is the coefficient of binom(n+k, k)
    let mut a = vec![0i64; d + 1];
    for k in (0..=d).rev() {
        let mut diff = w.clone();
        for _ in 0..k {
            diff = diff.windows(2).map(|p| p[1] - p[0]).collect();
        }
        a[k] = *diff.last().expect("window has d + 1 entries");
        for (j, v) in w.iter_mut().enumerate() {
            let n = n_last - d as i64 + j as i64;
            *v -= a[k] * binom(n + k as i64, k as i64);
        }
    }
    (0..=d)
        .map(|i| {
            let ai = a[d - i];
            if i % 2 == 0 {
                ai
            } else {
                -ai
            }
        })
        .collect()
}

/// Fits `h(n) = Σ (-1)^i e_i binom(n+d-i, d-i)` on the last window and finds where the
/// fit starts to hold. Requires `d + 4` values.
pub fn extract_coefficients(values: &[u64], d: usize) -> Result<CoefficientVector> {
    if values.len() < d + 4 {
        return Err(Error::Invalid(format!(
            "{} values are too few to fit dimension {d}; need n_max >= {}",
            values.len(),
            d + 3
        )));
    }
    let h: Vec<i64> = values.iter().map(|v| *v as i64).collect();
    let n_max = h.len() - 1;
    let e = fit_window(&h, n_max - d, d);
    let mut stable_from = n_max - d;
    while stable_from > 0 && hilbert_polynomial(&e, stable_from as i64 - 1) == h[stable_from - 1] {
        stable_from -= 1;
    }
    // one point of agreement beyond the fitting window is required
    let valid = stable_from + d < n_max;
    let diagnostics = (!valid).then(|| {
        format!("fit on n = {}..={n_max} does not extend to n = {}", n_max - d, n_max - d - 1)
    });
    Ok(CoefficientVector {
        e,
        stable_from,
        valid,
        diagnostics,
    })
}

/// Predicted `e_1, ..., e_d` for a Buchsbaum ring with the given `ℓ(H^j)`, `j < d`. The
/// term `binom(-1, -1)·ℓ(H^0)` in `e_d` has no agreed value; both readings are returned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuchsbaumPrediction {
    /// `e_1..e_d` reading `binom(-1, -1) = 0`.
    pub zero_reading: Vec<i64>,
    /// `e_1..e_d` reading `binom(-1, -1) = 1`.
    pub one_reading: Vec<i64>,
}

impl BuchsbaumPrediction {
    pub fn ambiguous(&self) -> bool {
        self.zero_reading != self.one_reading
    }

    /// Which readings agree with fitted `e_1..e_d`.
    pub fn matching_readings(&self, fitted: &[i64]) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.zero_reading == fitted {
            out.push("binom(-1,-1)=0");
        }
        if self.one_reading == fitted {
            out.push("binom(-1,-1)=1");
        }
        out
    }
}

/// `e_i = (-1)^i Σ_{j=0}^{d-i} binom(d-i-1, j-1) ℓ(H^j)` for `i = 1..d`.
pub fn predict_buchsbaum(h: &[u64], d: usize) -> BuchsbaumPrediction {
    let get = |j: usize| h.get(j).copied().unwrap_or(0) as i64;
    let mut zero_reading = Vec::with_capacity(d);
    let mut one_reading = Vec::with_capacity(d);
    for i in 1..=d {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let mut s0 = 0;
        let mut s1 = 0;
        for j in 0..=d - i {
            let a = d as i64 - i as i64 - 1;
            let b = j as i64 - 1;
            let t = binom(a, b) * get(j);
            s0 += t;
            s1 += if a == -1 && b == -1 { get(j) } else { t };
        }
        zero_reading.push(sign * s0);
        one_reading.push(sign * s1);
    }
    BuchsbaumPrediction {
        zero_reading,
        one_reading,
    }
}

/// `Σ_{i=0}^{d-1} binom(d-1, i) ℓ(H^i)`, the Buchsbaum value of `ℓ(R/Q) - e_0`.
pub fn buchsbaum_colength_excess(h: &[u64], d: usize) -> i64 {
    (0..d).map(|i| binom(d as i64 - 1, i as i64) * h.get(i).copied().unwrap_or(0) as i64).sum()
}

/// `Σ_{i=0}^{d-1} binom(d, i) ℓ(H^i)`, the Buchsbaum value of `ℓ(Q^lim/Q)`.
pub fn buchsbaum_limit_excess(h: &[u64], d: usize) -> i64 {
    (0..d).map(|i| binom(d as i64, i as i64) * h.get(i).copied().unwrap_or(0) as i64).sum()
}

/// `Σ_{i=1}^{d-1} binom(d-2, i-2) ℓ(H^i)`.
pub fn buchsbaum_limit_e1_value(h: &[u64], d: usize) -> i64 {
    (1..d)
        .map(|i| binom(d as i64 - 2, i as i64 - 2) * h.get(i).copied().unwrap_or(0) as i64)
        .sum()
}

/// `Σ_{i=2}^{d-1} binom(d-2, i-2) ℓ(H^i) + ℓ(0*)`, the tight Buchsbaum value of `e_1*`.
pub fn tight_buchsbaum_e1_value(h: &[u64], d: usize, zero_star: u64) -> i64 {
    (2..d)
        .map(|i| binom(d as i64 - 2, i as i64 - 2) * h.get(i).copied().unwrap_or(0) as i64)
        .sum::<i64>()
        + zero_star as i64
}
