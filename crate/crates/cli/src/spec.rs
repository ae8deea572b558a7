//! Ring description files: `[section]` headers followed by `key = value` lines.

use std::collections::BTreeMap;

use thilb_core::hilbert::ClosureTag;
use thilb_core::semigroup::Exp;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Presented,
    Semigroup,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ExtensionSpec {
    /// `J = I_1 ∩ ... ∩ I_k`; the extension is `∏ P/I_j`.
    Components { ideals: Vec<String> },
    /// A presented ring `S` with the images of the variables of `R`.
    Presented { vars: Vec<String>, defining: String, map: String },
    /// The saturation of a semigroup.
    Saturate,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct CohomologySpec {
    /// User-supplied `ℓ(H^i)`.
    pub h: BTreeMap<usize, u64>,
    pub zero_star: Option<u64>,
    pub buchsbaum: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct OptionsSpec {
    pub c: Option<String>,
    pub e_bound: u32,
    pub n_max: usize,
    pub closures: Option<Vec<String>>,
    /// The element `a` for the superficial-element identity; defaults to the first
    /// parameter (presented) or the sum of the parameters (semigroup).
    pub superficial: Option<String>,
}

impl Default for OptionsSpec {
    fn default() -> Self {
        Self {
            c: None,
            e_bound: 2,
            n_max: 5,
            closures: None,
            superficial: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct RingSpec {
    pub name: String,
    pub p: u64,
    pub engine: Engine,
    /// Variables of a presented ring.
    pub vars: Vec<String>,
    pub defining: String,
    /// Generators of a semigroup.
    pub semigroup: Vec<Exp>,
    /// Parameter generators: polynomials or exponent vectors.
    pub parameter: String,
    pub extension: Option<ExtensionSpec>,
    pub cohomology: CohomologySpec,
    pub options: OptionsSpec,
}

struct Entry {
    value: String,
    line: usize,
}

struct Sections {
    file: String,
    entries: BTreeMap<(String, String), Entry>,
}

const SECTIONS: [&str; 5] = ["ring", "parameter", "extension", "cohomology", "options"];

impl Sections {
    fn parse(file: &str, text: &str) -> Result<Self, CliError> {
        let err = |line: usize, msg: String| CliError::Spec {
            file: file.to_string(),
            line,
            msg,
        };
        let mut entries = BTreeMap::new();
        let mut section: Option<String> = None;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            if let Some(name) = body.strip_prefix('[') {
                let name = name
                    .strip_suffix(']')
                    .ok_or_else(|| err(line, "unterminated section header".into()))?
                    .trim();
                if !SECTIONS.contains(&name) {
                    return Err(err(line, format!("unknown section [{name}]")));
                }
                section = Some(name.to_string());
                continue;
            }
            let sec = section.clone().ok_or_else(|| err(line, "key outside of a section".into()))?;
            let (key, value) = body
                .split_once('=')
                .ok_or_else(|| err(line, "expected `key = value`".into()))?;
            let key = key.trim().to_string();
            if key.is_empty() {
                return Err(err(line, "empty key".into()));
            }
            if entries.contains_key(&(sec.clone(), key.clone())) {
                return Err(err(line, format!("duplicate key `{key}` in [{sec}]")));
            }
            entries.insert(
                (sec, key),
                Entry {
                    value: value.trim().to_string(),
                    line,
                },
            );
        }
        Ok(Self {
            file: file.to_string(),
            entries,
        })
    }

    fn take(&mut self, section: &str, key: &str) -> Option<(String, usize)> {
        self.entries
            .remove(&(section.to_string(), key.to_string()))
            .map(|e| (e.value, e.line))
    }

    fn require(&mut self, section: &str, key: &str) -> Result<(String, usize), CliError> {
        self.take(section, key).ok_or_else(|| CliError::Spec {
            file: self.file.clone(),
            line: 0,
            msg: format!("missing `{key}` in [{section}]"),
        })
    }

    fn err(&self, line: usize, msg: impl Into<String>) -> CliError {
        CliError::Spec {
            file: self.file.clone(),
            line,
            msg: msg.into(),
        }
    }

    fn number<T: std::str::FromStr>(&mut self, section: &str, key: &str) -> Result<Option<T>, CliError> {
        match self.take(section, key) {
            None => Ok(None),
            Some((v, line)) => v
                .parse()
                .map(Some)
                .map_err(|_| self.err(line, format!("`{key}` expects a non-negative integer, got `{v}`"))),
        }
    }

    fn flag(&mut self, section: &str, key: &str) -> Result<bool, CliError> {
        match self.take(section, key) {
            None => Ok(false),
            Some((v, line)) => match v.as_str() {
                "true" | "yes" => Ok(true),
                "false" | "no" => Ok(false),
                _ => Err(self.err(line, format!("`{key}` expects true or false, got `{v}`"))),
            },
        }
    }

    fn finish(self) -> Result<(), CliError> {
        match self.entries.into_iter().next() {
            None => Ok(()),
            Some(((sec, key), e)) => Err(CliError::Spec {
                file: self.file,
                line: e.line,
                msg: format!("unknown key `{key}` in [{sec}]"),
            }),
        }
    }
}

fn split_list(text: &str) -> Vec<String> {
    text.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

/// Parses `(a,b), (c,d), ...`.
pub fn parse_exponents(text: &str) -> Result<Vec<Exp>, String> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| format!("expected `(` at `{rest}`"))?;
        let close = open.find(')').ok_or("unterminated exponent vector")?;
        let inner = &open[..close];
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(format!("exponent vector `({inner})` must have two entries"));
        }
        let a = parts[0].parse::<i64>().map_err(|_| format!("bad entry `{}`", parts[0]))?;
        let b = parts[1].parse::<i64>().map_err(|_| format!("bad entry `{}`", parts[1]))?;
        out.push([a, b]);
        rest = open[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err("trailing comma".into());
            }
        } else if !rest.is_empty() {
            return Err(format!("expected `,` at `{rest}`"));
        }
    }
    Ok(out)
}

/// Parses `c*(a,b) + (c,d) + ...` into `(exponent, coefficient)` pairs.
pub fn parse_exponent_sum(text: &str) -> Result<Vec<(Exp, u64)>, String> {
    let mut out = Vec::new();
    for term in text.split('+') {
        let term = term.trim();
        let (coef, vec) = match term.split_once('*') {
            Some((c, v)) => (
                c.trim().parse::<u64>().map_err(|_| format!("bad coefficient `{}`", c.trim()))?,
                v,
            ),
            None => (1, term),
        };
        let v = parse_exponents(vec)?;
        if v.len() != 1 {
            return Err(format!("term `{term}` must be one exponent vector"));
        }
        out.push((v[0], coef));
    }
    Ok(out)
}

impl RingSpec {
    pub fn parse(name: &str, text: &str) -> Result<Self, CliError> {
        let mut s = Sections::parse(name, text)?;
        let p: u64 = s
            .number("ring", "p")?
            .ok_or_else(|| s.err(0, "missing `p` in [ring]"))?;
        let engine = match s.take("ring", "engine") {
            None => Engine::Presented,
            Some((v, line)) => match v.as_str() {
                "presented" => Engine::Presented,
                "semigroup" => Engine::Semigroup,
                _ => return Err(s.err(line, format!("unknown engine `{v}`"))),
            },
        };
        let mut vars = Vec::new();
        let mut defining = String::new();
        let mut semigroup = Vec::new();
        match engine {
            Engine::Presented => {
                let (v, line) = s.require("ring", "vars")?;
                vars = split_list(&v);
                if vars.is_empty() {
                    return Err(s.err(line, "no variables"));
                }
                defining = s.take("ring", "defining").map(|(v, _)| v).unwrap_or_default();
            }
            Engine::Semigroup => {
                let (v, line) = s.require("ring", "gens")?;
                semigroup = parse_exponents(&v).map_err(|m| s.err(line, m))?;
            }
        }
        let (parameter, pline) = s.require("parameter", "gens")?;
        if engine == Engine::Semigroup {
            parse_exponents(&parameter).map_err(|m| s.err(pline, m))?;
        }

        let extension = if let Some((v, line)) = s.take("extension", "components") {
            let ideals: Vec<String> = v.split(';').map(|t| unparen(t.trim()).to_string()).collect();
            if ideals.len() < 2 || ideals.iter().any(|t| t.is_empty()) {
                return Err(s.err(line, "`components` needs at least two `;`-separated ideals"));
            }
            Some(ExtensionSpec::Components { ideals })
        } else if s.flag("extension", "saturate")? {
            Some(ExtensionSpec::Saturate)
        } else if let Some((v, _)) = s.take("extension", "vars") {
            let defining = s.take("extension", "defining").map(|(v, _)| v).unwrap_or_default();
            let (map, _) = s.require("extension", "map")?;
            Some(ExtensionSpec::Presented {
                vars: split_list(&v),
                defining,
                map,
            })
        } else {
            None
        };
        match (&extension, engine) {
            (Some(ExtensionSpec::Saturate), Engine::Presented) => {
                return Err(s.err(0, "`saturate` applies to the semigroup engine only"))
            }
            (Some(ExtensionSpec::Components { .. } | ExtensionSpec::Presented { .. }), Engine::Semigroup) => {
                return Err(s.err(0, "semigroup rings take `saturate = true` as their extension"))
            }
            _ => {}
        }

        let mut cohomology = CohomologySpec {
            buchsbaum: s.flag("cohomology", "buchsbaum")?,
            zero_star: s.number("cohomology", "zero_star")?,
            ..Default::default()
        };
        for i in 0..8 {
            if let Some(v) = s.number("cohomology", &format!("h{i}"))? {
                cohomology.h.insert(i, v);
            }
        }

        let mut options = OptionsSpec {
            c: s.take("options", "c").map(|(v, _)| v),
            superficial: s.take("options", "superficial").map(|(v, _)| v),
            ..Default::default()
        };
        if let Some(e) = s.number("options", "e_bound")? {
            options.e_bound = e;
        }
        if let Some(n) = s.number("options", "n_max")? {
            options.n_max = n;
        }
        if let Some((v, line)) = s.take("options", "closures") {
            let list = split_list(&v);
            for c in &list {
                if ClosureTag::parse(c).is_none() {
                    return Err(s.err(line, format!("unknown closure `{c}`")));
                }
            }
            options.closures = Some(list);
        }
        s.finish()?;
        Ok(Self {
            name: name.to_string(),
            p,
            engine,
            vars,
            defining,
            semigroup,
            parameter,
            extension,
            cohomology,
            options,
        })
    }
}

fn unparen(t: &str) -> &str {
    t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t).trim()
}
