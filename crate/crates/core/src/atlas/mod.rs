//! The construction catalog.
//!
//! Entries carry the family labels `F.x` (infinite families), `S.x`
//! (sporadic codes) and `N.x` (negative controls: codes that must *not* be
//! completely regular). Each entry has a parameter schema, a list of default
//! feasible cases, a closed-form expectation and a builder.
//!
//! ```
//! use crcodes::atlas::{self, Params};
//! use crcodes::Guards;
//!
//! let built = atlas::build("S.1", &Params::new(), &Guards::default()).unwrap();
//! let v = atlas::check(&built, &Guards::default()).unwrap();
//! assert!(v.pass);
//! assert_eq!(v.computed_ia.unwrap().to_brace_string(), "{23,22,21;1,2,3}");
//! ```

mod catalog;
pub mod recipes;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::codecore::Code;
use crate::cosetgraph::{CosetGraph, Semantics};
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::lloydgate::{battery, LloydBattery};
use crate::spectra::{analyze, Analysis, IntersectionArray};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Family,
    Sporadic,
    /// No builder; the code is supplied by the user.
    External,
    /// Expected to fail complete regularity.
    Control,
}

/// Where an expected array comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    /// A numeric array printed for this code or family.
    Printed,
    /// Instantiated from a closed-form family formula.
    Formula,
    /// Printed array judged wrong; the pinned value was computed
    /// exhaustively (see the entry note).
    Computed,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Printed => "printed",
            Source::Formula => "formula",
            Source::Computed => "computed",
        }
    }
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Family => "family",
            Kind::Sporadic => "sporadic",
            Kind::External => "external",
            Kind::Control => "control",
        }
    }
}

/// One catalog entry.
#[derive(Debug)]
pub struct Entry {
    pub id: &'static str,
    pub kind: Kind,
    pub title: &'static str,
    /// Parameter names, in the order of `cases`.
    pub keys: &'static [&'static str],
    /// Default feasible parameter tuples.
    pub cases: &'static [&'static [i64]],
}

impl Entry {
    pub fn default_params(&self) -> Vec<Params> {
        self.cases
            .iter()
            .map(|vals| Params::from_pairs(self.keys.iter().zip(vals.iter()).map(|(k, &v)| (*k, v))))
            .collect()
    }
}

/// Named integer parameters, e.g. `q=2, m=3`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params(BTreeMap<String, i64>);

impl Params {
    pub fn new() -> Self {
        Params(BTreeMap::new())
    }

    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, i64)>) -> Self {
        Params(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
    }

    pub fn set(&mut self, key: &str, value: i64) {
        self.0.insert(key.to_string(), value);
    }

    /// Non-negative value of `key`.
    pub fn get(&self, key: &str) -> Result<u64> {
        let v = *self.0.get(key).ok_or_else(|| Error::Catalog(format!("missing parameter {key}")))?;
        u64::try_from(v).map_err(|_| Error::Catalog(format!("parameter {key} = {v} must be non-negative")))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parse `q=2,m=3` (commas or whitespace between pairs).
    pub fn parse(s: &str) -> Result<Self> {
        let mut p = Params::new();
        for part in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let (k, v) =
                part.split_once('=').ok_or_else(|| Error::Format(format!("parameter `{part}` is not key=value")))?;
            let v: i64 =
                v.trim().parse().map_err(|_| Error::Format(format!("parameter `{part}` has a non-integer value")))?;
            p.set(k.trim(), v);
        }
        Ok(p)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{k}={v}")?;
            first = false;
        }
        Ok(())
    }
}

/// What a build is expected to produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub n: usize,
    pub q: usize,
    /// Some for completely regular entries, None for controls.
    pub ia: Option<IntersectionArray>,
    pub source: Source,
    pub d: Option<usize>,
    /// Controls: the expected wide-sense uniform packing verdict.
    pub up_wide: Option<bool>,
    /// Controls: expected covering radius.
    pub rho: Option<usize>,
    pub note: Option<&'static str>,
}

impl Expected {
    fn regular(n: usize, q: usize, b: Vec<u64>, c: Vec<u64>, d: Option<usize>, source: Source) -> Result<Self> {
        let ia = IntersectionArray::new(n, q, b, c)?;
        ia.validate()?;
        Ok(Expected { n, q, ia: Some(ia), source, d, up_wide: None, rho: None, note: None })
    }

    fn control(n: u64, q: u64, up_wide: Option<bool>, rho: Option<usize>) -> Self {
        Expected { n: n as usize, q: q as usize, ia: None, source: Source::Formula, d: None, up_wide, rho, note: None }
    }

    pub fn completely_regular(&self) -> bool {
        self.ia.is_some()
    }
}

/// A built catalog code together with what it should satisfy.
#[derive(Debug, Clone)]
pub struct Built {
    pub id: &'static str,
    pub params: Params,
    pub code: Code,
    pub expected: Expected,
}

/// Every entry, in catalog order.
pub fn entries() -> &'static [Entry] {
    catalog::ENTRIES
}

/// Look up an id or one of its aliases.
pub fn resolve(id: &str) -> Result<&'static Entry> {
    let canonical = catalog::ALIASES.iter().find(|(a, _)| *a == id).map_or(id, |(_, c)| c);
    catalog::ENTRIES
        .iter()
        .find(|e| e.id == canonical)
        .ok_or_else(|| Error::Catalog(format!("unknown catalog id {id}")))
}

/// Alternative labels accepted by [`resolve`].
pub fn aliases() -> &'static [(&'static str, &'static str)] {
    catalog::ALIASES
}

/// Fill parameters missing from `params` with the entry's first default
/// case; reject unknown keys.
pub fn complete_params(entry: &Entry, params: &Params) -> Result<Params> {
    if let Some((k, _)) = params.iter().find(|(k, _)| !entry.keys.contains(k)) {
        return Err(Error::Catalog(format!("{} has no parameter {k}; expected {:?}", entry.id, entry.keys)));
    }
    let mut out = entry.default_params().into_iter().next().unwrap_or_default();
    for (k, v) in params.iter() {
        out.set(k, v);
    }
    Ok(out)
}

/// Closed-form expectation for an entry, no code is built.
pub fn expected(id: &str, params: &Params) -> Result<Expected> {
    let entry = resolve(id)?;
    let p = complete_params(entry, params)?;
    catalog::expected(entry.id, &p)
}

/// Expected intersection array and its provenance. `None` for controls.
pub fn expected_ia(id: &str, params: &Params) -> Result<Option<(IntersectionArray, Source)>> {
    let e = expected(id, params)?;
    Ok(e.ia.map(|ia| (ia, e.source)))
}

/// Build an entry's code.
pub fn build(id: &str, params: &Params, guards: &Guards) -> Result<Built> {
    let entry = resolve(id)?;
    let p = complete_params(entry, params)?;
    let expected = catalog::expected(entry.id, &p)?;
    let code = catalog::construct(entry.id, &p, &expected, guards)?;
    catalog::check_size(&code, guards)?;
    if code.n() != expected.n || code.q() != expected.q {
        return Err(Error::Inconsistent(format!(
            "{} {p} built a code of length {} over GF({}), expected length {} over GF({})",
            entry.id,
            code.n(),
            code.q(),
            expected.n,
            expected.q
        )));
    }
    Ok(Built { id: entry.id, params: p, code, expected })
}

/// Selection for [`list`].
#[derive(Debug, Clone, Default)]
pub struct Filter {
    pub q: Option<usize>,
    pub rho: Option<usize>,
    pub kind: Option<Kind>,
    /// Prefix of the id, e.g. `"S."`.
    pub prefix: Option<String>,
}

/// Entries with at least one default case matching the filter, together
/// with those cases.
pub fn list(filter: &Filter) -> Vec<(&'static Entry, Vec<Params>)> {
    let mut out = Vec::new();
    for e in entries() {
        if filter.kind.map_or(false, |k| k != e.kind) {
            continue;
        }
        if filter.prefix.as_deref().map_or(false, |p| !e.id.starts_with(p)) {
            continue;
        }
        let cases: Vec<Params> = e
            .default_params()
            .into_iter()
            .filter(|p| match catalog::expected(e.id, p) {
                Ok(x) => {
                    filter.q.map_or(true, |q| q == x.q)
                        && filter.rho.map_or(true, |r| x.ia.as_ref().map(|ia| ia.rho()).or(x.rho) == Some(r))
                }
                Err(_) => false,
            })
            .collect();
        if !cases.is_empty() {
            out.push((e, cases));
        }
    }
    out
}

/// Every default (id, params) pair of buildable entries.
pub fn feasible_cases() -> Vec<(&'static str, Params)> {
    entries()
        .iter()
        .filter(|e| e.kind != Kind::External)
        .flat_map(|e| e.default_params().into_iter().map(move |p| (e.id, p)))
        .collect()
}

/// Outcome of checking one built code against its expectation.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub id: &'static str,
    pub params: Params,
    pub pass: bool,
    /// Human-readable reasons for failure; empty when `pass`.
    pub mismatches: Vec<String>,
    pub completely_regular: bool,
    pub up_wide: bool,
    pub d: usize,
    pub rho: usize,
    pub computed_ia: Option<IntersectionArray>,
    pub expected: Expected,
    /// Lloyd battery on completely regular codes.
    pub lloyd: Option<LloydBattery>,
    /// Whether the coset graph is distance-regular with the same array
    /// (linear completely regular codes only).
    pub graph_agrees: Option<bool>,
}

/// Analyse `built.code` and compare against its expectation.
pub fn check(built: &Built, guards: &Guards) -> Result<Verdict> {
    let analysis = analyze(&built.code, guards)?;
    check_analyzed(built, &analysis, guards)
}

/// [`check`] with an analysis the caller already has.
pub fn check_analyzed(built: &Built, analysis: &Analysis, guards: &Guards) -> Result<Verdict> {
    verdict(built.id, &built.params, &built.code, &built.expected, analysis, guards)
}

/// Check a user-supplied code for an external entry (or any entry).
pub fn check_external(id: &str, params: &Params, code: &Code, guards: &Guards) -> Result<Verdict> {
    let entry = resolve(id)?;
    let p = complete_params(entry, params)?;
    let e = catalog::expected(entry.id, &p)?;
    let analysis = analyze(code, guards)?;
    verdict(entry.id, &p, code, &e, &analysis, guards)
}

fn verdict(
    id: &'static str,
    params: &Params,
    code: &Code,
    e: &Expected,
    a: &Analysis,
    guards: &Guards,
) -> Result<Verdict> {
    let c = &a.classification;
    let mut mismatches = Vec::new();
    if code.n() != e.n || code.q() != e.q {
        mismatches.push(format!("length/alphabet {}/{} differ from expected {}/{}", code.n(), code.q(), e.n, e.q));
    }
    let mut lloyd = None;
    let mut graph_agrees = None;
    match &e.ia {
        Some(ia) => {
            if !c.completely_regular {
                mismatches.push("not completely regular".into());
            } else if a.intersection_array.as_ref() != Some(ia) {
                mismatches.push(format!(
                    "IA {} differs from expected {}",
                    a.intersection_array.as_ref().map_or_else(|| "-".into(), |x| x.to_brace_string()),
                    ia.to_brace_string()
                ));
            }
            if let Some(d) = e.d {
                if d != c.d {
                    mismatches.push(format!("minimum distance {} differs from expected {d}", c.d));
                }
            }
            if c.rho != ia.rho() {
                mismatches.push(format!("covering radius {} differs from expected {}", c.rho, ia.rho()));
            }
            if c.completely_regular {
                let bat = battery(a);
                if !bat.pass() {
                    mismatches.push("Lloyd battery failed".into());
                }
                lloyd = Some(bat);
                if code.is_linear() {
                    let agrees = graph_check(code, a, guards)?;
                    if !agrees {
                        mismatches.push("coset graph array differs from the code array".into());
                    }
                    graph_agrees = Some(agrees);
                }
            }
        }
        None => {
            if c.completely_regular {
                mismatches.push("completely regular, expected not".into());
            }
            if let Some(d) = e.d {
                if d != c.d {
                    mismatches.push(format!("minimum distance {} differs from expected {d}", c.d));
                }
            }
            if let Some(up) = e.up_wide {
                if up != c.up_wide {
                    mismatches.push(format!("uniformly packed (wide) = {} but expected {up}", c.up_wide));
                }
            }
            if let Some(r) = e.rho {
                if r != c.rho {
                    mismatches.push(format!("covering radius {} differs from expected {r}", c.rho));
                }
            }
        }
    }
    Ok(Verdict {
        id,
        params: params.clone(),
        pass: mismatches.is_empty(),
        mismatches,
        completely_regular: c.completely_regular,
        up_wide: c.up_wide,
        d: c.d,
        rho: c.rho,
        computed_ia: a.intersection_array.clone(),
        expected: e.clone(),
        lloyd,
        graph_agrees,
    })
}

/// The coset graph, with multiplicities, is distance-regular with the
/// code's intersection array.
fn graph_check(code: &Code, a: &Analysis, guards: &Guards) -> Result<bool> {
    let g = CosetGraph::from_code(code, guards)?;
    let report = g.is_distance_regular(Semantics::Multi, g.default_mode(), guards)?;
    Ok(report.distance_regular && report.intersection_array.as_ref() == a.intersection_array.as_ref())
}

/// Build and check each case in turn. Build errors are reported as failed
/// verdicts only when they are not resource errors; resource errors are
/// returned so callers can distinguish infeasible from wrong.
pub fn regress(cases: &[(&str, Params)], guards: &Guards) -> Result<Vec<Verdict>> {
    cases
        .iter()
        .map(|(id, p)| {
            let built = build(id, p, guards)?;
            check(&built, guards)
        })
        .collect()
}

#[cfg(test)]
mod tests;
