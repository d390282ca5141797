//! Serialisable reports. Field order is fixed by the struct definitions, so
//! the JSON output is byte-for-byte reproducible.

use crcodes::atlas::{Expected, Verdict};
use crcodes::cosetgraph::{CheckMode, DrgReport, Semantics};
use crcodes::designcheck::DesignWitness;
use crcodes::fieldkit::format_rational;
use crcodes::lloydgate::{LloydBattery, Rho1Report};
use crcodes::spectra::Analysis;
use crcodes::{Code, IntersectionArray, Rational};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct IaReport {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub brace: String,
}

impl From<&IntersectionArray> for IaReport {
    fn from(ia: &IntersectionArray) -> Self {
        IaReport { b: ia.b.clone(), c: ia.c.clone(), brace: ia.to_brace_string() }
    }
}

pub fn rationals(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(format_rational).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub q: usize,
    pub size: String,
    pub linear: bool,
    pub dimension: Option<usize>,
    pub mode: String,
    pub distance_invariant: bool,
    pub e: usize,
    pub d: usize,
    pub rho: usize,
    pub s: usize,
    pub b: usize,
    pub rank_b: usize,
    pub perfect: bool,
    pub quasi_perfect: bool,
    pub up_narrow: Option<bool>,
    pub up_gvt: bool,
    pub up_wide: bool,
    pub completely_regular: bool,
    pub t_regular_degree: Option<usize>,
    /// Cell sizes of the distance partition, counted as cosets in syndrome
    /// mode and as vectors otherwise.
    pub cells: Vec<u64>,
    pub ia: Option<IaReport>,
    pub beta: Option<Vec<String>>,
}

impl ClassificationReport {
    pub fn new(code: &Code, a: &Analysis) -> Self {
        let c = &a.classification;
        ClassificationReport {
            n: a.n,
            q: a.q,
            size: a.size.to_string(),
            linear: code.is_linear(),
            dimension: code.dimension(),
            mode: format!("{:?}", a.mode()).to_lowercase(),
            distance_invariant: c.distance_invariant,
            e: c.e,
            d: c.d,
            rho: c.rho,
            s: c.s,
            b: c.b,
            rank_b: c.rank_b,
            perfect: c.perfect,
            quasi_perfect: c.quasi_perfect,
            up_narrow: c.up_narrow,
            up_gvt: c.up_gvt,
            up_wide: c.up_wide,
            completely_regular: c.completely_regular,
            t_regular_degree: c.t_regular_degree,
            cells: a.partition.sizes.clone(),
            ia: a.intersection_array.as_ref().map(IaReport::from),
            beta: a.packing.as_ref().map(|p| rationals(&p.beta)),
        }
    }

    pub fn text(&self) -> String {
        let kind = match self.dimension {
            Some(k) => format!("linear [{},{}]_{}", self.n, k, self.q),
            None => format!("explicit ({},{})_{}", self.n, self.size, self.q),
        };
        let mut s = format!(
            "code: {kind}, |C| = {}\nd = {}, e = {}, rho = {}, s = {}, b = {}, rank(B) = {}\n",
            self.size, self.d, self.e, self.rho, self.s, self.b, self.rank_b
        );
        if !self.distance_invariant {
            s.push_str("not distance invariant\n");
        }
        s += &format!(
            "perfect = {}, quasi-perfect = {}, UP narrow = {}, UP (GvT) = {}, UP wide = {}\n",
            self.perfect,
            self.quasi_perfect,
            self.up_narrow.map_or("n/a".to_string(), |b| b.to_string()),
            self.up_gvt,
            self.up_wide
        );
        s += &format!("CR = {}\n", self.completely_regular);
        if let Some(ia) = &self.ia {
            s += &format!("IA {}\n", ia.brace);
        }
        if let Some(beta) = &self.beta {
            s += &format!("beta = ({})\n", beta.join(", "));
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LloydReport {
    pub pass: bool,
    pub eigenvalues: Option<Vec<i64>>,
    pub eigenvalues_pass: Option<bool>,
    pub roots: Option<Vec<usize>>,
    pub roots_pass: Option<bool>,
    pub cardinality: Option<bool>,
    pub rho1: Option<Rho1Json>,
}

impl From<&LloydBattery> for LloydReport {
    fn from(b: &LloydBattery) -> Self {
        LloydReport {
            pass: b.pass(),
            eigenvalues: b.eigenvalues.as_ref().map(|e| e.eigenvalues.iter().map(|&(_, l)| l).collect()),
            eigenvalues_pass: b.eigenvalues.as_ref().map(|e| e.pass),
            roots: b.roots.as_ref().map(|r| r.roots.clone()),
            roots_pass: b.roots.as_ref().map(|r| r.pass),
            cardinality: b.cardinality,
            rho1: b.rho1.as_ref().map(Rho1Json::from),
        }
    }
}

impl LloydReport {
    pub fn text(&self) -> String {
        let show = |o: Option<bool>| o.map_or("n/a".to_string(), |b| if b { "pass".into() } else { "FAIL".into() });
        let mut s = format!("Lloyd battery: {}\n", if self.pass { "pass" } else { "FAIL" });
        if let Some(e) = &self.eigenvalues {
            s += &format!("  eigenvalues {:?}: {}\n", e, show(self.eigenvalues_pass));
        }
        if let Some(r) = &self.roots {
            s += &format!("  Lloyd roots {:?}: {}\n", r, show(self.roots_pass));
        }
        s += &format!("  cardinality identity: {}\n", show(self.cardinality));
        if let Some(r) = &self.rho1 {
            s += &r.text();
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundJson {
    pub name: &'static str,
    pub pass: Option<bool>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Rho1Json {
    pub b: u64,
    pub c: u64,
    pub n: u64,
    pub a: i64,
    pub pass: bool,
    pub a_star_lower: Option<i64>,
    pub a_star_upper: Option<i64>,
    pub checks: Vec<BoundJson>,
}

impl From<&Rho1Report> for Rho1Json {
    fn from(r: &Rho1Report) -> Self {
        Rho1Json {
            b: r.b,
            c: r.c,
            n: r.n,
            a: r.a,
            pass: r.pass,
            a_star_lower: r.a_star_lower,
            a_star_upper: r.a_star_upper,
            checks: r
                .checks
                .iter()
                .map(|c| BoundJson { name: c.name, pass: c.pass, detail: c.detail.clone() })
                .collect(),
        }
    }
}

impl Rho1Json {
    pub fn text(&self) -> String {
        let mut s = format!(
            "rho = 1 bounds for {{{}; {}}}, n = {}, a = {}: {}\n",
            self.b,
            self.c,
            self.n,
            self.a,
            if self.pass { "pass" } else { "FAIL" }
        );
        for c in &self.checks {
            let verdict = match c.pass {
                Some(true) => "pass",
                Some(false) => "FAIL",
                None => "n/a",
            };
            s += &format!("  {}: {verdict} ({})\n", c.name, c.detail);
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DesignReport {
    pub v: usize,
    pub k: usize,
    pub t: usize,
    pub lambda: Option<u64>,
    pub b: Option<u64>,
    pub r: Option<u64>,
    pub qary: bool,
    pub is_design: bool,
}

impl DesignReport {
    pub fn new(n: usize, w: usize, t: usize, q: usize, witness: Option<&DesignWitness>) -> Self {
        DesignReport {
            v: n,
            k: w,
            t,
            lambda: witness.map(|x| x.lambda),
            b: witness.map(|x| x.b),
            r: witness.map(|x| x.r),
            qary: q > 2,
            is_design: witness.is_some(),
        }
    }

    pub fn text(&self) -> String {
        match self.lambda {
            Some(l) => format!(
                "weight-{} words form a {}{}-({},{},{}) design: lambda = {l}, blocks = {}, r = {}\n",
                self.k,
                if self.qary { "q-ary " } else { "" },
                self.t,
                self.v,
                self.k,
                l,
                self.b.unwrap_or(0),
                self.r.unwrap_or(0)
            ),
            None => format!("weight-{} words do not form a {}-design\n", self.k, self.t),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphReport {
    pub vertices: usize,
    pub multi_edges: bool,
    pub semantics: &'static str,
    pub mode: String,
    pub connected: bool,
    pub distance_regular: bool,
    pub diameter: usize,
    pub ia: Option<IaReport>,
    /// Whether the graph array equals the code array; absent when the code
    /// is not completely regular.
    pub agrees_with_code: Option<bool>,
}

impl GraphReport {
    pub fn new(vertices: usize, multi_edges: bool, r: &DrgReport, code_ia: Option<&IntersectionArray>) -> Self {
        GraphReport {
            vertices,
            multi_edges,
            semantics: match r.semantics {
                Semantics::Simple => "simple",
                Semantics::Multi => "multi",
            },
            mode: match r.mode {
                CheckMode::Full => "full".into(),
                CheckMode::Sampled { roots } => format!("sampled ({roots} roots)"),
            },
            connected: r.connected,
            distance_regular: r.distance_regular,
            diameter: r.diameter,
            ia: r.intersection_array.as_ref().map(IaReport::from),
            agrees_with_code: code_ia.map(|ia| r.intersection_array.as_ref() == Some(ia)),
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!(
            "coset graph: {} vertices, {} semantics, {} check, diameter {}, distance-regular = {}\n",
            self.vertices, self.semantics, self.mode, self.diameter, self.distance_regular
        );
        if let Some(ia) = &self.ia {
            s += &format!("  graph IA {}\n", ia.brace);
        }
        if let Some(a) = self.agrees_with_code {
            s += &format!("  agrees with code IA: {a}\n");
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpectedReport {
    pub n: usize,
    pub q: usize,
    pub completely_regular: bool,
    pub ia: Option<IaReport>,
    pub source: &'static str,
    pub d: Option<usize>,
    pub up_wide: Option<bool>,
    pub rho: Option<usize>,
    pub note: Option<&'static str>,
}

impl From<&Expected> for ExpectedReport {
    fn from(e: &Expected) -> Self {
        ExpectedReport {
            n: e.n,
            q: e.q,
            completely_regular: e.completely_regular(),
            ia: e.ia.as_ref().map(IaReport::from),
            source: e.source.as_str(),
            d: e.d,
            up_wide: e.up_wide,
            rho: e.rho,
            note: e.note,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictReport {
    pub id: &'static str,
    pub params: String,
    pub pass: bool,
    pub mismatches: Vec<String>,
    pub completely_regular: bool,
    pub up_wide: bool,
    pub d: usize,
    pub rho: usize,
    pub ia: Option<IaReport>,
    pub expected: ExpectedReport,
    pub lloyd: Option<LloydReport>,
    pub graph_agrees: Option<bool>,
}

impl From<&Verdict> for VerdictReport {
    fn from(v: &Verdict) -> Self {
        VerdictReport {
            id: v.id,
            params: v.params.to_string(),
            pass: v.pass,
            mismatches: v.mismatches.clone(),
            completely_regular: v.completely_regular,
            up_wide: v.up_wide,
            d: v.d,
            rho: v.rho,
            ia: v.computed_ia.as_ref().map(IaReport::from),
            expected: ExpectedReport::from(&v.expected),
            lloyd: v.lloyd.as_ref().map(LloydReport::from),
            graph_agrees: v.graph_agrees,
        }
    }
}

impl VerdictReport {
    pub fn text(&self) -> String {
        let params = if self.params.is_empty() { String::new() } else { format!(" [{}]", self.params) };
        let mut s = format!("{}{params}: {}\n", self.id, if self.pass { "PASS" } else { "FAIL" });
        s += &format!(
            "  computed: CR = {}, d = {}, rho = {}, UP wide = {}{}\n",
            self.completely_regular,
            self.d,
            self.rho,
            self.up_wide,
            self.ia.as_ref().map_or(String::new(), |ia| format!(", IA {}", ia.brace))
        );
        let e = &self.expected;
        s += &format!(
            "  expected ({}): {}\n",
            e.source,
            match &e.ia {
                Some(ia) => format!("IA {}", ia.brace),
                None => "not completely regular".to_string(),
            }
        );
        if let Some(note) = e.note {
            s += &format!("  note: {note}\n");
        }
        if let Some(l) = &self.lloyd {
            s += &format!("  Lloyd battery: {}\n", if l.pass { "pass" } else { "FAIL" });
        }
        if let Some(g) = self.graph_agrees {
            s += &format!("  coset graph agrees: {g}\n");
        }
        for m in &self.mismatches {
            s += &format!("  mismatch: {m}\n");
        }
        s
    }
}
