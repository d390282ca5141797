use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use crcodes::atlas::{self, Filter, Kind, Params};
use crcodes::cosetgraph::{CosetGraph, Semantics};
use crcodes::designcheck::verify_design;
use crcodes::fieldkit::parse_rational;
use crcodes::lloydgate::{eigenvalue_membership_test, lloyd_roots, packing_sum, rho1_bounds};
use crcodes::spectra::analyze;
use crcodes::{Code, Guards, IntersectionArray};
use rayon::prelude::*;
use serde::Serialize;

use crate::codefile::{read_code, write_code};
use crate::error::{exit, CliError, CliResult};
use crate::report::{
    rationals, ClassificationReport, DesignReport, ExpectedReport, GraphReport, IaReport, LloydReport, Rho1Json,
    VerdictReport,
};
use crate::{AtlasCommand, BoundsArgs, Cli, Command, GraphArgs, GraphFormat, KindArg, RunConfig, VerifyArgs};

pub(crate) fn dispatch(cli: Cli, out: &mut dyn Write) -> CliResult<i32> {
    let mut cfg = RunConfig::from_env()?;
    cfg.json = cli.json;
    cfg.threads = cli.threads;
    let g = &cli.guards;
    for (flag, slot) in [
        (g.max_syndromes, &mut cfg.guards.max_syndromes),
        (g.max_vectors, &mut cfg.guards.max_vectors),
        (g.max_codewords, &mut cfg.guards.max_codewords),
        (g.max_count_ops, &mut cfg.guards.max_count_ops),
    ] {
        if let Some(v) = flag {
            if v == 0 {
                return Err(CliError::Usage("guard limits must be positive".into()));
            }
            *slot = v;
        }
    }
    let mut w = Out { out, json: cfg.json };
    match cli.command {
        Command::Atlas(cmd) => atlas_cmd(cmd, &cfg, &mut w),
        Command::Verify(args) => verify_cmd(args, &cfg, &mut w),
        Command::Bounds(args) => bounds_cmd(args, &mut w),
        Command::Graph(args) => graph_cmd(args, &cfg, &mut w),
    }
}

struct Out<'a> {
    out: &'a mut dyn Write,
    json: bool,
}

impl Out<'_> {
    /// Text or pretty JSON, depending on `--json`.
    fn emit<T: Serialize>(&mut self, value: &T, text: &str) -> CliResult<()> {
        let s = if self.json { to_json(value) + "\n" } else { text.to_string() };
        self.raw(&s)
    }

    fn raw(&mut self, s: &str) -> CliResult<()> {
        self.out.write_all(s.as_bytes()).map_err(|e| CliError::io("<stdout>", e))
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports always serialise")
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn parse_params(items: &[String]) -> CliResult<Params> {
    let mut p = Params::new();
    for item in items {
        for (k, v) in Params::parse(item)?.iter() {
            p.set(k, v);
        }
    }
    Ok(p)
}

fn status(pass: bool) -> i32 {
    if pass {
        exit::OK
    } else {
        exit::MISMATCH
    }
}

// ---------------------------------------------------------------- atlas

fn atlas_cmd(cmd: AtlasCommand, cfg: &RunConfig, w: &mut Out) -> CliResult<i32> {
    match cmd {
        AtlasCommand::List { q, rho, kind, prefix } => {
            let kind = kind.map(|k| match k {
                KindArg::Family => Kind::Family,
                KindArg::Sporadic => Kind::Sporadic,
                KindArg::External => Kind::External,
                KindArg::Control => Kind::Control,
            });
            atlas_list(&Filter { q, rho, kind, prefix }, w)
        }
        AtlasCommand::Build { id, params, out, report } => {
            let params = parse_params(&params)?;
            let built = atlas::build(&id, &params, &cfg.guards)?;
            if let Some(path) = &out {
                write_code(&built.code, path, &cfg.guards)?;
            }
            let v = atlas::check(&built, &cfg.guards)?;
            let r = VerdictReport::from(&v);
            if let Some(path) = &report {
                write_file(path, &(to_json(&r) + "\n"))?;
            }
            w.emit(&r, &r.text())?;
            Ok(status(v.pass))
        }
        AtlasCommand::Check { id, file, params } => {
            let code = read_code(&file)?;
            let v = atlas::check_external(&id, &parse_params(&params)?, &code, &cfg.guards)?;
            let r = VerdictReport::from(&v);
            w.emit(&r, &r.text())?;
            Ok(status(v.pass))
        }
        AtlasCommand::Regress { all_feasible, ids } => {
            let cases = if ids.is_empty() || all_feasible {
                atlas::feasible_cases()
            } else {
                let mut cases = Vec::new();
                for id in &ids {
                    let e = atlas::resolve(id)?;
                    if e.kind == Kind::External {
                        return Err(CliError::Usage(format!("{} is external; use `atlas check`", e.id)));
                    }
                    cases.extend(e.default_params().into_iter().map(|p| (e.id, p)));
                }
                cases
            };
            regress(&cases, cfg, w)
        }
        AtlasCommand::Manifest { out } => {
            let m = manifest();
            let text = to_json(&m) + "\n";
            match out {
                Some(path) => {
                    write_file(&path, &text)?;
                    w.raw(&format!("wrote {} entries to {}\n", m.entries.len(), path.display()))?;
                }
                None => w.raw(&text)?,
            }
            Ok(exit::OK)
        }
    }
}

#[derive(Serialize)]
struct ListRow {
    id: &'static str,
    kind: &'static str,
    title: &'static str,
    params: Vec<&'static str>,
    cases: Vec<String>,
}

fn atlas_list(filter: &Filter, w: &mut Out) -> CliResult<i32> {
    let rows: Vec<ListRow> = atlas::list(filter)
        .into_iter()
        .map(|(e, cases)| ListRow {
            id: e.id,
            kind: e.kind.as_str(),
            title: e.title,
            params: e.keys.to_vec(),
            cases: cases.iter().map(|p| p.to_string()).collect(),
        })
        .collect();
    let mut text = String::new();
    for r in &rows {
        text += &format!("{:<6} {:<9} {}\n", r.id, r.kind, r.title);
        if !r.params.is_empty() {
            text += &format!("       cases: {}\n", r.cases.join(" | "));
        }
    }
    w.emit(&rows, &text)?;
    Ok(exit::OK)
}

#[derive(Serialize)]
struct RegressRow {
    id: &'static str,
    params: String,
    pass: bool,
    ia: Option<String>,
    expected: Option<String>,
    mismatches: Vec<String>,
    error: Option<String>,
    #[serde(skip)]
    exit: i32,
}

#[derive(Serialize)]
struct RegressSummary {
    cases: usize,
    passed: usize,
    failed: usize,
    errors: usize,
}

#[derive(Serialize)]
struct RegressReport {
    summary: RegressSummary,
    results: Vec<RegressRow>,
}

fn regress_one(id: &'static str, params: &Params, guards: &Guards) -> RegressRow {
    let outcome = atlas::build(id, params, guards).and_then(|b| atlas::check(&b, guards));
    match outcome {
        Ok(v) => RegressRow {
            id,
            params: params.to_string(),
            pass: v.pass,
            ia: v.computed_ia.map(|x| x.to_brace_string()),
            expected: v.expected.ia.as_ref().map(|x| x.to_brace_string()),
            mismatches: v.mismatches,
            error: None,
            exit: status(v.pass),
        },
        Err(e) => RegressRow {
            id,
            params: params.to_string(),
            pass: false,
            ia: None,
            expected: None,
            mismatches: Vec::new(),
            exit: CliError::from(e.clone()).exit_code(),
            error: Some(e.to_string()),
        },
    }
}

fn regress(cases: &[(&'static str, Params)], cfg: &RunConfig, w: &mut Out) -> CliResult<i32> {
    let start = Instant::now();
    let guards = cfg.guards;
    let run = || -> Vec<RegressRow> { cases.par_iter().map(|(id, p)| regress_one(id, p, &guards)).collect() };
    let results = match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    let summary = RegressSummary {
        cases: results.len(),
        passed: results.iter().filter(|r| r.pass).count(),
        failed: results.iter().filter(|r| !r.pass && r.error.is_none()).count(),
        errors: results.iter().filter(|r| r.error.is_some()).count(),
    };
    let mut text = format!("{:<6} {:<22} {:<6} {}\n", "ID", "PARAMS", "RESULT", "IA");
    for r in &results {
        let result = if r.pass {
            "PASS"
        } else if r.error.is_some() {
            "ERROR"
        } else {
            "FAIL"
        };
        let ia = r.ia.clone().unwrap_or_else(|| "-".into());
        text += &format!("{:<6} {:<22} {:<6} {}\n", r.id, r.params, result, ia);
        for m in &r.mismatches {
            text += &format!("       mismatch: {m}\n");
        }
        if let Some(e) = &r.error {
            text += &format!("       error: {e}\n");
        }
    }
    text += &format!(
        "{} cases: {} passed, {} failed, {} errors\n",
        summary.cases, summary.passed, summary.failed, summary.errors
    );
    let code =
        if summary.failed > 0 { exit::MISMATCH } else { results.iter().map(|r| r.exit).max().unwrap_or(exit::OK) };
    w.emit(&RegressReport { summary, results }, &text)?;
    eprintln!("regression finished in {:.1} s", start.elapsed().as_secs_f64());
    Ok(code)
}

#[derive(Serialize)]
struct ManifestCase {
    params: BTreeMap<String, i64>,
    feasible: bool,
    expected: Option<ExpectedReport>,
    error: Option<String>,
}

#[derive(Serialize)]
struct ManifestEntry {
    id: &'static str,
    kind: &'static str,
    title: &'static str,
    buildable: bool,
    params: Vec<&'static str>,
    cases: Vec<ManifestCase>,
}

#[derive(Serialize)]
struct Manifest {
    entries: Vec<ManifestEntry>,
    aliases: BTreeMap<&'static str, &'static str>,
}

fn manifest() -> Manifest {
    let entries = atlas::entries()
        .iter()
        .map(|e| ManifestEntry {
            id: e.id,
            kind: e.kind.as_str(),
            title: e.title,
            buildable: e.kind != Kind::External,
            params: e.keys.to_vec(),
            cases: e
                .default_params()
                .into_iter()
                .map(|p| {
                    let params = p.iter().map(|(k, v)| (k.to_string(), v)).collect();
                    match atlas::expected(e.id, &p) {
                        Ok(x) => ManifestCase {
                            params,
                            feasible: true,
                            expected: Some(ExpectedReport::from(&x)),
                            error: None,
                        },
                        Err(err) => {
                            ManifestCase { params, feasible: false, expected: None, error: Some(err.to_string()) }
                        }
                    }
                })
                .collect(),
        })
        .collect();
    Manifest { entries, aliases: atlas::aliases().iter().copied().collect() }
}

// ---------------------------------------------------------------- verify

#[derive(Serialize)]
struct VerifyReport {
    file: String,
    classification: ClassificationReport,
    lloyd: Option<LloydReport>,
    design: Option<DesignReport>,
    graph: Option<GraphReport>,
    expected_ia: Option<IaReport>,
    pass: bool,
}

fn graph_report(code: &Code, code_ia: Option<&IntersectionArray>, guards: &Guards) -> CliResult<GraphReport> {
    let graph = CosetGraph::from_code(code, guards)?;
    let drg = graph.is_distance_regular(Semantics::Multi, graph.default_mode(), guards)?;
    Ok(GraphReport::new(graph.vertex_count(), graph.has_multi_edges(), &drg, code_ia))
}

fn verify_cmd(args: VerifyArgs, cfg: &RunConfig, w: &mut Out) -> CliResult<i32> {
    let code = read_code(&args.file)?;
    let guards = &cfg.guards;
    let a = analyze(&code, guards)?;
    let classification = ClassificationReport::new(&code, &a);
    let mut pass = true;
    let mut text = String::new();
    let only_cr = args.cr && !args.classify && !args.lloyd && !args.designs && !args.graph;
    if only_cr {
        text += &format!("CR = {}\n", classification.completely_regular);
        if let Some(ia) = &classification.ia {
            text += &format!("IA {}\n", ia.brace);
        }
    } else {
        text += &classification.text();
    }
    if args.cr {
        pass &= classification.completely_regular;
    }
    let lloyd = if args.lloyd {
        let b = crcodes::lloydgate::battery(&a);
        let r = LloydReport::from(&b);
        if b.eigenvalues.is_none() && b.roots.is_none() {
            text += "Lloyd battery: n/a (no packing parameters)\n";
        } else {
            text += &r.text();
            pass &= r.pass;
        }
        Some(r)
    } else {
        None
    };
    let design = if args.designs {
        let (wt, t) = (args.weight.unwrap_or(0), args.strength.unwrap_or(0));
        let witness = verify_design(&code, wt, t, guards)?;
        let r = DesignReport::new(code.n(), wt, t, code.q(), witness.as_ref());
        text += &r.text();
        pass &= r.is_design;
        Some(r)
    } else {
        None
    };
    let graph = if args.graph {
        let r = graph_report(&code, a.intersection_array.as_ref(), guards)?;
        text += &r.text();
        pass &= r.agrees_with_code != Some(false);
        Some(r)
    } else {
        None
    };
    let expected_ia = match &args.expect_ia {
        Some(s) => {
            let ia = IntersectionArray::parse(s, code.n(), code.q())?;
            let ok = a.intersection_array.as_ref() == Some(&ia);
            text += &format!("expected IA {}: {}\n", ia.to_brace_string(), if ok { "match" } else { "MISMATCH" });
            pass &= ok;
            Some(IaReport::from(&ia))
        }
        None => None,
    };
    let report =
        VerifyReport { file: args.file.display().to_string(), classification, lloyd, design, graph, expected_ia, pass };
    w.emit(&report, &text)?;
    Ok(status(pass))
}

// ---------------------------------------------------------------- bounds

#[derive(Serialize)]
struct RootsReport {
    n: usize,
    q: usize,
    beta: Vec<String>,
    roots: Vec<usize>,
    expected_roots: usize,
    packing_sum: String,
    pass: bool,
}

#[derive(Serialize)]
struct EigenReport {
    ia: IaReport,
    valid: bool,
    eigenvalues: Vec<i64>,
    pass: bool,
}

fn parse_usize(s: &str, what: &str) -> CliResult<usize> {
    s.parse().map_err(|_| CliError::Usage(format!("{what} must be a non-negative integer, got `{s}`")))
}

fn bounds_cmd(args: BoundsArgs, w: &mut Out) -> CliResult<i32> {
    if let Some(v) = args.rho1 {
        let r = Rho1Json::from(&rho1_bounds(v[0], v[1], v[2]));
        let mut text = r.text();
        if r.checks.iter().any(|c| c.name == "nonzero" && c.pass == Some(false)) {
            text += "fail: b ≠ 0 ≠ c\n";
        }
        w.emit(&r, &text)?;
        return Ok(status(r.pass));
    }
    if let Some(v) = args.lloyd_roots {
        let n = parse_usize(&v[0], "n")?;
        let q = parse_usize(&v[1], "q")?;
        if q < 2 {
            return Err(CliError::Usage("q must be at least 2".into()));
        }
        let beta = v[2..].iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
        let roots = lloyd_roots(n, q, &beta);
        let r = RootsReport {
            n,
            q,
            beta: rationals(&beta),
            roots: roots.roots.clone(),
            expected_roots: beta.len() - 1,
            packing_sum: crcodes::fieldkit::format_rational(&packing_sum(&beta, n, q)),
            pass: roots.pass,
        };
        let list: Vec<String> = r.roots.iter().map(|x| x.to_string()).collect();
        let text = format!(
            "roots {} ({} found, {} expected): {}\nsum of beta_i (q-1)^i C(n,i) = {}\n",
            list.join(","),
            r.roots.len(),
            r.expected_roots,
            if r.pass { "pass" } else { "FAIL" },
            r.packing_sum
        );
        w.emit(&r, &text)?;
        return Ok(status(r.pass));
    }
    if let Some(v) = args.ia {
        let n = parse_usize(&v[1], "n")?;
        let q = parse_usize(&v[2], "q")?;
        let ia = IntersectionArray::parse(&v[0], n, q)?;
        let valid = ia.validate().is_ok();
        let e = eigenvalue_membership_test(&ia);
        let r = EigenReport {
            ia: IaReport::from(&ia),
            valid,
            eigenvalues: e.eigenvalues.iter().map(|&(_, l)| l).collect(),
            pass: valid && e.pass,
        };
        let text = format!(
            "IA {}: {}; eigenvalues in the H({n},{q}) spectrum: {:?} ({})\n",
            r.ia.brace,
            if valid { "well formed" } else { "malformed (negative a_i or zero b_i/c_i)" },
            r.eigenvalues,
            if r.pass { "pass" } else { "FAIL" }
        );
        w.emit(&r, &text)?;
        return Ok(status(r.pass));
    }
    Err(CliError::Usage("one of --rho1, --lloyd-roots or --ia is required".into()))
}

// ---------------------------------------------------------------- graph

#[derive(Serialize)]
struct GraphNode {
    id: u32,
    degree: u64,
}

#[derive(Serialize)]
struct GraphJson {
    vertices: usize,
    nodes: Vec<GraphNode>,
    /// Undirected edges `[a, b, multiplicity]`, `a < b`.
    edges: Vec<[u32; 3]>,
    /// Loops `[v, multiplicity]`.
    loops: Vec<[u32; 2]>,
}

fn graph_json(g: &CosetGraph) -> String {
    let v = g.vertex_count() as u32;
    let j = GraphJson {
        vertices: g.vertex_count(),
        nodes: (0..v).map(|id| GraphNode { id, degree: g.degree(id, Semantics::Multi) }).collect(),
        edges: g.edges().into_iter().map(|(a, b, m)| [a, b, m]).collect(),
        loops: (0..v).flat_map(|x| g.neighbors(x).filter(move |&(t, _)| t == x).map(move |(_, m)| [x, m])).collect(),
    };
    serde_json::to_string(&j).expect("graphs always serialise") + "\n"
}

fn graph_cmd(args: GraphArgs, cfg: &RunConfig, w: &mut Out) -> CliResult<i32> {
    let code = read_code(&args.file)?;
    let graph = CosetGraph::from_code(&code, &cfg.guards)?;
    if args.out.is_some() || !args.check {
        let export = match args.format {
            GraphFormat::Dot => graph.to_dot()?,
            GraphFormat::Json => graph_json(&graph),
        };
        match &args.out {
            Some(path) => write_file(path, &export)?,
            None => w.raw(&export)?,
        }
    }
    if !args.check {
        return Ok(exit::OK);
    }
    let a = analyze(&code, &cfg.guards)?;
    let r = graph_report(&code, a.intersection_array.as_ref(), &cfg.guards)?;
    w.emit(&r, &r.text())?;
    Ok(status(r.agrees_with_code != Some(false)))
}
