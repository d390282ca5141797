//! Command-line front end for `crcodes`: code files, reports, catalog
//! regression and arithmetic bounds.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 input error,
//! 3 resource guard exceeded.

pub mod codefile;
mod commands;
pub mod config;
pub mod error;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use config::RunConfig;
pub use error::{exit, CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "crcodes", version, about = "Build and verify completely regular codes")]
pub struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for regression (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(flatten)]
    pub guards: GuardArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Guard overrides; these win over the `CRCODES_MAX_*` variables.
#[derive(Debug, Args)]
pub struct GuardArgs {
    #[arg(long, global = true, value_name = "N")]
    pub max_syndromes: Option<u64>,
    #[arg(long, global = true, value_name = "N")]
    pub max_vectors: Option<u64>,
    #[arg(long, global = true, value_name = "N")]
    pub max_codewords: Option<u64>,
    #[arg(long, global = true, value_name = "N")]
    pub max_count_ops: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The construction catalog.
    #[command(subcommand)]
    Atlas(AtlasCommand),
    /// Analyse a code file.
    Verify(VerifyArgs),
    /// Arithmetic necessary conditions; no code needed.
    Bounds(BoundsArgs),
    /// Export or check the coset graph of a linear code file.
    Graph(GraphArgs),
}

#[derive(Debug, Subcommand)]
pub enum AtlasCommand {
    /// List entries, optionally filtered.
    List {
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        rho: Option<usize>,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// Id prefix such as `S.`.
        #[arg(long)]
        prefix: Option<String>,
    },
    /// Build one entry, check it and optionally write the code.
    ///
    /// Parameters are given as `key=value`, `"q=2,m=3"` or `--key value`.
    Build {
        id: String,
        params: Vec<String>,
        /// Write the code file here.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Write the JSON verdict here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check a user-supplied code file against an entry's expectation.
    Check { id: String, file: PathBuf, params: Vec<String> },
    /// Build and check many cases in parallel.
    Regress {
        /// Every default case of every buildable entry (the default when
        /// no ids are given).
        #[arg(long)]
        all_feasible: bool,
        ids: Vec<String>,
    },
    /// Write the catalog manifest (`atlas.json`).
    Manifest {
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Family,
    Sporadic,
    External,
    Control,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    /// Completely regular or not; fails when it is not.
    #[arg(long)]
    pub cr: bool,
    /// Full parameter and regularity report (the default).
    #[arg(long)]
    pub classify: bool,
    /// Lloyd battery on the packing parameters.
    #[arg(long)]
    pub lloyd: bool,
    /// Design test on one weight layer; needs --weight and --strength.
    #[arg(long, requires_all = ["weight", "strength"])]
    pub designs: bool,
    #[arg(long)]
    pub weight: Option<usize>,
    #[arg(long)]
    pub strength: Option<usize>,
    /// Coset graph distance-regularity against the code array.
    #[arg(long)]
    pub graph: bool,
    /// Fail unless the code array equals this one, e.g. "{23,22,21;1,2,3}".
    #[arg(long, value_name = "IA")]
    pub expect_ia: Option<String>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct BoundsArgs {
    /// Binary rho = 1 battery for {b; c} at length n.
    #[arg(long, num_args = 3, value_names = ["B", "C", "N"])]
    pub rho1: Option<Vec<u64>>,
    /// Integer roots of the Lloyd polynomial: n q beta_0 .. beta_rho.
    #[arg(long, num_args = 3.., value_names = ["N", "Q", "BETA"], allow_hyphen_values = true)]
    pub lloyd_roots: Option<Vec<String>>,
    /// Eigenvalue membership of an intersection array: IA n q.
    #[arg(long, num_args = 3, value_names = ["IA", "N", "Q"])]
    pub ia: Option<Vec<String>>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value = "dot")]
    pub format: GraphFormat,
    /// Write the export here; without it the export goes to stdout unless
    /// --check is given.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    /// Report distance-regularity.
    #[arg(long)]
    pub check: bool,
}

/// Rewrites `atlas build ID --m 3` into `atlas build ID m=3` so family
/// parameters can be spelled as flags.
fn fold_param_flags(args: Vec<OsString>) -> Vec<OsString> {
    const KNOWN: &[&str] = &[
        "--out",
        "--report",
        "--json",
        "--threads",
        "--max-syndromes",
        "--max-vectors",
        "--max-codewords",
        "--max-count-ops",
        "--help",
        "--version",
    ];
    let strs: Vec<Option<&str>> = args.iter().map(|a| a.to_str()).collect();
    let start = strs
        .windows(2)
        .position(|w| w[0] == Some("atlas") && matches!(w[1], Some("build") | Some("check")))
        .map(|i| i + 2);
    let Some(start) = start else { return args };
    let mut out: Vec<OsString> = args[..start].to_vec();
    let mut i = start;
    while i < args.len() {
        if let (Some(flag), Some(Some(value))) = (strs[i], strs.get(i + 1)) {
            if let Some(name) = flag.strip_prefix("--") {
                if !KNOWN.contains(&flag) && !name.is_empty() && value.parse::<i64>().is_ok() {
                    out.push(format!("{name}={value}").into());
                    i += 2;
                    continue;
                }
            }
        }
        out.push(args[i].clone());
        i += 1;
    }
    out
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code. Output goes to stdout, diagnostics to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args = fold_param_flags(args.into_iter().map(Into::into).collect());
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::OK };
            let _ = e.print();
            return code;
        }
    };
    let mut out = std::io::stdout().lock();
    match commands::dispatch(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Like [`run`] but captures stdout; used by tests.
pub fn run_captured<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args = fold_param_flags(args.into_iter().map(Into::into).collect());
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => return (if e.use_stderr() { exit::INPUT } else { exit::OK }, e.to_string()),
    };
    let mut buf = Vec::new();
    let code = match commands::dispatch(cli, &mut buf) {
        Ok(code) => code,
        Err(e) => {
            buf.extend_from_slice(format!("error: {e}\n").as_bytes());
            e.exit_code()
        }
    };
    (code, String::from_utf8(buf).expect("reports are UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(v: &[OsString]) -> Vec<&str> {
        v.iter().map(|s| s.to_str().unwrap()).collect()
    }

    #[test]
    fn param_flags_fold() {
        let a: Vec<OsString> = ["crcodes", "atlas", "build", "F.20", "--m", "3", "-o", "x.json", "--json"]
            .iter()
            .map(OsString::from)
            .collect();
        assert_eq!(strs(&fold_param_flags(a)), ["crcodes", "atlas", "build", "F.20", "m=3", "-o", "x.json", "--json"]);
        let a: Vec<OsString> =
            ["crcodes", "atlas", "build", "F.1", "--threads", "2"].iter().map(OsString::from).collect();
        assert_eq!(strs(&fold_param_flags(a.clone())), strs(&a));
    }
}
