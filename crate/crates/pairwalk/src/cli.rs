//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 corpus parse error, 3 exact and
//! numeric results disagree.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use pairwalk_core::algebra::HamiltonianKind;
use pairwalk_core::graph::{build_named, enumerate_all, enumerate_connected, enumerate_trees, Family};
use pairwalk_core::survey::{survey_rows, Convention, FindingKind, ScanConfig};
use pairwalk_core::transfer::{any_state, Analyzer, QuantumState, StateForm};
use pairwalk_core::{Error, Graph};
use thiserror::Error;

use crate::parallel::{scan_corpus, DecompositionCache};
use crate::{graph6, report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CONSISTENCY: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Consistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Consistency(_) => EXIT_CONSISTENCY,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) => CliError::Consistency(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "pairwalk", version, about = "Exact perfect state transfer and periodicity on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one JSON report per state.
    Analyze(AnalyzeArgs),
    /// Census counts over a corpus, as CSV.
    Scan(ScanArgs),
    /// Write one representative per isomorphism class as graph6.
    Enumerate(EnumerateArgs),
    /// Fidelity between two states on a uniform time grid, as CSV.
    Curve(CurveArgs),
    /// Periodic pair states and transfer among all trees.
    Trees(TreesArgs),
}

#[derive(Debug, Args)]
struct WalkArgs {
    /// laplacian, signless or adjacency.
    #[arg(long, default_value = "laplacian", value_parser = parse_kind)]
    hamiltonian: HamiltonianKind,
    /// pair, plus or vertex.
    #[arg(long, default_value = "pair", value_parser = parse_form)]
    form: StateForm,
    /// Allow hamiltonian/form combinations other than laplacian+pair,
    /// signless+plus and adjacency+vertex.
    #[arg(long)]
    experimental: bool,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// A graph6 string, or `named:<family>[:<params>]` such as `named:path:4`.
    #[arg(long)]
    graph: String,
    #[command(flatten)]
    walk: WalkArgs,
    /// `a,b` (or `a` for vertex states); all states when omitted.
    #[arg(long)]
    state: Option<String>,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Vertex count; with --input, keeps only graphs of this order.
    #[arg(long)]
    n: Option<usize>,
    /// graph6 corpus; the built-in enumerator of connected graphs otherwise.
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    walk: WalkArgs,
    /// edge-any, edge-both or all-pairs.
    #[arg(long, default_value = "edge-any", value_parser = parse_convention)]
    convention: Convention,
    #[arg(long)]
    jobs: Option<usize>,
    /// Per-graph findings as JSON lines.
    #[arg(long)]
    findings: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    connected_only: bool,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CurveArgs {
    #[arg(long)]
    graph: String,
    #[command(flatten)]
    walk: WalkArgs,
    #[arg(long)]
    state: String,
    #[arg(long)]
    state2: String,
    #[arg(long)]
    tmax: f64,
    #[arg(long)]
    steps: usize,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TreesArgs {
    #[arg(long)]
    max_n: usize,
    #[arg(long)]
    jobs: Option<usize>,
    /// Per-tree findings as JSON lines.
    #[arg(long)]
    findings: Option<PathBuf>,
}

fn parse_kind(s: &str) -> Result<HamiltonianKind, String> {
    HamiltonianKind::from_name(s).ok_or_else(|| format!("unknown hamiltonian '{s}'"))
}

fn parse_form(s: &str) -> Result<StateForm, String> {
    StateForm::from_name(s).ok_or_else(|| format!("unknown state form '{s}'"))
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    Convention::from_name(s).ok_or_else(|| format!("unknown convention '{s}'"))
}

/// `named:<family>[:<p1,p2,...>]` or a graph6 string.
pub fn parse_graph(spec: &str) -> Result<Graph, CliError> {
    let Some(rest) = spec.strip_prefix("named:") else {
        return graph6::decode(spec).map_err(|e| CliError::Parse(format!("graph '{spec}': {e}")));
    };
    let (name, params) = rest.split_once(':').unwrap_or((rest, ""));
    let family = Family::from_name(name).ok_or_else(|| CliError::Usage(format!("unknown graph family '{name}'")))?;
    let params = params
        .split(',')
        .filter(|p| !p.is_empty())
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("bad parameters in '{spec}'")))?;
    Ok(build_named(family, &params)?)
}

/// `a,b` for pair and plus forms, `a` for vertex states.
pub fn parse_state(form: StateForm, spec: &str) -> Result<QuantumState, CliError> {
    let bad = || CliError::Usage(format!("bad state '{spec}' for form {form}"));
    let parts = spec
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| bad())?;
    match (form, parts.as_slice()) {
        (StateForm::Vertex, [a]) => Ok(QuantumState::vertex(*a)),
        (StateForm::Vertex, _) => Err(bad()),
        (_, [a, b]) => Ok(QuantumState::new(form, *a, Some(*b))?),
        _ => Err(bad()),
    }
}

fn config(walk: &WalkArgs, convention: Convention) -> Result<ScanConfig, CliError> {
    let mut cfg = ScanConfig::new(walk.hamiltonian, walk.form, convention);
    cfg.experimental = walk.experimental;
    cfg.validate()?;
    Ok(cfg)
}

fn default_jobs(jobs: Option<usize>) -> usize {
    jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn write_target(path: &Option<PathBuf>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Analyze(a) => analyze(a, out),
        Command::Scan(a) => scan(a, out, err),
        Command::Enumerate(a) => enumerate(a, out),
        Command::Curve(a) => curve(a, out),
        Command::Trees(a) => trees(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = config(&args.walk, Convention::AllPairs)?;
    let g = parse_graph(&args.graph)?;
    let states = match &args.state {
        Some(s) => {
            let s = parse_state(cfg.form, s)?;
            s.vector(g.order())?;
            vec![s]
        }
        None => QuantumState::all(cfg.form, g.order()),
    };
    let an = Analyzer::new(&g, cfg.hamiltonian)?;
    for s in &states {
        let r = an.report(s, &any_state)?;
        writeln!(out, "{}", report::report_json(&g, cfg.hamiltonian, &r))?;
    }
    Ok(EXIT_OK)
}

fn scan(args: &ScanArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = config(&args.walk, args.convention)?;
    let mut code = EXIT_OK;
    let corpus: Vec<Graph> = match (&args.input, args.n) {
        (Some(path), n) => {
            let text = std::fs::read_to_string(path)?;
            let mut graphs = Vec::new();
            for (line, parsed) in graph6::read_corpus(&text) {
                match parsed {
                    Ok(g) => {
                        if n.is_none_or(|n| g.order() == n) {
                            graphs.push(g)
                        }
                    }
                    Err(e) => {
                        writeln!(err, "{}:{line}: {e}", path.display())?;
                        code = EXIT_PARSE;
                    }
                }
            }
            graphs
        }
        (None, Some(n)) => enumerate_connected(n)?.collect(),
        (None, None) => return Err(CliError::Usage("scan needs --n or --input".into())),
    };
    let scans = scan_corpus(&corpus, &cfg, default_jobs(args.jobs), &DecompositionCache::new())?;
    out.write_all(report::survey_csv(&cfg, &survey_rows(&scans)).as_bytes())?;
    if let Some(path) = &args.findings {
        let lines: String = scans.iter().map(|s| report::scan_jsonl(s) + "\n").collect();
        std::fs::write(path, lines)?;
    }
    Ok(code)
}

fn enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let graphs: Vec<Graph> = if args.connected_only {
        enumerate_connected(args.n)?.collect()
    } else {
        enumerate_all(args.n)?
    };
    let text: String = graphs.iter().map(|g| graph6::encode(g) + "\n").collect();
    write_target(&args.output, &text, out)?;
    Ok(EXIT_OK)
}

fn curve(args: &CurveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    config(&args.walk, Convention::AllPairs)?;
    let g = parse_graph(&args.graph)?;
    let n = g.order();
    let s1 = parse_state(args.walk.form, &args.state)?.vector(n)?;
    let s2 = parse_state(args.walk.form, &args.state2)?.vector(n)?;
    let an = Analyzer::new(&g, args.walk.hamiltonian)?;
    let points = an.spectrum().fidelity_curve(&s1, &s2, args.tmax, args.steps)?;
    write_target(&args.output, &report::curve_csv(&points), out)?;
    Ok(EXIT_OK)
}

fn trees(args: &TreesArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.max_n > pairwalk_core::survey::TREE_SCAN_LIMIT {
        return Err(Error::TooLarge {
            what: "tree scan",
            n: args.max_n,
            limit: pairwalk_core::survey::TREE_SCAN_LIMIT,
        }
        .into());
    }
    let cfg = ScanConfig::new(HamiltonianKind::Laplacian, StateForm::Pair, Convention::AllPairs);
    let mut corpus = Vec::new();
    for n in 2..=args.max_n {
        corpus.extend(enumerate_trees(n)?);
    }
    let scans = scan_corpus(&corpus, &cfg, default_jobs(args.jobs), &DecompositionCache::new())?;
    writeln!(
        out,
        "n,trees,trees_with_periodic_pair,trees_with_nonfixed_periodic_pair,trees_with_pst"
    )?;
    for n in 2..=args.max_n {
        let of_order: Vec<_> = scans.iter().filter(|s| s.graph.order() == n).collect();
        let nonfixed = of_order
            .iter()
            .filter(|s| s.findings.iter().any(|f| matches!(f.kind, FindingKind::Periodic { .. })))
            .count();
        writeln!(
            out,
            "{n},{},{},{nonfixed},{}",
            of_order.len(),
            of_order.iter().filter(|s| s.has_periodic()).count(),
            of_order.iter().filter(|s| s.has_pst()).count()
        )?;
    }
    if let Some(path) = &args.findings {
        let lines: String = scans.iter().map(|s| report::scan_jsonl(s) + "\n").collect();
        std::fs::write(path, lines)?;
    }
    Ok(EXIT_OK)
}
