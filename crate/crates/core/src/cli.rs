//! Command-line front end. Reports go to stdout as JSON, diagnostics to stderr.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::category::{check_sc1, check_sc2, check_sfunctor_laws, LawReport, SFunctor};
use crate::error::Error;
use crate::graph::families;
use crate::graph::io::{emit_graph, parse_graph, GraphFormat};
use crate::graph::sample::{all_labeled_graphs, graph_classes, random_extended_span, random_span, MAX_CLASS_VERTICES};
use crate::graph::{GraphMonoCategory, SimpleGraph};
use crate::hypergraph::{
    all_hypergraphs, parse_hypergraph_json, parse_hypergraph_text, primal_graph, random_hyper_extended_span,
    random_hyper_span, random_hypergraph, Hypergraph, HypergraphMonoCategory, HypergraphTriangulation,
    PrimalCliqueNumber,
};
use crate::triangulation::{
    delta_graph, treewidth_oracle, CliqueNumber, Convention, Triangulation, ORACLE_MAX_VERTICES,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const ORACLE_BOUND: i32 = 3;
    pub const DISAGREEMENT: i32 = 4;
    pub const LAW_VIOLATION: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(
    name = "spined",
    version,
    about = "Treewidth as the triangulation functor of a spined category"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute Δ of a graph or hypergraph file.
    Width(WidthArgs),
    /// Check spined-category and S-functor laws on generated populations.
    Laws(LawsArgs),
    /// Compare Δ with the exact treewidth oracle over a directory of graphs.
    Compare(CompareArgs),
    /// Write a graph from a named family in edge-list format.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Dimacs,
    Json,
    Hypergraph,
    HypergraphJson,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Paper,
    Standard,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Paper => Convention::PaperMaxClique,
            ConventionArg::Standard => Convention::StandardTreewidth,
        }
    }
}

#[derive(Debug, Args)]
pub struct WidthArgs {
    /// Input file, or `-` for stdin.
    pub input: PathBuf,
    /// Input format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
    #[arg(long, value_enum, default_value = "paper")]
    pub convention: ConventionArg,
    /// Also run the exact treewidth oracle and report agreement.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Sc1,
    Sc2,
    Sfunctor,
    All,
}

#[derive(Debug, Args)]
pub struct LawsArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// Largest vertex count of enumerated objects and SC2 apexes.
    #[arg(long, default_value_t = 5)]
    pub max_vertices: usize,
    /// Number of random diagrams per sampled check.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Directory of graph files; processed in file-name order.
    pub corpus: PathBuf,
    /// Files with more vertices are skipped.
    #[arg(long, default_value_t = ORACLE_MAX_VERTICES)]
    pub max_vertices: usize,
    #[arg(long, value_enum, default_value = "paper")]
    pub convention: ConventionArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Grid,
    Tree,
    Random,
    Petersen,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Vertex count (side length for `grid`; ignored for `petersen`).
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge probability of the `random` family.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Output file; the graph goes to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphDescriptor {
    pub name: String,
    pub kind: &'static str,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WidthRecord {
    pub graph: GraphDescriptor,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    pub convention: Convention,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<usize>,
    /// Always the standard convention when present.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_convention: Option<Convention>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agrees: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CompareSummary {
    pub files: usize,
    pub agreed: usize,
    pub disagreed: usize,
    pub skipped: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub version: &'static str,
    pub command: &'static str,
    pub input: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub results: Vec<WidthRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub laws: Vec<LawReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<CompareSummary>,
    pub elapsed_ms: u64,
}

impl RunReport {
    fn new(command: &'static str, input: String) -> Self {
        RunReport {
            schema: SCHEMA_VERSION,
            version: env!("CARGO_PKG_VERSION"),
            command,
            input,
            results: Vec::new(),
            laws: Vec::new(),
            summary: None,
            elapsed_ms: 0,
        }
    }
}

/// Either kind of object the CLI accepts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Graph(SimpleGraph),
    Hypergraph(Hypergraph),
}

impl Structure {
    fn as_graph(&self) -> SimpleGraph {
        match self {
            Structure::Graph(g) => g.clone(),
            Structure::Hypergraph(h) => primal_graph(h),
        }
    }

    fn describe(&self, name: String) -> GraphDescriptor {
        match self {
            Structure::Graph(g) => GraphDescriptor {
                name,
                kind: "graph",
                vertices: g.vertex_count(),
                edges: g.edge_count(),
            },
            Structure::Hypergraph(h) => GraphDescriptor {
                name,
                kind: "hypergraph",
                vertices: h.vertex_count(),
                edges: h.hyperedges().len(),
            },
        }
    }
}

pub fn infer_format(path: &Path) -> InputFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => InputFormat::Json,
        Some("dimacs" | "col" | "dim") => InputFormat::Dimacs,
        Some("hg" | "hgr" | "hyp") => InputFormat::Hypergraph,
        _ => InputFormat::Edgelist,
    }
}

/// Parses `text`; JSON documents with a `hyperedges` key are hypergraphs.
pub fn parse_structure(text: &str, format: InputFormat) -> Result<Structure, Error> {
    match format {
        InputFormat::Edgelist => parse_graph(text, GraphFormat::EdgeList).map(Structure::Graph),
        InputFormat::Dimacs => parse_graph(text, GraphFormat::Dimacs).map(Structure::Graph),
        InputFormat::Hypergraph => parse_hypergraph_text(text).map(Structure::Hypergraph),
        InputFormat::HypergraphJson => parse_hypergraph_json(text).map(Structure::Hypergraph),
        InputFormat::Json => {
            let is_hyper = serde_json::from_str::<serde_json::Value>(text)
                .map(|v| v.get("hyperedges").is_some())
                .unwrap_or(false);
            if is_hyper {
                parse_hypergraph_json(text).map(Structure::Hypergraph)
            } else {
                parse_graph(text, GraphFormat::Json).map(Structure::Graph)
            }
        }
    }
}

fn elapsed_ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn emit_report(report: &RunReport, stdout: &mut dyn Write) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *stdout, report)?;
    writeln!(stdout)
}

/// Width record for one structure, with the oracle run when requested.
fn measure(structure: &Structure, name: String, convention: Convention, oracle: bool) -> Result<WidthRecord, Error> {
    let start = Instant::now();
    let graph = structure.as_graph();
    let delta = delta_graph(&graph);
    let mut record = WidthRecord {
        graph: structure.describe(name),
        delta: Some(delta.to_convention(convention, graph.vertex_count()).value),
        convention,
        oracle: None,
        oracle_convention: None,
        agrees: None,
        error: None,
        elapsed_ms: 0,
    };
    if oracle {
        let tw = treewidth_oracle(&graph)?;
        let expected = tw.to_convention(Convention::PaperMaxClique, graph.vertex_count());
        record.oracle = Some(tw.value);
        record.oracle_convention = Some(tw.convention);
        record.agrees = Some(expected == delta);
    }
    record.elapsed_ms = elapsed_ms(start);
    Ok(record)
}

fn read_input(path: &Path) -> io::Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path)
    }
}

fn cmd_width(args: &WidthArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> io::Result<i32> {
    let start = Instant::now();
    let text = match read_input(&args.input) {
        Ok(t) => t,
        Err(e) => {
            writeln!(stderr, "error: cannot read {}: {e}", args.input.display())?;
            return Ok(exit::INPUT);
        }
    };
    let format = args.format.unwrap_or_else(|| infer_format(&args.input));
    let structure = match parse_structure(&text, format) {
        Ok(s) => s,
        Err(e) => {
            writeln!(stderr, "error: {}: {e}", args.input.display())?;
            return Ok(exit::INPUT);
        }
    };
    let name = display_name(&args.input);
    let record = match measure(&structure, name.clone(), args.convention.into(), args.oracle) {
        Ok(r) => r,
        Err(e @ Error::BoundExceeded { .. }) => {
            writeln!(stderr, "error: {e}")?;
            return Ok(exit::ORACLE_BOUND);
        }
        Err(e) => {
            writeln!(stderr, "error: {e}")?;
            return Ok(exit::FAILURE);
        }
    };
    let disagree = record.agrees == Some(false);
    let mut report = RunReport::new("width", name);
    report.results.push(record);
    report.elapsed_ms = elapsed_ms(start);
    emit_report(&report, stdout)?;
    if disagree {
        writeln!(stderr, "error: Δ disagrees with the treewidth oracle")?;
        return Ok(exit::DISAGREEMENT);
    }
    Ok(exit::OK)
}

fn display_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Seeds per suite so that running one suite alone reproduces its part of `all`.
fn suite_rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Runs the requested law suites; every failure makes the run fail.
pub fn run_law_suites(args: &LawsArgs) -> Result<Vec<LawReport>, Error> {
    if args.max_vertices > MAX_CLASS_VERTICES {
        return Err(Error::BoundExceeded {
            what: "law-suite vertex count",
            size: args.max_vertices,
            bound: MAX_CLASS_VERTICES,
        });
    }
    let k = args.max_vertices;
    let wants = |s: Suite| args.suite == s || args.suite == Suite::All;
    let mut reports = Vec::new();
    let named = |mut r: LawReport, prefix: &str| {
        r.law = format!("{prefix}/{}", r.law);
        r
    };

    if wants(Suite::Sc1) {
        let graphs: Vec<SimpleGraph> = (0..=k).flat_map(all_labeled_graphs).collect();
        reports.push(named(check_sc1(&GraphMonoCategory, &graphs, k), "graph"));
        let hypergraphs: Vec<Hypergraph> = (0..=k.min(4)).flat_map(all_hypergraphs).collect();
        reports.push(named(check_sc1(&HypergraphMonoCategory, &hypergraphs, k), "hypergraph"));
    }

    if wants(Suite::Sc2) {
        let bound = 10_000;
        let mut rng = suite_rng(args.seed, 2);
        let diagrams: Vec<_> = (0..args.samples).map(|_| random_extended_span(&mut rng, k)).collect();
        reports.push(named(check_sc2(&GraphMonoCategory, &diagrams, bound), "graph"));
        let diagrams: Vec<_> = (0..args.samples)
            .map(|_| random_hyper_extended_span(&mut rng, k))
            .collect();
        reports.push(named(
            check_sc2(&HypergraphMonoCategory, &diagrams, bound),
            "hypergraph",
        ));
    }

    if wants(Suite::Sfunctor) {
        let mut rng = suite_rng(args.seed, 3);
        let population = graph_classes(k)?;
        let max_apex = (2 * k).min(10);
        let spans: Vec<_> = (0..args.samples).map(|_| random_span(&mut rng, max_apex)).collect();
        let functors: [&dyn SFunctor<GraphMonoCategory>; 2] = [&CliqueNumber, &Triangulation];
        for f in functors {
            reports.push(named(
                check_sfunctor_laws(&GraphMonoCategory, f, &population, &spans, k),
                "graph",
            ));
        }

        use rand::Rng;
        let population: Vec<Hypergraph> = (0..args.samples.min(60))
            .map(|_| {
                let n = rng.gen_range(0..=k);
                let m = rng.gen_range(0..=n);
                random_hypergraph(&mut rng, n, m)
            })
            .collect();
        let spans: Vec<_> = (0..args.samples)
            .map(|_| {
                let apex = rng.gen_range(0..=max_apex);
                random_hyper_span(&mut rng, apex)
            })
            .collect();
        let functors: [&dyn SFunctor<HypergraphMonoCategory>; 2] = [&PrimalCliqueNumber, &HypergraphTriangulation];
        for f in functors {
            reports.push(named(
                check_sfunctor_laws(&HypergraphMonoCategory, f, &population, &spans, k),
                "hypergraph",
            ));
        }
    }
    Ok(reports)
}

fn cmd_laws(args: &LawsArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> io::Result<i32> {
    let start = Instant::now();
    let laws = match run_law_suites(args) {
        Ok(l) => l,
        Err(e) => {
            writeln!(stderr, "error: {e}")?;
            return Ok(exit::INPUT);
        }
    };
    let failed: Vec<&LawReport> = laws.iter().filter(|r| !r.passed()).collect();
    for r in &failed {
        writeln!(stderr, "law violated: {} ({} failures)", r.law, r.failures.len())?;
    }
    let code = if failed.is_empty() {
        exit::OK
    } else {
        exit::LAW_VIOLATION
    };
    let mut report = RunReport::new(
        "laws",
        format!(
            "suite={:?} max_vertices={} samples={} seed={}",
            args.suite, args.max_vertices, args.samples, args.seed
        )
        .to_lowercase(),
    );
    report.laws = laws;
    report.elapsed_ms = elapsed_ms(start);
    emit_report(&report, stdout)?;
    Ok(code)
}

fn compare_entry(path: &Path, args: &CompareArgs) -> WidthRecord {
    let name = display_name(path);
    let failed = |descriptor: GraphDescriptor, error: String| WidthRecord {
        graph: descriptor,
        delta: None,
        convention: args.convention.into(),
        oracle: None,
        oracle_convention: None,
        agrees: None,
        error: Some(error),
        elapsed_ms: 0,
    };
    let unknown = GraphDescriptor {
        name: name.clone(),
        kind: "unknown",
        vertices: 0,
        edges: 0,
    };
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return failed(unknown, format!("read error: {e}")),
    };
    let structure = match parse_structure(&text, infer_format(path)) {
        Ok(s) => s,
        Err(e) => return failed(unknown, e.to_string()),
    };
    let descriptor = structure.describe(name.clone());
    if descriptor.vertices > args.max_vertices {
        return failed(descriptor, format!("skipped: more than {} vertices", args.max_vertices));
    }
    match measure(&structure, name, args.convention.into(), true) {
        Ok(r) => r,
        Err(e) => failed(descriptor, format!("skipped: {e}")),
    }
}

fn cmd_compare(args: &CompareArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> io::Result<i32> {
    let start = Instant::now();
    let entries = match fs::read_dir(&args.corpus) {
        Ok(e) => e,
        Err(e) => {
            writeln!(stderr, "error: cannot read {}: {e}", args.corpus.display())?;
            return Ok(exit::INPUT);
        }
    };
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .filter(|p| !display_name(p).starts_with('.'))
        .collect();
    paths.sort_by_key(|p| display_name(p));

    let results: Vec<WidthRecord> = paths.par_iter().map(|p| compare_entry(p, args)).collect();
    let mut summary = CompareSummary {
        files: results.len(),
        ..Default::default()
    };
    for r in &results {
        match (&r.agrees, &r.error) {
            (Some(true), _) => summary.agreed += 1,
            (Some(false), _) => {
                summary.disagreed += 1;
                writeln!(stderr, "disagreement: {}", r.graph.name)?;
            }
            (None, Some(e)) if e.starts_with("skipped") => summary.skipped += 1,
            (None, Some(e)) => {
                summary.errors += 1;
                writeln!(stderr, "error: {}: {e}", r.graph.name)?;
            }
            (None, None) => {}
        }
    }
    let code = if summary.disagreed > 0 {
        exit::DISAGREEMENT
    } else {
        exit::OK
    };
    let mut report = RunReport::new("compare", display_name(&args.corpus));
    report.results = results;
    report.summary = Some(summary);
    report.elapsed_ms = elapsed_ms(start);
    emit_report(&report, stdout)?;
    Ok(code)
}

pub fn generate_graph(args: &GenerateArgs) -> Result<SimpleGraph, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    Ok(match args.family {
        Family::Path => families::path(args.n),
        Family::Cycle => families::cycle(args.n)?,
        Family::Complete => families::complete(args.n),
        Family::Grid => families::grid(args.n, args.n),
        Family::Tree => families::random_tree(args.n, &mut rng),
        Family::Random => {
            if !(0.0..=1.0).contains(&args.p) {
                return Err(Error::PreconditionViolation(format!(
                    "edge probability {} outside [0, 1]",
                    args.p
                )));
            }
            families::random_gnp(args.n, args.p, &mut rng)
        }
        Family::Petersen => families::petersen(),
    })
}

fn cmd_generate(args: &GenerateArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> io::Result<i32> {
    let g = match generate_graph(args) {
        Ok(g) => g,
        Err(e) => {
            writeln!(stderr, "error: {e}")?;
            return Ok(exit::INPUT);
        }
    };
    let text = emit_graph(&g, GraphFormat::EdgeList);
    match &args.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                writeln!(stderr, "error: cannot write {}: {e}", path.display())?;
                return Ok(exit::FAILURE);
            }
        }
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(exit::OK)
}

/// Runs one invocation and returns its exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Width(a) => cmd_width(a, stdout, stderr),
        Command::Laws(a) => cmd_laws(a, stdout, stderr),
        Command::Compare(a) => cmd_compare(a, stdout, stderr),
        Command::Generate(a) => cmd_generate(a, stdout, stderr),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(stderr, "error: {e}");
        exit::FAILURE
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("spined").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&cli, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn format_inference() {
        assert_eq!(infer_format(Path::new("a/b.json")), InputFormat::Json);
        assert_eq!(infer_format(Path::new("g.col")), InputFormat::Dimacs);
        assert_eq!(infer_format(Path::new("h.hg")), InputFormat::Hypergraph);
        assert_eq!(infer_format(Path::new("g.txt")), InputFormat::Edgelist);
        assert_eq!(infer_format(Path::new("noext")), InputFormat::Edgelist);
    }

    #[test]
    fn json_dispatches_on_hyperedges_key() {
        let h = parse_structure(r#"{"vertices":2,"hyperedges":[[0,1]]}"#, InputFormat::Json).unwrap();
        assert!(matches!(h, Structure::Hypergraph(_)));
        let g = parse_structure(r#"{"vertices":2,"edges":[[0,1]]}"#, InputFormat::Json).unwrap();
        assert!(matches!(g, Structure::Graph(_)));
    }

    #[test]
    fn generate_families() {
        let (code, out, _) = run_args(&["generate", "--family", "grid", "--n", "3"]);
        assert_eq!(code, 0);
        let g = parse_graph(&out, GraphFormat::EdgeList).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 12));

        let (_, a, _) = run_args(&["generate", "--family", "random", "--n", "8", "--seed", "7"]);
        let (_, b, _) = run_args(&["generate", "--family", "random", "--n", "8", "--seed", "7"]);
        assert_eq!(a, b);

        let (code, _, err) = run_args(&["generate", "--family", "cycle", "--n", "2"]);
        assert_eq!(code, exit::INPUT);
        assert!(err.contains("cycle"));

        let (code, _, _) = run_args(&["generate", "--family", "random", "--n", "3", "--p", "1.5"]);
        assert_eq!(code, exit::INPUT);
    }

    #[test]
    fn laws_reject_oversized_populations() {
        let (code, _, _) = run_args(&["laws", "--max-vertices", "9"]);
        assert_eq!(code, exit::INPUT);
    }

    #[test]
    fn width_of_missing_file_is_an_input_error() {
        let (code, out, _) = run_args(&["width", "/nonexistent/graph.txt"]);
        assert_eq!(code, exit::INPUT);
        assert!(out.is_empty());
    }
}
