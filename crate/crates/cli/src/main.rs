//! `strongedge` command-line interface. JSON goes to stdout, logs to
//! stderr. Exit codes: 0 success, 1 precondition or input error, 2 internal
//! inconsistency.

mod bench;
mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use strongedge::discharge::{discharge, Verdict};
use strongedge::exact::{greedy_strong_colouring, is_strong_k_colourable, strong_chromatic_index, KColourability};
use strongedge::generators::{generate, Family, GeneratorSpec};
use strongedge::girth6::{colour_girth6_with, Girth6Error, Girth6Options, Method};
use strongedge::graph::planar_embed;
use strongedge::pipeline::{colour_pipeline, PipelineError};
use strongedge::strong::{trivial_lower_bound, ColouringDocument};
use strongedge::{parse_graph, verify_strong, Budget, Graph, PartialColouring};

use report::{analysis, girth_value, RunReport};

#[derive(Parser)]
#[command(name = "strongedge", version, about = "Strong edge-colouring toolkit for sparse planar graphs")]
struct Cli {
    /// Seed for randomised generators and corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format for commands that support several.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum degree, girth, planarity and bounds of a graph.
    Analyze { graph: PathBuf },
    /// Strong colouring by greedy saturation, or exactly with `--exact`.
    Solve(SolveArgs),
    /// Strong colouring by the girth-6 algorithm or the matching pipeline.
    Colour(ColourArgs),
    /// Discharging audit of the planar embedding.
    Discharge { graph: PathBuf },
    /// Checks a colouring file against a graph.
    Verify { graph: PathBuf, colouring: PathBuf },
    /// Writes a generated graph as an edge list.
    Gen(GenArgs),
    /// Runs both colouring algorithms over a generated corpus.
    Bench(bench::BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    graph: PathBuf,
    /// Exact search instead of a greedy upper bound.
    #[arg(long)]
    exact: bool,
    /// Decide colourability with `k` colours (implies `--exact`).
    #[arg(long)]
    k: Option<usize>,
    /// Search time limit in seconds.
    #[arg(long)]
    timeout: Option<f64>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("algorithm").required(true).args(["girth6", "pipeline"])))]
struct ColourArgs {
    graph: PathBuf,
    #[arg(long)]
    girth6: bool,
    #[arg(long)]
    pipeline: bool,
    /// Time limit in seconds for each exact sub-search.
    #[arg(long, default_value_t = 5.0)]
    budget: f64,
    /// Writes the algorithm trace as JSON to this file.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// cycle, path, star, wheel, grid, hex-patch or random-planar-triangulation.
    family: String,
    /// Family parameters, e.g. `6` for cycle(6) or `2 3` for grid(2, 3).
    params: Vec<usize>,
    /// Interior vertices placed on every edge.
    #[arg(long, default_value_t = 0)]
    subdivide: usize,
}

pub(crate) enum Failure {
    Precondition(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Precondition(_) => 1,
            Failure::Internal(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Precondition(m) | Failure::Internal(m) => m,
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = std::env::var("STRONGEDGE_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            log::warn!("STRONGEDGE_THREADS ignored: {e}");
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Analyze { graph } => analyze(graph, cli.format),
        Command::Solve(args) => solve(args),
        Command::Colour(args) => colour(args, cli.format),
        Command::Discharge { graph } => discharge_cmd(graph),
        Command::Verify { graph, colouring } => verify(graph, colouring),
        Command::Gen(args) => gen(args, cli.seed, cli.format),
        Command::Bench(args) => bench::run(args, cli.seed, cli.format),
    }
}

pub(crate) struct Input {
    pub graph: Graph,
    pub hash: String,
}

fn read_input(path: &Path) -> Result<Input, Failure> {
    let bytes = fs::read(path).map_err(|e| Failure::Precondition(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes).map_err(|_| Failure::Precondition(format!("{}: not UTF-8", path.display())))?;
    let graph = parse_graph(&text).map_err(|e| Failure::Precondition(format!("{}: {e}", path.display())))?;
    Ok(Input { graph, hash: report::sha256(text.as_bytes()) })
}

/// Writes to stdout; a reader that closed the pipe early is not an error.
pub(crate) fn emit(text: &str) -> Outcome {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::Internal(format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

pub(crate) fn print_json(value: &impl serde::Serialize) -> Outcome {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
    emit(&(text + "\n"))
}

fn analyze(path: &Path, format: Option<Format>) -> Outcome {
    let input = read_input(path)?;
    if format == Some(Format::Dot) {
        return emit(&input.graph.to_dot(|_| None));
    }
    let mut doc = analysis(&input.graph);
    doc["input_hash"] = json!(input.hash);
    print_json(&doc)
}

fn solve(args: &SolveArgs) -> Outcome {
    let start = Instant::now();
    let input = read_input(&args.graph)?;
    let g = &input.graph;
    let budget = args.timeout.map_or(Budget::unlimited(), Budget::seconds);
    let body = if let Some(k) = args.k {
        match is_strong_k_colourable(g, k, budget) {
            KColourability::Colourable(c) => json!({ "k": k, "status": "colourable", "colouring": c.to_document(g) }),
            KColourability::Unsat => json!({ "k": k, "status": "unsat" }),
            KColourability::Unknown => json!({ "k": k, "status": "unknown" }),
        }
    } else if args.exact {
        match strong_chromatic_index(g, budget) {
            Ok(r) => json!({
                "status": "solved",
                "chi_s": r.chi_s,
                "stats": r.stats,
                "colouring": r.witness.to_document(g),
            }),
            Err(e) => json!({
                "status": "budget-exhausted",
                "lower": e.lower,
                "upper": e.upper,
                "stats": e.stats,
                "colouring": e.best.to_document(g),
            }),
        }
    } else {
        let c = greedy_strong_colouring(g);
        json!({ "status": "upper-bound", "colours_used": c.colours_used(), "colouring": c.to_document(g) })
    };
    if let Some(doc) = body.get("colouring") {
        let doc: ColouringDocument = serde_json::from_value(doc.clone()).map_err(|e| Failure::Internal(e.to_string()))?;
        let c = PartialColouring::from_document(g, &doc).map_err(|e| Failure::Internal(e.to_string()))?;
        if !verify_strong(g, &c, true).is_empty() {
            return Err(Failure::Internal("solver returned an invalid colouring".into()));
        }
    }
    print_json(&json!({
        "input_hash": input.hash,
        "trivial_lower_bound": trivial_lower_bound(g),
        "elapsed_seconds": start.elapsed().as_secs_f64(),
        "result": body,
    }))
}

fn colour(args: &ColourArgs, format: Option<Format>) -> Outcome {
    let start = Instant::now();
    let input = read_input(&args.graph)?;
    let g = &input.graph;
    let budget = Budget::seconds(args.budget);
    let (algorithm, colouring, bound, trace): (&str, PartialColouring, usize, Value) = if args.girth6 {
        let out = colour_girth6_with(g, &Girth6Options { small_budget: budget }).map_err(girth6_failure)?;
        // a budget-limited exact search falls back to a greedy colouring whose size is its own bound
        let bound = match out.trace.method {
            Method::ExactFallback => out.trace.palette as usize,
            Method::Reduction | Method::Exact => 3 * out.trace.delta + 1,
        };
        let trace = serde_json::to_value(&out.trace).map_err(|e| Failure::Internal(e.to_string()))?;
        ("girth6", out.colouring, bound, trace)
    } else {
        let out = colour_pipeline(g, budget).map_err(pipeline_failure)?;
        let classes: Vec<Value> = out
            .edge_colouring
            .iter()
            .map(|(e, c)| json!({ "edge": [g.label(e.u), g.label(e.v)], "class": c }))
            .collect();
        let trace = json!({ "report": out.report, "classes": classes });
        ("pipeline", out.colouring, out.report.bound_claimed, trace)
    };
    let violations = verify_strong(g, &colouring, true);
    let used = colouring.colours_used();
    let report = RunReport::new(std::env::args().collect(), &input, algorithm, used, bound, violations.is_empty(), start);
    if let Some(path) = &args.trace {
        let text = serde_json::to_string_pretty(&trace).map_err(|e| Failure::Internal(e.to_string()))?;
        fs::write(path, text).map_err(|e| Failure::Precondition(format!("{}: {e}", path.display())))?;
    }
    if !violations.is_empty() {
        return Err(Failure::Internal(format!("{algorithm} produced an invalid colouring: {}", violations[0])));
    }
    if used > bound {
        return Err(Failure::Internal(format!("{algorithm} used {used} colours, above its bound {bound}")));
    }
    if format == Some(Format::Dot) {
        return emit(&g.to_dot(|e| colouring.get(e)));
    }
    let mut doc = json!({ "report": report, "colouring": colouring.to_document(g) });
    if algorithm == "pipeline" {
        doc["pipeline"] = trace["report"].clone();
    }
    print_json(&doc)
}

fn girth6_failure(e: Girth6Error) -> Failure {
    if e.is_precondition() {
        Failure::Precondition(e.to_string())
    } else {
        Failure::Internal(e.to_string())
    }
}

fn pipeline_failure(e: PipelineError) -> Failure {
    if e.is_precondition() {
        Failure::Precondition(e.to_string())
    } else {
        Failure::Internal(e.to_string())
    }
}

fn discharge_cmd(path: &Path) -> Outcome {
    let input = read_input(path)?;
    let embedding = planar_embed(&input.graph).map_err(|_| Failure::Precondition("graph is not planar".into()))?;
    let (_, _, report) = discharge(&embedding).map_err(|e| Failure::Precondition(e.to_string()))?;
    print_json(&json!({ "input_hash": input.hash, "report": report }))?;
    if !report.replay_ok || report.final_total != report.initial_total {
        return Err(Failure::Internal("charge is not conserved".into()));
    }
    if matches!(report.verdict, Verdict::TheoremViolation) {
        return Err(Failure::Internal("no reducible configuration on an in-scope graph".into()));
    }
    Ok(())
}

/// Accepts the document written by `colour` and `solve`, or a bare
/// colouring document.
fn verify(graph: &Path, colouring: &Path) -> Outcome {
    let input = read_input(graph)?;
    let g = &input.graph;
    let text = fs::read_to_string(colouring).map_err(|e| Failure::Precondition(format!("{}: {e}", colouring.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Precondition(format!("{}: {e}", colouring.display())))?;
    let doc_value = value
        .get("colouring")
        .or_else(|| value.get("result").and_then(|r| r.get("colouring")))
        .unwrap_or(&value)
        .clone();
    let doc: ColouringDocument =
        serde_json::from_value(doc_value).map_err(|e| Failure::Precondition(format!("{}: {e}", colouring.display())))?;
    let c = PartialColouring::from_document(g, &doc).map_err(|e| Failure::Precondition(e.to_string()))?;
    let violations = verify_strong(g, &c, true);
    let labelled: Vec<Value> = violations
        .iter()
        .map(|v| {
            json!({
                "kind": v.kind,
                "edge": [g.label(v.edge.u), g.label(v.edge.v)],
                "other": v.other.map(|o| [g.label(o.u), g.label(o.v)]),
            })
        })
        .collect();
    print_json(&json!({
        "valid": violations.is_empty(),
        "colours_used": c.colours_used(),
        "palette": doc.palette,
        "violations": labelled,
    }))?;
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Precondition(format!("colouring is not strong: {}", violations[0])))
    }
}

fn gen(args: &GenArgs, seed: u64, format: Option<Format>) -> Outcome {
    let family = Family::from_args(&args.family, &args.params).map_err(|e| Failure::Precondition(e.to_string()))?;
    let spec = GeneratorSpec::new(family).seed(seed).subdivided(args.subdivide);
    let g = generate(&spec).map_err(|e| Failure::Precondition(e.to_string()))?;
    match format {
        Some(Format::Dot) => emit(&g.to_dot(|_| None))?,
        Some(Format::Json) => {
            let edges: Vec<[u32; 2]> = g.edges().map(|e| [g.label(e.u), g.label(e.v)]).collect();
            print_json(&json!({ "spec": spec, "girth": girth_value(g.girth()), "edges": edges }))?;
        }
        None => {
            emit(&format!("# {family} seed {seed} subdivide {}\n{}", args.subdivide, g.to_edge_list()))?;
        }
    }
    Ok(())
}
