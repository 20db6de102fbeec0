use std::time::Instant;

use clap::Args;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use strongedge::generators::{generate, Family, GeneratorSpec};
use strongedge::girth6::{colour_girth6_with, Girth6Options};
use strongedge::pipeline::colour_pipeline;
use strongedge::strong::known_bound;
use strongedge::{is_strong, Budget, Graph};

use crate::report::girth_value;
use crate::{emit, print_json, Failure, Format, Outcome};

#[derive(Args)]
pub struct BenchArgs {
    /// Number of random triangulations, each subdivided once.
    #[arg(long, default_value_t = 20)]
    count: u64,
    /// Time limit in seconds for each exact sub-search.
    #[arg(long, default_value_t = 5.0)]
    budget: f64,
}

#[derive(Debug, Serialize)]
struct Row {
    name: String,
    vertices: usize,
    edges: usize,
    delta: usize,
    girth: Value,
    known_bound: Option<usize>,
    girth6: Option<usize>,
    girth6_bound: Option<usize>,
    pipeline: Option<usize>,
    pipeline_bound: Option<usize>,
    regime: Option<String>,
    ok: bool,
    error: Option<String>,
    seconds: f64,
}

/// Subdivided wheels W4..W12 and `count` subdivided stacked
/// triangulations with seeds `seed+1..=seed+count`.
fn corpus(seed: u64, count: u64) -> Vec<(String, Graph)> {
    let mut specs: Vec<(String, GeneratorSpec)> =
        (4..=12).map(|n| (format!("sub-wheel({n})"), GeneratorSpec::new(Family::Wheel { n }).subdivided(1))).collect();
    for s in seed + 1..=seed + count {
        let n = 5 + (s % 25) as usize;
        let spec = GeneratorSpec::new(Family::RandomPlanarTriangulation { n }).seed(s).subdivided(1);
        specs.push((format!("sub-tri({n}, seed {s})"), spec));
    }
    specs.into_iter().map(|(name, spec)| (name, generate(&spec).expect("valid corpus spec"))).collect()
}

fn measure(name: String, g: &Graph, budget: Budget) -> Row {
    let start = Instant::now();
    let mut errors = Vec::new();
    let g6 = match colour_girth6_with(g, &Girth6Options { small_budget: budget }) {
        Ok(out) if is_strong(g, &out.colouring) => Some((out.colouring.colours_used(), out.trace.palette as usize)),
        Ok(_) => {
            errors.push("girth6: invalid colouring".to_string());
            None
        }
        Err(e) => {
            errors.push(format!("girth6: {e}"));
            None
        }
    };
    let pipe = match colour_pipeline(g, budget) {
        Ok(out) if is_strong(g, &out.colouring) => Some(out.report),
        Ok(_) => {
            errors.push("pipeline: invalid colouring".to_string());
            None
        }
        Err(e) => {
            errors.push(format!("pipeline: {e}"));
            None
        }
    };
    let within = g6.is_none_or(|(used, bound)| used <= bound) && pipe.as_ref().is_none_or(|r| r.colours_used <= r.bound_claimed);
    if !within {
        errors.push("colours above the claimed bound".to_string());
    }
    Row {
        name,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        delta: g.max_degree(),
        girth: girth_value(g.girth()),
        known_bound: known_bound(g.max_degree(), g.girth()).ok(),
        girth6: g6.map(|x| x.0),
        girth6_bound: g6.map(|x| x.1),
        pipeline: pipe.as_ref().map(|r| r.colours_used),
        pipeline_bound: pipe.as_ref().map(|r| r.bound_claimed),
        regime: pipe.as_ref().map(|r| r.regime.to_string()),
        ok: errors.is_empty(),
        error: errors.first().cloned(),
        seconds: start.elapsed().as_secs_f64(),
    }
}

pub fn run(args: &BenchArgs, seed: u64, format: Option<Format>) -> Outcome {
    let budget = Budget::seconds(args.budget);
    let rows: Vec<Row> = corpus(seed, args.count).into_par_iter().map(|(name, g)| measure(name, &g, budget)).collect();
    let failures = rows.iter().filter(|r| !r.ok).count();
    if format == Some(Format::Json) {
        print_json(&rows)?;
    } else {
        print_table(&rows)?;
    }
    if failures > 0 {
        return Err(Failure::Internal(format!("{failures} corpus instances failed")));
    }
    Ok(())
}

fn print_table(rows: &[Row]) -> Outcome {
    use std::fmt::Write;
    let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<26} {:>5} {:>5} {:>3} {:>6} {:>6} {:>7} {:>8} {:>9} {:>10} {:>8}",
        "instance", "V", "E", "D", "girth", "known", "girth6", "3D+1", "pipeline", "claimed", "regime"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:<26} {:>5} {:>5} {:>3} {:>6} {:>6} {:>7} {:>8} {:>9} {:>10} {:>8}{}",
            r.name,
            r.vertices,
            r.edges,
            r.delta,
            r.girth.to_string().trim_matches('"'),
            opt(r.known_bound),
            opt(r.girth6),
            opt(r.girth6_bound),
            opt(r.pipeline),
            opt(r.pipeline_bound),
            r.regime.as_deref().unwrap_or("-"),
            r.error.as_ref().map_or(String::new(), |e| format!("  FAIL {e}")),
        );
    }
    emit(&out)
}
