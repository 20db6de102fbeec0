//! One PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strongedge::discharge::discharge;
use strongedge::exact::strong_chromatic_index;
use strongedge::girth6::{check_preconditions, colour_girth6, find_configuration, Girth6Error};
use strongedge::graph::planar_embed;
use strongedge::pipeline::{colour_pipeline, Regime};
use strongedge::strong::{known_bound, trivial_lower_bound};
use strongedge::{is_strong, Budget, Girth, Graph, Palette, PartialColouring};

use common::{brute_force_chi_s, cycle, girth6_corpus, pair_oracle, planar_corpus, with_pendants};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// Strong chromatic indices of C3..C12, frozen from the brute-force oracle.
const CYCLE_TABLE: [usize; 10] = [3, 4, 5, 3, 4, 4, 3, 4, 4, 3];

fn criterion1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (i, n) in (3..=12).enumerate() {
        let g = cycle(n);
        let solved = strong_chromatic_index(&g, Budget::unlimited()).map(|r| r.chi_s).ok();
        if solved != Some(CYCLE_TABLE[i]) {
            bad.push(format!("C{n}: solver {solved:?}, table {}", CYCLE_TABLE[i]));
        }
    }
    let solver_time = start.elapsed();
    for (i, n) in (3..=12).enumerate() {
        let oracle = brute_force_chi_s(&cycle(n));
        if oracle != CYCLE_TABLE[i] {
            bad.push(format!("C{n}: oracle {oracle}, table {}", CYCLE_TABLE[i]));
        }
    }
    let fast = solver_time < Duration::from_secs(5);
    if !fast {
        bad.push(format!("solver took {solver_time:.2?}"));
    }
    outcome(bad.is_empty(), format!("solver {solver_time:.2?}; {}", summary(&bad)))
}

struct Girth6Run {
    name: String,
    graph: Graph,
    result: Result<strongedge::girth6::Girth6Colouring, Girth6Error>,
}

fn run_girth6_corpus() -> (Vec<Girth6Run>, Duration) {
    let start = Instant::now();
    let runs = girth6_corpus()
        .into_iter()
        .map(|(name, graph)| {
            let result = colour_girth6(&graph);
            Girth6Run { name, graph, result }
        })
        .collect();
    (runs, start.elapsed())
}

fn criterion2(runs: &[Girth6Run], elapsed: Duration) -> Outcome {
    let mut bad = Vec::new();
    for r in runs {
        let g = &r.graph;
        let scoped = g.is_connected() && g.girth().at_least(6) && g.max_degree() >= 4 && planar_embed(g).is_ok();
        if !scoped {
            bad.push(format!("{}: not a connected planar girth-6 graph with D >= 4", r.name));
            continue;
        }
        match &r.result {
            Ok(out) if !is_strong(g, &out.colouring) => bad.push(format!("{}: not strong", r.name)),
            Ok(out) if out.colouring.colours_used() > 3 * g.max_degree() + 1 => {
                bad.push(format!("{}: {} colours > 3D+1", r.name, out.colouring.colours_used()))
            }
            Ok(_) => {}
            Err(e) => bad.push(format!("{}: {e}", r.name)),
        }
    }
    if runs.len() < 100 {
        bad.push(format!("corpus has {} graphs", runs.len()));
    }
    if elapsed >= Duration::from_secs(60) {
        bad.push(format!("took {elapsed:.2?}"));
    }
    outcome(bad.is_empty(), format!("{} graphs in {elapsed:.2?}; {}", runs.len(), summary(&bad)))
}

fn criterion3(runs: &[Girth6Run]) -> Outcome {
    let mut bad = Vec::new();
    let mut reductions = 0;
    for r in runs {
        if find_configuration(&r.graph).is_none() {
            bad.push(format!("{}: no configuration on the input", r.name));
        }
        match &r.result {
            Ok(out) => {
                reductions += out.trace.reductions.len();
                if out.trace.reductions.is_empty() {
                    bad.push(format!("{}: no reduction recorded", r.name));
                }
            }
            Err(e) => bad.push(format!("{}: {e}", r.name)),
        }
    }
    outcome(bad.is_empty(), format!("{reductions} reductions; {}", summary(&bad)))
}

fn criterion4(runs: &[Girth6Run]) -> Outcome {
    let (mut steps, mut failures) = (0usize, Vec::new());
    for r in runs {
        let Ok(out) = &r.result else {
            failures.push(format!("{}: run failed", r.name));
            continue;
        };
        for rec in &out.trace.reductions {
            for a in &rec.audit {
                steps += 1;
                if (a.actual as i64) < a.guaranteed {
                    failures.push(format!("{}: {} step {} has {} < {}", r.name, rec.kind, a.edge, a.actual, a.guaranteed));
                }
            }
        }
        if out.trace.audit_failures != 0 {
            failures.push(format!("{}: trace reports {} audit failures", r.name, out.trace.audit_failures));
        }
    }
    let pass = failures.is_empty() && steps > 0;
    outcome(pass, format!("{steps} extend steps; {}", summary(&failures)))
}

fn criterion5() -> Outcome {
    let mut bad = Vec::new();
    let (mut count, mut checks) = (0, 0);
    let twelve = num_rational::Ratio::from_integer(-12i64);
    let pendant = girth6_corpus()
        .into_iter()
        .take(30)
        .enumerate()
        .map(|(i, (name, g))| (format!("{name} + leaves"), with_pendants(&g, 2 + i % 4)));
    let corpus = planar_corpus().into_iter().chain(girth6_corpus().into_iter().take(30)).chain(pendant);
    for (name, g) in corpus {
        let Ok(e) = planar_embed(&g) else {
            bad.push(format!("{name}: not planar"));
            continue;
        };
        count += 1;
        let (init, fin, report) = match discharge(&e) {
            Ok(x) => x,
            Err(err) => {
                bad.push(format!("{name}: {err}"));
                continue;
            }
        };
        if init.total() != twelve || fin.total() != twelve || report.initial_total != twelve || report.final_total != twelve {
            bad.push(format!("{name}: totals {} / {}", init.total(), fin.total()));
        }
        if !report.replay_ok {
            bad.push(format!("{name}: ledger replay does not reconcile"));
        }
        if g.girth().at_least(6) && g.edge_count() >= g.vertex_count() {
            checks += fin.face_checks.len();
            if fin.face_checks.iter().any(|c| !c.holds) {
                bad.push(format!("{name}: face inequality fails"));
            }
        }
    }
    if count < 50 {
        bad.push(format!("only {count} instances"));
    }
    if checks == 0 {
        bad.push("no face inequality was exercised".into());
    }
    outcome(bad.is_empty(), format!("{count} instances, {checks} face checks; {}", summary(&bad)))
}

fn criterion6() -> Outcome {
    let mut bad = Vec::new();
    let (mut count, mut tight) = (0, 0);
    for (name, g) in planar_corpus() {
        count += 1;
        let out = match colour_pipeline(&g, Budget::seconds(5.0)) {
            Ok(out) => out,
            Err(e) => {
                bad.push(format!("{name}: {e}"));
                continue;
            }
        };
        let r = &out.report;
        let used = out.colouring.colours_used();
        let d = g.max_degree();
        if !is_strong(&g, &out.colouring) {
            bad.push(format!("{name}: not strong"));
        }
        if used != r.colours_used || used > r.class_count * r.max_c || used > r.bound_claimed {
            bad.push(format!("{name}: {used} colours, {} classes x {}, claimed {}", r.class_count, r.max_c, r.bound_claimed));
        }
        let expected = match (r.regime, r.four_colour_success) {
            (Regime::Class1, true) => 4 * d,
            (Regime::Vizing, true) => 4 * (d + 1),
            (_, false) => 5 * r.class_count,
        };
        if r.bound_claimed != expected || used > expected {
            bad.push(format!("{name}: bound {} expected {expected}", r.bound_claimed));
        }
        if r.regime == Regime::Class1 && r.four_colour_success {
            tight += 1;
        }
    }
    if count < 50 {
        bad.push(format!("only {count} instances"));
    }
    outcome(bad.is_empty(), format!("{count} instances, {tight} in the 4D regime; {}", summary(&bad)))
}

fn criterion7() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for (name, g) in planar_corpus().into_iter().chain(girth6_corpus()) {
        if g.edge_count() > 20 || g.edge_count() == 0 {
            continue;
        }
        count += 1;
        let chi = match strong_chromatic_index(&g, Budget::seconds(20.0)) {
            Ok(r) => r.chi_s,
            Err(e) => {
                bad.push(format!("{name}: {e}"));
                continue;
            }
        };
        if chi < trivial_lower_bound(&g) {
            bad.push(format!("{name}: exact {chi} below lower bound"));
        }
        if g.edge_count() <= 12 && brute_force_chi_s(&g) != chi {
            bad.push(format!("{name}: exact {chi} disagrees with brute force"));
        }
        if check_preconditions(&g).is_ok() {
            match colour_girth6(&g) {
                Ok(out) if out.colouring.colours_used() < chi => bad.push(format!("{name}: girth6 below exact")),
                Ok(_) => {}
                Err(e) => bad.push(format!("{name}: girth6 {e}")),
            }
        }
        match colour_pipeline(&g, Budget::seconds(5.0)) {
            Ok(out) if out.colouring.colours_used() < chi => bad.push(format!("{name}: pipeline below exact")),
            Ok(_) => {}
            Err(e) => bad.push(format!("{name}: pipeline {e}")),
        }
    }
    outcome(bad.is_empty(), format!("{count} graphs with at most 20 edges; {}", summary(&bad)))
}

fn criterion8() -> Outcome {
    // (girth, [D >= 7, D in {5, 6}, D = 4, D = 3]) as (a, b) for a·D + b
    let rows: [(Girth, [(usize, usize); 4]); 6] = [
        (Girth::Finite(3), [(4, 0), (4, 4), (4, 4), (3, 1)]),
        (Girth::Finite(4), [(4, 0), (4, 0), (4, 4), (3, 1)]),
        (Girth::Finite(5), [(4, 0), (4, 0), (4, 0), (3, 1)]),
        (Girth::Finite(6), [(3, 1), (3, 1), (3, 1), (3, 0)]),
        (Girth::Finite(7), [(3, 0), (3, 0), (3, 0), (3, 0)]),
        (Girth::Acyclic, [(3, 0), (3, 0), (3, 0), (3, 0)]),
    ];
    let columns: [&[usize]; 4] = [&[7, 8, 11, 40], &[5, 6], &[4], &[3]];
    let mut bad = Vec::new();
    let mut cells = 0;
    for (i, (girth, row)) in rows.iter().enumerate() {
        for (col, &(a, b)) in columns.iter().zip(row) {
            if i < 5 {
                cells += 1;
            }
            for &d in *col {
                let got = known_bound(d, *girth).ok();
                if got != Some(a * d + b) {
                    bad.push(format!("D={d}, {girth:?}: {got:?} expected {}", a * d + b));
                }
                if let Girth::Finite(7) = girth {
                    let deeper = known_bound(d, Girth::Finite(12)).ok();
                    if deeper != got {
                        bad.push(format!("D={d}, g=12 differs from g=7"));
                    }
                }
            }
        }
    }
    if known_bound(2, Girth::Finite(6)).is_ok() {
        bad.push("D=2 accepted".into());
    }
    outcome(bad.is_empty() && cells == 20, format!("{cells} cells; {}", summary(&bad)))
}

fn criterion9(runs: &[Girth6Run]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut bases: Vec<(Graph, PartialColouring)> = runs
        .iter()
        .filter_map(|r| r.result.as_ref().ok().map(|o| (r.graph.clone(), o.colouring.clone())))
        .take(40)
        .collect();
    for (_, g) in planar_corpus().into_iter().take(30) {
        if let Ok(out) = colour_pipeline(&g, Budget::seconds(5.0)) {
            bases.push((g, out.colouring));
        }
    }
    let mut bad = Vec::new();
    let (mut flagged, mut accepted) = (0, 0);
    for _ in 0..1000 {
        let (g, base) = &bases[rng.gen_range(0..bases.len())];
        if g.edge_count() == 0 {
            continue;
        }
        let edges = g.edge_list();
        let e = edges[rng.gen_range(0..edges.len())];
        let old = base.get(e).expect("total");
        let top = base.palette().size() + 1;
        let new = loop {
            let c = rng.gen_range(1..=top);
            if c != old {
                break c;
            }
        };
        let mut c = base.clone();
        c.set_palette(Palette::new(top).unwrap());
        c.set_unchecked(e, new);
        let oracle = pair_oracle(g, &c);
        let verdict = is_strong(g, &c);
        if oracle != verdict {
            bad.push(format!("edge {e} -> {new}: oracle {oracle}, verify {verdict}"));
        }
        if oracle {
            accepted += 1;
        } else {
            flagged += 1;
        }
    }
    let pass = bad.is_empty() && flagged > 0 && accepted > 0;
    outcome(pass, format!("1000 mutations, {flagged} conflicting, {accepted} clean; {}", summary(&bad)))
}

fn summary(problems: &[String]) -> String {
    match problems.len() {
        0 => "no failures".into(),
        n => format!("{n} failures, first: {}", problems[0]),
    }
}

fn main() {
    let (runs, elapsed) = run_girth6_corpus();
    let results = [
        ("cycle oracle table", criterion1()),
        ("girth-6 realisation", criterion2(&runs, elapsed)),
        ("configuration completeness", criterion3(&runs)),
        ("counting-bound audit", criterion4(&runs)),
        ("discharging identities", criterion5()),
        ("pipeline bounds", criterion6()),
        ("oracle consistency", criterion7()),
        ("table fidelity", criterion8()),
        ("mutation detection", criterion9(&runs)),
    ];
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        println!("criterion {} {}: {} ({})", i + 1, name, if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
