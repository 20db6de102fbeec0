//! Strong `(3Δ+1)`-edge-colouring of planar graphs of girth at least 6.
//!
//! While some component has maximum degree at least 4, a reducible
//! configuration is located inside such a component and its plan edges are
//! deleted. The residual graph has maximum degree at most 3, where every edge
//! sees at most 12 edges in its distance-2 neighbourhood, so greedy colouring
//! from `⟦3Δ+1⟧` succeeds. The plans are then replayed in reverse, each
//! recolouring its edges with the lowest free colour.

mod config;
mod plan;

use serde::Serialize;
use thiserror::Error;

pub use config::{configurations_of, find_configuration, find_configuration_in, ConfigKind, Configuration};
pub use plan::{extend, plan_reduction, ExtensionPlan, PlanStep, StepAudit};

use crate::exact::strong_chromatic_index;
use crate::graph::{planar_embed, Edge, Girth, Graph};
use crate::search::Budget;
use crate::strong::{Palette, PartialColouring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Girth6Error {
    #[error("graph is not planar")]
    NotPlanar,
    #[error("girth {0} is below 6")]
    GirthTooSmall(usize),
    #[error("configuration {0} no longer holds")]
    Stale(ConfigKind),
    #[error("no free colour for {edge} while extending {kind}")]
    ExtensionInfeasible { kind: ConfigKind, edge: Edge },
    #[error("no reducible configuration in a component of maximum degree {delta} ({vertices} vertices, {edges} edges)")]
    TheoremViolation { delta: usize, vertices: usize, edges: usize },
}

impl Girth6Error {
    /// True for failures of the input contract, false for internal ones.
    pub fn is_precondition(&self) -> bool {
        matches!(self, Girth6Error::NotPlanar | Girth6Error::GirthTooSmall(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Configuration reduction with greedy completion.
    Reduction,
    /// Exact search, for inputs of maximum degree at most 3.
    Exact,
    /// Greedy saturation colouring after the exact search ran out of budget.
    ExactFallback,
}

/// One reduction, with its recolouring audit filled in on the way back.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionRecord {
    pub kind: ConfigKind,
    /// Anchor names with external vertex labels.
    pub anchors: Vec<(String, u32)>,
    pub k: usize,
    pub alpha: usize,
    /// Edge count of the graph the configuration was found in.
    pub edges_before: usize,
    pub audit: Vec<StepAudit>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Trace {
    pub delta: usize,
    pub palette: u32,
    pub method: Method,
    pub reductions: Vec<ReductionRecord>,
    /// Edges coloured greedily in the residual graph.
    pub greedy_edges: usize,
    pub audit_failures: usize,
}

#[derive(Debug, Clone)]
pub struct Girth6Colouring {
    pub colouring: PartialColouring,
    pub trace: Trace,
}

#[derive(Debug, Clone, Copy)]
pub struct Girth6Options {
    /// Budget for the exact search used when the input has `Δ ≤ 3`.
    pub small_budget: Budget,
}

impl Default for Girth6Options {
    fn default() -> Self {
        Girth6Options { small_budget: Budget::seconds(5.0) }
    }
}

/// Checks planarity, then girth.
pub fn check_preconditions(g: &Graph) -> Result<(), Girth6Error> {
    planar_embed(g).map_err(|_| Girth6Error::NotPlanar)?;
    match g.girth() {
        Girth::Finite(len) if len < 6 => Err(Girth6Error::GirthTooSmall(len)),
        _ => Ok(()),
    }
}

pub fn colour_girth6(g: &Graph) -> Result<Girth6Colouring, Girth6Error> {
    colour_girth6_with(g, &Girth6Options::default())
}

pub fn colour_girth6_with(g: &Graph, opts: &Girth6Options) -> Result<Girth6Colouring, Girth6Error> {
    check_preconditions(g)?;
    let delta = g.max_degree();
    if delta <= 3 {
        return colour_small(g, delta, opts);
    }
    let palette = Palette::new(3 * delta as u32 + 1).expect("nonzero");

    let mut work = g.clone();
    let mut stack: Vec<(ExtensionPlan, ReductionRecord)> = Vec::new();
    loop {
        let comp = work.component_ids();
        let mut hot = vec![false; work.vertex_count()];
        for v in work.vertices() {
            if work.degree(v) >= 4 {
                hot[comp[v]] = true;
            }
        }
        if !hot.iter().any(|&h| h) {
            break;
        }
        let cfg = find_configuration_in(&work, |v| hot[comp[v]]).ok_or_else(|| {
            let c = hot.iter().position(|&h| h).expect("hot component");
            let members: Vec<usize> = work.vertices().filter(|&v| comp[v] == c).collect();
            let (sub, _) = work.induced(&members);
            Girth6Error::TheoremViolation { delta: sub.max_degree(), vertices: sub.vertex_count(), edges: sub.edge_count() }
        })?;
        let plan = plan_reduction(&work, &cfg, delta)?;
        let record = ReductionRecord {
            kind: cfg.kind(),
            anchors: cfg.anchors().into_iter().map(|(n, v)| (n, work.label(v))).collect(),
            k: cfg.k(),
            alpha: cfg.alpha(),
            edges_before: work.edge_count(),
            audit: Vec::new(),
        };
        for &e in &plan.removed {
            work.remove_edge(e);
        }
        stack.push((plan, record));
    }

    let mut c = PartialColouring::new(palette);
    let mut greedy_edges = 0;
    for e in work.edge_list() {
        let colour = c.lowest_free(&work, e).expect("residual degree at most 3");
        c.set_unchecked(e, colour);
        greedy_edges += 1;
    }

    let mut reductions = Vec::with_capacity(stack.len());
    while let Some((plan, mut record)) = stack.pop() {
        for &e in &plan.removed {
            work.insert_edge(e);
        }
        record.audit = extend(&work, &mut c, &plan)?;
        reductions.push(record);
    }
    reductions.reverse();
    let audit_failures = reductions.iter().flat_map(|r| &r.audit).filter(|s| !s.holds()).count();
    Ok(Girth6Colouring {
        colouring: c,
        trace: Trace { delta, palette: palette.size(), method: Method::Reduction, reductions, greedy_edges, audit_failures },
    })
}

fn colour_small(g: &Graph, delta: usize, opts: &Girth6Options) -> Result<Girth6Colouring, Girth6Error> {
    let (colouring, method) = match strong_chromatic_index(g, opts.small_budget) {
        Ok(r) => (r.witness, Method::Exact),
        Err(e) => (e.best, Method::ExactFallback),
    };
    Ok(Girth6Colouring {
        trace: Trace {
            delta,
            palette: colouring.palette().size(),
            method,
            reductions: Vec::new(),
            greedy_edges: 0,
            audit_failures: 0,
        },
        colouring,
    })
}
