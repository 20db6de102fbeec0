//! Removal sets, recolouring orders and per-step free-colour guarantees.
//!
//! A guarantee is a lower bound on `|L ∖ SC(N2(e))|` at the moment `e` is
//! coloured, with `|L| = 3D+1`, `D` the palette degree. It counts every plan
//! edge coloured before `e`, so it may sit one below a bound that ignores
//! the order of colouring.

use serde::Serialize;

use super::config::Configuration;
use super::Girth6Error;
use crate::graph::{Edge, Graph};
use crate::strong::{Colour, PartialColouring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlanStep {
    pub edge: Edge,
    pub guarantee: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionPlan {
    pub config: Configuration,
    /// Edges deleted to form the reduced graph.
    pub removed: Vec<Edge>,
    /// Edges of the reduced graph that are uncoloured before recolouring.
    pub uncoloured: Vec<Edge>,
    /// Recolouring order over `removed ∪ uncoloured`.
    pub steps: Vec<PlanStep>,
}

/// Outcome of one recolouring step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StepAudit {
    pub edge: Edge,
    pub guaranteed: i64,
    pub actual: usize,
    pub colour: Colour,
}

impl StepAudit {
    pub fn holds(&self) -> bool {
        self.actual as i64 >= self.guaranteed
    }
}

/// Builds the extension plan of `cfg` in `g` for palette degree `delta`.
pub fn plan_reduction(g: &Graph, cfg: &Configuration, delta: usize) -> Result<ExtensionPlan, Girth6Error> {
    if !cfg.holds(g) {
        return Err(Girth6Error::Stale(cfg.kind()));
    }
    let d = delta as i64;
    let e = Edge::new;
    let step = |edge: Edge, guarantee: i64| PlanStep { edge, guarantee };
    let mut uncoloured = Vec::new();
    let steps: Vec<PlanStep> = match cfg {
        &Configuration::C1 { u, v } => vec![step(e(u, v), 1)],
        &Configuration::C2 { u, v, w } => vec![step(e(u, v), d - 1), step(e(u, w), d - 2)],
        &Configuration::C3 { u, v, w } => vec![step(e(u, v), d - 3), step(e(u, w), d - 3)],
        &Configuration::C4 { u, v, w, v1, v2, .. } => {
            uncoloured = vec![e(v, v1), e(v, v2)];
            vec![step(e(u, v), 2 * d - 4), step(e(u, w), d - 3), step(e(v, v1), d - 2), step(e(v, v2), d - 3)]
        }
        Configuration::C5 { u, k, leaves } => vec![step(e(*u, leaves[0]), d - *k as i64 + 3)],
        Configuration::C6 { u, k, nbrs } => {
            nbrs.iter().map(|&y| step(e(*u, y), 2 * d - 2 * *k as i64 + 3)).collect()
        }
        &Configuration::C7 { u, k, u1, v1, .. } => {
            let k = k as i64;
            match v1 {
                None => vec![step(e(u, u1), 1)],
                Some(v1) if g.degree(v1) <= 3 => {
                    vec![step(e(u, u1), 2 * d - 2 * k + 3), step(e(u1, v1), d - k + 1)]
                }
                Some(v1) => vec![step(e(u, u1), 2 * d - 2 * k + 2), step(e(u1, v1), 2 * d - k - 3)],
            }
        }
        Configuration::C8 { u, k, paths } => paths_plan(g, d, *u, *k, 0, paths, &mut uncoloured),
        Configuration::C9 { u, k, alpha, paths } => paths_plan(g, d, *u, *k, *alpha, paths, &mut uncoloured),
    };
    let removed: Vec<Edge> = steps.iter().map(|s| s.edge).filter(|x| !uncoloured.contains(x)).collect();
    Ok(ExtensionPlan { config: cfg.clone(), removed, uncoloured, steps })
}

/// C8/C9: colour the spokes `uu_i`, then the far edges `u_i v_i`. A path
/// ending in a 3⁻-vertex goes last; when every path ends in a `4_3`-vertex,
/// one further edge at the last of them is uncoloured instead.
fn paths_plan(
    g: &Graph,
    d: i64,
    u: usize,
    k: usize,
    alpha: usize,
    paths: &[(usize, usize)],
    uncoloured: &mut Vec<Edge>,
) -> Vec<PlanStep> {
    let (k, a) = (k as i64, alpha as i64);
    let mut order = paths.to_vec();
    let light = order.iter().position(|&(_, v)| g.degree(v) <= 3);
    if let Some(i) = light {
        let p = order.remove(i);
        order.push(p);
    }
    let (um, vm) = *order.last().expect("at least one path");
    let far = |v: usize| if g.degree(v) <= 3 { d - k + 1 } else { 2 * d - k - 3 };
    let mut steps: Vec<PlanStep> = order[..order.len() - 1]
        .iter()
        .enumerate()
        .map(|(i, &(ui, _))| PlanStep { edge: Edge::new(u, ui), guarantee: d - a - 4 - i as i64 })
        .collect();
    steps.push(PlanStep { edge: Edge::new(u, um), guarantee: d - k + 1 });
    if light.is_none() {
        let w = g.neighbours(vm).iter().copied().find(|&t| t != um && g.degree(t) == 2).expect("4_3-vertex");
        uncoloured.push(Edge::new(w, vm));
        steps.push(PlanStep { edge: Edge::new(w, vm), guarantee: d - 2 });
    }
    steps.push(PlanStep { edge: Edge::new(um, vm), guarantee: far(vm) });
    for &(ui, vi) in &order[..order.len() - 1] {
        steps.push(PlanStep { edge: Edge::new(ui, vi), guarantee: far(vi) });
    }
    steps
}

/// Recolours the plan edges of `plan` in order against `g`, which must
/// contain them. Edges listed as uncoloured are cleared first.
pub fn extend(g: &Graph, c: &mut PartialColouring, plan: &ExtensionPlan) -> Result<Vec<StepAudit>, Girth6Error> {
    for &x in &plan.uncoloured {
        c.unassign(x);
    }
    let mut audit = Vec::with_capacity(plan.steps.len());
    for s in &plan.steps {
        let free = c.free_colours(g, s.edge).map_err(|_| Girth6Error::ExtensionInfeasible {
            kind: plan.config.kind(),
            edge: s.edge,
        })?;
        let colour = *free.iter().next().ok_or(Girth6Error::ExtensionInfeasible { kind: plan.config.kind(), edge: s.edge })?;
        c.set_unchecked(s.edge, colour);
        audit.push(StepAudit { edge: s.edge, guaranteed: s.guarantee, actual: free.len(), colour });
    }
    Ok(audit)
}

