//! Strong colouring through a matching decomposition.
//!
//! A proper edge-colouring splits the edges into matchings. For each
//! matching `M`, the conflict graph `G_M` joins two edges of `M` at distance
//! 2; it is a minor of the host, hence planar when the host is. Colouring
//! each `G_M` and giving class `i`, node colour `c` the flat colour
//! `(i-1)·maxC + c` yields a strong edge-colouring.

mod five;
mod vizing;

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

pub use vizing::{class1_edge_colour, vizing_edge_colour, Class1};

use crate::graph::{planar_embed, Edge, Girth, Graph};
use crate::search::{Budget, Outcome, Search};
use crate::strong::{Palette, PartialColouring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("graph is not planar")]
    NotPlanar,
    #[error("edges {0} and {1} of the class share a vertex")]
    NotMatching(Edge, Edge),
    #[error("conflict graph of class {0} is not planar")]
    ConflictNotPlanar(usize),
    #[error("class {class} colours linked edges {a} and {b} alike")]
    ImproperClassColouring { class: usize, a: Edge, b: Edge },
    #[error("expected {expected} class colourings, got {got}")]
    ClassCountMismatch { expected: usize, got: usize },
}

impl PipelineError {
    pub fn is_precondition(&self) -> bool {
        matches!(self, PipelineError::NotPlanar)
    }
}

/// Proper edge-colouring with classes `1..=class_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    class: BTreeMap<Edge, usize>,
    class_count: usize,
}

impl EdgeColouring {
    /// Renumbers arbitrary class ids to `1..` in order of first use by the
    /// smallest id.
    pub(crate) fn compact(raw: Vec<(Edge, usize)>) -> Self {
        let mut ids: Vec<usize> = raw.iter().map(|&(_, c)| c).collect();
        ids.sort_unstable();
        ids.dedup();
        let class = raw.into_iter().map(|(e, c)| (e, ids.binary_search(&c).expect("present") + 1)).collect();
        EdgeColouring { class, class_count: ids.len() }
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn class_of(&self, e: Edge) -> Option<usize> {
        self.class.get(&e).copied()
    }

    /// Edges of class `i` (1-based), sorted.
    pub fn class_edges(&self, i: usize) -> Vec<Edge> {
        self.class.iter().filter(|&(_, &c)| c == i).map(|(&e, _)| e).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.class.iter().map(|(&e, &c)| (e, c))
    }

    /// Every edge of `g` is coloured and no two adjacent edges share a class.
    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.class.len() != g.edge_count() || g.edges().any(|e| !self.class.contains_key(&e)) {
            return false;
        }
        g.vertices().all(|v| {
            let mut seen: Vec<usize> = g.neighbours(v).iter().map(|&w| self.class[&Edge::new(v, w)]).collect();
            seen.sort_unstable();
            seen.windows(2).all(|p| p[0] != p[1])
        })
    }
}

/// Degree and girth regime where planar graphs are known to be class 1: `Δ ≥ 7`,
/// or `Δ ≥ 5` with girth at least 4, or girth at least 5.
pub fn corollary1_applies(delta: usize, girth: Girth) -> bool {
    delta >= 7 || (delta >= 5 && girth.at_least(4)) || girth.at_least(5)
}

/// Nodes are the edges of one matching; links join pairs at distance 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictGraph {
    pub nodes: Vec<Edge>,
    pub adj: Vec<Vec<usize>>,
}

impl ConflictGraph {
    pub fn link_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn as_graph(&self) -> Graph {
        Graph::from_edges(
            self.nodes.len(),
            self.adj.iter().enumerate().flat_map(|(i, ns)| ns.iter().map(move |&j| (i, j))),
        )
        .expect("links are between distinct nodes")
    }
}

pub fn conflict_graph(g: &Graph, matching: &[Edge]) -> Result<ConflictGraph, PipelineError> {
    let mut nodes = matching.to_vec();
    nodes.sort_unstable();
    nodes.dedup();
    let mut owner: HashMap<usize, Edge> = HashMap::new();
    for &e in &nodes {
        for x in [e.u, e.v] {
            if let Some(&f) = owner.get(&x) {
                return Err(PipelineError::NotMatching(f, e));
            }
            owner.insert(x, e);
        }
    }
    let index: HashMap<Edge, usize> = nodes.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let adj = nodes
        .iter()
        .map(|&e| {
            let mut ns = Vec::new();
            g.for_each_n2(e, |f| {
                if f != e {
                    if let Some(&j) = index.get(&f) {
                        ns.push(j);
                    }
                }
            });
            ns.sort_unstable();
            ns.dedup();
            ns
        })
        .collect();
    Ok(ConflictGraph { nodes, adj })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeMethod {
    /// Minimum colouring found by exhaustive search (at most 4 colours).
    Exact,
    /// Search ran out of budget; constructive 5-colouring used.
    FiveColourFallback,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeColouring {
    /// Colour of each node, in `1..=count`.
    pub colours: Vec<u32>,
    pub count: usize,
    pub method: NodeMethod,
}

/// Colours a planar conflict graph with at most 4 colours by search, or at
/// most 5 if the budget runs out first.
pub fn colour_planar_nodes(cg: &ConflictGraph, budget: Budget) -> Result<NodeColouring, PipelineError> {
    planar_embed(&cg.as_graph()).map_err(|_| PipelineError::ConflictNotPlanar(0))?;
    if cg.nodes.is_empty() {
        return Ok(NodeColouring { colours: Vec::new(), count: 0, method: NodeMethod::Exact });
    }
    let start = Instant::now();
    let deadline = budget.time.map(|t| start + t);
    for k in 1..=4 {
        let remaining = Budget { time: deadline.map(|d| d.saturating_duration_since(Instant::now())), ..budget };
        match Search::new(&cg.adj, k, remaining).run().0 {
            Outcome::Found(colours) => return Ok(NodeColouring { colours, count: k, method: NodeMethod::Exact }),
            Outcome::Unsat => continue,
            Outcome::Aborted => break,
        }
    }
    let colours = five::five_colour(&cg.adj);
    let count = colours.iter().copied().max().unwrap_or(0) as usize;
    Ok(NodeColouring { colours, count, method: NodeMethod::FiveColourFallback })
}

/// Flat strong colouring from an edge-colouring and one node colouring per
/// class, with stride `maxC` equal to the largest per-class count.
pub fn compose(
    g: &Graph,
    ec: &EdgeColouring,
    per_class: &[(ConflictGraph, NodeColouring)],
) -> Result<PartialColouring, PipelineError> {
    if per_class.len() != ec.class_count() {
        return Err(PipelineError::ClassCountMismatch { expected: ec.class_count(), got: per_class.len() });
    }
    for (i, (cg, nc)) in per_class.iter().enumerate() {
        for (a, ns) in cg.adj.iter().enumerate() {
            if let Some(&b) = ns.iter().find(|&&b| nc.colours[a] == nc.colours[b]) {
                return Err(PipelineError::ImproperClassColouring { class: i + 1, a: cg.nodes[a], b: cg.nodes[b] });
            }
        }
    }
    let max_c = per_class.iter().map(|(_, nc)| nc.count).max().unwrap_or(0) as u32;
    let palette = Palette::new((max_c * ec.class_count() as u32).max(1)).expect("nonzero");
    let mut c = PartialColouring::new(palette);
    for (i, (cg, nc)) in per_class.iter().enumerate() {
        for (node, &e) in cg.nodes.iter().enumerate() {
            c.set_unchecked(e, i as u32 * max_c + nc.colours[node]);
        }
    }
    debug_assert!(c.is_total(g));
    Ok(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// `Δ` classes from the class-1 search.
    Class1,
    /// Fan recolouring with at most `Δ+1` classes.
    Vizing,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::Class1 => "class1",
            Regime::Vizing => "vizing",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PipelineReport {
    pub regime: Regime,
    pub class1_expected: bool,
    pub delta: usize,
    pub class_count: usize,
    #[serde(rename = "maxC")]
    pub max_c: usize,
    pub per_class: Vec<usize>,
    /// Every class colouring came from exact search.
    pub four_colour_success: bool,
    /// `4Δ`, `4(Δ+1)` or `5·classCount`, whichever the run supports.
    #[serde(rename = "bound_claimed")]
    pub bound_claimed: usize,
    #[serde(rename = "colours_used")]
    pub colours_used: usize,
}

#[derive(Debug, Clone)]
pub struct PipelineColouring {
    pub colouring: PartialColouring,
    pub edge_colouring: EdgeColouring,
    pub report: PipelineReport,
}

pub fn colour_pipeline(g: &Graph, budget: Budget) -> Result<PipelineColouring, PipelineError> {
    planar_embed(g).map_err(|_| PipelineError::NotPlanar)?;
    let delta = g.max_degree();
    let applies = corollary1_applies(delta, g.girth());
    let class1 = if applies { class1_edge_colour(g, budget) } else { Class1::Exhausted { proven_infeasible: false } };
    let (regime, ec) = match class1 {
        Class1::Found(ec) => (Regime::Class1, ec),
        Class1::Exhausted { .. } => (Regime::Vizing, vizing_edge_colour(g)),
    };
    let mut per_class = Vec::with_capacity(ec.class_count());
    for i in 1..=ec.class_count() {
        let cg = conflict_graph(g, &ec.class_edges(i))?;
        let nc = colour_planar_nodes(&cg, budget).map_err(|e| match e {
            PipelineError::ConflictNotPlanar(_) => PipelineError::ConflictNotPlanar(i),
            other => other,
        })?;
        per_class.push((cg, nc));
    }
    let colouring = compose(g, &ec, &per_class)?;
    let four = per_class.iter().all(|(_, nc)| nc.method == NodeMethod::Exact);
    let bound_claimed = match (four, regime) {
        (true, Regime::Class1) => 4 * delta,
        (true, Regime::Vizing) => 4 * (delta + 1),
        (false, _) => 5 * ec.class_count(),
    };
    let report = PipelineReport {
        regime,
        class1_expected: applies,
        delta,
        class_count: ec.class_count(),
        max_c: per_class.iter().map(|(_, nc)| nc.count).max().unwrap_or(0),
        per_class: per_class.iter().map(|(_, nc)| nc.count).collect(),
        four_colour_success: four,
        bound_claimed,
        colours_used: colouring.colours_used(),
    };
    Ok(PipelineColouring { colouring, edge_colouring: ec, report })
}
