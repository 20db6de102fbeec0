//! Exact strong chromatic index by branch and bound on the distance-2
//! conflict structure of the edges.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::search::{greedy_dsatur, Budget, Outcome, Search};
use crate::strong::{trivial_lower_bound, Palette, PartialColouring};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes: u64,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Minimum strong colouring with its certificate.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub chi_s: usize,
    pub witness: PartialColouring,
    pub stats: SolveStats,
}

#[derive(Debug, Clone)]
pub enum KColourability {
    Colourable(PartialColouring),
    /// Search exhausted without a colouring.
    Unsat,
    /// Budget ran out before the search finished.
    Unknown,
}

#[derive(Debug, Error, Clone)]
#[error("search budget exhausted: chi_s lies in {lower}..={upper}")]
pub struct BudgetExhausted {
    /// Every k below this value was refuted.
    pub lower: usize,
    pub upper: usize,
    /// Best colouring known when the budget ran out.
    pub best: PartialColouring,
    pub stats: SolveStats,
}

/// Edges of `g` and, for each, the indices of edges at distance at most 2.
pub(crate) fn conflict_structure(g: &Graph) -> (Vec<Edge>, Vec<Vec<usize>>) {
    let edges = g.edge_list();
    let adj = edges
        .iter()
        .map(|&e| {
            g.n2_unchecked(e, false)
                .into_iter()
                .map(|f| edges.binary_search(&f).expect("N2 edges belong to the graph"))
                .collect()
        })
        .collect();
    (edges, adj)
}

fn to_colouring(edges: &[Edge], colours: &[u32], palette: usize) -> PartialColouring {
    let mut c = PartialColouring::new(Palette::new(palette.max(1) as u32).expect("nonzero"));
    for (&e, &col) in edges.iter().zip(colours) {
        c.set_unchecked(e, col);
    }
    c
}

/// Decides whether `g` has a strong edge-colouring with at most `k` colours.
pub fn is_strong_k_colourable(g: &Graph, k: usize, budget: Budget) -> KColourability {
    let (edges, adj) = conflict_structure(g);
    match Search::new(&adj, k, budget).run().0 {
        Outcome::Found(col) => KColourability::Colourable(to_colouring(&edges, &col, k)),
        Outcome::Unsat => KColourability::Unsat,
        Outcome::Aborted => KColourability::Unknown,
    }
}

/// Strong colouring by greedy saturation order; an upper bound on the
/// strong chromatic index in a single pass.
pub fn greedy_strong_colouring(g: &Graph) -> PartialColouring {
    let (edges, adj) = conflict_structure(g);
    let (colours, used) = greedy_dsatur(&adj);
    to_colouring(&edges, &colours, used)
}

/// Strong chromatic index with a witness, by iterative deepening from the
/// trivial lower bound. A greedy saturation colouring supplies the upper
/// bound at which the deepening stops.
pub fn strong_chromatic_index(g: &Graph, budget: Budget) -> Result<SolveResult, BudgetExhausted> {
    let start = Instant::now();
    let (edges, adj) = conflict_structure(g);
    if edges.is_empty() {
        return Ok(SolveResult {
            chi_s: 0,
            witness: to_colouring(&edges, &[], 1),
            stats: SolveStats { nodes: 0, elapsed: start.elapsed() },
        });
    }
    let (greedy, upper) = greedy_dsatur(&adj);
    let deadline = budget.time.map(|t| start + t);
    let mut nodes = 0;
    let mut k = trivial_lower_bound(g);
    while k < upper {
        let remaining = Budget {
            time: deadline.map(|d| d.saturating_duration_since(Instant::now())),
            nodes: budget.nodes.map(|n| n.saturating_sub(nodes)),
        };
        let (out, used) = Search::new(&adj, k, remaining).run();
        nodes += used;
        match out {
            Outcome::Found(col) => {
                return Ok(SolveResult {
                    chi_s: k,
                    witness: to_colouring(&edges, &col, k),
                    stats: SolveStats { nodes, elapsed: start.elapsed() },
                })
            }
            Outcome::Unsat => k += 1,
            Outcome::Aborted => {
                return Err(BudgetExhausted {
                    lower: k,
                    upper,
                    best: to_colouring(&edges, &greedy, upper),
                    stats: SolveStats { nodes, elapsed: start.elapsed() },
                })
            }
        }
    }
    Ok(SolveResult {
        chi_s: upper,
        witness: to_colouring(&edges, &greedy, upper),
        stats: SolveStats { nodes, elapsed: start.elapsed() },
    })
}
