//! Proper edge-colourings: Misra–Gries fan recolouring with at most `Δ+1`
//! colours, and a bounded search for `Δ` colours.

use crate::graph::{Edge, Graph};
use crate::search::{Budget, Outcome, Search};

use super::EdgeColouring;

/// `at[v][c]`: neighbour joined to `v` by the edge of colour `c`.
struct State<'g> {
    g: &'g Graph,
    at: Vec<Vec<Option<usize>>>,
}

impl<'g> State<'g> {
    fn colour(&self, u: usize, v: usize) -> Option<usize> {
        self.at[u].iter().position(|&w| w == Some(v))
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn first_free(&self, v: usize) -> usize {
        self.at[v].iter().position(Option::is_none).expect("Δ+1 colours leave one free")
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        self.at[u][c] = Some(v);
        self.at[v][c] = Some(u);
    }

    fn unset(&mut self, u: usize, v: usize) {
        if let Some(c) = self.colour(u, v) {
            self.at[u][c] = None;
            self.at[v][c] = None;
        }
    }

    /// Maximal fan of `u` starting at the uncoloured edge `uv`.
    fn fan(&self, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().expect("nonempty");
            let next = self.g.neighbours(u).iter().copied().find(|&w| {
                !fan.contains(&w) && self.colour(u, w).is_some_and(|c| self.is_free(last, c))
            });
            match next {
                Some(w) => fan.push(w),
                None => return fan,
            }
        }
    }

    /// Swaps colours `c` and `d` along the alternating path leaving `u` on `d`.
    /// `c` is free at `u`, so the path cannot return to `u`.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut x, mut col) = (u, d);
        while let Some(y) = self.at[x][col] {
            path.push((x, y, col));
            x = y;
            col = if col == c { d } else { c };
        }
        for &(a, b, _) in &path {
            self.unset(a, b);
        }
        for &(a, b, col) in &path {
            self.set(a, b, if col == c { d } else { c });
        }
    }

    fn colour_edge(&mut self, u: usize, v: usize) {
        let fan = self.fan(u, v);
        let c = self.first_free(u);
        let d = self.first_free(*fan.last().expect("nonempty"));
        if !self.is_free(u, d) {
            self.invert_path(u, c, d);
        }
        // first vertex of the fan that is free on d and still ends a fan
        let mut j = 0;
        loop {
            if self.is_free(fan[j], d) {
                break;
            }
            let ok = j + 1 < fan.len()
                && self.colour(u, fan[j + 1]).is_some_and(|col| self.is_free(fan[j], col));
            assert!(ok, "fan invariant broken");
            j += 1;
        }
        for i in 0..j {
            let col = self.colour(u, fan[i + 1]).expect("fan edges are coloured");
            self.unset(u, fan[i + 1]);
            self.set(u, fan[i], col);
        }
        self.set(u, fan[j], d);
    }
}

/// Proper edge-colouring with at most `Δ+1` classes, numbered `1..`
/// without gaps.
pub fn vizing_edge_colour(g: &Graph) -> EdgeColouring {
    let palette = g.max_degree() + 1;
    let mut st = State { g, at: vec![vec![None; palette]; g.vertex_count()] };
    for e in g.edges() {
        st.colour_edge(e.u, e.v);
    }
    let raw: Vec<(Edge, usize)> =
        g.edges().map(|e| (e, st.colour(e.u, e.v).expect("every edge coloured"))).collect();
    EdgeColouring::compact(raw)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Class1 {
    Found(EdgeColouring),
    /// No `Δ`-colouring found; `proven_infeasible` when the search finished.
    Exhausted { proven_infeasible: bool },
}

/// Searches for a proper edge-colouring with exactly `Δ` colours.
pub fn class1_edge_colour(g: &Graph, budget: Budget) -> Class1 {
    let edges = g.edge_list();
    if edges.is_empty() {
        return Class1::Found(EdgeColouring::compact(Vec::new()));
    }
    let index = |e: Edge| edges.binary_search(&e).expect("edge of g");
    let adj: Vec<Vec<usize>> = edges
        .iter()
        .map(|&e| {
            let mut ns: Vec<usize> = [e.u, e.v]
                .iter()
                .flat_map(|&x| g.neighbours(x).iter().map(move |&y| Edge::new(x, y)))
                .filter(|&f| f != e)
                .map(index)
                .collect();
            ns.sort_unstable();
            ns.dedup();
            ns
        })
        .collect();
    match Search::new(&adj, g.max_degree(), budget).run().0 {
        Outcome::Found(col) => Class1::Found(EdgeColouring::compact(
            edges.iter().zip(col).map(|(&e, c)| (e, c as usize)).collect(),
        )),
        Outcome::Unsat => Class1::Exhausted { proven_infeasible: true },
        Outcome::Aborted => Class1::Exhausted { proven_infeasible: false },
    }
}
