//! Backtracking vertex colouring shared by the exact strong solver, the
//! class-1 edge-colouring search and the conflict-graph colouring.
//!
//! Branching picks the uncoloured node with the fewest available colours
//! (ties: most uncoloured neighbours, then lowest index). A node may only
//! take colours up to one more than the largest colour used so far, which
//! removes colour-permutation symmetry.

use std::time::{Duration, Instant};

/// Limits on a search. `None` means unbounded.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub time: Option<Duration>,
    pub nodes: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn seconds(secs: f64) -> Self {
        Budget { time: Some(Duration::from_secs_f64(secs)), nodes: None }
    }

    pub fn with_nodes(mut self, nodes: u64) -> Self {
        self.nodes = Some(nodes);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome {
    /// Colours `1..=k`, one per node.
    Found(Vec<u32>),
    Unsat,
    Aborted,
}

pub(crate) struct Search<'a> {
    adj: &'a [Vec<usize>],
    k: usize,
    colour: Vec<u32>,
    /// blocked[v][c]: number of coloured neighbours of v carrying c
    blocked: Vec<Vec<u32>>,
    uncoloured_nbrs: Vec<usize>,
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    pub nodes: u64,
    aborted: bool,
}

impl<'a> Search<'a> {
    pub fn new(adj: &'a [Vec<usize>], k: usize, budget: Budget) -> Self {
        let n = adj.len();
        Search {
            adj,
            k,
            colour: vec![0; n],
            blocked: vec![vec![0; k + 1]; n],
            uncoloured_nbrs: adj.iter().map(Vec::len).collect(),
            deadline: budget.time.map(|d| Instant::now() + d),
            node_limit: budget.nodes,
            nodes: 0,
            aborted: false,
        }
    }

    pub fn run(mut self) -> (Outcome, u64) {
        let n = self.adj.len();
        if n == 0 {
            return (Outcome::Found(Vec::new()), 0);
        }
        if self.k == 0 {
            return (Outcome::Unsat, 0);
        }
        let found = self.descend(n, 0);
        let nodes = self.nodes;
        if found {
            (Outcome::Found(self.colour), nodes)
        } else if self.aborted {
            (Outcome::Aborted, nodes)
        } else {
            (Outcome::Unsat, nodes)
        }
    }

    fn available(&self, v: usize, max_used: usize) -> usize {
        let top = (max_used + 1).min(self.k);
        (1..=top).filter(|&c| self.blocked[v][c] == 0).count()
    }

    fn set(&mut self, v: usize, c: u32) {
        self.colour[v] = c;
        for &w in self.adj[v].iter() {
            self.blocked[w][c as usize] += 1;
            self.uncoloured_nbrs[w] -= 1;
        }
    }

    fn clear(&mut self, v: usize) {
        let c = self.colour[v] as usize;
        self.colour[v] = 0;
        for &w in self.adj[v].iter() {
            self.blocked[w][c] -= 1;
            self.uncoloured_nbrs[w] += 1;
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                self.aborted = true;
            }
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.aborted = true;
                }
            }
        }
        self.aborted
    }

    fn descend(&mut self, remaining: usize, max_used: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        self.nodes += 1;
        if self.out_of_budget() {
            return false;
        }
        let mut best: Option<(usize, usize, usize)> = None; // (available, uncoloured nbrs, v)
        for v in 0..self.adj.len() {
            if self.colour[v] != 0 {
                continue;
            }
            let avail = self.available(v, max_used);
            if avail == 0 {
                return false;
            }
            let better = match best {
                None => true,
                Some((a, d, _)) => avail < a || (avail == a && self.uncoloured_nbrs[v] > d),
            };
            if better {
                best = Some((avail, self.uncoloured_nbrs[v], v));
            }
        }
        let (_, _, v) = best.expect("remaining > 0 implies an uncoloured node");
        let top = (max_used + 1).min(self.k);
        for c in 1..=top {
            if self.blocked[v][c] != 0 {
                continue;
            }
            self.set(v, c as u32);
            if self.descend(remaining - 1, max_used.max(c)) {
                return true;
            }
            self.clear(v);
            if self.aborted {
                return false;
            }
        }
        false
    }
}

/// Single greedy pass in saturation order (no backtracking); returns the
/// colouring and the number of colours used.
pub(crate) fn greedy_dsatur(adj: &[Vec<usize>]) -> (Vec<u32>, usize) {
    let n = adj.len();
    let mut colour = vec![0u32; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    let mut used = 0usize;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v] == 0)
            .max_by(|&a, &b| {
                (sat[a], adj[a].len(), std::cmp::Reverse(a)).cmp(&(sat[b], adj[b].len(), std::cmp::Reverse(b)))
            })
            .unwrap();
        let c = (1..).find(|&c| seen[v].get(c).copied() != Some(true)).unwrap();
        colour[v] = c as u32;
        used = used.max(c);
        for &w in &adj[v] {
            if seen[w].len() <= c {
                seen[w].resize(c + 1, false);
            }
            if !seen[w][c] {
                seen[w][c] = true;
                sat[w] += 1;
            }
        }
    }
    (colour, used)
}
