//! Seeded instance families and girth-raising transformations.

use std::collections::VecDeque;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: &'static str, reason: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "family")]
pub enum Family {
    Cycle { n: usize },
    /// Path on `n` vertices.
    Path { n: usize },
    /// `K_{1,k}`.
    Star { k: usize },
    /// Hub 0 joined to the rim cycle `1..=n`.
    Wheel { n: usize },
    Grid { rows: usize, cols: usize },
    /// Fragment of the hexagonal lattice with `rows × cols` hexagons.
    HexPatch { rows: usize, cols: usize },
    /// Stacked triangulation on `n` vertices.
    RandomPlanarTriangulation { n: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cycle { .. } => "cycle",
            Family::Path { .. } => "path",
            Family::Star { .. } => "star",
            Family::Wheel { .. } => "wheel",
            Family::Grid { .. } => "grid",
            Family::HexPatch { .. } => "hex-patch",
            Family::RandomPlanarTriangulation { .. } => "random-planar-triangulation",
        }
    }

    /// Builds a family from its name and positional parameters.
    pub fn from_args(name: &str, params: &[usize]) -> Result<Family, GeneratorError> {
        let want = |count: usize, family: &'static str| {
            if params.len() == count {
                Ok(())
            } else {
                Err(GeneratorError::InvalidParameters {
                    family,
                    reason: format!("expected {count} parameter(s), got {}", params.len()),
                })
            }
        };
        let f = match name {
            "cycle" => want(1, "cycle").map(|_| Family::Cycle { n: params[0] }),
            "path" => want(1, "path").map(|_| Family::Path { n: params[0] }),
            "star" => want(1, "star").map(|_| Family::Star { k: params[0] }),
            "wheel" => want(1, "wheel").map(|_| Family::Wheel { n: params[0] }),
            "grid" => want(2, "grid").map(|_| Family::Grid { rows: params[0], cols: params[1] }),
            "hex-patch" => want(2, "hex-patch").map(|_| Family::HexPatch { rows: params[0], cols: params[1] }),
            "random-planar-triangulation" => {
                want(1, "random-planar-triangulation").map(|_| Family::RandomPlanarTriangulation { n: params[0] })
            }
            other => Err(GeneratorError::UnknownFamily(other.to_string())),
        }?;
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<(), GeneratorError> {
        let bad = |reason: &str| {
            Err(GeneratorError::InvalidParameters { family: self.name(), reason: reason.to_string() })
        };
        match *self {
            Family::Cycle { n } if n < 3 => bad("n must be at least 3"),
            Family::Path { n } if n < 1 => bad("n must be at least 1"),
            Family::Star { k } if k < 1 => bad("k must be at least 1"),
            Family::Wheel { n } if n < 3 => bad("n must be at least 3"),
            Family::Grid { rows, cols } if rows < 1 || cols < 1 => bad("rows and cols must be positive"),
            Family::HexPatch { rows, cols } if rows < 1 || cols < 1 => bad("rows and cols must be positive"),
            Family::RandomPlanarTriangulation { n } if n < 3 => bad("n must be at least 3"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Cycle { n } | Family::Path { n } | Family::Wheel { n } | Family::RandomPlanarTriangulation { n } => {
                write!(f, "{}({n})", self.name())
            }
            Family::Star { k } => write!(f, "star({k})"),
            Family::Grid { rows, cols } | Family::HexPatch { rows, cols } => write!(f, "{}({rows},{cols})", self.name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub family: Family,
    pub seed: u64,
    /// Interior vertices placed on every edge.
    pub subdivide: usize,
}

impl GeneratorSpec {
    pub fn new(family: Family) -> Self {
        GeneratorSpec { family, seed: 0, subdivide: 0 }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn subdivided(mut self, t: usize) -> Self {
        self.subdivide = t;
        self
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GeneratorError> {
    spec.family.validate()?;
    let base = match spec.family {
        Family::Cycle { n } => ok(n, (0..n).map(|i| (i, (i + 1) % n))),
        Family::Path { n } => ok(n, (1..n).map(|i| (i - 1, i))),
        Family::Star { k } => ok(k + 1, (1..=k).map(|i| (0, i))),
        Family::Wheel { n } => ok(n + 1, (0..n).flat_map(|i| [(0, 1 + i), (1 + i, 1 + (i + 1) % n)])),
        Family::Grid { rows, cols } => {
            let id = |r: usize, c: usize| r * cols + c;
            let mut e = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        e.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        e.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            ok(rows * cols, e)
        }
        Family::HexPatch { rows, cols } => hex_patch(rows, cols),
        Family::RandomPlanarTriangulation { n } => stacked_triangulation(n, spec.seed),
    };
    Ok(if spec.subdivide > 0 { subdivide(&base, spec.subdivide) } else { base })
}

fn ok(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

/// Brick-wall drawing of the hexagonal lattice with dangling paths pruned.
fn hex_patch(rows: usize, cols: usize) -> Graph {
    let width = 2 * cols + 2;
    let id = |r: usize, c: usize| r * width + c;
    let mut e = Vec::new();
    for r in 0..=rows {
        for c in 0..width {
            if c + 1 < width {
                e.push((id(r, c), id(r, c + 1)));
            }
            if r < rows && (r + c) % 2 == 0 {
                e.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    let full = ok((rows + 1) * width, e);
    prune_leaves(&full)
}

/// Repeatedly deletes vertices of degree at most 1, then drops isolated ones.
fn prune_leaves(g: &Graph) -> Graph {
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; g.vertex_count()];
    let mut queue: VecDeque<usize> = g.vertices().filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbours(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
    }
    let keep: Vec<usize> = g.vertices().filter(|&v| alive[v]).collect();
    let sub = g.induced(&keep).0;
    ok(sub.vertex_count(), sub.edges().map(|e| (e.u, e.v)))
}

/// Stacked triangulation: start from a triangle and repeatedly insert a
/// vertex into a uniformly chosen face.
fn stacked_triangulation(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces = vec![[0usize, 1, 2], [0, 2, 1]];
    let mut e = vec![(0, 1), (1, 2), (0, 2)];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        e.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [c, a, v]]);
    }
    ok(n, e)
}

/// Replaces every edge by a path with `t` interior vertices. Original
/// vertices keep their labels; new ones get fresh labels above them.
pub fn subdivide(g: &Graph, t: usize) -> Graph {
    if t == 0 {
        return g.clone();
    }
    let mut next = g.labels().iter().copied().max().map_or(0, |m| m + 1);
    let mut e = Vec::new();
    for Edge { u, v } in g.edges() {
        let mut prev = g.label(u);
        for _ in 0..t {
            e.push((prev, next));
            prev = next;
            next += 1;
        }
        e.push((prev, g.label(v)));
    }
    Graph::from_labelled(e, g.labels().iter().copied()).expect("subdivision is simple")
}

/// Suppresses 2-vertices in a seeded order: a 2-vertex `s` with neighbours
/// `a`, `b` is replaced by the edge `ab` when `a` and `b` are at distance at
/// least `min_girth - 1` in `G - s`. The result keeps girth at least
/// `min_girth` when the input has it. Removed vertices are dropped.
pub fn smooth(g: &Graph, min_girth: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut work = g.clone();
    let mut order: Vec<usize> = work.vertices().collect();
    order.shuffle(&mut rng);
    let mut gone = vec![false; work.vertex_count()];
    for s in order {
        if work.degree(s) != 2 {
            continue;
        }
        let (a, b) = (work.neighbours(s)[0], work.neighbours(s)[1]);
        if distance_avoiding(&work, a, b, s, min_girth.saturating_sub(1)) {
            continue;
        }
        work.remove_edge(Edge::new(a, s));
        work.remove_edge(Edge::new(b, s));
        work.insert_edge(Edge::new(a, b));
        gone[s] = true;
    }
    let keep: Vec<usize> = work.vertices().filter(|&v| !gone[v]).collect();
    work.induced(&keep).0
}

/// True when `b` is reachable from `a` in fewer than `limit` steps without
/// passing through `skip`.
fn distance_avoiding(g: &Graph, a: usize, b: usize, skip: usize, limit: usize) -> bool {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[a] = 0;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            return dist[x] < limit;
        }
        if dist[x] + 1 >= limit {
            continue;
        }
        for &y in g.neighbours(x) {
            if y != skip && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    false
}
