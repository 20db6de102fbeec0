//! The nine reducible configurations and their search.
//!
//! Degree conditions are evaluated in the graph passed in. Within a kind the
//! primary anchor `u` is the smallest vertex id admitting the pattern and the
//! remaining anchors are the smallest ids completing it.

use std::fmt;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ConfigKind {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 9] = [
        ConfigKind::C1,
        ConfigKind::C2,
        ConfigKind::C3,
        ConfigKind::C4,
        ConfigKind::C5,
        ConfigKind::C6,
        ConfigKind::C7,
        ConfigKind::C8,
        ConfigKind::C9,
    ];
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A located configuration. Vertex fields are dense indices of the graph it
/// was found in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Configuration {
    /// 1-vertex `u` adjacent to a 4⁻-vertex `v`.
    C1 { u: usize, v: usize },
    /// 2-vertex `u` adjacent to the 3⁻-vertices `v < w`.
    C2 { u: usize, v: usize, w: usize },
    /// 2-vertex `u` adjacent to a 3⁻-vertex `w` and a `4_2`- or `4_3`-vertex `v`.
    C3 { u: usize, v: usize, w: usize },
    /// 2-vertex `u` adjacent to a `4_3`-vertex `v` with `N(v) = {u, v1, v2, z}`
    /// (`v1`, `v2` of degree 2) and to a `4_2`- or `4_3`-vertex `w`.
    C4 { u: usize, v: usize, w: usize, v1: usize, v2: usize, z: usize },
    /// k-vertex `u` whose 1-neighbours are `leaves`; either `k-2` of them, or
    /// `k-3` of them plus another 2⁻-neighbour.
    C5 { u: usize, k: usize, leaves: Vec<usize> },
    /// k-vertex `u`, k ≥ 4, whose neighbours `nbrs` are all 2⁻-vertices.
    C6 { u: usize, k: usize, nbrs: Vec<usize> },
    /// k-vertex `u`, k ≥ 5, with `N(u) = {u_1, …, u_{k-1}, x}` all `u_i` of
    /// degree at most 2 and `u1` a 1-vertex (`v1 == None`) or a 2-vertex whose
    /// other neighbour `v1` is a 3⁻- or `4_3`-vertex.
    C7 { u: usize, k: usize, u1: usize, v1: Option<usize>, x: usize },
    /// k-vertex `u`, k ≥ 5, with `k-2` 2-neighbours of which the paths
    /// `u u_i v_i` in `paths` (`k-3` of them) end in 3⁻- or `4_3`-vertices.
    C8 { u: usize, k: usize, paths: Vec<(usize, usize)> },
    /// As `C8` with `alpha` 1-neighbours, `k-2-alpha` 2-neighbours and
    /// `k-3-alpha` constrained paths, `1 ≤ alpha ≤ k-4`.
    C9 { u: usize, k: usize, alpha: usize, paths: Vec<(usize, usize)> },
}

impl Configuration {
    pub fn kind(&self) -> ConfigKind {
        match self {
            Configuration::C1 { .. } => ConfigKind::C1,
            Configuration::C2 { .. } => ConfigKind::C2,
            Configuration::C3 { .. } => ConfigKind::C3,
            Configuration::C4 { .. } => ConfigKind::C4,
            Configuration::C5 { .. } => ConfigKind::C5,
            Configuration::C6 { .. } => ConfigKind::C6,
            Configuration::C7 { .. } => ConfigKind::C7,
            Configuration::C8 { .. } => ConfigKind::C8,
            Configuration::C9 { .. } => ConfigKind::C9,
        }
    }

    /// The primary anchor.
    pub fn centre(&self) -> usize {
        match *self {
            Configuration::C1 { u, .. }
            | Configuration::C2 { u, .. }
            | Configuration::C3 { u, .. }
            | Configuration::C4 { u, .. }
            | Configuration::C5 { u, .. }
            | Configuration::C6 { u, .. }
            | Configuration::C7 { u, .. }
            | Configuration::C8 { u, .. }
            | Configuration::C9 { u, .. } => u,
        }
    }

    /// Degree parameter of C5–C9; 0 for the others.
    pub fn k(&self) -> usize {
        match *self {
            Configuration::C5 { k, .. }
            | Configuration::C6 { k, .. }
            | Configuration::C7 { k, .. }
            | Configuration::C8 { k, .. }
            | Configuration::C9 { k, .. } => k,
            _ => 0,
        }
    }

    /// Number of 1-neighbours for C9; 0 for the others.
    pub fn alpha(&self) -> usize {
        match *self {
            Configuration::C9 { alpha, .. } => alpha,
            _ => 0,
        }
    }

    /// Named anchors in a fixed order.
    pub fn anchors(&self) -> Vec<(String, usize)> {
        let named = |pairs: &[(&str, usize)]| pairs.iter().map(|&(n, v)| (n.to_string(), v)).collect::<Vec<_>>();
        let indexed = |u: usize, pre: &str, xs: &[usize]| {
            let mut out = vec![("u".to_string(), u)];
            out.extend(xs.iter().enumerate().map(|(i, &x)| (format!("{pre}{}", i + 1), x)));
            out
        };
        let pathed = |u: usize, paths: &[(usize, usize)]| {
            let mut out = vec![("u".to_string(), u)];
            for (i, &(a, b)) in paths.iter().enumerate() {
                out.push((format!("u{}", i + 1), a));
                out.push((format!("v{}", i + 1), b));
            }
            out
        };
        match self {
            &Configuration::C1 { u, v } => named(&[("u", u), ("v", v)]),
            &Configuration::C2 { u, v, w } | &Configuration::C3 { u, v, w } => named(&[("u", u), ("v", v), ("w", w)]),
            &Configuration::C4 { u, v, w, v1, v2, z } => {
                named(&[("u", u), ("v", v), ("w", w), ("v1", v1), ("v2", v2), ("z", z)])
            }
            Configuration::C5 { u, leaves, .. } => indexed(*u, "u", leaves),
            Configuration::C6 { u, nbrs, .. } => indexed(*u, "u", nbrs),
            &Configuration::C7 { u, u1, v1, x, .. } => {
                let mut out = named(&[("u", u), ("u1", u1)]);
                if let Some(v1) = v1 {
                    out.push(("v1".to_string(), v1));
                }
                out.push(("x".to_string(), x));
                out
            }
            Configuration::C8 { u, paths, .. } | Configuration::C9 { u, paths, .. } => pathed(*u, paths),
        }
    }

    /// Every anchor vertex, primary first.
    pub fn vertices(&self) -> Vec<usize> {
        self.anchors().into_iter().map(|(_, v)| v).collect()
    }

    /// Re-checks the pattern against `g`.
    pub fn holds(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        if self.vertices().iter().any(|&v| v >= n) {
            return false;
        }
        let candidate = match self.kind() {
            ConfigKind::C1 => c1_at(g, self.centre()),
            ConfigKind::C2 => c2_at(g, self.centre()),
            ConfigKind::C3 => c3_at(g, self.centre()),
            ConfigKind::C4 => c4_at(g, self.centre()),
            ConfigKind::C5 => c5_at(g, self.centre()),
            ConfigKind::C6 => c6_at(g, self.centre()),
            ConfigKind::C7 => c7_at(g, self.centre()),
            ConfigKind::C8 => c8_at(g, self.centre()),
            ConfigKind::C9 => c9_at(g, self.centre()),
        };
        candidate.as_ref() == Some(self)
    }
}

fn is_43(g: &Graph, v: usize) -> bool {
    g.is_kl(v, 4, 3)
}

/// For a 2-vertex `y` adjacent to `u`, the other neighbour when it is a
/// 3⁻- or `4_3`-vertex.
fn constrained_end(g: &Graph, y: usize, u: usize) -> Option<usize> {
    if g.degree(y) != 2 {
        return None;
    }
    let other = g.neighbours(y).iter().copied().find(|&t| t != u)?;
    (g.degree(other) <= 3 || is_43(g, other)).then_some(other)
}

fn c1_at(g: &Graph, u: usize) -> Option<Configuration> {
    if g.degree(u) != 1 {
        return None;
    }
    let v = g.neighbours(u)[0];
    (g.degree(v) <= 4).then_some(Configuration::C1 { u, v })
}

fn c2_at(g: &Graph, u: usize) -> Option<Configuration> {
    if g.degree(u) != 2 {
        return None;
    }
    let (v, w) = (g.neighbours(u)[0], g.neighbours(u)[1]);
    (g.degree(v) <= 3 && g.degree(w) <= 3).then_some(Configuration::C2 { u, v, w })
}

fn c3_at(g: &Graph, u: usize) -> Option<Configuration> {
    if g.degree(u) != 2 {
        return None;
    }
    let ns = g.neighbours(u);
    let big = |v: usize| g.degree(v) == 4 && matches!(g.two_neighbour_count(v), 2 | 3);
    for (v, w) in [(ns[0], ns[1]), (ns[1], ns[0])] {
        if big(v) && g.degree(w) <= 3 {
            return Some(Configuration::C3 { u, v, w });
        }
    }
    None
}

fn c4_at(g: &Graph, u: usize) -> Option<Configuration> {
    if g.degree(u) != 2 {
        return None;
    }
    let ns = g.neighbours(u);
    let partner = |w: usize| g.degree(w) == 4 && matches!(g.two_neighbour_count(w), 2 | 3);
    for (v, w) in [(ns[0], ns[1]), (ns[1], ns[0])] {
        if is_43(g, v) && partner(w) {
            let twos: Vec<usize> = g.neighbours(v).iter().copied().filter(|&t| t != u && g.degree(t) == 2).collect();
            let z = g.neighbours(v).iter().copied().find(|&t| g.degree(t) != 2)?;
            return Some(Configuration::C4 { u, v, w, v1: twos[0], v2: twos[1], z });
        }
    }
    None
}

fn c5_at(g: &Graph, u: usize) -> Option<Configuration> {
    let k = g.degree(u);
    if k < 4 {
        return None;
    }
    let leaves: Vec<usize> = g.neighbours(u).iter().copied().filter(|&t| g.degree(t) == 1).collect();
    let small = g.neighbours(u).iter().filter(|&&t| g.degree(t) <= 2).count();
    let a = leaves.len();
    (a == k - 2 || (a == k - 3 && small >= k - 2)).then_some(Configuration::C5 { u, k, leaves })
}

fn c6_at(g: &Graph, u: usize) -> Option<Configuration> {
    let k = g.degree(u);
    if k < 4 || g.neighbours(u).iter().any(|&t| g.degree(t) > 2) {
        return None;
    }
    Some(Configuration::C6 { u, k, nbrs: g.neighbours(u).to_vec() })
}

fn c7_at(g: &Graph, u: usize) -> Option<Configuration> {
    let k = g.degree(u);
    if k < 5 {
        return None;
    }
    let big: Vec<usize> = g.neighbours(u).iter().copied().filter(|&t| g.degree(t) > 2).collect();
    if big.len() != 1 {
        return None;
    }
    let x = big[0];
    for &y in g.neighbours(u) {
        if g.degree(y) == 1 {
            return Some(Configuration::C7 { u, k, u1: y, v1: None, x });
        }
        if let Some(v1) = constrained_end(g, y, u) {
            return Some(Configuration::C7 { u, k, u1: y, v1: Some(v1), x });
        }
    }
    None
}

/// Shared search for C8 (`alpha == 0`) and C9.
fn paths_at(g: &Graph, u: usize, want_alpha: bool) -> Option<Configuration> {
    let k = g.degree(u);
    if k < 5 {
        return None;
    }
    let alpha = g.neighbours(u).iter().filter(|&&t| g.degree(t) == 1).count();
    if want_alpha != (alpha >= 1) || alpha + 4 > k {
        return None;
    }
    let twos = g.neighbours(u).iter().filter(|&&t| g.degree(t) == 2).count();
    if twos + alpha + 2 < k {
        return None;
    }
    let paths: Vec<(usize, usize)> = g
        .neighbours(u)
        .iter()
        .filter_map(|&y| constrained_end(g, y, u).map(|v| (y, v)))
        .take(k - 3 - alpha)
        .collect();
    if paths.len() < k - 3 - alpha {
        return None;
    }
    Some(if want_alpha {
        Configuration::C9 { u, k, alpha, paths }
    } else {
        Configuration::C8 { u, k, paths }
    })
}

fn c8_at(g: &Graph, u: usize) -> Option<Configuration> {
    paths_at(g, u, false)
}

fn c9_at(g: &Graph, u: usize) -> Option<Configuration> {
    paths_at(g, u, true)
}

fn matcher(kind: ConfigKind) -> fn(&Graph, usize) -> Option<Configuration> {
    match kind {
        ConfigKind::C1 => c1_at,
        ConfigKind::C2 => c2_at,
        ConfigKind::C3 => c3_at,
        ConfigKind::C4 => c4_at,
        ConfigKind::C5 => c5_at,
        ConfigKind::C6 => c6_at,
        ConfigKind::C7 => c7_at,
        ConfigKind::C8 => c8_at,
        ConfigKind::C9 => c9_at,
    }
}

/// First configuration in kind order C1…C9, smallest anchors within a kind.
pub fn find_configuration(g: &Graph) -> Option<Configuration> {
    find_configuration_in(g, |_| true)
}

/// As [`find_configuration`], with primary anchors restricted to `allowed`.
pub fn find_configuration_in(g: &Graph, allowed: impl Fn(usize) -> bool) -> Option<Configuration> {
    ConfigKind::ALL
        .iter()
        .find_map(|&kind| g.vertices().filter(|&u| allowed(u)).find_map(|u| matcher(kind)(g, u)))
}

/// Every configuration of `kind` present in `g`, one per primary anchor.
pub fn configurations_of(g: &Graph, kind: ConfigKind) -> Vec<Configuration> {
    g.vertices().filter_map(|u| matcher(kind)(g, u)).collect()
}
