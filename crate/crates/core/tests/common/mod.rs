//! Corpora and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use strongedge::generators::{generate, Family, GeneratorSpec};
use strongedge::{Edge, Girth, Graph, PartialColouring};

pub fn gen(family: Family) -> Graph {
    generate(&GeneratorSpec::new(family)).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    gen(Family::Cycle { n })
}

/// Subdivided wheels W4..W20 and subdivided stacked triangulations on
/// `5 + seed % 25` vertices for seeds 1..=100.
pub fn girth6_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 4..=20 {
        let spec = GeneratorSpec::new(Family::Wheel { n }).subdivided(1);
        out.push((format!("sub-wheel({n})"), generate(&spec).unwrap()));
    }
    for seed in 1..=100u64 {
        let n = 5 + (seed % 25) as usize;
        let spec = GeneratorSpec::new(Family::RandomPlanarTriangulation { n }).seed(seed).subdivided(1);
        out.push((format!("sub-tri({n}, seed {seed})"), generate(&spec).unwrap()));
    }
    out
}

/// Connected planar graphs of mixed girth and maximum degree.
pub fn planar_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let mut push = |name: String, spec: GeneratorSpec| out.push((name, generate(&spec).unwrap()));
    for n in 3..=12 {
        push(format!("cycle({n})"), GeneratorSpec::new(Family::Cycle { n }));
    }
    for n in 3..=12 {
        push(format!("wheel({n})"), GeneratorSpec::new(Family::Wheel { n }));
    }
    for k in 3..=8 {
        push(format!("star({k})"), GeneratorSpec::new(Family::Star { k }));
    }
    for (r, c) in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)] {
        push(format!("grid({r},{c})"), GeneratorSpec::new(Family::Grid { rows: r, cols: c }));
        push(format!("hex-patch({r},{c})"), GeneratorSpec::new(Family::HexPatch { rows: r, cols: c }));
    }
    for seed in 1..=15u64 {
        let n = 6 + (seed % 12) as usize;
        push(format!("tri({n}, seed {seed})"), GeneratorSpec::new(Family::RandomPlanarTriangulation { n }).seed(seed));
        push(
            format!("sub-tri({n}, seed {seed})"),
            GeneratorSpec::new(Family::RandomPlanarTriangulation { n }).seed(seed).subdivided(1),
        );
    }
    for n in [4, 5, 7, 9] {
        push(format!("sub-wheel({n})"), GeneratorSpec::new(Family::Wheel { n }).subdivided(1));
    }
    out
}

/// Pairs of distinct edges at distance at most 2: sharing an endpoint or
/// joined by an edge.
pub fn conflicting_pair(g: &Graph, a: Edge, b: Edge) -> bool {
    if a == b {
        return false;
    }
    let ends = [a.u, a.v];
    [b.u, b.v].iter().any(|&x| ends.contains(&x) || ends.iter().any(|&y| g.has_edge(x, y)))
}

/// Total, and no conflicting pair shares a colour; checked over all pairs.
pub fn pair_oracle(g: &Graph, c: &PartialColouring) -> bool {
    let edges = g.edge_list();
    let colours: Vec<_> = edges.iter().map(|&e| c.get(e)).collect();
    if colours.iter().any(|x| x.is_none_or(|x| !c.palette().contains(x))) {
        return false;
    }
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if colours[i] == colours[j] && conflicting_pair(g, edges[i], edges[j]) {
                return false;
            }
        }
    }
    true
}

/// Smallest `k` admitting a strong `k`-colouring, by plain backtracking in
/// edge order with colours restricted to `1..=max_used+1`.
pub fn brute_force_chi_s(g: &Graph) -> usize {
    let edges = g.edge_list();
    let m = edges.len();
    let conflicts: Vec<Vec<usize>> =
        (0..m).map(|i| (0..i).filter(|&j| conflicting_pair(g, edges[i], edges[j])).collect()).collect();
    fn fits(i: usize, k: usize, used: usize, col: &mut Vec<usize>, conflicts: &[Vec<usize>]) -> bool {
        if i == col.len() {
            return true;
        }
        for c in 1..=k.min(used + 1) {
            if conflicts[i].iter().all(|&j| col[j] != c) {
                col[i] = c;
                if fits(i + 1, k, used.max(c), col, conflicts) {
                    return true;
                }
            }
        }
        col[i] = 0;
        false
    }
    (0..=m).find(|&k| fits(0, k, 0, &mut vec![0; m], &conflicts)).unwrap()
}

/// Shortest cycle by trying every edge removal and a BFS between its ends.
pub fn brute_force_girth(g: &Graph) -> Girth {
    let mut best: Option<usize> = None;
    for e in g.edges() {
        let mut dist = vec![usize::MAX; g.vertex_count()];
        dist[e.u] = 0;
        let mut queue = std::collections::VecDeque::from([e.u]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbours(x) {
                if Edge::new(x, y) != e && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[e.v] != usize::MAX {
            best = Some(best.map_or(dist[e.v] + 1, |b: usize| b.min(dist[e.v] + 1)));
        }
    }
    best.map_or(Girth::Acyclic, Girth::Finite)
}

/// Edges at distance at most 2 from `e`, itself included.
pub fn brute_force_n2(g: &Graph, e: Edge) -> BTreeSet<Edge> {
    g.edges().filter(|&f| f == e || conflicting_pair(g, e, f)).collect()
}

/// `g` with a fresh leaf attached to every `step`-th vertex.
pub fn with_pendants(g: &Graph, step: usize) -> Graph {
    let n = g.vertex_count();
    let leaves: Vec<usize> = (0..n).step_by(step.max(1)).collect();
    let edges = g.edges().map(|e| (e.u, e.v)).chain(leaves.iter().enumerate().map(|(i, &v)| (v, n + i)));
    Graph::from_edges(n + leaves.len(), edges.collect::<Vec<_>>()).unwrap()
}

/// Random tree with a root of degree 4..=6 and a mix of leaves, 2-vertices
/// and vertices of degree 3..=6, so that every configuration kind occurs.
pub fn random_tree(rng: &mut impl rand::Rng, n: usize) -> Graph {
    // relative weights of child degree 1..=6
    let child_degree = rand::distributions::WeightedIndex::new([2, 8, 2, 5, 2, 2]).unwrap();
    let mut edges = Vec::new();
    let mut open = vec![(0usize, rng.gen_range(4..=6usize))];
    let mut next = 1;
    while let Some((v, want)) = open.pop() {
        for _ in 0..want {
            if next >= n {
                break;
            }
            let c = next;
            next += 1;
            edges.push((v, c));
            let d = 1 + rng.sample(&child_degree);
            if d > 1 {
                open.insert(rng.gen_range(0..=open.len()), (c, d - 1));
            }
        }
    }
    Graph::from_edges(next, edges).unwrap()
}

/// Strong colouring of `g` built in random edge order with random free
/// colours; `None` if some edge runs out of colours.
pub fn random_strong_colouring(rng: &mut impl rand::Rng, g: &Graph, palette: u32) -> Option<PartialColouring> {
    use rand::seq::SliceRandom;
    let mut c = PartialColouring::new(strongedge::Palette::new(palette).unwrap());
    let mut edges = g.edge_list();
    edges.shuffle(rng);
    for e in edges {
        let free: Vec<u32> = c.free_colours(g, e).ok()?.into_iter().collect();
        c.set_unchecked(e, *free.choose(rng)?);
    }
    Some(c)
}

/// Connected spanning subgraph of a stacked triangulation: edges are
/// dropped in random order whenever the rest stays connected.
pub fn random_planar(rng: &mut impl rand::Rng, n: usize, keep: f64) -> Graph {
    use rand::seq::SliceRandom;
    let spec = GeneratorSpec::new(Family::RandomPlanarTriangulation { n }).seed(rng.gen());
    let mut g = generate(&spec).unwrap();
    let mut edges = g.edge_list();
    edges.shuffle(rng);
    for e in edges {
        if rng.gen_bool(keep) {
            continue;
        }
        let h = Graph::from_edges(g.vertex_count(), g.edges().filter(|&f| f != e).map(|f| (f.u, f.v))).unwrap();
        if h.is_connected() {
            g = h;
        }
    }
    g
}

/// Graph on `n` vertices with the pairs selected by `mask`, in
/// lexicographic pair order.
pub fn from_mask(n: usize, mask: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    Graph::from_edges(n, pairs.zip(mask).filter(|(_, &m)| m).map(|(p, _)| p).collect::<Vec<_>>()).unwrap()
}
