//! Simple undirected graphs, edge-list parsing and structural queries.
//!
//! Vertices are dense indices `0..n`. Each vertex also carries an external
//! label (the integer id used in edge-list files); labels are kept sorted so
//! that index order and label order agree.

mod planar;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use planar::{planar_embed, Dart, Embedding, Face, NonPlanar};

/// Errors raised while building or querying a [`Graph`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: loop edge on vertex {vertex}")]
    Loop { line: usize, vertex: u32 },
    #[error("loop edge on vertex {0}")]
    LoopEdge(usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("edge {0} is not in the graph")]
    UnknownEdge(Edge),
}

/// An undirected edge identified by its endpoints with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the canonical edge on `{a, b}`. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loop edge on vertex {a}");
        Edge { u: a.min(b), v: a.max(b) }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// True when the two edges share an endpoint.
    pub fn is_adjacent(&self, other: &Edge) -> bool {
        self != other && (other.touches(self.u) || other.touches(self.v))
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            debug_assert_eq!(self.v, x);
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Girth of a graph: the length of a shortest cycle, or `Acyclic` for forests.
///
/// `Acyclic` compares greater than every finite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    /// True when every cycle has length at least `bound`.
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Acyclic => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => write!(f, "acyclic"),
        }
    }
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<u32>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph on vertices `0..n` labelled by their index.
    pub fn new(n: usize) -> Self {
        Graph {
            labels: (0..n as u32).collect(),
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Graph on `0..n` with the given edges; duplicates are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            if a >= n {
                return Err(GraphError::UnknownVertex(a));
            }
            if b >= n {
                return Err(GraphError::UnknownVertex(b));
            }
            g.insert_edge(Edge::new(a, b));
        }
        Ok(g)
    }

    /// Builds a graph whose vertices carry the given external labels.
    /// `edges` and `isolated` refer to labels, not indices.
    pub fn from_labelled(
        edges: impl IntoIterator<Item = (u32, u32)>,
        isolated: impl IntoIterator<Item = u32>,
    ) -> Result<Self, GraphError> {
        let edges: Vec<(u32, u32)> = edges.into_iter().collect();
        let mut ids: BTreeSet<u32> = isolated.into_iter().collect();
        for &(a, b) in &edges {
            ids.insert(a);
            ids.insert(b);
        }
        let labels: Vec<u32> = ids.into_iter().collect();
        let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut g = Graph {
            adj: vec![Vec::new(); labels.len()],
            labels,
            edge_count: 0,
        };
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(index[&a]));
            }
            g.insert_edge(Edge::new(index[&a], index[&b]));
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.adj.len() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// All edges in increasing `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| Edge { u, v }))
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    /// Maximum degree, 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Index of the vertex carrying `label`.
    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn degree_sum(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Component index of every vertex, numbered as in [`Graph::components`].
    pub fn component_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.vertex_count()];
        for (i, comp) in self.components().iter().enumerate() {
            for &v in comp {
                ids[v] = i;
            }
        }
        ids
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `vertices`, relabelled densely in the given order.
    /// Returns the subgraph and the map from new index to old index.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut sub = Graph::new(vertices.len());
        sub.labels = vertices.iter().map(|&v| self.labels[v]).collect();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX && pos[w] > i {
                    sub.insert_edge(Edge::new(i, pos[w]));
                }
            }
        }
        (sub, vertices.to_vec())
    }

    /// Inserts `e`; returns false if it was already present.
    pub(crate) fn insert_edge(&mut self, e: Edge) -> bool {
        match self.adj[e.u].binary_search(&e.v) {
            Ok(_) => false,
            Err(i) => {
                self.adj[e.u].insert(i, e.v);
                let j = self.adj[e.v].binary_search(&e.u).unwrap_err();
                self.adj[e.v].insert(j, e.u);
                self.edge_count += 1;
                true
            }
        }
    }

    /// Removes `e`; returns false if it was absent.
    pub(crate) fn remove_edge(&mut self, e: Edge) -> bool {
        match self.adj[e.u].binary_search(&e.v) {
            Err(_) => false,
            Ok(i) => {
                self.adj[e.u].remove(i);
                let j = self.adj[e.v].binary_search(&e.u).unwrap();
                self.adj[e.v].remove(j);
                self.edge_count -= 1;
                true
            }
        }
    }

    /// Appends a fresh vertex and returns its index. Its label is one more
    /// than the current largest label.
    #[cfg(test)]
    pub(crate) fn push_vertex(&mut self) -> usize {
        let label = self.labels.last().map_or(0, |&l| l + 1);
        self.labels.push(label);
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Length of a shortest cycle (BFS from every vertex).
    pub fn girth(&self) -> Girth {
        let n = self.vertex_count();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            'bfs: while let Some(x) = queue.pop_front() {
                if 2 * dist[x] + 1 >= best {
                    break;
                }
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        best = best.min(dist[x] + dist[y] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Finite(best)
        }
    }

    /// Degree and 2-neighbour count of `v`.
    pub fn classify_vertex(&self, v: usize) -> Result<VertexClass, GraphError> {
        if v >= self.vertex_count() {
            return Err(GraphError::UnknownVertex(v));
        }
        Ok(self.class_of(v))
    }

    pub(crate) fn class_of(&self, v: usize) -> VertexClass {
        let degree = self.degree(v);
        let two_neighbours = self.adj[v].iter().filter(|&&w| self.degree(w) == 2).count();
        VertexClass { degree, two_neighbours }
    }

    /// Number of neighbours of `v` of degree exactly 2.
    pub fn two_neighbour_count(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&w| self.degree(w) == 2).count()
    }

    /// True when `v` is a `k_l`-vertex.
    pub fn is_kl(&self, v: usize, k: usize, l: usize) -> bool {
        self.degree(v) == k && self.two_neighbour_count(v) == l
    }

    /// Edges at distance at most 2 from `e`: every edge with an endpoint in
    /// the closed neighbourhood of `u` or `v`. With `closed == false` the
    /// edge itself is left out.
    pub fn n2_edges(&self, e: Edge, closed: bool) -> Result<BTreeSet<Edge>, GraphError> {
        if !self.contains_edge(e) {
            return Err(GraphError::UnknownEdge(e));
        }
        Ok(self.n2_unchecked(e, closed))
    }

    pub(crate) fn n2_unchecked(&self, e: Edge, closed: bool) -> BTreeSet<Edge> {
        let mut out = BTreeSet::new();
        for end in [e.u, e.v] {
            for &x in &self.adj[end] {
                out.insert(Edge::new(end, x));
                for &y in &self.adj[x] {
                    out.insert(Edge::new(x, y));
                }
            }
        }
        if !closed {
            out.remove(&e);
        }
        out
    }

    /// Calls `f` on every edge of the closed distance-2 neighbourhood of `e`.
    /// Edges may be visited more than once.
    pub(crate) fn for_each_n2(&self, e: Edge, mut f: impl FnMut(Edge)) {
        for end in [e.u, e.v] {
            for &x in &self.adj[end] {
                f(Edge::new(end, x));
                for &y in &self.adj[x] {
                    if y != end {
                        f(Edge::new(x, y));
                    }
                }
            }
        }
    }

    /// True when `a` and `b` are distinct edges at distance at most 2.
    pub fn within_distance_two(&self, a: Edge, b: Edge) -> bool {
        if a == b {
            return false;
        }
        let near = |x: usize| b.touches(x) || self.adj[x].iter().any(|&y| b.touches(y));
        near(a.u) || near(a.v)
    }

    /// Graphviz rendering; when `colour` is given, edges are labelled with
    /// the colour returned for them.
    pub fn to_dot(&self, colour: impl Fn(Edge) -> Option<u32>) -> String {
        let mut out = String::from("graph G {\n");
        for v in self.vertices() {
            if self.degree(v) == 0 {
                out.push_str(&format!("  {};\n", self.labels[v]));
            }
        }
        for e in self.edges() {
            let (a, b) = (self.labels[e.u], self.labels[e.v]);
            match colour(e) {
                Some(c) => out.push_str(&format!("  {a} -- {b} [label=\"{c}\"];\n")),
                None => out.push_str(&format!("  {a} -- {b};\n")),
            }
        }
        out.push_str("}\n");
        out
    }

    /// Edge list in the text format accepted by [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for v in self.vertices() {
            if self.degree(v) == 0 {
                out.push_str(&format!("{}\n", self.labels[v]));
            }
        }
        for e in self.edges() {
            out.push_str(&format!("{} {}\n", self.labels[e.u], self.labels[e.v]));
        }
        out
    }
}

/// Degree data of a vertex: a `k_l`-vertex has degree `k` and `l`
/// neighbours of degree 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexClass {
    pub degree: usize,
    pub two_neighbours: usize,
}

impl VertexClass {
    /// A 2-vertex with a 2-neighbour.
    pub fn is_bad_two_vertex(&self) -> bool {
        self.degree == 2 && self.two_neighbours > 0
    }

    pub fn is_kl(&self, k: usize, l: usize) -> bool {
        self.degree == k && self.two_neighbours == l
    }

    pub fn is_at_least(&self, k: usize) -> bool {
        self.degree >= k
    }

    pub fn is_at_most(&self, k: usize) -> bool {
        self.degree <= k
    }
}

/// Parses the edge-list text format.
///
/// Each line holds `u v` (an edge) or a single `v` (an isolated-vertex
/// declaration). `#` starts a comment; blank lines are skipped. Duplicate
/// edges in either orientation are merged.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut isolated = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<u32>().map_err(|_| GraphError::Parse {
                line,
                message: format!("expected a nonnegative integer, found {s:?}"),
            })
        };
        match fields.as_slice() {
            [v] => isolated.push(parse(v)?),
            [a, b] => {
                let (a, b) = (parse(a)?, parse(b)?);
                if a == b {
                    return Err(GraphError::Loop { line, vertex: a });
                }
                edges.push((a, b));
            }
            _ => {
                return Err(GraphError::Parse {
                    line,
                    message: format!("expected `u v`, found {content:?}"),
                })
            }
        }
    }
    Graph::from_labelled(edges, isolated)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn parse_path_and_duplicates() {
        let g = parse_graph("0 1\n1 2").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 2));
        let g = parse_graph("0 1\n0 1\n1 0").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_rejects_loop_and_garbage() {
        assert_eq!(parse_graph("0 0"), Err(GraphError::Loop { line: 1, vertex: 0 }));
        match parse_graph("# header\n0 1\n1 x\n") {
            Err(GraphError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_graph("1 2 3"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("-1 2"), Err(GraphError::Parse { .. })));
    }

    #[test]
    fn parse_isolated_and_sparse_labels() {
        let g = parse_graph("10 20 # comment\n\n7\n").unwrap();
        assert_eq!(g.labels(), &[7, 10, 20]);
        assert_eq!(g.degree(0), 0);
        assert!(g.has_edge(1, 2));
        assert_eq!(g.degree_sum(), 2 * g.edge_count());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(6).girth(), Girth::Finite(6));
        let star = Graph::from_edges(6, (1..6).map(|i| (0, i))).unwrap();
        assert_eq!(star.girth(), Girth::Acyclic);
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.girth(), Girth::Finite(3));
        assert!(Girth::Acyclic > Girth::Finite(100));
    }

    #[test]
    fn classify_examples() {
        // K_{1,4} with every leaf subdivided: centre is a 4_4-vertex
        let g = Graph::from_edges(9, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 6), (3, 7), (4, 8)]).unwrap();
        let c = g.classify_vertex(0).unwrap();
        assert!(c.is_kl(4, 4));
        // P5 = 0-1-2-3-4; vertex 1 has neighbours of degree 1 and 2
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let c = p5.classify_vertex(1).unwrap();
        assert_eq!((c.degree, c.two_neighbours), (2, 1));
        assert!(c.is_bad_two_vertex());
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let c = p3.classify_vertex(1).unwrap();
        assert_eq!(c.degree, 2);
        assert!(!c.is_bad_two_vertex());
        assert_eq!(p3.classify_vertex(7), Err(GraphError::UnknownVertex(7)));
    }

    #[test]
    fn n2_examples() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let open = p4.n2_edges(Edge::new(1, 2), false).unwrap();
        assert_eq!(open.into_iter().collect::<Vec<_>>(), vec![Edge::new(0, 1), Edge::new(2, 3)]);

        let matching = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(matching.n2_edges(Edge::new(2, 3), false).unwrap().is_empty());

        // C6 with e_i = (i-1, i): N2(e1) misses only the opposite edge e4
        let c6 = cycle(6);
        let e = |i: usize| Edge::new(i - 1, i % 6);
        let open = c6.n2_edges(e(1), false).unwrap();
        let expected: BTreeSet<Edge> = [e(2), e(3), e(5), e(6)].into_iter().collect();
        assert_eq!(open, expected);
        let closed = c6.n2_edges(e(1), true).unwrap();
        assert!(closed.contains(&e(1)) && closed.len() == 5);

        assert!(c6.n2_edges(Edge::new(0, 3), false).is_err());
    }

    #[test]
    fn dot_and_edge_list() {
        let g = parse_graph("3 5\n9\n").unwrap();
        assert_eq!(g.to_edge_list(), "9\n3 5\n");
        let dot = g.to_dot(|_| Some(2));
        assert!(dot.contains("3 -- 5 [label=\"2\"]"));
        assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g);
    }
}
