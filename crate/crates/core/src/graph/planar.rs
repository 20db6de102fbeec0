//! Planarity testing with a combinatorial embedding.
//!
//! Each biconnected block is embedded by path addition (Demoucron, Malgrange
//! and Pertuiset): start from a cycle, repeatedly pick a fragment with the
//! fewest admissible faces and route a path of it through one of them. Block
//! rotations are concatenated at cut vertices and the faces of the whole
//! graph are traced from the resulting rotation system.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use super::Graph;

/// A directed edge `(tail, head)`.
pub type Dart = (usize, usize);

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("graph is not planar (obstruction inside the block on vertices {block:?})")]
pub struct NonPlanar {
    /// Vertices of the biconnected block that could not be embedded.
    pub block: Vec<usize>,
}

/// One face of an embedding: a closed walk of darts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    /// Connected component the face belongs to.
    pub component: usize,
    /// Walk in traversal order; empty for the face of an isolated vertex.
    pub darts: Vec<Dart>,
}

impl Face {
    /// Walk length `r(f)`; bridges are counted twice.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Vertices in walk order, one entry per visit.
    pub fn vertex_walk(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|&(t, _)| t)
    }
}

/// Rotation system plus the faces it induces.
#[derive(Debug, Clone)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Face>,
    components: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Cyclic order of the neighbours of `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// `(face id, r(f))` for every face.
    pub fn face_lengths(&self) -> Vec<(usize, usize)> {
        self.faces.iter().enumerate().map(|(i, f)| (i, f.len())).collect()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// `|V| - |E| + |F|` for each connected component.
    pub fn euler_characteristics(&self) -> Vec<i64> {
        let comp_of = self.graph.component_ids();
        let mut chi: Vec<i64> = self.components.iter().map(|c| c.len() as i64).collect();
        for e in self.graph.edges() {
            chi[comp_of[e.u]] -= 1;
        }
        for f in &self.faces {
            chi[f.component] += 1;
        }
        chi
    }

    /// Builds an embedding from a rotation system, tracing its faces.
    /// Returns `None` if some rotation is not a permutation of the
    /// neighbourhood.
    pub fn from_rotation(graph: &Graph, rotation: Vec<Vec<usize>>) -> Option<Embedding> {
        if rotation.len() != graph.vertex_count() {
            return None;
        }
        for v in graph.vertices() {
            let mut r = rotation[v].clone();
            r.sort_unstable();
            if r != graph.neighbours(v) {
                return None;
            }
        }
        let components = graph.components();
        let comp_of = graph.component_ids();
        // position of w in rotation[v]
        let pos: Vec<HashMap<usize, usize>> = rotation
            .iter()
            .map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect())
            .collect();
        let mut seen: HashSet<Dart> = HashSet::new();
        let mut faces = Vec::new();
        for v in graph.vertices() {
            if graph.degree(v) == 0 {
                faces.push(Face { component: comp_of[v], darts: Vec::new() });
                continue;
            }
            for &w in &rotation[v] {
                if seen.contains(&(v, w)) {
                    continue;
                }
                let mut walk = Vec::new();
                let mut dart = (v, w);
                while seen.insert(dart) {
                    walk.push(dart);
                    let (x, y) = dart;
                    let r = &rotation[y];
                    let next = r[(pos[y][&x] + 1) % r.len()];
                    dart = (y, next);
                }
                faces.push(Face { component: comp_of[v], darts: walk });
            }
        }
        Some(Embedding { graph: graph.clone(), rotation, faces, components })
    }
}

/// Embeds `g` in the plane, or reports that it is not planar.
pub fn planar_embed(g: &Graph) -> Result<Embedding, NonPlanar> {
    let n = g.vertex_count();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        let block_rot = embed_block(&block)?;
        for (v, order) in block_rot {
            rotation[v].extend(order);
        }
    }
    let emb = Embedding::from_rotation(g, rotation).expect("block rotations cover every neighbourhood");
    assert!(
        emb.euler_characteristics().iter().all(|&c| c == 2),
        "embedding of a planar graph must satisfy Euler's formula"
    );
    Ok(emb)
}

/// Edge sets of the biconnected blocks, found with an iterative
/// Hopcroft-Tarjan search. Bridges form single-edge blocks.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if *next < g.degree(v) {
                let w = g.neighbours(v)[*next];
                *next += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Rotation of every vertex of one block, restricted to block edges.
fn embed_block(block: &[(usize, usize)]) -> Result<Vec<(usize, Vec<usize>)>, NonPlanar> {
    let verts: Vec<usize> = block
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if block.len() == 1 {
        let (a, b) = block[0];
        return Ok(vec![(a, vec![b]), (b, vec![a])]);
    }
    let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = verts.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in block {
        let (x, y) = (local[&a], local[&b]);
        adj[x].push(y);
        adj[y].push(x);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let obstruction = || NonPlanar { block: verts.clone() };
    if block.len() > 3 * n - 6 {
        return Err(obstruction());
    }
    let faces = path_addition(&adj).ok_or_else(obstruction)?;

    // successor of x around y: for consecutive x -> y -> z on a face walk
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for face in &faces {
        let len = face.len();
        for i in 0..len {
            let (x, y, z) = (face[i], face[(i + 1) % len], face[(i + 2) % len]);
            succ[y].insert(x, z);
        }
    }
    let mut out = Vec::with_capacity(n);
    for y in 0..n {
        let start = adj[y][0];
        let mut order = vec![verts[start]];
        let mut x = succ[y][&start];
        while x != start {
            order.push(verts[x]);
            x = succ[y][&x];
        }
        assert_eq!(order.len(), adj[y].len(), "face walks must induce one rotation cycle per vertex");
        out.push((verts[y], order));
    }
    Ok(out)
}

/// Oriented facial cycles of a planar embedding of a biconnected graph, or
/// `None` if the graph is not planar.
fn path_addition(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let cycle = find_cycle(adj)?;

    let mut in_h = vec![false; n];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for i in 0..cycle.len() {
        in_h[cycle[i]] = true;
        h_edges.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut reversed = cycle.clone();
    reversed.reverse();
    let mut faces = vec![cycle, reversed];

    while h_edges.len() < m {
        let fragments = fragments(adj, &in_h, &h_edges);
        let face_sets: Vec<HashSet<usize>> = faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| frag.attachments.iter().all(|a| face_sets[k].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("an unembedded edge leaves at least one fragment");
        let path = fragment_path(adj, &in_h, &fragments[fi]);

        let face = faces.swap_remove(face_idx);
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let inner = &path[1..path.len() - 1];
        let mut first: Vec<usize> = Vec::new();
        let mut i = ia;
        loop {
            first.push(face[i]);
            if i == ib {
                break;
            }
            i = (i + 1) % len;
        }
        first.extend(inner.iter().rev());
        let mut second: Vec<usize> = Vec::new();
        let mut i = ib;
        loop {
            second.push(face[i]);
            if i == ia {
                break;
            }
            i = (i + 1) % len;
        }
        second.extend(inner.iter());
        faces.push(first);
        faces.push(second);

        for w in path.windows(2) {
            h_edges.insert(key(w[0], w[1]));
        }
        for &x in &path {
            in_h[x] = true;
        }
    }
    Some(faces)
}

/// Any cycle, as a vertex sequence.
fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut stack = vec![(0usize, 0usize)];
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        if *next == adj[v].len() {
            stack.pop();
            continue;
        }
        let w = adj[v][*next];
        *next += 1;
        if w == parent[v] {
            continue;
        }
        if depth[w] == usize::MAX {
            depth[w] = depth[v] + 1;
            parent[w] = v;
            stack.push((w, 0));
        } else if depth[w] < depth[v] {
            let mut cycle = vec![v];
            let mut x = v;
            while x != w {
                x = parent[x];
                cycle.push(x);
            }
            return Some(cycle);
        }
    }
    None
}

struct Fragment {
    attachments: BTreeSet<usize>,
    /// A chord between two embedded vertices, or the interior vertices of a
    /// component of `G - V(H)`.
    kind: FragmentKind,
}

enum FragmentKind {
    Chord(usize, usize),
    Interior(Vec<bool>),
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edges: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for a in 0..n {
        if !in_h[a] {
            continue;
        }
        for &b in &adj[a] {
            if b > a && in_h[b] && !h_edges.contains(&(a, b)) {
                out.push(Fragment { attachments: [a, b].into_iter().collect(), kind: FragmentKind::Chord(a, b) });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut member = vec![false; n];
        let mut attachments = BTreeSet::new();
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        member[s] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if in_h[y] {
                    attachments.insert(y);
                } else if !seen[y] {
                    seen[y] = true;
                    member[y] = true;
                    queue.push_back(y);
                }
            }
        }
        out.push(Fragment { attachments, kind: FragmentKind::Interior(member) });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    match &frag.kind {
        FragmentKind::Chord(a, b) => vec![*a, *b],
        FragmentKind::Interior(member) => {
            let start = *frag.attachments.iter().next().unwrap();
            let mut parent: HashMap<usize, usize> = HashMap::new();
            let mut queue = VecDeque::new();
            for &x in &adj[start] {
                if member[x] && !parent.contains_key(&x) {
                    parent.insert(x, start);
                    queue.push_back(x);
                }
            }
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if in_h[y] && y != start {
                        let mut path = vec![y, x];
                        let mut cur = x;
                        while parent[&cur] != start {
                            cur = parent[&cur];
                            path.push(cur);
                        }
                        path.push(start);
                        path.reverse();
                        return path;
                    }
                    if member[y] && !parent.contains_key(&y) {
                        parent.insert(y, x);
                        queue.push_back(y);
                    }
                }
            }
            unreachable!("fragments of a biconnected graph have two attachments")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    fn sorted_lengths(e: &Embedding) -> Vec<usize> {
        let mut l: Vec<usize> = e.faces().iter().map(Face::len).collect();
        l.sort_unstable();
        l
    }

    #[test]
    fn cycle_has_two_faces() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let e = planar_embed(&c6).unwrap();
        assert_eq!(sorted_lengths(&e), vec![6, 6]);
        assert_eq!(e.euler_characteristics(), vec![2]);
    }

    #[test]
    fn k4_is_a_tetrahedron() {
        let e = planar_embed(&complete(4)).unwrap();
        assert_eq!(sorted_lengths(&e), vec![3, 3, 3, 3]);
        assert_eq!(e.face_lengths().iter().map(|f| f.1).sum::<usize>(), 12);
    }

    #[test]
    fn kuratowski_graphs_rejected() {
        assert!(planar_embed(&complete(5)).is_err());
        let k33 = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        assert!(planar_embed(&k33).is_err());
        // Petersen graph
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        assert!(planar_embed(&Graph::from_edges(10, edges).unwrap()).is_err());
    }

    #[test]
    fn tree_has_one_face_counting_bridges_twice() {
        let t = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let e = planar_embed(&t).unwrap();
        assert_eq!(sorted_lengths(&e), vec![10]);
    }

    #[test]
    fn cut_vertices_and_components() {
        // two triangles sharing vertex 0, plus a pendant edge and a separate edge
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 5), (6, 7)]).unwrap();
        let e = planar_embed(&g).unwrap();
        assert_eq!(e.euler_characteristics(), vec![2, 2]);
        let total: usize = e.faces().iter().map(Face::len).sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn isolated_vertex_has_empty_face() {
        let g = Graph::new(1);
        let e = planar_embed(&g).unwrap();
        assert_eq!(e.faces().len(), 1);
        assert!(e.faces()[0].is_empty());
    }

    #[test]
    fn every_dart_in_one_face() {
        let g = Graph::from_edges(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4), (4, 5), (5, 6), (6, 3), (1, 5)],
        )
        .unwrap();
        let e = planar_embed(&g).unwrap();
        let mut darts: Vec<Dart> = e.faces().iter().flat_map(|f| f.darts.clone()).collect();
        darts.sort_unstable();
        let before = darts.len();
        darts.dedup();
        assert_eq!(before, darts.len());
        assert_eq!(darts.len(), 2 * g.edge_count());
    }
}
