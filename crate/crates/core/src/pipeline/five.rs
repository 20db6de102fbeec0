//! Constructive 5-colouring of planar graphs: peel a vertex of degree at
//! most 5, colour the rest, and when all five colours meet the neighbours
//! free one by swapping a two-coloured chain.

/// Proper colouring with colours `1..=5` of the planar graph given by `adj`.
pub(crate) fn five_colour(adj: &[Vec<usize>]) -> Vec<u32> {
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).expect("vertex left");
        assert!(deg[v] <= 5, "planar graphs have a vertex of degree at most 5");
        removed[v] = true;
        order.push(v);
        for &w in &adj[v] {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    let mut colour = vec![0u32; n];
    for &v in order.iter().rev() {
        let c = lowest_missing(adj, &colour, v).unwrap_or_else(|| free_by_swap(adj, &mut colour, v));
        colour[v] = c;
    }
    colour
}

fn lowest_missing(adj: &[Vec<usize>], colour: &[u32], v: usize) -> Option<u32> {
    (1..=5).find(|&c| adj[v].iter().all(|&w| colour[w] != c))
}

/// All five colours appear on the coloured neighbours of `v`. Some pair of
/// neighbours `x`, `y` lies in different components of the subgraph spanned
/// by their two colours; swapping the component of `x` frees its colour.
fn free_by_swap(adj: &[Vec<usize>], colour: &mut [u32], v: usize) -> u32 {
    let nbrs: Vec<usize> = adj[v].iter().copied().filter(|&w| colour[w] != 0).collect();
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            let (a, b) = (colour[x], colour[y]);
            if a == b {
                continue;
            }
            let chain = kempe_chain(adj, colour, x, a, b);
            if chain.contains(&y) {
                continue;
            }
            for &z in &chain {
                colour[z] = if colour[z] == a { b } else { a };
            }
            if let Some(c) = lowest_missing(adj, colour, v) {
                return c;
            }
        }
    }
    panic!("no Kempe swap frees a colour; the graph is not planar")
}

fn kempe_chain(adj: &[Vec<usize>], colour: &[u32], start: usize, a: u32, b: u32) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = Vec::new();
    while let Some(x) = stack.pop() {
        out.push(x);
        for &y in &adj[x] {
            if !seen[y] && (colour[y] == a || colour[y] == b) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    out
}
