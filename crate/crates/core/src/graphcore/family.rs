//! The two graph families the extremal results are stated for.

use super::canon::canonical_form;
use super::connectivity::components;
use super::{Graph, GraphError};

/// Two disjoint cliques `K_{n1}` and `K_{n-n1}` joined by `i` pairwise
/// non-incident edges.
///
/// Vertices `0..n1` form the first clique and `n1..n` the second; the cross
/// edges join vertex `j` of the first clique to vertex `n1 + j` for `j < i`.
pub fn build_bni(n: usize, n1: usize, i: usize) -> Result<Graph, GraphError> {
    if n1 == 0 || n1 >= n {
        return Err(GraphError::InvalidFamily(format!(
            "clique size n1={n1} must satisfy 1 <= n1 <= n-1 for n={n}"
        )));
    }
    if i > n1.min(n - n1) {
        return Err(GraphError::InvalidFamily(format!(
            "{i} independent cross edges do not fit between K_{n1} and K_{}",
            n - n1
        )));
    }
    let mut g = Graph::empty(n);
    for (lo, hi) in [(0, n1), (n1, n)] {
        for u in lo..hi {
            for v in (u + 1)..hi {
                g.add_edge(u, v)?;
            }
        }
    }
    for j in 0..i {
        g.add_edge(j, n1 + j)?;
    }
    Ok(g)
}

/// The join of an edge with `n - 2` isolated vertices: vertices 0 and 1 are
/// adjacent to everything, the rest form an independent set.
pub fn build_join_k2(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidFamily(format!(
            "join needs n >= 3, got {n}"
        )));
    }
    let mut g = Graph::empty(n);
    g.add_edge(0, 1)?;
    for v in 2..n {
        g.add_edge(0, v)?;
        g.add_edge(1, v)?;
    }
    Ok(g)
}

/// Decides whether `g` is isomorphic to `build_bni(g.n(), a, i)`.
///
/// When both cliques have at least three vertices the cross edges are
/// exactly the edges whose endpoints have no common neighbor, which gives a
/// direct structural test. Smaller cliques fall back to canonical forms.
pub fn is_bni(g: &Graph, a: usize, i: usize) -> bool {
    let n = g.n();
    let Ok(target) = build_bni(n, a, i) else {
        return false;
    };
    if g.m() != target.m() {
        return false;
    }
    let mut gd = g.degrees();
    let mut td = target.degrees();
    gd.sort_unstable();
    td.sort_unstable();
    if gd != td {
        return false;
    }
    if a.min(n - a) < 3 {
        return canonical_form(g) == canonical_form(&target);
    }

    let cross: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| !shares_neighbor(g, u, v))
        .collect();
    if cross.len() != i {
        return false;
    }
    let mut rest = g.clone();
    for &(u, v) in &cross {
        rest = rest.without_edge(u, v).expect("edge came from g");
    }
    let comps = components(&rest);
    if comps.len() != 2 {
        return false;
    }
    let mut sizes = [comps[0].len(), comps[1].len()];
    sizes.sort_unstable();
    if sizes != [a.min(n - a), a.max(n - a)] {
        return false;
    }
    let clique_edges: usize = comps.iter().map(|c| c.len() * (c.len() - 1) / 2).sum();
    if rest.m() != clique_edges {
        return false;
    }
    let mut side = vec![0usize; n];
    for &v in &comps[1] {
        side[v] = 1;
    }
    let mut touched = vec![false; n];
    for &(u, v) in &cross {
        if side[u] == side[v] || touched[u] || touched[v] {
            return false;
        }
        touched[u] = true;
        touched[v] = true;
    }
    true
}

fn shares_neighbor(g: &Graph, u: usize, v: usize) -> bool {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}
