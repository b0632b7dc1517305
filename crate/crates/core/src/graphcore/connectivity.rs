//! Connectivity: components and vertex connectivity via unit-capacity
//! max-flow on the vertex-split network (Even's scheme).

use std::collections::VecDeque;

use super::Graph;

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// Minimum number of vertices whose removal disconnects `g`, with the
/// convention that `K_n` has connectivity `n - 1`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !is_connected(g) {
        return 0;
    }
    // Some separator of minimum size k misses one of v_0..=v_k; the first
    // such vertex and some later vertex lie on different sides of it.
    let mut best = g.min_degree();
    let mut i = 0;
    while i <= best && i < n {
        for j in (i + 1)..n {
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    vertex_connectivity(g) >= k
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths between
/// non-adjacent `s` and `t`, stopping early once `limit` is reached.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g);
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < limit && net.augment(source, sink) {
        flow += 1;
    }
    flow
}

struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
}

/// `v` splits into `2v` (in) and `2v + 1` (out) joined by a unit arc.
struct SplitNetwork {
    arcs: Vec<Vec<Arc>>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut net = SplitNetwork {
            arcs: (0..2 * n).map(|_| Vec::new()).collect(),
        };
        for v in 0..n {
            net.add_arc(2 * v, 2 * v + 1, 1);
        }
        let big = n as u32;
        for (u, v) in g.edges() {
            net.add_arc(2 * u + 1, 2 * v, big);
            net.add_arc(2 * v + 1, 2 * u, big);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let rf = self.arcs[to].len();
        let rt = self.arcs[from].len();
        self.arcs[from].push(Arc { to, cap, rev: rf });
        self.arcs[to].push(Arc {
            to: from,
            cap: 0,
            rev: rt,
        });
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
        let mut visited = vec![false; self.arcs.len()];
        visited[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for (k, arc) in self.arcs[u].iter().enumerate() {
                if arc.cap > 0 && !visited[arc.to] {
                    visited[arc.to] = true;
                    prev[arc.to] = Some((u, k));
                    queue.push_back(arc.to);
                }
            }
        }
        if !visited[sink] {
            return false;
        }
        let mut v = sink;
        while let Some((u, k)) = prev[v] {
            self.arcs[u][k].cap -= 1;
            let rev = self.arcs[u][k].rev;
            self.arcs[v][rev].cap += 1;
            v = u;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::build_bni;

    #[test]
    fn complete_graph_convention() {
        assert_eq!(vertex_connectivity(&Graph::complete(7)), 6);
        assert_eq!(vertex_connectivity(&Graph::complete(1)), 0);
        assert_eq!(vertex_connectivity(&Graph::empty(0)), 0);
    }

    #[test]
    fn cycles_paths_and_disconnected() {
        assert_eq!(vertex_connectivity(&Graph::cycle(8)), 2);
        assert_eq!(vertex_connectivity(&Graph::path(5)), 1);
        assert_eq!(vertex_connectivity(&Graph::empty(3)), 0);
    }

    #[test]
    fn extremal_family_connectivity() {
        assert_eq!(vertex_connectivity(&build_bni(16, 7, 2).unwrap()), 2);
        assert_eq!(vertex_connectivity(&build_bni(16, 7, 3).unwrap()), 3);
        assert!(is_k_connected(&build_bni(16, 7, 3).unwrap(), 3));
        assert!(!is_k_connected(&build_bni(16, 7, 3).unwrap(), 4));
    }

    #[test]
    fn components_are_sorted() {
        let g = Graph::from_edges(5, [(3, 1), (0, 4)]).unwrap();
        assert_eq!(components(&g), vec![vec![0, 4], vec![1, 3], vec![2]]);
    }
}
