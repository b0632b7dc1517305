//! The (2,3)-pebble game. Accepted edges form an independent set of the
//! generic 2D rigidity matroid, so the accepted count is the matroid rank.

use crate::graphcore::Graph;

/// Mutable pebble-game state for one evaluation.
///
/// Every vertex starts with two pebbles. An accepted edge `uv` is covered by
/// a pebble of one endpoint and stored as an arc out of that endpoint, so
/// `total pebbles + accepted = 2n` at all times.
#[derive(Debug, Clone)]
pub struct PebbleState {
    pebbles: Vec<u8>,
    out: Vec<Vec<usize>>,
    accepted: usize,
}

impl PebbleState {
    pub fn new(n: usize) -> Self {
        PebbleState {
            pebbles: vec![2; n],
            out: vec![Vec::new(); n],
            accepted: 0,
        }
    }

    pub fn accepted(&self) -> usize {
        self.accepted
    }

    pub fn pebbles(&self, v: usize) -> u8 {
        self.pebbles[v]
    }

    pub fn free_pebbles(&self) -> usize {
        self.pebbles.iter().map(|&p| p as usize).sum()
    }

    /// The accepted edges as `(tail, head)` arcs; the tail's pebble covers it.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, heads)| heads.iter().map(move |&v| (u, v)))
    }

    /// Tries to accept `uv`; returns whether it was independent.
    pub fn insert(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loops are never independent");
        while self.pebbles[u] < 2 {
            if !self.fetch(u, v) {
                return false;
            }
        }
        while self.pebbles[v] < 2 {
            if !self.fetch(v, u) {
                return false;
            }
        }
        self.pebbles[u] -= 1;
        self.out[u].push(v);
        self.accepted += 1;
        true
    }

    /// Moves one pebble to `root` along a reversed arc path, never taking it
    /// from `root` or `keep`.
    fn fetch(&mut self, root: usize, keep: usize) -> bool {
        let n = self.pebbles.len();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        seen[keep] = true;
        let mut stack = vec![root];
        let mut found = None;
        'search: while let Some(x) = stack.pop() {
            for &y in &self.out[x] {
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                parent[y] = x;
                if self.pebbles[y] > 0 {
                    found = Some(y);
                    break 'search;
                }
                stack.push(y);
            }
        }
        let Some(mut y) = found else {
            return false;
        };
        self.pebbles[y] -= 1;
        while y != root {
            let x = parent[y];
            let k = self.out[x]
                .iter()
                .position(|&w| w == y)
                .expect("arc on path");
            self.out[x].swap_remove(k);
            self.out[y].push(x);
            y = x;
        }
        self.pebbles[root] += 1;
        true
    }
}

/// Rank of the generic rigidity matroid, inserting edges in sorted order.
pub fn pebble_rank(g: &Graph) -> usize {
    pebble_rank_in_order(g.n(), g.edges())
}

/// Rank with an explicit insertion order.
pub fn pebble_rank_in_order<I>(n: usize, edges: I) -> usize
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let mut state = PebbleState::new(n);
    for (u, v) in edges {
        state.insert(u, v);
    }
    state.accepted()
}

/// The independent edges accepted when inserting in sorted order.
pub fn independent_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut state = PebbleState::new(g.n());
    g.edges().filter(|&(u, v)| state.insert(u, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::build_bni;

    #[test]
    fn small_ranks() {
        assert_eq!(pebble_rank(&Graph::complete(3)), 3);
        assert_eq!(pebble_rank(&Graph::complete(4)), 5);
        assert_eq!(pebble_rank(&Graph::complete(2)), 1);
        assert_eq!(pebble_rank(&Graph::empty(5)), 0);
        assert_eq!(pebble_rank(&Graph::cycle(6)), 6);
    }

    #[test]
    fn extremal_family_ranks() {
        assert_eq!(pebble_rank(&build_bni(16, 7, 2).unwrap()), 28);
        assert_eq!(pebble_rank(&build_bni(16, 7, 3).unwrap()), 29);
    }

    #[test]
    fn pebble_conservation() {
        let g = Graph::complete(7);
        let mut state = PebbleState::new(7);
        for (u, v) in g.edges() {
            state.insert(u, v);
            assert_eq!(state.free_pebbles() + state.accepted(), 14);
            assert_eq!(state.arcs().count(), state.accepted());
        }
        assert_eq!(state.accepted(), 11);
        // A rigid graph keeps exactly three free pebbles.
        assert_eq!(state.free_pebbles(), 3);
    }

    #[test]
    fn rank_never_exceeds_two_n_minus_three() {
        for n in 2..12 {
            assert_eq!(pebble_rank(&Graph::complete(n)), 2 * n - 3);
        }
    }
}
