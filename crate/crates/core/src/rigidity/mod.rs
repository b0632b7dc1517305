//! Generic rigidity in the plane: rank, rigid, minimally rigid, redundantly
//! rigid and globally rigid verdicts, plus enumeration of minimally rigid
//! graphs.
//!
//! Vertex counts below two follow the matroid-rank convention: the rank
//! target is `max(0, 2n - 3)`, so `K_1` and `K_2` are rigid.

pub mod enumerate;
pub mod pebble;

use serde::{Deserialize, Serialize};

use crate::graphcore::{is_k_connected, Graph};

pub use enumerate::{enumerate_laman, EnumerationError, LAMAN_MAX_N, LAMAN_MIN_N};
pub use pebble::{independent_edges, pebble_rank, pebble_rank_in_order, PebbleState};

/// Rank of a rigid graph on `n` vertices.
pub fn rigid_rank_target(n: usize) -> usize {
    (2 * n).saturating_sub(3)
}

pub fn is_rigid(g: &Graph) -> bool {
    pebble_rank(g) == rigid_rank_target(g.n())
}

/// Minimal rigidity: `m = 2n - 3` and every edge independent.
pub fn laman_check(g: &Graph) -> bool {
    g.m() == rigid_rank_target(g.n()) && pebble_rank(g) == g.m()
}

/// Rigid, and still rigid after deleting any single edge.
///
/// Only edges of one basis need rechecking: deleting an edge outside the
/// basis leaves the basis intact.
pub fn is_redundantly_rigid(g: &Graph) -> bool {
    let basis = independent_edges(g);
    if basis.len() != rigid_rank_target(g.n()) {
        return false;
    }
    basis.iter().all(|&(u, v)| {
        let h = g.without_edge(u, v).expect("basis edges belong to g");
        is_rigid(&h)
    })
}

/// Complete on at most three vertices, or 3-connected and redundantly rigid.
pub fn is_globally_rigid(g: &Graph) -> bool {
    if g.n() <= 3 && g.is_complete() {
        return true;
    }
    is_k_connected(g, 3) && is_redundantly_rigid(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityVerdict {
    pub rank: usize,
    pub rigid: bool,
    pub minimally_rigid: bool,
    pub redundantly_rigid: bool,
    pub globally_rigid: bool,
}

impl RigidityVerdict {
    pub fn of(g: &Graph) -> Self {
        let rank = pebble_rank(g);
        let rigid = rank == rigid_rank_target(g.n());
        let minimally_rigid = rigid && g.m() == rank;
        let redundantly_rigid =
            rigid && (g.m() == 0 || !minimally_rigid) && is_redundantly_rigid(g);
        let globally_rigid =
            (g.n() <= 3 && g.is_complete()) || (redundantly_rigid && is_k_connected(g, 3));
        RigidityVerdict {
            rank,
            rigid,
            minimally_rigid,
            redundantly_rigid,
            globally_rigid,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{build_bni, build_join_k2};

    #[test]
    fn rigidity_examples() {
        assert!(is_rigid(&Graph::complete(3)));
        assert!(!is_rigid(&build_bni(16, 7, 2).unwrap()));
        assert!(is_rigid(&build_bni(16, 7, 3).unwrap()));
        assert!(is_rigid(&Graph::complete(1)));
        assert!(is_rigid(&Graph::complete(2)));
        assert!(!is_rigid(&Graph::empty(2)));
    }

    #[test]
    fn laman_examples() {
        for n in 3..=8 {
            assert!(laman_check(&build_join_k2(n).unwrap()), "join n={n}");
        }
        assert!(!laman_check(&Graph::complete(4)));
        assert!(!laman_check(&Graph::cycle(5)));
        assert!(laman_check(&Graph::complete(2)));
    }

    #[test]
    fn redundancy_examples() {
        assert!(is_redundantly_rigid(&Graph::complete(4)));
        assert!(!is_redundantly_rigid(&build_join_k2(5).unwrap()));
        assert!(!is_redundantly_rigid(&build_bni(16, 7, 3).unwrap()));
        assert!(!is_redundantly_rigid(&Graph::complete(3)));
    }

    #[test]
    fn global_examples() {
        assert!(is_globally_rigid(&Graph::complete(3)));
        assert!(is_globally_rigid(&Graph::complete(2)));
        assert!(is_globally_rigid(&Graph::complete(5)));
        assert!(!is_globally_rigid(&build_bni(16, 7, 3).unwrap()));
        assert!(!is_globally_rigid(
            &Graph::complete(4).without_edge(0, 1).unwrap()
        ));
        assert!(is_globally_rigid(&Graph::complete(4)));
    }

    #[test]
    fn verdict_agrees_with_individual_checks() {
        let graphs = [
            Graph::complete(1),
            Graph::complete(2),
            Graph::complete(3),
            Graph::complete(4),
            Graph::complete(6),
            build_join_k2(6).unwrap(),
            build_bni(16, 7, 2).unwrap(),
            build_bni(16, 7, 3).unwrap(),
            Graph::cycle(6),
        ];
        for g in graphs {
            let v = RigidityVerdict::of(&g);
            assert_eq!(v.rank, pebble_rank(&g));
            assert_eq!(v.rigid, is_rigid(&g), "{g:?}");
            assert_eq!(v.minimally_rigid, laman_check(&g), "{g:?}");
            assert_eq!(v.redundantly_rigid, is_redundantly_rigid(&g), "{g:?}");
            assert_eq!(v.globally_rigid, is_globally_rigid(&g), "{g:?}");
        }
    }
}
