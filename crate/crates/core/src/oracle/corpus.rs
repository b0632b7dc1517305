//! Graph corpora for sweeps: every labeled graph, one graph per
//! isomorphism class, and seeded random samples.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::OracleError;
use crate::graphcore::{build_bni, canonical_form, is_connected, CanonicalForm, Graph};

pub const LABELED_MAX_N: usize = 7;
pub const UNLABELED_MAX_N: usize = 8;

/// All `2^C(n,2)` graphs on vertex set `0..n`.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, OracleError> {
    if n > LABELED_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            max: LABELED_MAX_N,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Ok((0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("distinct pairs")
    }))
}

/// One representative per isomorphism class, built by adding a vertex with
/// every possible neighborhood to each class on `n - 1` vertices.
pub fn unlabeled_graphs(n: usize) -> Result<Vec<Graph>, OracleError> {
    if n > UNLABELED_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            max: UNLABELED_MAX_N,
        });
    }
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::from([canonical_form(&Graph::empty(0))]);
    for size in 1..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let g = form.to_graph();
            for nbhd in 0u64..1 << (size - 1) {
                let mut h = Graph::empty(size);
                for (u, v) in g.edges() {
                    h.add_edge(u, v).expect("copied edge");
                }
                for u in 0..size - 1 {
                    if nbhd >> u & 1 == 1 {
                        h.add_edge(u, size - 1).expect("new edge");
                    }
                }
                next.insert(canonical_form(&h));
            }
        }
        level = next;
    }
    Ok(level.iter().map(CanonicalForm::to_graph).collect())
}

pub fn connected_unlabeled_graphs(n: usize) -> Result<Vec<Graph>, OracleError> {
    Ok(unlabeled_graphs(n)?
        .into_iter()
        .filter(is_connected)
        .collect())
}

pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// `count` graphs with `n` uniform in `n_range` and edge probability uniform
/// in `[0.15, 0.9]`, reproducible from `seed`.
pub fn random_corpus(
    count: usize,
    n_range: std::ops::RangeInclusive<usize>,
    seed: u64,
) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_range.clone());
            let p = rng.gen_range(0.15..=0.9);
            random_graph(n, p, &mut rng)
        })
        .collect()
}

/// Dense graphs on 16 to 24 vertices with minimum degree around 6 and up:
/// random dense graphs, the two-clique family, and the family with a few
/// edges flipped.
pub fn dense_corpus(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let n = rng.gen_range(16..=24);
            match k % 3 {
                0 => random_graph(n, rng.gen_range(0.55..=0.95), &mut rng),
                1 => {
                    let delta = rng.gen_range(6..=(n - 4) / 2);
                    let i = rng.gen_range(2..=3);
                    build_bni(n, delta + 1, i).expect("valid parameters")
                }
                _ => {
                    let delta = rng.gen_range(6..=(n - 4) / 2);
                    let g =
                        build_bni(n, delta + 1, rng.gen_range(2..=3)).expect("valid parameters");
                    flip_edges(&g, rng.gen_range(1..=4), &mut rng)
                }
            }
        })
        .collect()
}

/// Toggles `flips` uniformly chosen vertex pairs.
pub fn flip_edges<R: Rng>(g: &Graph, flips: usize, rng: &mut R) -> Graph {
    let n = g.n();
    let mut rows = g.adjacency_masks();
    for _ in 0..flips {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        rows[u] ^= 1 << v;
        rows[v] ^= 1 << u;
    }
    Graph::from_adjacency_masks(&rows)
}

/// Connected members of a corpus.
pub fn connected_only(graphs: Vec<Graph>) -> Vec<Graph> {
    graphs.into_iter().filter(is_connected).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| unlabeled_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
        let connected: Vec<usize> = (1..=6)
            .map(|n| connected_unlabeled_graphs(n).unwrap().len())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(labeled_graphs(4).unwrap().count(), 64);
        assert!(labeled_graphs(8).is_err());
    }

    #[test]
    fn corpora_are_reproducible() {
        assert_eq!(random_corpus(20, 4..=12, 5), random_corpus(20, 4..=12, 5));
        let dense = dense_corpus(12, 1);
        assert!(dense.iter().all(|g| (16..=24).contains(&g.n())));
    }
}
