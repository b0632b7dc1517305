//! Exponential-time ground truth on bitmasks: subset counts, cut search,
//! permutation-minimal labeling and composition enumeration.

use super::OracleError;
use crate::graphcore::Graph;

pub const BRUTE_LAMAN_MAX_N: usize = 10;
pub const BRUTE_RANK_MAX_N: usize = 16;
pub const BRUTE_CUT_MAX_N: usize = 20;
pub const BRUTE_CANON_MAX_N: usize = 9;

fn edges_within(rows: &[u64], x: u64) -> u32 {
    let mut total = 0;
    let mut bits = x;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        total += (rows[v] & x).count_ones();
        bits &= bits - 1;
    }
    total / 2
}

/// `m = max(0, 2n - 3)` and `e(X) <= 2|X| - 3` for every `X` with `|X| >= 2`.
pub fn brute_laman(g: &Graph) -> Result<bool, OracleError> {
    let n = g.n();
    if n > BRUTE_LAMAN_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            max: BRUTE_LAMAN_MAX_N,
        });
    }
    if g.m() != (2 * n).saturating_sub(3) {
        return Ok(false);
    }
    let rows = g.adjacency_masks();
    Ok((0u64..1 << n)
        .filter(|x| x.count_ones() >= 2)
        .all(|x| edges_within(&rows, x) <= 2 * x.count_ones() - 3))
}

/// Rank of the (2,3)-sparsity matroid by greedy insertion, testing each
/// candidate edge against every vertex subset containing both endpoints.
pub fn brute_sparse_rank(g: &Graph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > BRUTE_RANK_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            max: BRUTE_RANK_MAX_N,
        });
    }
    let mut rows = vec![0u64; n];
    let mut rank = 0;
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        let others: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
        let base = (1u64 << u) | (1u64 << v);
        let independent = (0u64..1 << others.len()).all(|sub| {
            let mut x = base;
            for (k, &w) in others.iter().enumerate() {
                if sub >> k & 1 == 1 {
                    x |= 1 << w;
                }
            }
            edges_within(&rows, x) <= 2 * x.count_ones() - 3
        });
        if independent {
            rank += 1;
        } else {
            rows[u] &= !(1 << v);
            rows[v] &= !(1 << u);
        }
    }
    Ok(rank)
}

fn connected_within(rows: &[u64], alive: u64) -> bool {
    if alive == 0 {
        return true;
    }
    let start = alive & alive.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = rows[v] & alive & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == alive
}

/// Smallest vertex set whose removal disconnects the graph, by trying every
/// subset in order of size; `K_n` gives `n - 1`.
pub fn brute_vertex_connectivity(g: &Graph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > BRUTE_CUT_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            max: BRUTE_CUT_MAX_N,
        });
    }
    let rows = g.adjacency_masks();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for k in 0..n.saturating_sub(1) {
        let disconnecting = (0u64..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .any(|s| !connected_within(&rows, all & !s));
        if disconnecting {
            return Ok(k);
        }
    }
    Ok(n.saturating_sub(1))
}

/// Lexicographically smallest upper-triangle bit string over all `n!`
/// relabelings; equal for two graphs exactly when they are isomorphic.
pub fn brute_canonical_code(g: &Graph) -> Result<Vec<bool>, OracleError> {
    let n = g.n();
    if n > BRUTE_CANON_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            max: BRUTE_CANON_MAX_N,
        });
    }
    let rows = g.adjacency_masks();
    let code_of = |perm: &[usize]| -> Vec<bool> {
        // perm[new] = old
        let mut code = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 1..n {
            for i in 0..j {
                code.push(rows[perm[i]] >> perm[j] & 1 == 1);
            }
        }
        code
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = code_of(&perm);
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let code = code_of(&perm);
            if code < best {
                best = code;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// Every composition `(n_1, ..., n_t)` of `n` into positive parts with
/// `n_k >= a_k` for `k < t` and `n_t >= max(n_1, ..., n_{t-1})`; returns the
/// maximum of `sum C(n_k, 2)` and all maximizers, or `None` if infeasible.
pub fn clique_split_max_brute(n: usize, a: &[usize]) -> Option<(u64, Vec<Vec<usize>>)> {
    let mut best: Option<(u64, Vec<Vec<usize>>)> = None;
    let mut prefix = Vec::with_capacity(a.len());
    compositions(n, a, &mut prefix, &mut best);
    best
}

fn compositions(
    n: usize,
    a: &[usize],
    prefix: &mut Vec<usize>,
    best: &mut Option<(u64, Vec<Vec<usize>>)>,
) {
    let binom2 = |k: usize| (k * k.saturating_sub(1) / 2) as u64;
    let used: usize = prefix.iter().sum();
    if prefix.len() == a.len() {
        let Some(last) = n.checked_sub(used) else {
            return;
        };
        if last == 0 || prefix.iter().any(|&k| k > last) {
            return;
        }
        let mut parts = prefix.clone();
        parts.push(last);
        let value = parts.iter().map(|&k| binom2(k)).sum();
        match best {
            Some((b, args)) if *b == value => args.push(parts),
            Some((b, _)) if *b > value => {}
            _ => *best = Some((value, vec![parts])),
        }
        return;
    }
    let lo = a[prefix.len()].max(1);
    for k in lo..=n.saturating_sub(used) {
        prefix.push(k);
        compositions(n, a, prefix, best);
        prefix.pop();
    }
}
