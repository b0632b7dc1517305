//! The partition inequality that guarantees `k` edge-disjoint spanning rigid
//! subgraphs, a search for partitions that violate it, and the boundary
//! size law for small vertex sets.

use rayon::prelude::*;

use super::OracleError;
use crate::graphcore::{boundary_size, partition_cut, Graph, VertexPartition};

pub const EXHAUSTIVE_MAX_N: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Every `Z` up to the size cap and every set partition of `V - Z`.
    Exhaustive,
    /// Singletons, a single part, and the clusters left after deleting
    /// edges whose ends share no neighbor.
    Structured,
}

/// Both sides of `e_{G-Z}(π) >= k(3-|Z|)n_0' + 2k n_0 - 3k - n_Z(π)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PackingSides {
    pub cut: i64,
    pub required: i64,
}

impl PackingSides {
    pub fn holds(&self) -> bool {
        self.cut >= self.required
    }
}

fn required(k: i64, z: usize, n0: usize, n0p: usize, nz: usize) -> i64 {
    k * (3 - z as i64) * n0p as i64 + 2 * k * n0 as i64 - 3 * k - nz as i64
}

pub fn packing_sides(
    g: &Graph,
    k: usize,
    vp: &VertexPartition,
) -> Result<PackingSides, OracleError> {
    let cut = partition_cut(g, vp)? as i64;
    let required = required(k as i64, vp.z().len(), vp.n0(), vp.n0p(), vp.nz());
    Ok(PackingSides { cut, required })
}

pub fn packing_condition_holds(
    g: &Graph,
    k: usize,
    vp: &VertexPartition,
) -> Result<bool, OracleError> {
    Ok(packing_sides(g, k, vp)?.holds())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingViolation {
    pub partition: VertexPartition,
    pub sides: PackingSides,
}

/// First `(Z, π)` with `|Z| <= zmax` violating the inequality, trying `Z`
/// by increasing size. `None` means no candidate failed; it is not a proof
/// of rigidity.
pub fn find_packing_violation(
    g: &Graph,
    k: usize,
    zmax: usize,
    mode: SearchMode,
) -> Result<Option<PackingViolation>, OracleError> {
    let n = g.n();
    if mode == SearchMode::Exhaustive && n > EXHAUSTIVE_MAX_N {
        return Err(OracleError::TooLarge {
            n,
            max: EXHAUSTIVE_MAX_N,
        });
    }
    let zs: Vec<Vec<usize>> = (0..=zmax.min(n)).flat_map(|s| combinations(n, s)).collect();
    let found = zs.par_iter().find_map_first(|z| {
        let parts = match mode {
            SearchMode::Exhaustive => exhaustive_for(g, k, z),
            SearchMode::Structured => structured_for(g, k, z),
        }?;
        Some((z.clone(), parts))
    });
    let Some((z, parts)) = found else {
        return Ok(None);
    };
    let partition = VertexPartition::new(g, z, parts)?;
    let sides = packing_sides(g, k, &partition)?;
    debug_assert!(!sides.holds());
    Ok(Some(PackingViolation { partition, sides }))
}

fn combinations(n: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(s);
    fn rec(start: usize, n: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, s, cur, out);
            cur.pop();
        }
    }
    rec(0, n, s, &mut cur, &mut out);
    out
}

fn rest_and_zdeg(g: &Graph, z: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut in_z = vec![false; g.n()];
    for &v in z {
        in_z[v] = true;
    }
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !in_z[v]).collect();
    let zdeg = rest
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| in_z[w]).count())
        .collect();
    (rest, zdeg)
}

/// Walks all restricted growth strings over `V - Z`.
fn exhaustive_for(g: &Graph, k: usize, z: &[usize]) -> Option<Vec<Vec<usize>>> {
    let (rest, zdeg) = rest_and_zdeg(g, z);
    let r = rest.len();
    if r == 0 {
        return None;
    }
    let mut index = vec![usize::MAX; g.n()];
    for (p, &v) in rest.iter().enumerate() {
        index[v] = p;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
        .map(|(u, v)| (index[u], index[v]))
        .collect();

    let mut labels = vec![0usize; r];
    let mut maxes = vec![0usize; r];
    let mut sizes = vec![0usize; r];
    loop {
        sizes.iter_mut().for_each(|s| *s = 0);
        for &l in &labels {
            sizes[l] += 1;
        }
        let blocks = maxes[r - 1] + 1;
        let n0 = sizes[..blocks].iter().filter(|&&s| s == 1).count();
        let nz: usize = (0..r)
            .filter(|&p| sizes[labels[p]] == 1)
            .map(|p| zdeg[p])
            .sum();
        let cut = edges
            .iter()
            .filter(|&&(u, v)| labels[u] != labels[v])
            .count() as i64;
        if cut < required(k as i64, z.len(), n0, blocks - n0, nz) {
            let mut parts = vec![Vec::new(); blocks];
            for (p, &l) in labels.iter().enumerate() {
                parts[l].push(rest[p]);
            }
            return Some(parts);
        }
        // Next restricted growth string: labels[p] <= 1 + max(labels[..p]).
        let mut p = r - 1;
        loop {
            if p == 0 {
                return None;
            }
            if labels[p] <= maxes[p - 1] {
                labels[p] += 1;
                maxes[p] = maxes[p - 1].max(labels[p]);
                for q in p + 1..r {
                    labels[q] = 0;
                    maxes[q] = maxes[p];
                }
                break;
            }
            p -= 1;
        }
    }
}

fn structured_for(g: &Graph, k: usize, z: &[usize]) -> Option<Vec<Vec<usize>>> {
    let (rest, _) = rest_and_zdeg(g, z);
    if rest.is_empty() {
        return None;
    }
    let mut candidates = vec![
        rest.iter().map(|&v| vec![v]).collect::<Vec<_>>(),
        vec![rest.clone()],
    ];
    candidates.push(clusters(g, &rest, false));
    candidates.push(clusters(g, &rest, true));
    candidates.into_iter().find(|parts| {
        let vp = VertexPartition::new(g, z.to_vec(), parts.clone()).expect("covers V - Z");
        !packing_condition_holds(g, k, &vp).expect("same graph")
    })
}

/// Components of `G[rest]`, optionally after deleting every edge whose ends
/// have no common neighbor inside `rest`.
fn clusters(g: &Graph, rest: &[usize], drop_bridging: bool) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut alive = vec![false; n];
    for &v in rest {
        alive[v] = true;
    }
    let common = |u: usize, v: usize| {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            match a[x].cmp(&b[y]) {
                std::cmp::Ordering::Less => x += 1,
                std::cmp::Ordering::Greater => y += 1,
                std::cmp::Ordering::Equal => {
                    if alive[a[x]] {
                        return true;
                    }
                    x += 1;
                    y += 1;
                }
            }
        }
        false
    };
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for &s in rest {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut stack = vec![s];
        let mut members = Vec::new();
        while let Some(u) = stack.pop() {
            members.push(u);
            for &w in g.neighbors(u) {
                if alive[w] && comp[w] == usize::MAX && (!drop_bridging || common(u, w)) {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// If `|∂U| <= δ - 1` then `|U| >= δ + 1`, for a nonempty proper `U`.
pub fn boundary_law_holds(g: &Graph, u: &[usize]) -> Result<bool, OracleError> {
    let boundary = boundary_size(g, u)?;
    let delta = g.min_degree();
    Ok(boundary + 1 > delta || u.len() > delta)
}
