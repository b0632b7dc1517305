//! Exact canonical labeling for small graphs (n <= 64).
//!
//! Individualization/refinement search: the ordered partition is refined to
//! an equitable one by neighbor counts, the first smallest non-singleton
//! cell is individualized vertex by vertex, and the lexicographically
//! largest adjacency code over all discrete leaves is the canonical form.
//! No automorphism pruning, so the cost grows with the automorphism group.

use std::cmp::Ordering;

use super::Graph;

/// Adjacency rows of the canonically relabeled graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency_masks(&self.rows)
    }
}

/// Canonical form and the labeling producing it (`labeling[v]` is the new
/// label of `v`).
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    let search = Search {
        adj: g.adjacency_masks(),
    };
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    let start = if n == 0 {
        Vec::new()
    } else {
        vec![(0..n).collect::<Vec<_>>()]
    };
    search.explore(start, &mut best);
    let (rows, order) = best.unwrap_or_default();
    let mut labeling = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        labeling[old] = new;
    }
    (CanonicalForm { n, rows }, labeling)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g) == canonical_form(h)
}

struct Search {
    adj: Vec<u64>,
}

impl Search {
    fn explore(&self, cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
        let cells = self.refine(cells);
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(k, c)| (c.len(), *k))
            .map(|(k, _)| k);
        let Some(target) = target else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            let code = self.code(&order);
            let better = match best {
                None => true,
                Some((b, _)) => code.cmp(b) == Ordering::Greater,
            };
            if better {
                *best = Some((code, order));
            }
            return;
        };
        for &v in &cells[target] {
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend(cells[..target].iter().cloned());
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend(cells[target + 1..].iter().cloned());
            self.explore(next, best);
        }
    }

    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let masks: Vec<u64> = cells
                .iter()
                .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
                .collect();
            let mut next = Vec::with_capacity(cells.len());
            let mut changed = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let sig = masks
                            .iter()
                            .map(|&m| (self.adj[v] & m).count_ones())
                            .collect();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut group = vec![keyed[0].1];
                for w in keyed.windows(2) {
                    if w[0].0 != w[1].0 {
                        next.push(std::mem::take(&mut group));
                        changed = true;
                    }
                    group.push(w[1].1);
                }
                next.push(group);
            }
            cells = next;
            if !changed {
                return cells;
            }
        }
    }

    fn code(&self, order: &[usize]) -> Vec<u64> {
        let mut pos = [0usize; 64];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        order
            .iter()
            .map(|&old| {
                let mut row = 0u64;
                let mut bits = self.adj[old];
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    row |= 1 << pos[w];
                    bits &= bits - 1;
                }
                row
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelings_share_a_form() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let perms = [[5, 4, 3, 2, 1, 0], [2, 0, 1, 5, 3, 4], [1, 3, 5, 0, 2, 4]];
        let base = canonical_form(&g);
        for p in perms {
            assert_eq!(canonical_form(&g.permuted(&p)), base);
        }
    }

    #[test]
    fn labeling_reproduces_form() {
        let g = Graph::cycle(7);
        let (form, labeling) = canonical_labeling(&g);
        assert_eq!(g.permuted(&labeling), form.to_graph());
    }

    #[test]
    fn distinguishes_cospectral_like_pairs() {
        // C6 versus two disjoint triangles: both 2-regular on six vertices.
        let c6 = Graph::cycle(6);
        let tt = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &tt));
        assert!(are_isomorphic(&c6, &c6.permuted(&[3, 1, 4, 0, 5, 2])));
    }

    #[test]
    fn empty_and_tiny() {
        assert_eq!(canonical_form(&Graph::empty(0)).n(), 0);
        assert_eq!(canonical_form(&Graph::empty(1)).to_graph(), Graph::empty(1));
    }
}
