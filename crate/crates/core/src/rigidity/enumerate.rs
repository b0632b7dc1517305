//! Minimally rigid graphs up to isomorphism, grown from the triangle by
//! Henneberg moves. Every Laman graph on `n + 1` vertices arises from one
//! on `n` vertices by a 0-extension (new vertex on two old ones) or a
//! 1-extension (split an edge `uv`, join the new vertex to `u`, `v` and a
//! third vertex).

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::graphcore::{canonical_form, CanonicalForm, Graph};

pub const LAMAN_MIN_N: usize = 3;
pub const LAMAN_MAX_N: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("enumeration supports {LAMAN_MIN_N} <= n <= {LAMAN_MAX_N}, got {0}")]
    OutOfRange(usize),
}

/// One canonical representative per isomorphism class, sorted by canonical
/// form.
pub fn enumerate_laman(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    Ok(laman_levels(n)?.pop().expect("at least one level"))
}

/// All levels `3..=n`, each sorted by canonical form.
pub fn laman_levels(n: usize) -> Result<Vec<Vec<Graph>>, EnumerationError> {
    if !(LAMAN_MIN_N..=LAMAN_MAX_N).contains(&n) {
        return Err(EnumerationError::OutOfRange(n));
    }
    let mut levels = vec![vec![Graph::complete(3)]];
    for _ in LAMAN_MIN_N..n {
        let prev = levels.last().expect("nonempty");
        let forms: BTreeSet<CanonicalForm> = prev
            .par_iter()
            .flat_map_iter(|g| extensions(g).into_iter().map(|h| canonical_form(&h)))
            .collect();
        levels.push(forms.iter().map(CanonicalForm::to_graph).collect());
    }
    Ok(levels)
}

fn extensions(g: &Graph) -> Vec<Graph> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            out.push(grow(g, None, &[a, b]));
        }
    }
    for (u, v) in g.edges() {
        for w in (0..n).filter(|&w| w != u && w != v) {
            out.push(grow(g, Some((u, v)), &[u, v, w]));
        }
    }
    out
}

fn grow(g: &Graph, split: Option<(usize, usize)>, attach: &[usize]) -> Graph {
    let n = g.n();
    let mut h = Graph::empty(n + 1);
    for (u, v) in g.edges() {
        if split != Some((u, v)) {
            h.add_edge(u, v).expect("copied edge");
        }
    }
    for &a in attach {
        h.add_edge(a, n).expect("new vertex edges are distinct");
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rigidity::laman_check;

    #[test]
    fn smallest_levels() {
        assert_eq!(enumerate_laman(3).unwrap(), vec![Graph::complete(3)]);
        let four = enumerate_laman(4).unwrap();
        assert_eq!(four.len(), 1);
        assert_eq!(four[0].m(), 5);
        assert!(crate::graphcore::canon::are_isomorphic(
            &four[0],
            &Graph::complete(4).without_edge(0, 1).unwrap()
        ));
    }

    #[test]
    fn outputs_are_laman_and_distinct() {
        let six = enumerate_laman(6).unwrap();
        let forms: BTreeSet<_> = six.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), six.len());
        assert!(six.iter().all(laman_check));
    }

    #[test]
    fn range_guard() {
        assert_eq!(enumerate_laman(2), Err(EnumerationError::OutOfRange(2)));
        assert_eq!(enumerate_laman(10), Err(EnumerationError::OutOfRange(10)));
    }
}
