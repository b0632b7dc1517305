use nalgebra::DMatrix;

use super::{symmetric_eigenvalues, SpectralError};
use crate::graphcore::Graph;

/// Quotient of the adjacency matrix over a vertex partition: entry `(i, j)`
/// is the average number of neighbors in class `j` of a vertex in class `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    pub classes: Vec<Vec<usize>>,
    pub entries: DMatrix<f64>,
    /// Whether every block has constant row sums (checked in integers).
    pub equitable: bool,
}

pub fn quotient_matrix(g: &Graph, classes: &[Vec<usize>]) -> Result<QuotientMatrix, SpectralError> {
    let n = g.n();
    let k = classes.len();
    let mut class_of = vec![usize::MAX; n];
    for (c, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return Err(SpectralError::InvalidPartition(format!(
                "class {c} is empty"
            )));
        }
        for &v in class {
            if v >= n {
                return Err(SpectralError::InvalidPartition(format!(
                    "vertex {v} out of range"
                )));
            }
            if class_of[v] != usize::MAX {
                return Err(SpectralError::InvalidPartition(format!(
                    "vertex {v} repeated"
                )));
            }
            class_of[v] = c;
        }
    }
    if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
        return Err(SpectralError::InvalidPartition(format!(
            "vertex {v} not covered"
        )));
    }

    let mut entries = DMatrix::zeros(k, k);
    let mut equitable = true;
    for (i, class) in classes.iter().enumerate() {
        let mut first: Option<Vec<usize>> = None;
        let mut totals = vec![0usize; k];
        for &v in class {
            let mut counts = vec![0usize; k];
            for &w in g.neighbors(v) {
                counts[class_of[w]] += 1;
            }
            for (t, c) in totals.iter_mut().zip(&counts) {
                *t += c;
            }
            match &first {
                None => first = Some(counts),
                Some(f) if *f != counts => equitable = false,
                Some(_) => {}
            }
        }
        for j in 0..k {
            entries[(i, j)] = totals[j] as f64 / class.len() as f64;
        }
    }
    Ok(QuotientMatrix {
        classes: classes.to_vec(),
        entries,
        equitable,
    })
}

impl QuotientMatrix {
    pub fn size(&self) -> usize {
        self.classes.len()
    }

    /// Eigenvalues, ascending. `|X_i| b_ij = e(X_i, X_j) = |X_j| b_ji`, so
    /// `D^{1/2} B D^{-1/2}` with `D = diag(|X_i|)` is symmetric and similar
    /// to `B`.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let k = self.size();
        let sizes: Vec<f64> = self
            .classes
            .iter()
            .map(|c| (c.len() as f64).sqrt())
            .collect();
        let sym = DMatrix::from_fn(k, k, |i, j| sizes[i] * self.entries[(i, j)] / sizes[j]);
        symmetric_eigenvalues(sym)
    }

    pub fn largest_eigenvalue(&self) -> f64 {
        self.eigenvalues().last().copied().unwrap_or(0.0)
    }
}

/// The four-class partition of `build_bni(n, a, i)`: matched vertices of the
/// first clique, the rest of it, matched vertices of the second clique, the
/// rest of it. Empty classes are dropped.
pub fn bni_partition(n: usize, a: usize, i: usize) -> Vec<Vec<usize>> {
    [0..i, i..a, a..a + i, a + i..n]
        .into_iter()
        .map(|r| r.collect::<Vec<_>>())
        .filter(|c| !c.is_empty())
        .collect()
}
