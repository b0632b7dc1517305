//! Adjacency and Laplacian spectra, equitable quotients, the closed-form
//! quartic for the two-clique family, and the degree/edge bounds used by
//! the extremal arguments.
//!
//! All dense eigenproblems go through a symmetric eigensolver; exact
//! integer arithmetic is used for everything that has a closed form.

pub mod bounds;
pub mod quartic;
pub mod quotient;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphcore::Graph;

pub use bounds::{
    clique_split_max, decreasing_radius_bound, edge_lower_bound, hong_bound, hong_equality_shape,
    CliqueSplit,
};
pub use quartic::{char_poly_bni, rho_bni, QuarticPoly};
pub use quotient::{quotient_matrix, QuotientMatrix};

/// Eigenvalue tolerance for a single eigensolve.
pub const EIGEN_TOL: f64 = 1e-10;
/// Agreement tolerance between two independent routes to the same value.
pub const CROSS_CHECK_TOL: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("no certified root bracket for (n={n}, a={a}, i={i})")]
    BracketFailure { n: i64, a: i64, i: i64 },
    #[error("negative radicand {0}")]
    NegativeRadicand(f64),
    #[error("outside domain: {0}")]
    Domain(String),
    #[error("infeasible constraints: {0}")]
    Infeasible(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
}

/// Full spectrum of a graph matrix, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricSpectrum {
    pub kind: MatrixKind,
    pub eigenvalues: Vec<f64>,
}

impl SymmetricSpectrum {
    pub fn adjacency(g: &Graph) -> Self {
        SymmetricSpectrum {
            kind: MatrixKind::Adjacency,
            eigenvalues: symmetric_eigenvalues(adjacency_matrix(g)),
        }
    }

    pub fn laplacian(g: &Graph) -> Self {
        SymmetricSpectrum {
            kind: MatrixKind::Laplacian,
            eigenvalues: symmetric_eigenvalues(laplacian_matrix(g)),
        }
    }

    /// Largest eigenvalue; the spectral radius for the adjacency kind.
    pub fn largest(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    /// Second-smallest eigenvalue; the algebraic connectivity for the
    /// Laplacian kind.
    pub fn second_smallest(&self) -> Option<f64> {
        self.eigenvalues.get(1).copied()
    }

    pub fn rho(&self) -> Option<f64> {
        match self.kind {
            MatrixKind::Adjacency => self.largest(),
            MatrixKind::Laplacian => None,
        }
    }

    pub fn mu(&self) -> Option<f64> {
        match self.kind {
            MatrixKind::Laplacian => self.second_smallest(),
            MatrixKind::Adjacency => None,
        }
    }

    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

pub fn adjacency_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let mut a = DMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a
}

pub fn laplacian_matrix(g: &Graph) -> DMatrix<f64> {
    let mut l = -adjacency_matrix(g);
    for v in 0..g.n() {
        l[(v, v)] = g.degree(v) as f64;
    }
    l
}

/// Eigenvalues of a symmetric matrix in ascending order.
pub fn symmetric_eigenvalues(m: DMatrix<f64>) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Largest adjacency eigenvalue; 0 for the empty vertex set.
pub fn spectral_radius(g: &Graph) -> f64 {
    SymmetricSpectrum::adjacency(g).largest().unwrap_or(0.0)
}

/// Second-smallest Laplacian eigenvalue, `None` below two vertices.
pub fn algebraic_connectivity(g: &Graph) -> Option<f64> {
    if g.n() < 2 {
        return None;
    }
    SymmetricSpectrum::laplacian(g).second_smallest()
}
