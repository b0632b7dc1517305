//! Numerical rigidity-matrix rank at a random placement.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::OracleError;
use crate::graphcore::Graph;

pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Planar coordinates for each vertex, drawn uniformly from `[1, 2)^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Placement {
    pub coords: Vec<[f64; 2]>,
    pub seed: u64,
}

impl Placement {
    pub fn random(n: usize, seed: u64) -> Result<Self, OracleError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coords = (0..n)
            .map(|_| [rng.gen_range(1.0..2.0), rng.gen_range(1.0..2.0)])
            .collect();
        let p = Placement { coords, seed };
        p.check_distinct()?;
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    fn check_distinct(&self) -> Result<(), OracleError> {
        let mut sorted = self.coords.clone();
        sorted.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(OracleError::DegeneratePlacement(self.seed));
        }
        Ok(())
    }

    /// The translations along each axis and the rotation about the origin,
    /// as velocity vectors in `R^{2n}`.
    pub fn trivial_motions(&self) -> [DVector<f64>; 3] {
        let n = self.len();
        let tx = DVector::from_fn(2 * n, |r, _| if r % 2 == 0 { 1.0 } else { 0.0 });
        let ty = DVector::from_fn(2 * n, |r, _| if r % 2 == 1 { 1.0 } else { 0.0 });
        let rot = DVector::from_fn(2 * n, |r, _| {
            let p = self.coords[r / 2];
            if r % 2 == 0 {
                -p[1]
            } else {
                p[0]
            }
        });
        [tx, ty, rot]
    }
}

/// One row per edge `uv`: `p(u) - p(v)` in the columns of `u`, `p(v) - p(u)`
/// in the columns of `v`.
#[derive(Debug, Clone)]
pub struct RigidityMatrix {
    pub matrix: DMatrix<f64>,
}

impl RigidityMatrix {
    pub fn new(g: &Graph, placement: &Placement) -> Result<Self, OracleError> {
        if placement.len() != g.n() {
            return Err(OracleError::PlacementSize {
                placement: placement.len(),
                n: g.n(),
            });
        }
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut matrix = DMatrix::zeros(edges.len(), 2 * g.n());
        for (row, &(u, v)) in edges.iter().enumerate() {
            let (pu, pv) = (placement.coords[u], placement.coords[v]);
            for k in 0..2 {
                matrix[(row, 2 * u + k)] = pu[k] - pv[k];
                matrix[(row, 2 * v + k)] = pv[k] - pu[k];
            }
        }
        Ok(RigidityMatrix { matrix })
    }

    /// Rank from singular values, counting those above `tol * sigma_max`.
    pub fn rank(&self, tol: f64) -> usize {
        let m = &self.matrix;
        if m.nrows() == 0 || m.ncols() == 0 {
            return 0;
        }
        let sv = m.clone().svd(false, false).singular_values;
        let top = sv.max();
        if top == 0.0 {
            return 0;
        }
        sv.iter().filter(|&&s| s > tol * top).count()
    }
}

pub fn numeric_rank(g: &Graph, placement: &Placement, tol: f64) -> Result<usize, OracleError> {
    Ok(RigidityMatrix::new(g, placement)?.rank(tol))
}

/// Ranks at placements seeded `base_seed..base_seed + seeds`.
pub fn numeric_ranks(
    g: &Graph,
    base_seed: u64,
    seeds: u64,
    tol: f64,
) -> Result<Vec<usize>, OracleError> {
    (base_seed..base_seed + seeds)
        .map(|s| numeric_rank(g, &Placement::random(g.n(), s)?, tol))
        .collect()
}
