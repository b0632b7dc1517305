//! Slow, independent ground truth for the fast routines: numerical rank of
//! the rigidity matrix, exponential subset and cut searches, partition
//! inequality witnesses, and graph corpora.

pub mod corpus;
pub mod counts;
pub mod framework;
pub mod packing;

use thiserror::Error;

use crate::graphcore::GraphError;

pub use counts::{
    brute_canonical_code, brute_laman, brute_sparse_rank, brute_vertex_connectivity,
    clique_split_max_brute,
};
pub use framework::{numeric_rank, numeric_ranks, Placement, RigidityMatrix, DEFAULT_RANK_TOL};
pub use packing::{
    boundary_law_holds, find_packing_violation, packing_condition_holds, packing_sides,
    PackingSides, PackingViolation, SearchMode,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("n = {n} exceeds the limit {max} for this oracle")]
    TooLarge { n: usize, max: usize },
    #[error("placement from seed {0} has coincident points")]
    DegeneratePlacement(u64),
    #[error("placement has {placement} points for a graph on {n} vertices")]
    PlacementSize { placement: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
