use serde::{Deserialize, Serialize};

use crate::graphcore::graph6::try_write_graph6;
use crate::graphcore::{build_bni, is_bni, vertex_connectivity, Graph, Graph6Error};
use crate::rigidity::RigidityVerdict;
use crate::spectral::{
    algebraic_connectivity, hong_bound, hong_equality_shape, rho_bni, spectral_radius,
};

/// Smallest minimum degree for which the spectral-radius conditions apply.
pub const THRESHOLD_MIN_DELTA: usize = 6;

/// Rounds to 12 significant digits so reports diff cleanly across machines.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn round_opt(x: Option<f64>) -> Option<f64> {
    x.map(round_sig)
}

/// Per-graph summary. Field order is the serialized key order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub vertex_connectivity: usize,
    pub rho: f64,
    pub mu: Option<f64>,
    pub hong_bound: Option<f64>,
    pub hong_equality_shape: bool,
    pub verdict: RigidityVerdict,
    /// 2-connected, `δ >= 6`, `n >= 2δ + 4`.
    pub rigid_bound_applicable: bool,
    /// Not applicable, or `ρ` below `ρ(B²_{n,δ+1})`, or rigid, or `≅ B²_{n,δ+1}`.
    pub rigid_bound_consistent: bool,
    /// 3-connected, `δ >= 6`, `n >= 2δ + 4`.
    pub global_bound_applicable: bool,
    /// Not applicable, or `ρ` below `ρ(B³_{n,δ+1})`, or globally rigid, or `≅ B³_{n,δ+1}`.
    pub global_bound_consistent: bool,
    pub rho_b2_threshold: Option<f64>,
    pub rho_b3_threshold: Option<f64>,
}

impl SpectralReport {
    pub fn consistent(&self) -> bool {
        self.rigid_bound_consistent && self.global_bound_consistent
    }
}

/// `ρ(B^i_{n,a})`, from the quartic when possible and a dense eigensolve
/// otherwise; `None` when the family member does not exist.
pub fn family_radius(n: usize, a: usize, i: usize) -> Option<f64> {
    let g = build_bni(n, a, i).ok()?;
    Some(rho_bni(n, a, i).unwrap_or_else(|_| spectral_radius(&g)))
}

/// `tol` widens the spectral hypothesis: a graph within `tol` of the
/// threshold is treated as meeting it.
pub fn analyze_graph(g: &Graph, tol: f64) -> Result<SpectralReport, Graph6Error> {
    let graph6 = try_write_graph6(g)?;
    let (n, m) = (g.n(), g.m());
    let delta = g.min_degree();
    let kappa = vertex_connectivity(g);
    let rho = spectral_radius(g);
    let verdict = RigidityVerdict::of(g);
    let hong = if n == 0 {
        None
    } else {
        hong_bound(n, m, delta).ok()
    };

    let in_range = delta >= THRESHOLD_MIN_DELTA && n >= 2 * delta + 4;
    let (thr2, thr3) = if delta >= 1 {
        (
            family_radius(n, delta + 1, 2),
            family_radius(n, delta + 1, 3),
        )
    } else {
        (None, None)
    };
    let meets = |thr: Option<f64>| thr.is_some_and(|t| rho >= t - tol);

    let rigid_bound_applicable = in_range && kappa >= 2;
    let rigid_bound_consistent =
        !rigid_bound_applicable || !meets(thr2) || verdict.rigid || is_bni(g, delta + 1, 2);
    let global_bound_applicable = in_range && kappa >= 3;
    let global_bound_consistent = !global_bound_applicable
        || !meets(thr3)
        || verdict.globally_rigid
        || is_bni(g, delta + 1, 3);

    Ok(SpectralReport {
        graph6,
        n,
        m,
        min_degree: delta,
        vertex_connectivity: kappa,
        rho: round_sig(rho),
        mu: round_opt(algebraic_connectivity(g)),
        hong_bound: round_opt(hong),
        hong_equality_shape: hong_equality_shape(&g.degrees()),
        verdict,
        rigid_bound_applicable,
        rigid_bound_consistent,
        global_bound_applicable,
        global_bound_consistent,
        rho_b2_threshold: round_opt(thr2),
        rho_b3_threshold: round_opt(thr3),
    })
}
