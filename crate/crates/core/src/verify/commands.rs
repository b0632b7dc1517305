use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use super::report::{analyze_graph, round_sig, SpectralReport, THRESHOLD_MIN_DELTA};
use super::VerifyError;
use crate::graphcore::{
    build_bni, build_join_k2, canonical_form, parse_graph6, vertex_connectivity, Graph,
};
use crate::oracle::corpus::{unlabeled_graphs, UNLABELED_MAX_N};
use crate::oracle::{
    brute_laman, find_packing_violation, numeric_rank, Placement, SearchMode, DEFAULT_RANK_TOL,
};
use crate::rigidity::{enumerate_laman, pebble_rank, RigidityVerdict, LAMAN_MAX_N, LAMAN_MIN_N};
use crate::spectral::{rho_bni, spectral_radius, CROSS_CHECK_TOL};

/// Reads graph6 lines, skipping blank ones. Every malformed line is
/// reported with its 1-based number.
pub fn read_corpus<R: BufRead>(input: R) -> Result<Vec<Graph>, VerifyError> {
    let mut graphs = Vec::new();
    let mut bad = Vec::new();
    for (k, line) in input.lines().enumerate() {
        let line = line.map_err(|e| VerifyError::Io(e.to_string()))?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        match parse_graph6(text) {
            Ok(g) => graphs.push(g),
            Err(e) => bad.push((k + 1, e.to_string())),
        }
    }
    if bad.is_empty() {
        Ok(graphs)
    } else {
        Err(VerifyError::Parse(bad))
    }
}

/// One report per graph, in input order.
pub fn analyze(graphs: &[Graph], tol: f64) -> Result<Vec<SpectralReport>, VerifyError> {
    graphs
        .par_iter()
        .map(|g| analyze_graph(g, tol).map_err(|e| VerifyError::Input(e.to_string())))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LamanMaxRow {
    pub n: usize,
    pub laman_count: usize,
    /// Laman graphs among all isomorphism classes, by subset counting;
    /// computed for small `n` only.
    pub brute_count: Option<usize>,
    pub max_rho: f64,
    pub expected_rho: f64,
    pub argmax_count: usize,
    pub argmax_is_join: bool,
    pub consistent: bool,
}

/// Maximum spectral radius over the minimally rigid graphs on `n` vertices,
/// checked against `(1 + sqrt(8n - 15)) / 2` and the edge-join graph.
pub fn laman_max(nmin: usize, nmax: usize, tol: f64) -> Result<Vec<LamanMaxRow>, VerifyError> {
    if nmin < LAMAN_MIN_N || nmax > LAMAN_MAX_N || nmin > nmax {
        return Err(VerifyError::Input(format!(
            "need {LAMAN_MIN_N} <= nmin <= nmax <= {LAMAN_MAX_N}"
        )));
    }
    (nmin..=nmax).map(|n| laman_max_row(n, tol)).collect()
}

fn laman_max_row(n: usize, tol: f64) -> Result<LamanMaxRow, VerifyError> {
    let graphs = enumerate_laman(n).map_err(|e| VerifyError::Input(e.to_string()))?;
    let rhos: Vec<f64> = graphs.par_iter().map(spectral_radius).collect();
    let max_rho = rhos.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let argmax: Vec<&Graph> = graphs
        .iter()
        .zip(&rhos)
        .filter(|(_, &r)| r >= max_rho - tol)
        .map(|(g, _)| g)
        .collect();
    let join = canonical_form(&build_join_k2(n).expect("n >= 3"));
    let argmax_is_join = argmax.len() == 1 && canonical_form(argmax[0]) == join;
    let expected_rho = (1.0 + ((8 * n - 15) as f64).sqrt()) / 2.0;
    let brute_count = if n <= UNLABELED_MAX_N {
        let classes = unlabeled_graphs(n).map_err(|e| VerifyError::Input(e.to_string()))?;
        Some(
            classes
                .par_iter()
                .filter(|g| brute_laman(g).unwrap_or(false))
                .count(),
        )
    } else {
        None
    };
    let consistent = argmax_is_join
        && (max_rho - expected_rho).abs() <= tol
        && brute_count.is_none_or(|c| c == graphs.len());
    Ok(LamanMaxRow {
        n,
        laman_count: graphs.len(),
        brute_count,
        max_rho: round_sig(max_rho),
        expected_rho: round_sig(expected_rho),
        argmax_count: argmax.len(),
        argmax_is_join,
        consistent,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuarticRow {
    pub i: usize,
    pub a: usize,
    pub n: usize,
    pub rho_quartic: f64,
    pub rho_dense: f64,
    pub abs_diff: f64,
    /// `ρ(B^i_{n,a}) - ρ(B^i_{n,a+1})`.
    pub decrease_margin: f64,
    pub consistent: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuarticGrid {
    pub i: usize,
    pub amin: usize,
    pub amax: usize,
    pub nmax: usize,
}

/// Grid of `(a, n)` with `amin <= a <= amax`, `2a + 2 <= n <= nmax`:
/// quartic root against a dense eigensolve, and the drop from `a` to `a + 1`.
pub fn sweep_quartic(grid: QuarticGrid) -> Result<Vec<QuarticRow>, VerifyError> {
    let QuarticGrid {
        i,
        amin,
        amax,
        nmax,
    } = grid;
    if i < 2 || amin < i + 1 {
        return Err(VerifyError::Input(format!(
            "need i >= 2 and amin >= i + 1, got i={i}, amin={amin}"
        )));
    }
    let cells: Vec<(usize, usize)> = (amin..=amax)
        .flat_map(|a| (2 * a + 2..=nmax).map(move |n| (a, n)))
        .collect();
    cells
        .par_iter()
        .map(|&(a, n)| {
            let spectral = |e: crate::spectral::SpectralError| VerifyError::Input(e.to_string());
            let rho_quartic = rho_bni(n, a, i).map_err(spectral)?;
            let rho_next = rho_bni(n, a + 1, i).map_err(spectral)?;
            let rho_dense = spectral_radius(&build_bni(n, a, i).expect("grid cell is valid"));
            let abs_diff = (rho_quartic - rho_dense).abs();
            let decrease_margin = rho_quartic - rho_next;
            Ok(QuarticRow {
                i,
                a,
                n,
                rho_quartic,
                rho_dense,
                abs_diff,
                decrease_margin,
                consistent: abs_diff <= CROSS_CHECK_TOL && decrease_margin > 0.0,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionWitness {
    pub z: Vec<usize>,
    pub part_sizes: Vec<usize>,
    pub cut: i64,
    pub required: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalRow {
    pub delta: usize,
    pub n: usize,
    /// Number of cross edges between the two cliques.
    pub cross_edges: usize,
    pub vertex_connectivity: usize,
    pub min_degree: usize,
    pub numeric_rank: usize,
    pub verdict: RigidityVerdict,
    /// Rank after deleting each cross edge; all `2n - 4` when none is redundant.
    pub rank_without_cross_edge: Vec<usize>,
    pub witness: Option<PartitionWitness>,
    pub consistent: bool,
}

/// For `n = 2δ+4..=nmax`: `B²_{n,δ+1}` is 2-connected, non-rigid of rank
/// `2n - 4` with a violated partition inequality; `B³_{n,δ+1}` is
/// 3-connected and rigid but neither redundantly nor globally rigid.
pub fn extremal(delta: usize, nmax: usize, seed: u64) -> Result<Vec<ExtremalRow>, VerifyError> {
    if delta < THRESHOLD_MIN_DELTA || nmax < 2 * delta + 4 {
        return Err(VerifyError::Input(format!(
            "need delta >= {THRESHOLD_MIN_DELTA} and nmax >= 2 * delta + 4"
        )));
    }
    let cells: Vec<(usize, usize)> = (2 * delta + 4..=nmax)
        .flat_map(|n| [(n, 2), (n, 3)])
        .collect();
    cells
        .par_iter()
        .map(|&(n, i)| extremal_row(delta, n, i, seed))
        .collect()
}

fn extremal_row(delta: usize, n: usize, i: usize, seed: u64) -> Result<ExtremalRow, VerifyError> {
    let a = delta + 1;
    let g = build_bni(n, a, i).map_err(|e| VerifyError::Input(e.to_string()))?;
    let verdict = RigidityVerdict::of(&g);
    let kappa = vertex_connectivity(&g);
    let placement = Placement::random(n, seed).map_err(|e| VerifyError::Input(e.to_string()))?;
    let nrank = numeric_rank(&g, &placement, DEFAULT_RANK_TOL)
        .map_err(|e| VerifyError::Input(e.to_string()))?;
    let rank_without_cross_edge: Vec<usize> = (0..i)
        .map(|j| pebble_rank(&g.without_edge(j, a + j).expect("cross edge present")))
        .collect();
    let witness = if i == 2 {
        find_packing_violation(&g, 1, 0, SearchMode::Structured)
            .map_err(|e| VerifyError::Input(e.to_string()))?
            .map(|w| PartitionWitness {
                z: w.partition.z().to_vec(),
                part_sizes: w.partition.parts().iter().map(Vec::len).collect(),
                cut: w.sides.cut,
                required: w.sides.required,
            })
    } else {
        None
    };

    let common = g.min_degree() == delta && nrank == verdict.rank;
    let consistent = common
        && if i == 2 {
            kappa == 2
                && verdict.rank == 2 * n - 4
                && !verdict.rigid
                && witness.as_ref().is_some_and(|w| {
                    w.z.is_empty() && w.part_sizes == [a, n - a] && w.cut == 2 && w.required == 3
                })
        } else {
            kappa == 3
                && verdict.rank == 2 * n - 3
                && verdict.rigid
                && !verdict.redundantly_rigid
                && !verdict.globally_rigid
                && rank_without_cross_edge.iter().all(|&r| r == 2 * n - 4)
        };
    Ok(ExtremalRow {
        delta,
        n,
        cross_edges: i,
        vertex_connectivity: kappa,
        min_degree: g.min_degree(),
        numeric_rank: nrank,
        verdict,
        rank_without_cross_edge,
        witness,
        consistent,
    })
}
