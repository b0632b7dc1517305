//! Edge counts across vertex subsets and partitions.

use super::{Graph, GraphError};

/// A removed set `Z` together with a partition of the remaining vertices.
///
/// Trivial parts are singletons. `nz` counts, over the trivial parts
/// `{v}`, how many vertices of `Z` are adjacent to `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    n: usize,
    z: Vec<usize>,
    parts: Vec<Vec<usize>>,
    n0: usize,
    n0p: usize,
    nz: usize,
}

impl VertexPartition {
    pub fn new(g: &Graph, z: Vec<usize>, parts: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = g.n();
        let mut owner = vec![Slot::Free; n];
        for &v in &z {
            check_range(v, n)?;
            if owner[v] != Slot::Free {
                return Err(GraphError::InvalidPartition(format!(
                    "vertex {v} repeated in Z"
                )));
            }
            owner[v] = Slot::Removed;
        }
        for (p, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(GraphError::InvalidPartition(format!("part {p} is empty")));
            }
            for &v in part {
                check_range(v, n)?;
                match owner[v] {
                    Slot::Free => owner[v] = Slot::Part(p),
                    Slot::Removed => {
                        return Err(GraphError::InvalidPartition(format!(
                            "vertex {v} lies in both Z and part {p}"
                        )))
                    }
                    Slot::Part(q) => {
                        return Err(GraphError::InvalidPartition(format!(
                            "vertex {v} lies in parts {q} and {p}"
                        )))
                    }
                }
            }
        }
        if let Some(v) = owner.iter().position(|s| *s == Slot::Free) {
            return Err(GraphError::InvalidPartition(format!(
                "vertex {v} is not covered"
            )));
        }

        let mut in_z = vec![false; n];
        for &v in &z {
            in_z[v] = true;
        }
        let n0 = parts.iter().filter(|p| p.len() == 1).count();
        let nz = parts
            .iter()
            .filter(|p| p.len() == 1)
            .map(|p| g.neighbors(p[0]).iter().filter(|&&w| in_z[w]).count())
            .sum();
        Ok(VertexPartition {
            n,
            z,
            n0,
            n0p: parts.len() - n0,
            parts,
            nz,
        })
    }

    pub fn z(&self) -> &[usize] {
        &self.z
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Number of trivial (singleton) parts.
    pub fn n0(&self) -> usize {
        self.n0
    }

    /// Number of nontrivial parts.
    pub fn n0p(&self) -> usize {
        self.n0p
    }

    pub fn nz(&self) -> usize {
        self.nz
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Free,
    Removed,
    Part(usize),
}

fn check_range(v: usize, n: usize) -> Result<(), GraphError> {
    if v >= n {
        Err(GraphError::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

fn membership(n: usize, set: &[usize]) -> Result<Vec<bool>, GraphError> {
    let mut mark = vec![false; n];
    for &v in set {
        check_range(v, n)?;
        if mark[v] {
            return Err(GraphError::InvalidSubset(format!(
                "vertex {v} listed twice"
            )));
        }
        mark[v] = true;
    }
    Ok(mark)
}

/// Number of edges with exactly one endpoint in `s`.
pub fn boundary_size(g: &Graph, s: &[usize]) -> Result<usize, GraphError> {
    let mark = membership(g.n(), s)?;
    if s.is_empty() || s.len() == g.n() {
        return Err(GraphError::InvalidSubset(
            "boundary needs a nonempty proper subset".into(),
        ));
    }
    Ok(g.edges().filter(|&(u, v)| mark[u] != mark[v]).count())
}

/// Number of edges with both endpoints in `x`.
pub fn induced_edge_count(g: &Graph, x: &[usize]) -> Result<usize, GraphError> {
    let mark = membership(g.n(), x)?;
    Ok(x.iter()
        .map(|&u| g.neighbors(u).iter().filter(|&&v| v > u && mark[v]).count())
        .sum())
}

/// Edges of `G - Z` whose ends lie in different parts. Edges touching `Z`
/// are not counted.
pub fn partition_cut(g: &Graph, vp: &VertexPartition) -> Result<usize, GraphError> {
    if vp.n != g.n() {
        return Err(GraphError::InvalidPartition(format!(
            "partition was built for {} vertices, graph has {}",
            vp.n,
            g.n()
        )));
    }
    let mut part_of = vec![usize::MAX; g.n()];
    for (p, part) in vp.parts.iter().enumerate() {
        for &v in part {
            part_of[v] = p;
        }
    }
    Ok(g.edges()
        .filter(|&(u, v)| {
            part_of[u] != usize::MAX && part_of[v] != usize::MAX && part_of[u] != part_of[v]
        })
        .count())
}
