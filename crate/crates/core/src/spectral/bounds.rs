//! Closed-form bounds: the degree/edge upper bound on the spectral radius,
//! the auxiliary function that is monotone in the degree parameter, the
//! edge-count threshold it implies, and the maximum of a sum of binomials
//! over constrained compositions.

use super::SpectralError;

/// `(δ-1)/2 + sqrt(2m - nδ + (δ+1)^2/4)`, an upper bound on the spectral
/// radius of any graph with minimum degree `δ >= 1`. Tight exactly for
/// `δ`-regular graphs and for graphs whose degrees are all `δ` or `n - 1`.
pub fn hong_bound(n: usize, m: usize, delta: usize) -> Result<f64, SpectralError> {
    if delta == 0 {
        return Err(SpectralError::Domain(
            "minimum degree must be at least 1".into(),
        ));
    }
    let (n, m, d) = (n as f64, m as f64, delta as f64);
    let radicand = 2.0 * m - n * d + (d + 1.0).powi(2) / 4.0;
    if radicand < 0.0 {
        return Err(SpectralError::NegativeRadicand(radicand));
    }
    Ok((d - 1.0) / 2.0 + radicand.sqrt())
}

/// Whether the degree sequence is one for which [`hong_bound`] is tight.
pub fn hong_equality_shape(degrees: &[usize]) -> bool {
    let Some(&delta) = degrees.iter().min() else {
        return false;
    };
    let top = degrees.len().saturating_sub(1);
    degrees.iter().all(|&d| d == delta || d == top)
}

/// `f(x) = (x-1)/2 + sqrt(2q - px + (1+x)^2/4)` for `2q <= p(p-1)` and
/// `0 <= x <= p-1`. Non-increasing in `x`; strictly decreasing unless
/// `2q = p(p-1)`, where it is the constant `p - 1`.
pub fn decreasing_radius_bound(p: u64, q: u64, x: f64) -> Result<f64, SpectralError> {
    if 2 * q > p * p.saturating_sub(1) {
        return Err(SpectralError::Domain(format!(
            "2q = {} exceeds p(p-1)",
            2 * q
        )));
    }
    let pf = p as f64;
    if !(0.0..=pf - 1.0).contains(&x) {
        return Err(SpectralError::Domain(format!(
            "x = {x} outside [0, {}]",
            pf - 1.0
        )));
    }
    let radicand = 2.0 * q as f64 - pf * x + (1.0 + x).powi(2) / 4.0;
    if radicand < 0.0 {
        return Err(SpectralError::NegativeRadicand(radicand));
    }
    Ok((x - 1.0) / 2.0 + radicand.sqrt())
}

/// `n^2/2 - (2δ+3)n/2 + (δ+1)^2`: a graph whose spectral radius exceeds
/// `n - δ - 2` has more edges than this.
pub fn edge_lower_bound(n: usize, delta: usize) -> f64 {
    let (n, d) = (n as i128, delta as i128);
    let twice = n * n - (2 * d + 3) * n + 2 * (d + 1) * (d + 1);
    twice as f64 / 2.0
}

/// Maximizer of `sum C(n_k, 2)` over positive compositions of `n` with
/// `n_k >= a_k` for the first `t - 1` parts and the last part largest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSplit {
    pub value: u64,
    pub parts: Vec<usize>,
}

pub(crate) fn binom2(k: usize) -> u64 {
    (k as u64) * (k as u64).saturating_sub(1) / 2
}

/// Closed form: the maximum is attained only at `(a_1, ..., a_{t-1}, n - sum a)`.
/// `a` holds the `t - 1` lower bounds, `t` in `{3, 4}`, each at least 1.
pub fn clique_split_max(n: usize, a: &[usize]) -> Result<CliqueSplit, SpectralError> {
    if !(2..=3).contains(&a.len()) {
        return Err(SpectralError::Infeasible(format!(
            "{} parts given; need 3 or 4 parts in total",
            a.len() + 1
        )));
    }
    if a.contains(&0) {
        return Err(SpectralError::Infeasible(
            "lower bounds must be positive".into(),
        ));
    }
    let sum: usize = a.iter().sum();
    let top = *a.iter().max().expect("nonempty");
    if sum + top > n {
        return Err(SpectralError::Infeasible(format!(
            "sum {sum} plus largest bound {top} exceeds n = {n}"
        )));
    }
    let mut parts = a.to_vec();
    parts.push(n - sum);
    Ok(CliqueSplit {
        value: parts.iter().map(|&k| binom2(k)).sum(),
        parts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hong_examples() {
        assert!((hong_bound(5, 7, 2).unwrap() - 3.0).abs() < 1e-15);
        for n in 2..20 {
            let b = hong_bound(n, n * (n - 1) / 2, n - 1).unwrap();
            assert!((b - (n as f64 - 1.0)).abs() < 1e-12);
        }
        assert!(hong_bound(5, 7, 0).is_err());
        assert!(matches!(
            hong_bound(10, 1, 3),
            Err(SpectralError::NegativeRadicand(_))
        ));
    }

    #[test]
    fn equality_shapes() {
        assert!(hong_equality_shape(&[4, 4, 2, 2, 2]));
        assert!(hong_equality_shape(&[2, 2, 2, 2]));
        assert!(!hong_equality_shape(&[1, 2, 2, 1]));
    }

    #[test]
    fn monotone_function_examples() {
        let f2 = decreasing_radius_bound(5, 7, 2.0).unwrap();
        let f3 = decreasing_radius_bound(5, 7, 3.0).unwrap();
        assert!((f2 - 3.0).abs() < 1e-15);
        assert!((f3 - (1.0 + 3f64.sqrt())).abs() < 1e-15);
        assert!(f2 > f3);
        let f1 = decreasing_radius_bound(6, 9, 1.0).unwrap();
        assert!((f1 - (2.0 * 9.0 - 6.0 + 1.0f64).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn monotone_function_is_flat_on_the_boundary() {
        for x in 0..5 {
            let v = decreasing_radius_bound(5, 10, x as f64).unwrap();
            assert!((v - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn monotone_function_domain() {
        assert!(decreasing_radius_bound(4, 7, 1.0).is_err());
        assert!(decreasing_radius_bound(4, 3, 3.5).is_err());
        assert!(decreasing_radius_bound(4, 3, -0.5).is_err());
    }

    #[test]
    fn edge_threshold_examples() {
        assert_eq!(edge_lower_bound(16, 6), 57.0);
        for d in 6..=12usize {
            let closed = (binom2(d + 1) + binom2(d + 3) + 2) as f64;
            assert!(edge_lower_bound(2 * d + 4, d) < closed);
        }
    }

    #[test]
    fn clique_split_examples() {
        let s = clique_split_max(10, &[2, 3]).unwrap();
        assert_eq!(
            s,
            CliqueSplit {
                value: 14,
                parts: vec![2, 3, 5]
            }
        );
        assert!(clique_split_max(16, &[7, 7]).is_err());
        assert!(clique_split_max(16, &[0, 3]).is_err());
        assert!(clique_split_max(16, &[3]).is_err());
    }
}
