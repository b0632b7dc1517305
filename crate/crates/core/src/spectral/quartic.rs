//! Characteristic polynomial of the 4x4 equitable quotient of
//! `build_bni(n, a, i)` and its largest root.

use nalgebra::DMatrix;

use super::{symmetric_eigenvalues, SpectralError};

/// Monic quartic `x^4 + c3 x^3 + c2 x^2 + c1 x + c0` with exact integer
/// coefficients, highest degree first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuarticPoly {
    pub coeffs: [i64; 5],
    pub n: i64,
    pub a: i64,
    pub i: i64,
    /// `i >= 2`, `a >= i + 1` and `n >= 2a + 2`: the regime where the largest
    /// root is certified to be the only root above `n - a - 2`.
    pub in_domain: bool,
}

/// `x^4 + (4-n)x^3 + (an-a^2-3n+5)x^2 + 2(an-a^2-i-n+1)x - i^2 + in - 2i`.
pub fn char_poly_bni(n: i64, a: i64, i: i64) -> QuarticPoly {
    let coeffs = [
        1,
        4 - n,
        a * n - a * a - 3 * n + 5,
        2 * (a * n - a * a - i - n + 1),
        -i * i + i * n - 2 * i,
    ];
    QuarticPoly {
        coeffs,
        n,
        a,
        i,
        in_domain: i >= 2 && a > i && n >= 2 * a + 2,
    }
}

impl QuarticPoly {
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    pub fn eval_exact(&self, x: i64) -> i128 {
        self.coeffs
            .iter()
            .fold(0i128, |acc, &c| acc * x as i128 + c as i128)
    }

    pub fn derivative(&self, x: f64) -> f64 {
        let c = self.coeffs.map(|c| c as f64);
        ((4.0 * c[0] * x + 3.0 * c[1]) * x + 2.0 * c[2]) * x + c[3]
    }

    /// Sum of `|c_k| |x|^k`, the natural scale for a residual at `x`.
    pub fn magnitude(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .fold(0.0, |acc, &c| acc * x.abs() + (c as f64).abs())
    }

    /// Coefficient-wise difference `self - other`.
    pub fn minus(&self, other: &QuarticPoly) -> [i64; 5] {
        std::array::from_fn(|k| self.coeffs[k] - other.coeffs[k])
    }

    /// The quotient matrix this polynomial is the characteristic polynomial of.
    pub fn quotient_entries(&self) -> [[i64; 4]; 4] {
        let (n, a, i) = (self.n, self.a, self.i);
        [
            [i - 1, a - i, 1, 0],
            [i, a - i - 1, 0, 0],
            [1, 0, i - 1, n - a - i],
            [0, 0, i, n - a - i - 1],
        ]
    }

    /// Largest root by safeguarded Newton iteration on `(n - a - 2, n - 1]`.
    pub fn largest_root_bracketed(&self) -> Result<f64, SpectralError> {
        let fail = || SpectralError::BracketFailure {
            n: self.n,
            a: self.a,
            i: self.i,
        };
        let (lo_i, hi_i) = (self.n - self.a - 2, self.n - 1);
        if lo_i >= hi_i || self.eval_exact(lo_i) >= 0 {
            return Err(fail());
        }
        let at_hi = self.eval_exact(hi_i);
        if at_hi == 0 {
            return Ok(hi_i as f64);
        }
        if at_hi < 0 {
            return Err(fail());
        }
        let (mut lo, mut hi) = (lo_i as f64, hi_i as f64);
        let mut x = hi;
        for _ in 0..200 {
            let fx = self.eval(x);
            if fx == 0.0 {
                return Ok(x);
            }
            if fx < 0.0 {
                lo = x;
            } else {
                hi = x;
            }
            let d = self.derivative(x);
            let newton = x - fx / d;
            let next = if d > 0.0 && newton > lo && newton < hi {
                newton
            } else {
                0.5 * (lo + hi)
            };
            if (next - x).abs() <= 1e-13 * x.abs().max(1.0) || hi - lo <= 1e-12 {
                return Ok(next);
            }
            x = next;
        }
        Ok(0.5 * (lo + hi))
    }

    /// Largest eigenvalue of the quotient matrix, symmetrized by the class
    /// sizes `i, a - i, i, n - a - i`. `None` when a class would be empty.
    pub fn largest_root_by_eigensolve(&self) -> Option<f64> {
        let (n, a, i) = (self.n, self.a, self.i);
        let sizes = [i, a - i, i, n - a - i];
        if sizes.iter().any(|&s| s < 1) {
            return None;
        }
        let b = self.quotient_entries();
        let s: Vec<f64> = sizes.iter().map(|&s| (s as f64).sqrt()).collect();
        let m = DMatrix::from_fn(4, 4, |r, c| s[r] * b[r][c] as f64 / s[c]);
        symmetric_eigenvalues(m).last().copied()
    }
}

/// Spectral radius of `build_bni(n, a, i)` from the quartic.
///
/// Inside the certified regime the root is found on the bracket; outside it
/// the 4x4 quotient is eigensolved instead.
pub fn rho_bni(n: usize, a: usize, i: usize) -> Result<f64, SpectralError> {
    let p = char_poly_bni(n as i64, a as i64, i as i64);
    if p.in_domain {
        return p
            .largest_root_bracketed()
            .or_else(|e| p.largest_root_by_eigensolve().ok_or(e));
    }
    p.largest_root_by_eigensolve()
        .ok_or(SpectralError::BracketFailure {
            n: p.n,
            a: p.a,
            i: p.i,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::build_bni;
    use crate::spectral::{spectral_radius, CROSS_CHECK_TOL};

    #[test]
    fn coefficients_at_16_7_2() {
        let p = char_poly_bni(16, 7, 2);
        assert_eq!(p.coeffs, [1, -12, 20, 92, 24]);
        assert!(p.in_domain);
        assert!(!char_poly_bni(10, 5, 1).in_domain);
    }

    #[test]
    fn difference_in_a_is_linear_times_x_x_plus_2() {
        // The difference over a is (n - 2a - 1)(x^2 + 2x), exactly.
        for n in 4..40 {
            for a in 1..n {
                for i in 0..6 {
                    let d = char_poly_bni(n, a + 1, i).minus(&char_poly_bni(n, a, i));
                    let c = n - 2 * a - 1;
                    assert_eq!(d, [0, 0, c, 2 * c, 0]);
                }
            }
        }
    }

    #[test]
    fn quartic_vanishes_on_quotient_spectrum() {
        for (n, a, i) in [(16i64, 7i64, 2i64), (30, 9, 3), (12, 5, 2)] {
            let p = char_poly_bni(n, a, i);
            let b = p.quotient_entries();
            let sizes = [i, a - i, i, n - a - i];
            let s: Vec<f64> = sizes.iter().map(|&s| (s as f64).sqrt()).collect();
            let m = DMatrix::from_fn(4, 4, |r, c| s[r] * b[r][c] as f64 / s[c]);
            for lambda in symmetric_eigenvalues(m) {
                assert!(
                    p.eval(lambda).abs() <= 1e-6 * p.magnitude(lambda),
                    "{lambda}"
                );
            }
        }
    }

    #[test]
    fn root_matches_dense_eigensolve() {
        let rho = rho_bni(16, 7, 2).unwrap();
        assert!((rho - 8.049448).abs() < 1e-6);
        assert!(rho > 8.0);
        let dense = spectral_radius(&build_bni(16, 7, 2).unwrap());
        assert!((rho - dense).abs() < CROSS_CHECK_TOL);
    }

    #[test]
    fn both_routes_agree() {
        let p = char_poly_bni(40, 10, 3);
        let a = p.largest_root_bracketed().unwrap();
        let b = p.largest_root_by_eigensolve().unwrap();
        assert!((a - b).abs() < 1e-9);
    }

    #[test]
    fn outside_domain_uses_eigensolve() {
        // n = 2a + 1: the second clique is only one vertex larger.
        let rho = rho_bni(11, 5, 2).unwrap();
        let dense = spectral_radius(&build_bni(11, 5, 2).unwrap());
        assert!((rho - dense).abs() < CROSS_CHECK_TOL);
        // i = a leaves the unmatched class of the first clique empty.
        assert!(rho_bni(10, 2, 2).is_err());
    }
}
