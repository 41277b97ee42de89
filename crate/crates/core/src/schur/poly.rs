//! Polynomials scaled into the Schur class by their boundary sup norm.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Boundary grid used when certifying a normalization.
pub const CERTIFIED_GRID: usize = 4096;
/// Relative safety factor applied to the estimated sup norm.
pub const SUP_NORM_SAFETY: f64 = 1e-9;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// A polynomial whose sup norm on the unit circle is at most 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchurPolynomial {
    coeffs: Vec<Complex64>,
    divisor: f64,
}

impl SchurPolynomial {
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// The factor the input coefficients were divided by.
    pub fn divisor(&self) -> f64 {
        self.divisor
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        horner(&self.coeffs, z)
    }

    /// `(h(z), h'(z))`.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        horner_with_derivative(&self.coeffs, z)
    }
}

#[inline]
pub(crate) fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &a in coeffs.iter().rev() {
        acc = acc * z + a;
    }
    acc
}

#[inline]
pub(crate) fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Divides `coeffs` by an upper bound for its sup norm on the unit circle.
///
/// The bound is the smaller of `sum |a_j|` and the refined estimate on a
/// 4096-point boundary grid inflated by `1 + 1e-9`. Zero coefficients stay zero.
pub fn normalize_to_schur(coeffs: &[Complex64]) -> Result<SchurPolynomial> {
    let divisor = SupNorm::certified().bound(coeffs);
    if !(divisor > 0.0) || !divisor.is_finite() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(SchurPolynomial {
        coeffs: coeffs.iter().map(|a| a / divisor).collect(),
        divisor,
    })
}

/// Estimate of `max |P|` on the unit circle from a grid of the given size,
/// with local refinement around the largest grid values.
pub fn sup_norm_estimate(coeffs: &[Complex64], grid: usize) -> f64 {
    SupNorm::new(grid, 8, 1e-12).estimate(coeffs)
}

/// Sup-norm estimator with a precomputed table of roots of unity.
#[derive(Debug, Clone)]
pub(crate) struct SupNorm {
    roots: Vec<Complex64>,
    max_refine: usize,
    angle_tol: f64,
}

impl SupNorm {
    pub(crate) fn new(grid: usize, max_refine: usize, angle_tol: f64) -> Self {
        let grid = grid.max(8);
        let roots = (0..grid)
            .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / grid as f64))
            .collect();
        SupNorm {
            roots,
            max_refine,
            angle_tol,
        }
    }

    pub(crate) fn certified() -> Self {
        SupNorm::new(CERTIFIED_GRID, 8, 1e-12)
    }

    /// A coarser estimator for use inside search loops.
    pub(crate) fn search() -> Self {
        SupNorm::new(256, 2, 1e-7)
    }

    pub(crate) fn bound(&self, coeffs: &[Complex64]) -> f64 {
        let l1: f64 = coeffs.iter().map(|a| a.norm()).sum();
        l1.min(self.estimate(coeffs) * (1.0 + SUP_NORM_SAFETY))
    }

    pub(crate) fn estimate(&self, coeffs: &[Complex64]) -> f64 {
        let m = self.roots.len();
        let values: Vec<f64> = self.roots.iter().map(|&z| horner(coeffs, z).norm_sqr()).collect();
        let grid_max = values.iter().copied().fold(0.0, f64::max);
        if grid_max == 0.0 {
            return 0.0;
        }
        // Between grid points |P|^2 can exceed the grid maximum by roughly a
        // factor 1 + N^2 (pi/M)^2; candidates within twice that band are refined.
        let n = coeffs.len().saturating_sub(1) as f64;
        let band = (n * PI / m as f64).powi(2);
        let cutoff = grid_max / (1.0 + 2.0 * band);
        let mut peaks: Vec<(f64, usize)> = (0..m)
            .filter(|&k| {
                let v = values[k];
                v >= cutoff && v >= values[(k + m - 1) % m] && v >= values[(k + 1) % m]
            })
            .map(|k| (values[k], k))
            .collect();
        peaks.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
        peaks.truncate(self.max_refine);

        let step = TAU / m as f64;
        let mut best = grid_max;
        for &(_, k) in &peaks {
            let centre = step * k as f64;
            best = best.max(self.golden_max(coeffs, centre - step, centre + step));
        }
        best.sqrt()
    }

    fn golden_max(&self, coeffs: &[Complex64], mut lo: f64, mut hi: f64) -> f64 {
        let f = |t: f64| horner(coeffs, Complex64::from_polar(1.0, t)).norm_sqr();
        let mut x1 = hi - INV_PHI * (hi - lo);
        let mut x2 = lo + INV_PHI * (hi - lo);
        let mut f1 = f(x1);
        let mut f2 = f(x2);
        let mut best = f1.max(f2);
        while hi - lo > self.angle_tol {
            if f1 >= f2 {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - INV_PHI * (hi - lo);
                f1 = f(x1);
                best = best.max(f1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + INV_PHI * (hi - lo);
                f2 = f(x2);
                best = best.max(f2);
            }
        }
        best
    }
}
