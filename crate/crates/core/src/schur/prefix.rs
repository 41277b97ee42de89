//! Taylor-coefficient prefixes of Schur functions.
//!
//! `(a_0, ..., a_N)` is the beginning of some holomorphic `h: D -> closed D`
//! exactly when `I - M^* M` is positive semidefinite, `M` the upper-triangular
//! Toeplitz matrix with `M[i][i+j] = a_j`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::linalg::hermitian_eigenvalues;
use crate::error::{Error, Result};

/// A prefix is feasible when the smallest eigenvalue of `I - M^* M` is at least `-FEASIBILITY_TOL`.
pub const FEASIBILITY_TOL: f64 = 1e-12;

/// Coefficients `(a_0, ..., a_N)` with a forced-zero mask.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchurPrefix {
    coeffs: Vec<Complex64>,
    mask: Vec<bool>,
}

impl SchurPrefix {
    /// Fails if the lengths differ, the prefix is empty, or a masked entry is nonzero.
    pub fn new(coeffs: Vec<Complex64>, mask: Vec<bool>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Precondition("empty coefficient prefix"));
        }
        if coeffs.len() != mask.len() {
            return Err(Error::Precondition("mask length differs from prefix length"));
        }
        if coeffs
            .iter()
            .zip(&mask)
            .any(|(a, &m)| m && *a != Complex64::new(0.0, 0.0))
        {
            return Err(Error::Precondition("masked coefficient is nonzero"));
        }
        Ok(SchurPrefix { coeffs, mask })
    }

    /// A prefix with no forced zeros.
    pub fn unmasked(coeffs: Vec<Complex64>) -> Result<Self> {
        let mask = vec![false; coeffs.len()];
        SchurPrefix::new(coeffs, mask)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// `N`, the highest coefficient index.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn toeplitz(&self) -> ToeplitzUpper {
        ToeplitzUpper::from_prefix(self)
    }
}

/// The `(N+1) x (N+1)` upper-triangular Toeplitz matrix of a prefix.
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzUpper {
    order: usize,
    entries: Vec<Complex64>,
}

impl ToeplitzUpper {
    pub fn from_prefix(prefix: &SchurPrefix) -> Self {
        ToeplitzUpper::from_coeffs(prefix.coeffs())
    }

    pub(crate) fn from_coeffs(a: &[Complex64]) -> Self {
        let order = a.len();
        let mut entries = vec![Complex64::new(0.0, 0.0); order * order];
        for i in 0..order {
            for j in i..order {
                entries[i * order + j] = a[j - i];
            }
        }
        ToeplitzUpper { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.order + j]
    }

    /// `M^* M`, row-major.
    pub fn gram(&self) -> Vec<Complex64> {
        let n = self.order;
        let mut g = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in i..n {
                // rows k <= min(i, j) = i are the only nonzero contributions
                let mut s = Complex64::new(0.0, 0.0);
                for k in 0..=i {
                    s += self.entries[k * n + i].conj() * self.entries[k * n + j];
                }
                g[i * n + j] = s;
                g[j * n + i] = s.conj();
            }
        }
        g
    }

    /// Largest singular value of `M`.
    pub fn operator_norm(&self) -> f64 {
        let eig = hermitian_eigenvalues(self.gram(), self.order);
        eig.last().copied().unwrap_or(0.0).max(0.0).sqrt()
    }
}

/// Outcome of the semidefiniteness test; `margin` is the smallest eigenvalue of `I - M^* M`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Feasibility {
    pub feasible: bool,
    pub margin: f64,
}

pub fn schur_feasible(prefix: &SchurPrefix) -> Feasibility {
    feasibility_of(prefix.coeffs())
}

pub(crate) fn feasibility_of(coeffs: &[Complex64]) -> Feasibility {
    let t = ToeplitzUpper::from_coeffs(coeffs);
    let n = t.order;
    let mut d = t.gram();
    for z in d.iter_mut() {
        *z = -*z;
    }
    for i in 0..n {
        d[i * n + i] += 1.0;
    }
    let margin = hermitian_eigenvalues(d, n)[0];
    Feasibility {
        feasible: margin >= -FEASIBILITY_TOL,
        margin,
    }
}

/// `b <= (1 - a)(1 - sqrt a)` and `a <= 1`: the admissible `(|a_0|^2, |a_1|^2)`
/// for `h = a_0 + a_1 zeta + 0 zeta^2 + ...`.
pub fn region_c_membership(a: f64, b: f64) -> bool {
    a <= 1.0 && b <= (1.0 - a) * (1.0 - a.sqrt())
}

/// `2 cos(pi/(n+1)) |ab| <= 1 - a^2 - b^2`, a sufficient condition for
/// `a + b zeta + 0 zeta^2 + ... + 0 zeta^{n-1}` to start a Schur function.
pub fn two_coeff_sufficient(a: f64, b: f64, n: u32) -> bool {
    2.0 * (PI / (n as f64 + 1.0)).cos() * (a * b).abs() <= 1.0 - a * a - b * b
}
