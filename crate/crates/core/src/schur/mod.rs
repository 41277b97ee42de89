//! Numerical oracles built from Schur-class coefficient bodies and curve lengths.
//!
//! Every supremum-type oracle returns a value attained by an explicitly
//! constructed feasible function, so its result is a lower bound for the
//! true quantity.

pub mod linalg;
pub mod optimize;
mod oracles;
pub mod poly;
pub mod prefix;

use serde::{Deserialize, Serialize};

use crate::parabola::ParabolaParams;

pub use oracles::{
    caratheodory_lower, caratheodory_pseudo_value, find_strict_points, inner_length_oracle, interpolate_opposite,
    knese_family_check, opposite_bound_slack, opposite_family_max, origin_gamma_lower, origin_gamma_value,
    origin_ratio, reiffen_lower, reiffen_value, rho_m, OppositeInterpolant, StrictPoints,
};
pub use poly::{normalize_to_schur, sup_norm_estimate, SchurPolynomial};
pub use prefix::{
    region_c_membership, schur_feasible, two_coeff_sufficient, Feasibility, SchurPrefix, ToeplitzUpper, FEASIBILITY_TOL,
};

/// Search settings shared by the polynomial-family oracles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// Truncation degree `N`; `None` picks `max(nm - m - n, 8) + 4`.
    pub degree: Option<usize>,
    pub starts: usize,
    pub seed: u64,
    /// Evaluation budget of each screening run.
    pub screen_evals: usize,
    /// Number of screened starts that are refined.
    pub refine: usize,
    /// Evaluation budget of each refinement run.
    pub max_evals: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            degree: None,
            starts: 64,
            seed: 0,
            screen_evals: 300,
            refine: 4,
            max_evals: 4000,
        }
    }
}

impl OracleConfig {
    pub fn degree_for(&self, params: &ParabolaParams) -> usize {
        self.degree.unwrap_or_else(|| {
            let (m, n) = (params.m() as i64, params.n() as i64);
            (n * m - m - n).max(8) as usize + 4
        })
    }
}

/// Result of an oracle search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    pub value: f64,
    /// Parameters of the maximizer. For the polynomial oracles these are the
    /// normalized coefficients, real and imaginary parts interleaved.
    pub argmax: Vec<f64>,
    pub evaluations: u64,
    pub converged: bool,
}
