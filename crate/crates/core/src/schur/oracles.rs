use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::optimize::{
    disc_from_plane, multistart, nelder_mead, plane_from_disc, MultiStartOptions, NelderMeadOptions,
};
use super::poly::{horner, horner_with_derivative, normalize_to_schur, SupNorm};
use super::prefix::{feasibility_of, ToeplitzUpper};
use super::{OracleConfig, OracleResult};
use crate::closed_forms::{opposite_points_2odd, sector_condition};
use crate::disc::{cpow, curve_length, geodesic_raw, phi, pseudo, rho, DiscPoint, QuadratureOptions};
use crate::error::{Error, Result};
use crate::parabola::ParabolaParams;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Free coefficients of a masked polynomial, parametrized by real numbers
/// with the first free coefficient kept real.
#[derive(Debug, Clone)]
struct MaskedFamily {
    degree: usize,
    free: Vec<usize>,
}

impl MaskedFamily {
    fn new(mask: &[bool], skip_constant: bool) -> Self {
        let free = (0..mask.len())
            .filter(|&j| !mask[j] && !(skip_constant && j == 0))
            .collect();
        MaskedFamily {
            degree: mask.len() - 1,
            free,
        }
    }

    fn dim(&self) -> usize {
        2 * self.free.len() - 1
    }

    fn coeffs(&self, x: &[f64]) -> Vec<Complex64> {
        let mut c = vec![ZERO; self.degree + 1];
        c[self.free[0]] = Complex64::new(x[0], 0.0);
        for (k, &j) in self.free.iter().enumerate().skip(1) {
            c[j] = Complex64::new(x[2 * k - 1], x[2 * k]);
        }
        c
    }

    /// Parameters of `coeffs` after a rotation making the first free entry
    /// real and a rescaling to unit max-modulus.
    fn params(&self, coeffs: &[Complex64]) -> Vec<f64> {
        let lead = coeffs[self.free[0]];
        let rot = if lead.norm() > 0.0 {
            lead.conj() / lead.norm()
        } else {
            ONE
        };
        let scale = self
            .free
            .iter()
            .map(|&j| coeffs[j].norm())
            .fold(0.0, f64::max)
            .max(f64::MIN_POSITIVE);
        let mut x = Vec::with_capacity(self.dim());
        for (k, &j) in self.free.iter().enumerate() {
            let z = coeffs[j] * rot / scale;
            if k == 0 {
                x.push(z.re);
            } else {
                x.push(z.re);
                x.push(z.im);
            }
        }
        x
    }

    /// Starting coefficients: the first few free monomials, then alternately
    /// truncated `zeta^lead Phi_beta` with random `beta` and Gaussian noise.
    fn start(&self, index: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
        let monomials = self.free.len().min(4);
        let mut c = vec![ZERO; self.degree + 1];
        if index < monomials {
            c[self.free[index]] = ONE;
        } else if (index - monomials).is_multiple_of(2) {
            let lead = self.free[0];
            let r: f64 = 0.97 * rng.gen::<f64>().sqrt();
            let beta = Complex64::from_polar(r, rng.gen_range(-PI..PI));
            c[lead] = beta;
            let mut pow = ONE;
            for a in c[lead + 1..].iter_mut() {
                *a = -pow * (1.0 - r * r);
                pow *= beta.conj();
            }
            for (j, a) in c.iter_mut().enumerate() {
                if !self.free.contains(&j) {
                    *a = ZERO;
                }
            }
            if c[lead].norm() < 1e-3 {
                c[lead] = Complex64::new(1e-3, 0.0);
            }
        } else {
            for (k, &j) in self.free.iter().enumerate() {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                c[j] = Complex64::new(re, im) / (1.0 + k as f64).sqrt();
            }
        }
        self.params(&c)
    }
}

fn interleave(coeffs: &[Complex64]) -> Vec<f64> {
    coeffs.iter().flat_map(|z| [z.re, z.im]).collect()
}

fn deinterleave(x: &[f64]) -> Vec<Complex64> {
    x.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect()
}

fn multistart_options(config: &OracleConfig) -> MultiStartOptions {
    MultiStartOptions {
        starts: config.starts.max(1),
        seed: config.seed,
        screen_evals: config.screen_evals,
        refine: config.refine,
        local: NelderMeadOptions {
            max_evals: config.max_evals,
            ftol: 1e-12,
            xtol: 1e-10,
            initial_step: 0.2,
            restarts: 2,
        },
    }
}

/// Lower bound for the Caratheodory distance `c(p(lambda), p(mu))` on the
/// Poincare scale, from normalized masked polynomials `h` with `h(0) = 0`.
pub fn caratheodory_lower(
    params: &ParabolaParams,
    lambda: DiscPoint,
    mu: DiscPoint,
    config: &OracleConfig,
) -> OracleResult {
    let degree = config.degree_for(params).max(params.m() as usize);
    let family = MaskedFamily::new(&params.coefficient_mask(degree, false), true);
    let lead = params.m() as usize;
    let (l, u) = (lambda.value(), mu.value());
    let mut monomial = vec![ZERO; degree + 1];
    monomial[lead] = ONE;
    if l == u {
        return OracleResult {
            value: 0.0,
            argmax: interleave(&monomial),
            evaluations: 0,
            converged: true,
        };
    }
    let sup = SupNorm::search();
    let objective = |x: &[f64]| {
        let c = family.coeffs(x);
        let s = sup.bound(&c);
        if !(s > 0.0) {
            return f64::INFINITY;
        }
        -pseudo(horner(&c, l) / s, horner(&c, u) / s)
    };
    let run = multistart(objective, |i, rng| family.start(i, rng), multistart_options(config));
    let value_of = |c: &[Complex64]| pseudo(horner(c, l), horner(c, u));
    let (best, value) = certify_best(&family.coeffs(&run.best.x), &monomial, value_of);
    OracleResult {
        value: value.atanh(),
        argmax: interleave(&best),
        evaluations: run.total_evals,
        converged: run.best.converged,
    }
}

/// Normalizes the search winner and the monomial fallback; returns whichever
/// certified candidate scores higher.
fn certify_best<F: Fn(&[Complex64]) -> f64>(
    found: &[Complex64],
    fallback: &[Complex64],
    score: F,
) -> (Vec<Complex64>, f64) {
    let fb = normalize_to_schur(fallback).expect("fallback is a nonzero monomial");
    let mut best = (fb.coeffs().to_vec(), score(fb.coeffs()));
    if let Ok(h) = normalize_to_schur(found) {
        let v = score(h.coeffs());
        if v > best.1 {
            best = (h.coeffs().to_vec(), v);
        }
    }
    best
}

/// `m_D(h(lambda), h(mu))` for the coefficients stored in an oracle argmax.
pub fn caratheodory_pseudo_value(argmax: &[f64], lambda: DiscPoint, mu: DiscPoint) -> f64 {
    let c = deinterleave(argmax);
    pseudo(horner(&c, lambda.value()), horner(&c, mu.value()))
}

/// Lower bound for the Caratheodory-Reiffen metric at `p(lambda)` along
/// `p'(lambda)`: the best `|h'(lambda)| / (1 - |h(lambda)|^2)`.
pub fn reiffen_lower(params: &ParabolaParams, lambda: DiscPoint, config: &OracleConfig) -> OracleResult {
    let degree = config.degree_for(params).max(params.m() as usize);
    let family = MaskedFamily::new(&params.coefficient_mask(degree, false), true);
    let lead = params.m() as usize;
    let l = lambda.value();
    let mut monomial = vec![ZERO; degree + 1];
    monomial[lead] = ONE;
    let quotient = |c: &[Complex64]| {
        let (h, dh) = horner_with_derivative(c, l);
        let d = 1.0 - h.norm_sqr();
        if d > 0.0 {
            dh.norm() / d
        } else {
            f64::NEG_INFINITY
        }
    };
    let sup = SupNorm::search();
    let objective = |x: &[f64]| {
        let c = family.coeffs(x);
        let s = sup.bound(&c);
        if !(s > 0.0) {
            return f64::INFINITY;
        }
        let scaled: Vec<Complex64> = c.iter().map(|a| a / s).collect();
        -quotient(&scaled)
    };
    let run = multistart(objective, |i, rng| family.start(i, rng), multistart_options(config));
    let (best, value) = certify_best(&family.coeffs(&run.best.x), &monomial, quotient);
    OracleResult {
        value,
        argmax: interleave(&best),
        evaluations: run.total_evals,
        converged: run.best.converged,
    }
}

/// `|h'(lambda)| / (1 - |h(lambda)|^2)` for interleaved coefficients.
pub fn reiffen_value(argmax: &[f64], lambda: DiscPoint) -> f64 {
    let (h, dh) = horner_with_derivative(&deinterleave(argmax), lambda.value());
    dh.norm() / (1.0 - h.norm_sqr())
}

fn origin_prefix_degree(params: &ParabolaParams) -> usize {
    let (m, n) = (params.m() as i64, params.n() as i64);
    (n * m - 2 * m - n + 1).max(n - m).max(1) as usize
}

/// Lower bound for the Caratheodory-Reiffen metric at the origin,
/// `max |X1 a_{n-m} + X2 a_0|` over Schur prefixes with the shifted mask.
///
/// Each candidate prefix is scaled onto the boundary of the feasible set by
/// its Toeplitz operator norm, so every evaluated point is feasible.
pub fn origin_gamma_lower(
    params: &ParabolaParams,
    x1: Complex64,
    x2: Complex64,
    config: &OracleConfig,
) -> Result<OracleResult> {
    let size = x1.norm().hypot(x2.norm());
    if size == 0.0 {
        return Err(Error::ZeroVector);
    }
    let (y1, y2) = (x1 / size, x2 / size);
    let degree = origin_prefix_degree(params);
    let family = MaskedFamily::new(&params.coefficient_mask(degree, true), false);
    let gap = (params.n() - params.m()) as usize;
    let linear = |c: &[Complex64]| (y1 * c[gap] + y2 * c[0]).norm();
    let objective = |x: &[f64]| {
        let c = family.coeffs(x);
        let s = ToeplitzUpper::from_coeffs(&c).operator_norm();
        if !(s > 0.0) {
            return f64::INFINITY;
        }
        -linear(&c) / s
    };
    let opts = MultiStartOptions {
        local: NelderMeadOptions {
            ftol: 1e-14,
            xtol: 1e-12,
            ..multistart_options(config).local
        },
        ..multistart_options(config)
    };
    let run = multistart(objective, |i, rng| family.start(i, rng), opts);
    let c = family.coeffs(&run.best.x);
    let mut s = ToeplitzUpper::from_coeffs(&c).operator_norm();
    let mut scaled: Vec<Complex64> = c.iter().map(|a| a / s).collect();
    while !feasibility_of(&scaled).feasible {
        s *= 1.0 + 1e-12;
        scaled = c.iter().map(|a| a / s).collect();
    }
    Ok(OracleResult {
        value: linear(&scaled) * size,
        argmax: interleave(&scaled),
        evaluations: run.total_evals,
        converged: run.best.converged,
    })
}

/// `|X1 a_{n-m} + X2 a_0|` for an `origin_gamma_lower` argmax.
pub fn origin_gamma_value(params: &ParabolaParams, argmax: &[f64], x1: Complex64, x2: Complex64) -> f64 {
    let c = deinterleave(argmax);
    let gap = (params.n() - params.m()) as usize;
    (x1 * c[gap] + x2 * c[0]).norm()
}

/// Maximizes `f` over the open disc: a polar grid scan followed by
/// Nelder-Mead from the best grid points. Deterministic.
fn maximize_over_disc<F: Fn(Complex64) -> f64>(f: F) -> (f64, Complex64, u64, bool) {
    let mut grid: Vec<(f64, Complex64)> = vec![(f(ZERO), ZERO)];
    for &r in &[0.2, 0.4, 0.6, 0.75, 0.85, 0.92, 0.97, 0.995] {
        for k in 0..24 {
            let a = Complex64::from_polar(r, TAU * k as f64 / 24.0);
            grid.push((f(a), a));
        }
    }
    let mut evals = grid.len() as u64;
    grid.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut best = (grid[0].0, grid[0].1, false);
    for &(_, a) in grid.iter().take(4) {
        let u0 = plane_from_disc(a);
        let m = nelder_mead(
            |u: &[f64]| -f(disc_from_plane(u[0], u[1])),
            &u0,
            NelderMeadOptions {
                max_evals: 3000,
                ftol: 1e-15,
                xtol: 1e-12,
                initial_step: 0.1,
                restarts: 2,
            },
        );
        evals += m.evals as u64;
        let v = -m.f;
        if v > best.0 || (v == best.0 && !best.2) {
            best = (v, disc_from_plane(m.x[0], m.x[1]), m.converged);
        }
    }
    (best.0, best.1, evals, best.2)
}

/// Maximum of `rho(lambda^2 Phi_alpha(lambda), mu^2 Phi_alpha(mu))` over
/// `alpha` in the disc, together with the unimodular-constant family
/// `rho(lambda^2, mu^2)`. The argmax is `alpha` (empty for the boundary family).
pub fn knese_family_check(lambda: DiscPoint, mu: DiscPoint) -> OracleResult {
    let (l, u) = (lambda.value(), mu.value());
    let (l2, u2) = (l * l, u * u);
    let (v, alpha, evals, converged) = maximize_over_disc(|a| pseudo(l2 * phi(a, l), u2 * phi(a, u)));
    let boundary = pseudo(l2, u2);
    if boundary >= v {
        OracleResult {
            value: boundary.atanh(),
            argmax: vec![],
            evaluations: evals + 1,
            converged: true,
        }
    } else {
        OracleResult {
            value: v.atanh(),
            argmax: vec![alpha.re, alpha.im],
            evaluations: evals + 1,
            converged,
        }
    }
}

/// Maximum over `alpha` of `m_D(lambda^2 Phi_alpha(lambda^{2k-1}), lambda^2 Phi_alpha(-lambda^{2k-1}))`,
/// the inductive step behind the opposite-point formula on `A_{2,2k+1}`.
pub fn opposite_family_max(k: u32, lambda: DiscPoint) -> Result<OracleResult> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive"));
    }
    let l = lambda.value();
    let l2 = l * l;
    let t = cpow(l, 2 * k - 1);
    let (v, alpha, evals, converged) = maximize_over_disc(|a| pseudo(l2 * phi(a, t), l2 * phi(a, -t)));
    Ok(OracleResult {
        value: v,
        argmax: vec![alpha.re, alpha.im],
        evaluations: evals,
        converged,
    })
}

/// `2|lambda|^{2m+1}/(1+|lambda|^{4m+2}) - m_D(lambda^{2m} Phi_alpha(lambda), lambda^{2m} Phi_alpha(-lambda))`.
pub fn opposite_bound_slack(m: u32, alpha: DiscPoint, lambda: DiscPoint) -> Result<f64> {
    let l = lambda.value();
    let a = alpha.value();
    let p = cpow(l, 2 * m);
    Ok(opposite_points_2odd(m, lambda)? - pseudo(p * phi(a, l), p * phi(a, -l)))
}

/// `rho^{(m)}(lambda, mu)`: maximum of `rho(lambda^m z, mu^m w)` over pairs with
/// `m_D(z, w) = m_D(lambda, mu)`, plus the unimodular family `z = w`.
/// The argmax is `(w_re, w_im, psi)` with `z = Phi_w(m_D(lambda, mu) e^{i psi})`.
pub fn rho_m(m: u32, lambda: DiscPoint, mu: DiscPoint) -> OracleResult {
    let (l, u) = (lambda.value(), mu.value());
    let (lm, um) = (cpow(l, m), cpow(u, m));
    let delta = pseudo(l, u);
    let boundary = pseudo(lm, um);
    if delta == 0.0 {
        return OracleResult {
            value: boundary.atanh(),
            argmax: vec![],
            evaluations: 1,
            converged: true,
        };
    }
    let value = |w: Complex64, psi: f64| {
        let z = phi(w, Complex64::from_polar(delta, psi));
        pseudo(lm * z, um * w)
    };
    let mut grid = Vec::new();
    for &r in &[0.0, 0.3, 0.6, 0.85, 0.95] {
        let angles = if r == 0.0 { 1 } else { 12 };
        for k in 0..angles {
            let w = Complex64::from_polar(r, TAU * k as f64 / angles as f64);
            for j in 0..12 {
                let psi = TAU * j as f64 / 12.0;
                grid.push((value(w, psi), w, psi));
            }
        }
    }
    let mut evals = grid.len() as u64;
    grid.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut best = (grid[0].0, vec![grid[0].1.re, grid[0].1.im, grid[0].2], false);
    for &(_, w, psi) in grid.iter().take(4) {
        let [u0, u1] = plane_from_disc(w);
        let r = nelder_mead(
            |x: &[f64]| -value(disc_from_plane(x[0], x[1]), x[2]),
            &[u0, u1, psi],
            NelderMeadOptions {
                max_evals: 4000,
                ftol: 1e-15,
                xtol: 1e-12,
                initial_step: 0.1,
                restarts: 2,
            },
        );
        evals += r.evals as u64;
        if -r.f > best.0 {
            let w = disc_from_plane(r.x[0], r.x[1]);
            best = (-r.f, vec![w.re, w.im, r.x[2]], r.converged);
        }
    }
    if boundary >= best.0 {
        return OracleResult {
            value: boundary.atanh(),
            argmax: vec![],
            evaluations: evals,
            converged: true,
        };
    }
    OracleResult {
        value: best.0.atanh(),
        argmax: best.1,
        evaluations: evals,
        converged: best.2,
    }
}

/// `m |zeta|^{m-1} |v| / (1 - |zeta|^{2m})`, the metric pulled back by `p`.
fn pulled_back_metric(m: u32) -> impl Fn(Complex64, Complex64) -> f64 {
    move |z: Complex64, v: Complex64| {
        let r = z.norm();
        m as f64 * r.powi(m as i32 - 1) * v.norm() / (1.0 - r.powi(2 * m as i32))
    }
}

const INNER_QUADRATURE: QuadratureOptions = QuadratureOptions {
    rel_tol: 1e-10,
    initial_panels: 32,
    max_panels: 1 << 18,
};

/// Checks that the principal `m`-th root of the geodesic from `a` (real,
/// nonnegative) to `b` is continuous and ends at `target`, walking the
/// geodesic with argument steps of at most `pi/8`.
fn track_root(a: Complex64, b: Complex64, m: u32, target: Complex64) -> Result<()> {
    let max_step = PI / 8.0;
    let mut t = 0.0f64;
    let mut prev = geodesic_raw(a, b, 0.0);
    let mut unwrapped = prev.arg();
    let mut h = 1.0f64 / 64.0;
    while t < 1.0 {
        let tn = (t + h).min(1.0);
        let z = geodesic_raw(a, b, tn);
        if z.norm() < 1e-300 {
            return Err(Error::BranchTracking("geodesic passes through the origin"));
        }
        let mut d = z.arg() - prev.arg();
        if d > PI {
            d -= TAU;
        } else if d < -PI {
            d += TAU;
        }
        if d.abs() > max_step && h > 1e-12 {
            h *= 0.5;
            continue;
        }
        unwrapped += d;
        if unwrapped.abs() >= PI {
            return Err(Error::BranchTracking("geodesic crosses the negative real axis"));
        }
        prev = z;
        t = tn;
        h = (h * 2.0).min(1.0 / 16.0);
    }
    let end = Complex64::from_polar(prev.norm().powf(1.0 / m as f64), unwrapped / m as f64);
    if (end - target).norm() > 1e-9 {
        return Err(Error::BranchTracking("root continuation does not reach the endpoint"));
    }
    Ok(())
}

fn principal_root(z: Complex64, m: u32) -> Complex64 {
    if z.norm() == 0.0 {
        return ZERO;
    }
    Complex64::from_polar(z.norm().powf(1.0 / m as f64), z.arg() / m as f64)
}

/// Length of the inner-distance candidates between `p(lambda)` and `p(mu)`:
/// the `m`-th root of the Poincare geodesic from `lambda^m` to `mu^m` (when
/// the sector condition holds) and the radial path through the origin.
/// Returns the shorter one; `argmax` holds the two candidate lengths
/// (`inf` when a family is unavailable).
pub fn inner_length_oracle(params: &ParabolaParams, lambda: DiscPoint, mu: DiscPoint) -> Result<OracleResult> {
    let m = params.m();
    if lambda == mu {
        return Ok(OracleResult {
            value: 0.0,
            argmax: vec![0.0, 0.0],
            evaluations: 0,
            converged: true,
        });
    }
    let metric = pulled_back_metric(m);
    let mut evaluations = 0u64;
    let mut converged = true;

    let mut radial = 0.0;
    for p in [lambda.value(), mu.value()] {
        if p.norm() > 0.0 {
            let est = curve_length(|t| p * t, &metric, INNER_QUADRATURE)?;
            evaluations += est.panels as u64;
            converged &= est.converged;
            radial += est.value;
        }
    }

    let mut root_curve = f64::INFINITY;
    if !lambda.is_origin() && !mu.is_origin() && sector_condition(m, lambda, mu) {
        let rot = lambda.value().conj() / lambda.norm();
        let l = Complex64::new(lambda.norm(), 0.0);
        let u = mu.value() * rot;
        let (a, b) = (cpow(l, m), cpow(u, m));
        if track_root(a, b, m, u).is_ok() {
            let est = curve_length(|t| principal_root(geodesic_raw(a, b, t), m), &metric, INNER_QUADRATURE)?;
            evaluations += est.panels as u64;
            converged &= est.converged;
            root_curve = est.value;
        }
    }
    Ok(OracleResult {
        value: radial.min(root_curve),
        argmax: vec![root_curve, radial],
        evaluations,
        converged,
    })
}

/// `atanh(caratheodory_lower) / origin_gamma_lower(X)` with
/// `X = (lambda^n - mu^n, lambda^m - mu^m)`.
pub fn origin_ratio(params: &ParabolaParams, lambda: DiscPoint, mu: DiscPoint, config: &OracleConfig) -> Result<f64> {
    if lambda == mu {
        return Err(Error::CoincidentPoints);
    }
    let (l, u) = (lambda.value(), mu.value());
    let x1 = cpow(l, params.n()) - cpow(u, params.n());
    let x2 = cpow(l, params.m()) - cpow(u, params.m());
    let c = caratheodory_lower(params, lambda, mu, config).value;
    let g = origin_gamma_lower(params, x1, x2, config)?.value;
    Ok(c / g)
}

/// A pair where the Caratheodory lower bound beats both monomial distances.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StrictPoints {
    pub lambda: DiscPoint,
    pub mu: DiscPoint,
    pub c_value: f64,
    pub rhs_value: f64,
}

/// Searches pairs with `lambda^m - mu^m = lambda^n - mu^n != 0` for which
/// `caratheodory_lower > max{rho(lambda^m, mu^m), rho(lambda^{m+1}, mu^{m+1})} + 1e-6`.
pub fn find_strict_points(params: &ParabolaParams, config: &OracleConfig) -> Result<StrictPoints> {
    let (m, n) = (params.m(), params.n());
    if m < 2 {
        return Err(Error::Precondition("strict points need m >= 2"));
    }
    let g = |z: Complex64| cpow(z, m) - cpow(z, n);
    let dg = |z: Complex64| cpow(z, m - 1) * m as f64 - cpow(z, n - 1) * n as f64;
    for &r in &[0.2, 0.1, 0.3, 0.05, 0.4] {
        for &theta in &[0.3, 1.1, -0.7] {
            let u = Complex64::from_polar(r, theta);
            let target = g(u);
            let mut l = u * Complex64::from_polar(1.0, TAU / m as f64);
            for _ in 0..100 {
                let step = (g(l) - target) / dg(l);
                l -= step;
                if step.norm() < 1e-16 {
                    break;
                }
            }
            if (g(l) - target).norm() > 1e-13 * target.norm().max(1e-300) {
                continue;
            }
            let (Ok(lambda), Ok(mu)) = (DiscPoint::new(l), DiscPoint::new(u)) else {
                continue;
            };
            if (l - u).norm() < 1e-6 || (cpow(l, m) - cpow(u, m)).norm() < 1e-12 {
                continue;
            }
            let c_value = caratheodory_lower(params, lambda, mu, config).value;
            let rhs_value = rho(cpow(l, m), cpow(u, m)).max(rho(cpow(l, m + 1), cpow(u, m + 1)));
            if c_value > rhs_value + 1e-6 {
                return Ok(StrictPoints {
                    lambda,
                    mu,
                    c_value,
                    rhs_value,
                });
            }
        }
    }
    Err(Error::NotFound)
}

/// `h(zeta) = Phi_eta(c Phi_a(zeta^{2k+1}))` with `a = lambda^{2k+1}`: a Schur
/// function in `O_{2,2k+1}` with `h(lambda) = eta` and `h(-lambda) = zeta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OppositeInterpolant {
    pub k: u32,
    pub a: Complex64,
    pub eta: Complex64,
    pub c: Complex64,
}

impl OppositeInterpolant {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        phi(self.eta, self.c * phi(self.a, cpow(z, 2 * self.k + 1)))
    }

    /// Taylor coefficients `0..=degree` by a discrete Cauchy integral on `|z| = radius`.
    pub fn taylor(&self, degree: usize, radius: f64) -> Vec<Complex64> {
        let samples = 256;
        let values: Vec<Complex64> = (0..samples)
            .map(|j| self.eval(Complex64::from_polar(radius, TAU * j as f64 / samples as f64)))
            .collect();
        (0..=degree)
            .map(|d| {
                let s: Complex64 = values
                    .iter()
                    .enumerate()
                    .map(|(j, v)| v * Complex64::from_polar(1.0, -TAU * (d * j) as f64 / samples as f64))
                    .sum();
                s / samples as f64 / radius.powi(d as i32)
            })
            .collect()
    }
}

/// Builds the interpolant for targets with `m_D(eta, zeta) <= 2|lambda|^{2k+1}/(1+|lambda|^{4k+2})`.
pub fn interpolate_opposite(k: u32, lambda: DiscPoint, eta: DiscPoint, zeta: DiscPoint) -> Result<OppositeInterpolant> {
    let bound = opposite_points_2odd(k, lambda)?;
    let (e, z) = (eta.value(), zeta.value());
    let d = pseudo(e, z);
    if d > bound * (1.0 + 1e-12) {
        return Err(Error::Precondition(
            "targets are farther apart than the opposite-point distance",
        ));
    }
    let a = cpow(lambda.value(), 2 * k + 1);
    let c = if d == 0.0 {
        ZERO
    } else {
        let c = phi(e, z) / phi(a, -a);
        if c.norm() > 1.0 {
            c / c.norm()
        } else {
            c
        }
    };
    Ok(OppositeInterpolant { k, a, eta: e, c })
}
