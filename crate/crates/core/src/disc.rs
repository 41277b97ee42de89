//! Hyperbolic geometry of the unit disc.
//!
//! Points are wrapped in [`DiscPoint`], which refuses anything with modulus
//! `>= 1 - 1e-14`. The raw `Complex64` helpers at the bottom of the module are
//! used by the oracles in their inner loops where the argument is known to lie
//! in the disc already.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Points closer than this to the unit circle are rejected.
pub const BOUNDARY_MARGIN: f64 = 1e-14;

/// A point of the open unit disc.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Complex64", into = "Complex64")]
pub struct DiscPoint(Complex64);

impl DiscPoint {
    pub const ORIGIN: DiscPoint = DiscPoint(Complex64::new(0.0, 0.0));

    pub fn new(value: Complex64) -> Result<Self> {
        if value.re.is_finite() && value.im.is_finite() && value.norm() < 1.0 - BOUNDARY_MARGIN {
            Ok(DiscPoint(value))
        } else {
            Err(Error::OutsideDisc(value))
        }
    }

    pub fn from_re_im(re: f64, im: f64) -> Result<Self> {
        Self::new(Complex64::new(re, im))
    }

    pub fn real(re: f64) -> Result<Self> {
        Self::new(Complex64::new(re, 0.0))
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        Self::new(Complex64::from_polar(r, theta))
    }

    #[inline]
    pub fn value(self) -> Complex64 {
        self.0
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.0.norm()
    }

    #[inline]
    pub fn is_origin(self) -> bool {
        self.0 == Complex64::new(0.0, 0.0)
    }

    /// Integer power; stays in the disc.
    pub fn powi(self, k: u32) -> DiscPoint {
        DiscPoint(cpow(self.0, k))
    }

    /// Rotation by `e^{i theta}`.
    pub fn rotate(self, theta: f64) -> DiscPoint {
        DiscPoint(self.0 * Complex64::from_polar(1.0, theta))
    }
}

impl std::ops::Neg for DiscPoint {
    type Output = DiscPoint;

    fn neg(self) -> DiscPoint {
        DiscPoint(-self.0)
    }
}

impl TryFrom<Complex64> for DiscPoint {
    type Error = Error;

    fn try_from(value: Complex64) -> Result<Self> {
        DiscPoint::new(value)
    }
}

impl From<DiscPoint> for Complex64 {
    fn from(p: DiscPoint) -> Self {
        p.0
    }
}

/// `m_D(a, b) = |(a - b) / (1 - a conj(b))|`.
pub fn moebius_pseudodistance(a: DiscPoint, b: DiscPoint) -> f64 {
    pseudo(a.0, b.0)
}

/// Poincare distance, `atanh(m_D(a, b))`.
pub fn poincare_distance(a: DiscPoint, b: DiscPoint) -> f64 {
    rho(a.0, b.0)
}

/// The disc automorphism `zeta -> Phi_alpha(e^{i phase} zeta)` with
/// `Phi_alpha(zeta) = (alpha - zeta) / (1 - conj(alpha) zeta)`.
///
/// A unimodular `alpha` is only accepted through [`MobiusMap::boundary`]; such
/// a map collapses the disc onto the constant `alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    alpha: Complex64,
    phase: f64,
}

impl MobiusMap {
    pub fn new(alpha: DiscPoint) -> Self {
        MobiusMap {
            alpha: alpha.0,
            phase: 0.0,
        }
    }

    /// Boundary experiment: `|alpha| = 1` within `1e-12`.
    pub fn boundary(alpha: Complex64) -> Result<Self> {
        if (alpha.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::Precondition("boundary map needs |alpha| = 1"));
        }
        Ok(MobiusMap { alpha, phase: 0.0 })
    }

    pub fn with_phase(mut self, phase: f64) -> Self {
        self.phase = phase;
        self
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn is_degenerate(&self) -> bool {
        self.alpha.norm() >= 1.0 - BOUNDARY_MARGIN
    }
}

/// Apply a Moebius map. Degenerate (boundary) maps report their constant value
/// through [`Error::DegenerateMap`].
pub fn apply_moebius(map: MobiusMap, z: DiscPoint) -> Result<DiscPoint> {
    if map.is_degenerate() {
        return Err(Error::DegenerateMap(map.alpha));
    }
    let rotated = if map.phase == 0.0 {
        z.0
    } else {
        z.0 * Complex64::from_polar(1.0, map.phase)
    };
    DiscPoint::new(phi(map.alpha, rotated))
}

/// Point at parameter `t` on the Poincare geodesic from `a` to `b`.
///
/// The radial segment `[0, Phi_a(b)]` is traversed linearly and carried back by
/// `Phi_a`, so `t` is proportional to the Euclidean radius of the transported
/// point, not to hyperbolic arclength.
pub fn geodesic(a: DiscPoint, b: DiscPoint, t: f64) -> Result<DiscPoint> {
    if a == b {
        return Err(Error::CoincidentPoints);
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Precondition("geodesic parameter must lie in [0, 1]"));
    }
    if t == 0.0 {
        return Ok(a);
    }
    if t == 1.0 {
        return Ok(b);
    }
    DiscPoint::new(geodesic_raw(a.0, b.0, t))
}

pub(crate) fn geodesic_raw(a: Complex64, b: Complex64, t: f64) -> Complex64 {
    let end = phi(a, b);
    phi(a, end * t)
}

/// A curve in the disc sampled on a strictly increasing grid of `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    nodes: Vec<Complex64>,
    grid: Vec<f64>,
}

impl SampledCurve {
    pub fn new(nodes: Vec<Complex64>, grid: Vec<f64>) -> Result<Self> {
        if nodes.len() != grid.len() {
            return Err(Error::InvalidCurve("nodes and grid differ in length"));
        }
        if nodes.len() < 2 {
            return Err(Error::InvalidCurve("need at least two nodes"));
        }
        if grid[0] != 0.0 || *grid.last().unwrap_or(&0.0) != 1.0 {
            return Err(Error::InvalidCurve("grid must start at 0 and end at 1"));
        }
        if grid.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidCurve("grid must be strictly increasing"));
        }
        if let Some(bad) = nodes.iter().find(|z| !(z.norm() < 1.0 - BOUNDARY_MARGIN)) {
            return Err(Error::OutsideDisc(*bad));
        }
        Ok(SampledCurve { nodes, grid })
    }

    /// Uniform sampling of `curve` with `panels` intervals.
    pub fn sample<F: Fn(f64) -> Complex64>(curve: F, panels: usize) -> Result<Self> {
        let panels = panels.max(1);
        let grid: Vec<f64> = (0..=panels)
            .map(|i| if i == panels { 1.0 } else { i as f64 / panels as f64 })
            .collect();
        let nodes = grid.iter().map(|&t| curve(t)).collect();
        Self::new(nodes, grid)
    }

    pub fn nodes(&self) -> &[Complex64] {
        &self.nodes
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    /// Finite-difference velocities: second-order centered stencil inside,
    /// second-order one-sided stencils at the ends.
    pub fn velocities(&self) -> Vec<Complex64> {
        let z = &self.nodes;
        let t = &self.grid;
        let n = z.len();
        if n == 2 {
            let v = (z[1] - z[0]) / (t[1] - t[0]);
            return vec![v, v];
        }
        // divided differences keep constant curves at exactly zero velocity
        let d: Vec<Complex64> = (0..n - 1).map(|i| (z[i + 1] - z[i]) / (t[i + 1] - t[i])).collect();
        let h: Vec<f64> = (0..n - 1).map(|i| t[i + 1] - t[i]).collect();
        let mut v = Vec::with_capacity(n);
        v.push(d[0] - (d[1] - d[0]) * (h[0] / (h[0] + h[1])));
        for i in 1..n - 1 {
            v.push((d[i - 1] * h[i] + d[i] * h[i - 1]) / (h[i - 1] + h[i]));
        }
        v.push(d[n - 2] + (d[n - 2] - d[n - 3]) * (h[n - 2] / (h[n - 3] + h[n - 2])));
        v
    }

    /// Composite Simpson integral of `metric(node, velocity)` over the grid.
    pub fn length<M: Fn(Complex64, Complex64) -> f64>(&self, metric: &M) -> Result<f64> {
        let vel = self.velocities();
        let mut values = Vec::with_capacity(self.nodes.len());
        for (i, (z, v)) in self.nodes.iter().zip(&vel).enumerate() {
            let f = metric(*z, *v);
            if !f.is_finite() {
                return Err(Error::NonFiniteMetric { index: i });
            }
            values.push(f);
        }
        Ok(simpson_irregular(&self.grid, &values))
    }
}

fn simpson_irregular(t: &[f64], f: &[f64]) -> f64 {
    let n = t.len() - 1;
    if n == 1 {
        return 0.5 * (t[1] - t[0]) * (f[0] + f[1]);
    }
    let mut total = 0.0;
    let mut i = 0;
    while i + 2 <= n {
        let h0 = t[i + 1] - t[i];
        let h1 = t[i + 2] - t[i + 1];
        let s = h0 + h1;
        total += s / 6.0 * ((2.0 - h1 / h0) * f[i] + s * s / (h0 * h1) * f[i + 1] + (2.0 - h0 / h1) * f[i + 2]);
        i += 2;
    }
    if i < n {
        // odd panel count: integrate the last panel with the parabola through the last three nodes
        let h0 = t[n - 1] - t[n - 2];
        let h1 = t[n] - t[n - 1];
        let a = (2.0 * h1 * h1 + 3.0 * h0 * h1) / (6.0 * (h0 + h1));
        let b = (h1 * h1 + 3.0 * h0 * h1) / (6.0 * h0);
        let c = h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
        total += a * f[n] + b * f[n - 1] - c * f[n - 2];
    }
    total
}

/// Refinement settings for [`curve_length`].
#[derive(Debug, Clone, Copy)]
pub struct QuadratureOptions {
    pub rel_tol: f64,
    pub initial_panels: usize,
    pub max_panels: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        QuadratureOptions {
            rel_tol: 1e-8,
            initial_panels: 16,
            max_panels: 1 << 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LengthEstimate {
    pub value: f64,
    pub panels: usize,
    pub converged: bool,
}

/// Length of `curve: [0,1] -> D` under an infinitesimal metric
/// `metric(point, velocity)`, by Simpson's rule with panel doubling.
///
/// When the panel budget runs out the last estimate is returned with
/// `converged = false`.
pub fn curve_length<C, M>(curve: C, metric: M, opts: QuadratureOptions) -> Result<LengthEstimate>
where
    C: Fn(f64) -> Complex64,
    M: Fn(Complex64, Complex64) -> f64,
{
    let mut panels = opts.initial_panels.max(2);
    let mut previous = SampledCurve::sample(&curve, panels)?.length(&metric)?;
    loop {
        panels *= 2;
        let current = SampledCurve::sample(&curve, panels)?.length(&metric)?;
        let change = (current - previous).abs();
        if change <= opts.rel_tol * current.abs() || (current == 0.0 && previous == 0.0) {
            return Ok(LengthEstimate {
                value: current,
                panels,
                converged: true,
            });
        }
        if panels >= opts.max_panels {
            return Ok(LengthEstimate {
                value: current,
                panels,
                converged: false,
            });
        }
        previous = current;
    }
}

/// Infinitesimal Poincare metric `|v| / (1 - |z|^2)`.
pub fn poincare_metric(z: Complex64, v: Complex64) -> f64 {
    v.norm() / (1.0 - z.norm_sqr())
}

/// `m_D(a^s, b^s e^{i s theta}) - m_D(a, b e^{i theta})` for `a, b in [0, 1)` and
/// `s in (0, 1]`. Nonnegative up to rounding; compared on the `m_D` scale so
/// that points near the circle do not overflow `atanh`.
pub fn power_monotonicity_slack(a: f64, b: f64, s: f64, theta: f64) -> f64 {
    let lhs = pseudo(Complex64::new(a, 0.0), Complex64::from_polar(b, theta));
    let rhs = pseudo(
        Complex64::new(a.powf(s), 0.0),
        Complex64::from_polar(b.powf(s), s * theta),
    );
    rhs - lhs
}

// Raw helpers on Complex64.

#[inline]
pub(crate) fn phi(alpha: Complex64, z: Complex64) -> Complex64 {
    (alpha - z) / (Complex64::new(1.0, 0.0) - alpha.conj() * z)
}

#[inline]
pub(crate) fn pseudo(a: Complex64, b: Complex64) -> f64 {
    let num = (a - b).norm();
    if num == 0.0 {
        return 0.0;
    }
    num / (Complex64::new(1.0, 0.0) - a * b.conj()).norm()
}

#[inline]
pub(crate) fn rho(a: Complex64, b: Complex64) -> f64 {
    pseudo(a, b).atanh()
}

#[inline]
pub(crate) fn cpow(z: Complex64, k: u32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    let mut base = z;
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}
