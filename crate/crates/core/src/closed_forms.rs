//! Closed-form distances and metrics on the (m,n)-parabola.
//!
//! Every piecewise formula returns a [`BranchedValue`] so callers and tests can
//! see which case fired. Branch boundaries use `>=` and ties go to the first
//! listed case.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::disc::{cpow, phi, rho, DiscPoint};
use crate::error::{Error, Result};
use crate::parabola::{ParabolaParams, Tangent};

/// Angular tolerance for deciding that `(lambda conj(mu))^m` is a negative real.
pub const NEGATIVE_REAL_ANGLE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    /// Knese distance, `|alpha_0| >= 1` or `lambda mu = 0`.
    LargeAlpha,
    /// Knese distance, `|alpha_0| < 1`.
    SmallAlpha,
    /// Knese metric at the origin, `|X_2| >= 2|X_1|`.
    OriginX2Dominant,
    /// Knese metric at the origin, `|X_2| < 2|X_1|`.
    OriginX1Dominant,
    /// Knese metric away from the origin.
    OffOrigin,
    /// Inner distance, angle between the points at most `pi/m`.
    Sector,
    /// Inner distance realized through the singular point.
    ThroughOrigin,
    /// `(3,4)` origin metric, `|X_1| >= 2|X_2|`.
    X1Dominant,
    /// `(3,4)` origin metric, `|X_2| >= sqrt(2)|X_1|`.
    X2Dominant,
    /// `(3,4)` origin metric, `1 < 2|X_2|/|X_1| < 2 sqrt(2)`.
    Middle,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A formula value tagged with the case that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BranchedValue {
    pub value: f64,
    pub branch: Branch,
    /// Set when the value comes from a transcribed formula that disagrees with
    /// the general extremal description (see [`knese_metric_23`]).
    pub discrepancy: bool,
}

impl BranchedValue {
    fn new(value: f64, branch: Branch) -> Self {
        BranchedValue {
            value,
            branch,
            discrepancy: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Alpha0 {
    Value(Complex64),
    /// `lambda mu = 0`: read the Knese formula in its `|alpha_0| >= 1` case.
    LargeBranch,
}

/// `alpha_0 = (lambda + 1/conj(lambda) + mu + 1/conj(mu)) / 2`.
pub fn alpha0(lambda: DiscPoint, mu: DiscPoint) -> Alpha0 {
    if lambda.is_origin() || mu.is_origin() {
        return Alpha0::LargeBranch;
    }
    let one = Complex64::new(1.0, 0.0);
    let (l, m) = (lambda.value(), mu.value());
    let sl = l + one / l.conj();
    let sm = m + one / m.conj();
    Alpha0::Value((sl + sm) * 0.5)
}

/// Knese's formula for the Caratheodory distance of the Neil parabola `A_{2,3}`,
/// as a function of the disc parameters.
pub fn knese_distance_23(lambda: DiscPoint, mu: DiscPoint) -> BranchedValue {
    let (l, m) = (lambda.value(), mu.value());
    match alpha0(lambda, mu) {
        Alpha0::Value(a) if a.norm() < 1.0 => {
            BranchedValue::new(rho(l * l * phi(a, l), m * m * phi(a, m)), Branch::SmallAlpha)
        }
        _ => BranchedValue::new(rho(l * l, m * m), Branch::LargeAlpha),
    }
}

/// Knese's Caratheodory-Reiffen formula on `A_{2,3}`, transcribed as stated.
///
/// At the origin with `|X_2| < 2|X_1|` the transcription gives `|X_1|`, while
/// the extremal problem over Schur functions gives `|X_1| + |X_2|^2 / (4|X_1|)`.
/// The transcribed value is returned with `discrepancy` set whenever the two
/// differ (`X_1 X_2 != 0`).
pub fn knese_metric_23(tangent: &Tangent) -> Result<BranchedValue> {
    let base = tangent.base;
    if (base.m, base.n) != (2, 3) {
        return Err(Error::Precondition("knese_metric_23 needs the (2,3)-parabola"));
    }
    let (x1, x2) = (tangent.x1, tangent.x2);
    if base.is_origin() {
        return Ok(if x2.norm() >= 2.0 * x1.norm() {
            BranchedValue::new(x2.norm(), Branch::OriginX2Dominant)
        } else {
            BranchedValue {
                value: x1.norm(),
                branch: Branch::OriginX1Dominant,
                discrepancy: x2.norm() != 0.0,
            }
        });
    }
    Tangent::new(base, x1, x2)?;
    // X = s (3a, 2b) with (a, b) = (z, w)
    let b = base.w;
    let s = x2 / (b * 2.0);
    Ok(BranchedValue::new(
        2.0 * (s * b).norm() / (1.0 - b.norm_sqr()),
        Branch::OffOrigin,
    ))
}

/// `gamma(p(lambda); p'(lambda)) = m |lambda|^{m-1} / (1 - |lambda|^{2m})`.
pub fn reiffen_metric(params: &ParabolaParams, lambda: DiscPoint) -> f64 {
    let m = params.m() as i32;
    let r = lambda.norm();
    m as f64 * r.powi(m - 1) / (1.0 - r.powi(2 * m))
}

/// `cos(pi/m)` with the exact values for `m <= 3`.
pub(crate) fn sector_cos(m: u32) -> f64 {
    match m {
        1 => -1.0,
        2 => 0.0,
        3 => 0.5,
        _ => (PI / m as f64).cos(),
    }
}

/// `Re(lambda conj(mu)) >= cos(pi/m) |lambda mu|`.
pub fn sector_condition(m: u32, lambda: DiscPoint, mu: DiscPoint) -> bool {
    let (l, u) = (lambda.value(), mu.value());
    (l * u.conj()).re >= sector_cos(m) * l.norm() * u.norm()
}

/// Inner Caratheodory distance of `p(lambda)` and `p(mu)`.
pub fn inner_distance(params: &ParabolaParams, lambda: DiscPoint, mu: DiscPoint) -> BranchedValue {
    let m = params.m();
    if sector_condition(m, lambda, mu) {
        BranchedValue::new(rho(cpow(lambda.value(), m), cpow(mu.value(), m)), Branch::Sector)
    } else {
        let a = lambda.norm().powi(m as i32).atanh();
        let b = mu.norm().powi(m as i32).atanh();
        BranchedValue::new(a + b, Branch::ThroughOrigin)
    }
}

/// Whether the Caratheodory distance of `p(lambda)`, `p(mu)` equals its inner
/// distance: the sector condition, or `(lambda conj(mu))^m < 0`.
pub fn c_equals_ci(params: &ParabolaParams, lambda: DiscPoint, mu: DiscPoint) -> bool {
    let m = params.m();
    if sector_condition(m, lambda, mu) {
        return true;
    }
    let q = cpow(lambda.value() * mu.value().conj(), m);
    q.norm() > 1e-300 && (q.arg().abs() - PI).abs() < NEGATIVE_REAL_ANGLE_TOL
}

/// Caratheodory-Reiffen metric of `A_{3,4}` at the origin.
pub fn gamma34_origin(x1: Complex64, x2: Complex64) -> Result<BranchedValue> {
    let (a, b) = (x1.norm(), x2.norm());
    if a == 0.0 && b == 0.0 {
        return Err(Error::ZeroVector);
    }
    if a >= 2.0 * b {
        return Ok(BranchedValue::new(a, Branch::X1Dominant));
    }
    if b >= 2f64.sqrt() * a {
        return Ok(BranchedValue::new(b, Branch::X2Dominant));
    }
    let c = 2.0 * b / a;
    let value = a * (c * c * c - 18.0 * c + (c * c + 24.0).powf(1.5)) / 108.0;
    Ok(BranchedValue::new(value, Branch::Middle))
}

/// `m_{A_{2,2k+1}}(p(lambda), p(-lambda)) = 2|lambda|^{2k+1} / (1 + |lambda|^{4k+2})`.
///
/// Extended to `lambda = 0` by continuity (value 0).
pub fn opposite_points_2odd(k: u32, lambda: DiscPoint) -> Result<f64> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive"));
    }
    let r = lambda.norm();
    let e = 2 * k as i32 + 1;
    Ok(2.0 * r.powi(e) / (1.0 + r.powi(2 * e)))
}

/// Kobayashi distance (and Lempert function) of `p(lambda)`, `p(mu)`: `rho(lambda, mu)`.
pub fn kobayashi_distance(_params: &ParabolaParams, lambda: DiscPoint, mu: DiscPoint) -> f64 {
    rho(lambda.value(), mu.value())
}

/// Kobayashi-Royden metric. Infinite for nonzero vectors at the singular
/// origin of a parabola with `m >= 2`.
pub fn kobayashi_metric(params: &ParabolaParams, tangent: &Tangent) -> Result<f64> {
    let base = tangent.base;
    if (base.m, base.n) != (params.m(), params.n()) {
        return Err(Error::Precondition("tangent belongs to a different parabola"));
    }
    if tangent.is_zero() {
        return Ok(0.0);
    }
    if base.is_origin() {
        return if params.m() == 1 {
            Tangent::new(base, tangent.x1, tangent.x2)?;
            Ok(tangent.x2.norm())
        } else {
            Ok(f64::INFINITY)
        };
    }
    let t = Tangent::new(base, tangent.x1, tangent.x2)?;
    let s = t.scale().ok_or(Error::Precondition("tangent scale undefined"))?;
    Ok(s.norm() / (1.0 - base.lambda.norm().powi(2)))
}

/// `rho^{(2m)}(lambda, -lambda) = rho(lambda^{2m+1}, -lambda^{2m+1})`, with
/// `m_even = 2m`.
pub fn rho_m_special(m_even: u32, lambda: DiscPoint) -> Result<f64> {
    if m_even == 0 {
        return Err(Error::Precondition("exponent must be positive"));
    }
    if m_even % 2 == 1 {
        return Err(Error::OddExponent(m_even));
    }
    Ok(opposite_points_2odd(m_even / 2, lambda)?.atanh())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disc::{poincare_distance, pseudo};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn dp(re: f64, im: f64) -> DiscPoint {
        DiscPoint::from_re_im(re, im).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn alpha0_examples() {
        assert_eq!(alpha0(dp(0.5, 0.0), dp(0.5, 0.0)), Alpha0::Value(c(2.5, 0.0)));
        assert_eq!(alpha0(dp(0.5, 0.0), dp(-0.5, 0.0)), Alpha0::Value(c(0.0, 0.0)));
        assert_eq!(alpha0(dp(0.3, 0.0), DiscPoint::ORIGIN), Alpha0::LargeBranch);
    }

    #[test]
    fn knese_distance_examples() {
        let l = dp(0.3, -0.4);
        let v = knese_distance_23(l, l);
        assert_eq!(v.value, 0.0);
        assert_eq!(v.branch, Branch::LargeAlpha);

        let v = knese_distance_23(dp(0.5, 0.0), DiscPoint::ORIGIN);
        assert_eq!(v.branch, Branch::LargeAlpha);
        assert_abs_diff_eq!(v.value, 0.25f64.atanh(), epsilon = 1e-15);
        assert_abs_diff_eq!(v.value, 0.255413, epsilon = 1e-6);

        let v = knese_distance_23(dp(0.5, 0.0), dp(-0.5, 0.0));
        assert_eq!(v.branch, Branch::SmallAlpha);
        assert_abs_diff_eq!(v.value, (0.25f64 / 1.015625).atanh(), epsilon = 1e-15);
        assert_abs_diff_eq!(v.value, 0.251314, epsilon = 1e-6);
    }

    #[test]
    fn knese_metric_examples() {
        let p = ParabolaParams::new(2, 3).unwrap();
        let t = p.tangent_at_origin(c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        let v = knese_metric_23(&t).unwrap();
        assert_eq!(
            (v.value, v.branch, v.discrepancy),
            (1.0, Branch::OriginX2Dominant, false)
        );

        let t = p.tangent_at_origin(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        let v = knese_metric_23(&t).unwrap();
        assert_eq!(
            (v.value, v.branch, v.discrepancy),
            (1.0, Branch::OriginX1Dominant, false)
        );

        let t = p.tangent_at_origin(c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        let v = knese_metric_23(&t).unwrap();
        assert_eq!(v.value, 1.0);
        assert!(v.discrepancy);

        // X = 0.5 (3a, 2b) at p(0.5), b = 0.25: 2 |0.5 * 0.25| / (1 - 0.0625)
        let lam = dp(0.5, 0.0);
        let base = p.parametrize(lam);
        let t = Tangent::new(base, base.z * 1.5, base.w * 1.0).unwrap();
        let v = knese_metric_23(&t).unwrap();
        assert_eq!(v.branch, Branch::OffOrigin);
        assert_abs_diff_eq!(v.value, 0.25 / 0.9375, epsilon = 1e-15);
        assert_abs_diff_eq!(v.value, 0.266667, epsilon = 1e-6);
        // unit multiple of (3a, 2b)
        let t = Tangent::new(base, base.z * 3.0, base.w * 2.0).unwrap();
        assert_abs_diff_eq!(knese_metric_23(&t).unwrap().value, 0.5 / 0.9375, epsilon = 1e-15);
    }

    #[test]
    fn knese_metric_errors() {
        let p = ParabolaParams::new(2, 3).unwrap();
        let base = p.parametrize(dp(0.5, 0.0));
        let t = Tangent {
            x1: c(1.0, 0.0),
            x2: c(1.0, 0.0),
            base,
        };
        assert!(matches!(knese_metric_23(&t), Err(Error::NotTangent { .. })));
        let q = ParabolaParams::new(2, 5).unwrap();
        let t = q.tangent_at(dp(0.5, 0.0), c(1.0, 0.0));
        assert!(knese_metric_23(&t).is_err());
    }

    #[test]
    fn knese_metric_agrees_with_reiffen_off_origin() {
        let p = ParabolaParams::new(2, 3).unwrap();
        for &(re, im) in &[(0.5, 0.0), (0.1, -0.7), (-0.3, 0.3)] {
            let lam = dp(re, im);
            let t = p.tangent_at(lam, c(1.0, 0.0));
            let v = knese_metric_23(&t).unwrap().value;
            assert_abs_diff_eq!(v, reiffen_metric(&p, lam), epsilon = 1e-14);
        }
    }

    #[test]
    fn reiffen_examples() {
        let p1 = ParabolaParams::new(1, 4).unwrap();
        assert_eq!(reiffen_metric(&p1, DiscPoint::ORIGIN), 1.0);
        let p2 = ParabolaParams::new(2, 3).unwrap();
        assert_abs_diff_eq!(reiffen_metric(&p2, dp(0.5, 0.0)), 1.0 / 0.9375, epsilon = 1e-15);
        assert_abs_diff_eq!(reiffen_metric(&p2, dp(0.5, 0.0)), 1.066667, epsilon = 1e-6);
        let p3 = ParabolaParams::new(3, 4).unwrap();
        assert_eq!(reiffen_metric(&p3, DiscPoint::ORIGIN), 0.0);
    }

    #[test]
    fn inner_distance_examples() {
        let p = ParabolaParams::new(2, 3).unwrap();
        let v = inner_distance(&p, dp(0.5, 0.0), dp(-0.5, 0.0));
        assert_eq!(v.branch, Branch::ThroughOrigin);
        assert_abs_diff_eq!(v.value, 2.0 * 0.25f64.atanh(), epsilon = 1e-15);
        assert_abs_diff_eq!(v.value, 0.510826, epsilon = 1e-6);

        let v = inner_distance(&p, dp(0.5, 0.0), dp(0.0, 0.5));
        assert_eq!(v.branch, Branch::Sector);
        assert_abs_diff_eq!(
            v.value,
            poincare_distance(dp(0.25, 0.0), dp(-0.25, 0.0)),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(v.value, 0.510826, epsilon = 1e-6);

        let l = dp(-0.2, 0.6);
        assert_eq!(inner_distance(&p, l, l).value, 0.0);
        // lambda mu = 0 is inside the sector
        assert_eq!(inner_distance(&p, l, DiscPoint::ORIGIN).branch, Branch::Sector);
    }

    #[test]
    fn c_equals_ci_examples() {
        let p = ParabolaParams::new(2, 3).unwrap();
        assert!(c_equals_ci(&p, dp(0.5, 0.0), dp(0.4, 0.0)));
        assert!(c_equals_ci(&p, dp(0.5, 0.0), dp(0.0, 0.5)));
        assert!(!c_equals_ci(&p, dp(0.5, 0.0), dp(-0.5, 0.0)));
        // m = 3: the ray at angle pi (outside the pi/3 sector) has (lambda conj mu)^3 < 0
        let p = ParabolaParams::new(3, 4).unwrap();
        assert!(!sector_condition(3, dp(0.5, 0.0), dp(-0.4, 0.0)));
        assert!(c_equals_ci(&p, dp(0.5, 0.0), dp(-0.4, 0.0)));
        assert!(!c_equals_ci(&p, dp(0.5, 0.0), DiscPoint::from_polar(0.4, 2.0).unwrap()));
    }

    // max over t in [0,1] of a(1-t)sqrt(1+t) + b t on a fine grid
    fn gamma34_grid(a: f64, b: f64) -> f64 {
        let n = 2_000_000;
        (0..=n)
            .map(|i| {
                let t = i as f64 / n as f64;
                a * (1.0 - t) * (1.0 + t).sqrt() + b * t
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }

    #[test]
    fn gamma34_examples() {
        let v = gamma34_origin(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!((v.value, v.branch), (1.0, Branch::X1Dominant));
        let v = gamma34_origin(c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!((v.value, v.branch), (1.0, Branch::X2Dominant));
        let v = gamma34_origin(c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert_eq!(v.branch, Branch::Middle);
        assert_abs_diff_eq!(v.value, (8.0 - 36.0 + 28f64.powf(1.5)) / 108.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.value, 1.112612, epsilon = 1e-6);
        assert_abs_diff_eq!(v.value, gamma34_grid(1.0, 1.0), epsilon = 1e-6);
        assert_eq!(gamma34_origin(c(0.0, 0.0), c(0.0, 0.0)), Err(Error::ZeroVector));
    }

    #[test]
    fn gamma34_matches_grid_search() {
        for i in 1..10 {
            let cc = 1.0 + (2.0 * 2f64.sqrt() - 1.0) * i as f64 / 10.0;
            let v = gamma34_origin(c(1.0, 0.0), c(cc / 2.0, 0.0)).unwrap().value;
            assert_abs_diff_eq!(v, gamma34_grid(1.0, cc / 2.0), epsilon = 1e-6);
        }
    }

    #[test]
    fn gamma34_is_continuous_at_branch_points() {
        for &cc in &[1.0, 2.0 * 2f64.sqrt()] {
            let lo = gamma34_origin(c(1.0, 0.0), c((cc - 1e-8) / 2.0, 0.0)).unwrap().value;
            let hi = gamma34_origin(c(1.0, 0.0), c((cc + 1e-8) / 2.0, 0.0)).unwrap().value;
            assert!((lo - hi).abs() < 1e-6, "c = {cc}: {lo} vs {hi}");
        }
    }

    #[test]
    fn opposite_points_examples() {
        assert_abs_diff_eq!(
            opposite_points_2odd(1, dp(0.5, 0.0)).unwrap(),
            0.25 / 1.015625,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(opposite_points_2odd(1, dp(0.5, 0.0)).unwrap(), 0.246154, epsilon = 1e-6);
        assert_eq!(opposite_points_2odd(1, DiscPoint::ORIGIN).unwrap(), 0.0);
        assert_abs_diff_eq!(
            opposite_points_2odd(2, dp(0.5, 0.0)).unwrap(),
            0.0625 / (1.0 + 2f64.powi(-10)),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(opposite_points_2odd(2, dp(0.5, 0.0)).unwrap(), 0.062439, epsilon = 1e-6);
        let l = dp(0.3, 0.55);
        let l3 = l.powi(3).value();
        assert_abs_diff_eq!(opposite_points_2odd(1, l).unwrap(), pseudo(l3, -l3), epsilon = 1e-15);
    }

    #[test]
    fn kobayashi_examples() {
        let p = ParabolaParams::new(2, 3).unwrap();
        let l = dp(0.2, 0.1);
        assert_eq!(kobayashi_distance(&p, l, l), 0.0);
        assert_abs_diff_eq!(
            kobayashi_distance(&p, dp(0.5, 0.0), DiscPoint::ORIGIN),
            0.549306,
            epsilon = 1e-6
        );
        let k = kobayashi_distance(&p, dp(0.5, 0.0), dp(-0.5, 0.0));
        assert_abs_diff_eq!(k, 1.098612, epsilon = 1e-6);
        assert!(k > knese_distance_23(dp(0.5, 0.0), dp(-0.5, 0.0)).value);

        let t = p.tangent_at(dp(0.5, 0.0), c(1.0, 0.0));
        assert_abs_diff_eq!(kobayashi_metric(&p, &t).unwrap(), 1.0 / 0.75, epsilon = 1e-15);
        let t = p.tangent_at_origin(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(kobayashi_metric(&p, &t).unwrap(), f64::INFINITY);
        let t = p.tangent_at_origin(c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(kobayashi_metric(&p, &t).unwrap(), 0.0);

        let p1 = ParabolaParams::new(1, 3).unwrap();
        let t = p1.tangent_at_origin(c(0.0, 0.0), c(0.0, -2.0)).unwrap();
        assert_eq!(kobayashi_metric(&p1, &t).unwrap(), 2.0);
        let p11 = ParabolaParams::new(1, 1).unwrap();
        let t = p11.tangent_at_origin(c(0.6, 0.8), c(0.6, 0.8)).unwrap();
        assert_abs_diff_eq!(kobayashi_metric(&p11, &t).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn rho_m_special_examples() {
        assert_abs_diff_eq!(rho_m_special(2, dp(0.5, 0.0)).unwrap(), 0.251314, epsilon = 1e-6);
        assert_eq!(rho_m_special(2, DiscPoint::ORIGIN).unwrap(), 0.0);
        assert_abs_diff_eq!(rho_m_special(4, dp(0.5, 0.0)).unwrap(), 0.062520, epsilon = 1e-6);
        assert_eq!(rho_m_special(3, dp(0.5, 0.0)), Err(Error::OddExponent(3)));
    }

    fn disc_point() -> impl Strategy<Value = DiscPoint> {
        (0.0f64..0.95, -PI..PI).prop_map(|(r, t)| DiscPoint::from_polar(r, t).unwrap())
    }

    proptest! {
        #[test]
        fn distance_ordering_on_neil_parabola(l in disc_point(), u in disc_point()) {
            let p = ParabolaParams::new(2, 3).unwrap();
            let base = rho(cpow(l.value(), 2), cpow(u.value(), 2));
            let c = knese_distance_23(l, u).value;
            let ci = inner_distance(&p, l, u).value;
            let k = kobayashi_distance(&p, l, u);
            prop_assert!(c - base >= -1e-10);
            prop_assert!(ci - c >= -1e-10);
            prop_assert!(k - ci >= -1e-10);
        }

        #[test]
        fn distances_are_symmetric(l in disc_point(), u in disc_point(), m in 1u32..6) {
            let p = ParabolaParams::new(m, m + 1).unwrap();
            prop_assert_eq!(knese_distance_23(l, u), knese_distance_23(u, l));
            prop_assert_eq!(inner_distance(&p, l, u), inner_distance(&p, u, l));
            prop_assert_eq!(kobayashi_distance(&p, l, u), kobayashi_distance(&p, u, l));
            prop_assert_eq!(c_equals_ci(&p, l, u), c_equals_ci(&p, u, l));
        }

        #[test]
        fn sector_branch_equals_knese(l in disc_point(), u in disc_point()) {
            let p = ParabolaParams::new(2, 3).unwrap();
            let ci = inner_distance(&p, l, u);
            if ci.branch == Branch::Sector {
                prop_assert_eq!(ci.value, rho(cpow(l.value(), 2), cpow(u.value(), 2)));
                prop_assert!((knese_distance_23(l, u).value - ci.value).abs() < 1e-10);
            }
        }

        #[test]
        fn metrics_are_homogeneous(l in disc_point(), s in (-3.0f64..3.0, -3.0f64..3.0)) {
            let p = ParabolaParams::new(2, 3).unwrap();
            prop_assume!(!l.is_origin());
            let scale = c(s.0, s.1);
            let t1 = p.tangent_at(l, c(1.0, 0.0));
            let ts = p.tangent_at(l, scale);
            let k1 = kobayashi_metric(&p, &t1).unwrap();
            let ks = kobayashi_metric(&p, &ts).unwrap();
            prop_assert!((ks - scale.norm() * k1).abs() <= 1e-12 * ks.max(1.0));
            let g1 = knese_metric_23(&t1).unwrap().value;
            let gs = knese_metric_23(&ts).unwrap().value;
            prop_assert!((gs - scale.norm() * g1).abs() <= 1e-12 * gs.max(1.0));
            let o1 = gamma34_origin(t1.x1, t1.x2).unwrap().value;
            let os = gamma34_origin(ts.x1, ts.x2);
            if scale.norm() > 0.0 {
                prop_assert!((os.unwrap().value - scale.norm() * o1).abs() <= 1e-12 * o1.max(1.0) * scale.norm().max(1.0));
            }
        }
    }
}
