//! The coordinate cross `V = {(z, w) in D^2 : zw = 0}`, a model of `A_{2,2}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::disc::{rho, DiscPoint};
use crate::error::{Error, Result};

/// A point of `V`, tagged by the axis it lies on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum CrossPoint {
    /// `(z, 0)` with `z != 0`.
    ZAxis(DiscPoint),
    /// `(0, w)` with `w != 0`.
    WAxis(DiscPoint),
    Origin,
}

impl CrossPoint {
    pub fn z_axis(z: DiscPoint) -> Self {
        if z.is_origin() {
            CrossPoint::Origin
        } else {
            CrossPoint::ZAxis(z)
        }
    }

    pub fn w_axis(w: DiscPoint) -> Self {
        if w.is_origin() {
            CrossPoint::Origin
        } else {
            CrossPoint::WAxis(w)
        }
    }

    /// Fails unless `zw = 0`.
    pub fn from_coords(z: Complex64, w: Complex64) -> Result<Self> {
        let (zp, wp) = (DiscPoint::new(z)?, DiscPoint::new(w)?);
        match (zp.is_origin(), wp.is_origin()) {
            (true, true) => Ok(CrossPoint::Origin),
            (false, true) => Ok(CrossPoint::ZAxis(zp)),
            (true, false) => Ok(CrossPoint::WAxis(wp)),
            (false, false) => Err(Error::OffVariety {
                z,
                w,
                defect: (z * w).norm(),
            }),
        }
    }

    pub fn coords(&self) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        match *self {
            CrossPoint::ZAxis(z) => (z.value(), zero),
            CrossPoint::WAxis(w) => (zero, w.value()),
            CrossPoint::Origin => (zero, zero),
        }
    }

    /// The nonzero coordinate (0 at the origin).
    pub fn coordinate(&self) -> DiscPoint {
        match *self {
            CrossPoint::ZAxis(z) | CrossPoint::WAxis(z) => z,
            CrossPoint::Origin => DiscPoint::ORIGIN,
        }
    }

    fn opposite(&self, other: &CrossPoint) -> bool {
        matches!(
            (self, other),
            (CrossPoint::ZAxis(_), CrossPoint::WAxis(_)) | (CrossPoint::WAxis(_), CrossPoint::ZAxis(_))
        )
    }
}

/// Caratheodory distance on `V`. On opposite axes it is `rho(|z|, -|w|)`.
pub fn cross_caratheodory(p: CrossPoint, q: CrossPoint) -> f64 {
    let (a, b) = (p.coordinate(), q.coordinate());
    if p.opposite(&q) {
        rho(Complex64::new(a.norm(), 0.0), Complex64::new(-b.norm(), 0.0))
    } else {
        rho(a.value(), b.value())
    }
}

/// Lempert function on `V`: infinite between nonzero points of opposite axes.
pub fn cross_lempert(p: CrossPoint, q: CrossPoint) -> f64 {
    if p.opposite(&q) {
        f64::INFINITY
    } else {
        rho(p.coordinate().value(), q.coordinate().value())
    }
}

/// Kobayashi distance on `V`; it coincides with the Caratheodory distance.
pub fn cross_kobayashi(p: CrossPoint, q: CrossPoint) -> f64 {
    cross_caratheodory(p, q)
}

fn check_tangent(p: CrossPoint, x1: Complex64, x2: Complex64) -> Result<()> {
    let bad = match p {
        CrossPoint::ZAxis(_) => x2.norm() != 0.0,
        CrossPoint::WAxis(_) => x1.norm() != 0.0,
        CrossPoint::Origin => false,
    };
    if bad {
        Err(Error::NotTangent { x1, x2 })
    } else {
        Ok(())
    }
}

fn along_axis(p: CrossPoint, x1: Complex64, x2: Complex64) -> f64 {
    let r = p.coordinate().norm();
    (x1.norm() + x2.norm()) / (1.0 - r * r)
}

/// Caratheodory-Reiffen metric on `V`: `|X1| + |X2|` at the origin.
pub fn cross_gamma(p: CrossPoint, x1: Complex64, x2: Complex64) -> Result<f64> {
    check_tangent(p, x1, x2)?;
    Ok(along_axis(p, x1, x2))
}

/// Kobayashi-Royden metric on `V`: at the origin `|X|` along an axis and
/// infinite otherwise.
pub fn cross_kappa(p: CrossPoint, x1: Complex64, x2: Complex64) -> Result<f64> {
    check_tangent(p, x1, x2)?;
    if p == CrossPoint::Origin && x1.norm() != 0.0 && x2.norm() != 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(along_axis(p, x1, x2))
}
