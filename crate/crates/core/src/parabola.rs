//! The (m,n)-parabola `A_{m,n} = {(z,w) in D^2 : z^m = w^n}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::disc::{cpow, DiscPoint};
use crate::error::{Error, Result};

/// Relative tolerance on `|z^m - w^n|` for points accepted by [`invert`].
pub const VARIETY_TOL: f64 = 1e-10;

/// Validated exponents of the parabola together with the data derived from them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolaParams {
    m: u32,
    n: u32,
    k: i64,
    l: i64,
    gap_set: Vec<u32>,
    frobenius: Option<u32>,
}

impl ParabolaParams {
    /// Checks `1 <= m <= n` and `gcd(m, n) = 1`, solves `k n + l m = 1` and
    /// sieves the gap set of the semigroup generated by `m` and `n`.
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 || m > n {
            return Err(Error::OrderViolation { m, n });
        }
        let (g, x, _) = extended_gcd(n as i64, m as i64);
        if g != 1 {
            return Err(Error::NotCoprime { m, n });
        }
        // x n + y m = 1; normalize 0 <= k < m (k = 0, l = 1 when m = 1)
        let (mi, ni) = (m as i64, n as i64);
        let k = x.rem_euclid(mi);
        let l = (1 - k * ni) / mi;
        debug_assert_eq!(k * ni + l * mi, 1);

        let (gap_set, frobenius) = if m == 1 {
            (Vec::new(), None)
        } else {
            let f = n * m - m - n;
            (sieve_gaps(m, n, f), Some(f))
        };
        Ok(ParabolaParams {
            m,
            n,
            k,
            l,
            gap_set,
            frobenius,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Exponents with `k n + l m = 1`, so that `q(z, w) = z^k w^l`.
    pub fn inverse_exponents(&self) -> (i64, i64) {
        (self.k, self.l)
    }

    pub fn gap_set(&self) -> &[u32] {
        &self.gap_set
    }

    /// Largest gap, `nm - m - n`; `None` when `m = 1`.
    pub fn frobenius(&self) -> Option<u32> {
        self.frobenius
    }

    pub fn is_gap(&self, s: u32) -> bool {
        self.gap_set.binary_search(&s).is_ok()
    }

    /// `p(lambda) = (lambda^n, lambda^m)`.
    pub fn parametrize(&self, lambda: DiscPoint) -> ParabolaPoint {
        let l = lambda.value();
        ParabolaPoint {
            m: self.m,
            n: self.n,
            lambda,
            z: cpow(l, self.n),
            w: cpow(l, self.m),
        }
    }

    /// `q(z, w) = z^k w^l`, with `q(0, 0) = 0`.
    pub fn invert(&self, z: Complex64, w: Complex64) -> Result<DiscPoint> {
        if !(z.norm() < 1.0) {
            return Err(Error::OutsideDisc(z));
        }
        if !(w.norm() < 1.0) {
            return Err(Error::OutsideDisc(w));
        }
        let zm = cpow(z, self.m);
        let wn = cpow(w, self.n);
        let scale = zm.norm().max(wn.norm()).max(1e-300);
        let defect = (zm - wn).norm() / scale;
        if defect > VARIETY_TOL {
            return Err(Error::OffVariety { z, w, defect });
        }
        if self.m == 1 {
            return DiscPoint::new(w);
        }
        if z.norm() <= 1e-100 || w.norm() <= 1e-100 {
            return Ok(DiscPoint::ORIGIN);
        }
        let num = cpow(z, self.k as u32);
        let den = cpow(w, (-self.l) as u32);
        DiscPoint::new(num / den)
    }

    /// Forced-zero Taylor coefficients up to index `degree`.
    ///
    /// Unshifted: index `j` is forced when `j` is a gap. Shifted (for `h` with
    /// `f o p = zeta^m h`): index `j` is forced when `j + m` is a gap.
    pub fn coefficient_mask(&self, degree: usize, shifted_by_m: bool) -> Vec<bool> {
        let offset = if shifted_by_m { self.m as usize } else { 0 };
        (0..=degree)
            .map(|j| u32::try_from(j + offset).map(|s| self.is_gap(s)).unwrap_or(false))
            .collect()
    }

    /// `p'(lambda) = (n lambda^{n-1}, m lambda^{m-1})`.
    pub fn derivative(&self, lambda: DiscPoint) -> (Complex64, Complex64) {
        let l = lambda.value();
        (cpow(l, self.n - 1) * self.n as f64, cpow(l, self.m - 1) * self.m as f64)
    }

    /// `scale * p'(lambda)` as a tangent vector at `p(lambda)`.
    pub fn tangent_at(&self, lambda: DiscPoint, scale: Complex64) -> Tangent {
        let (d1, d2) = self.derivative(lambda);
        Tangent {
            x1: d1 * scale,
            x2: d2 * scale,
            base: self.parametrize(lambda),
        }
    }

    /// Tangent vector at the origin. Any vector is admissible when `m >= 2`;
    /// for `m = 1` it must be a multiple of `p'(0)`.
    pub fn tangent_at_origin(&self, x1: Complex64, x2: Complex64) -> Result<Tangent> {
        Tangent::new(self.parametrize(DiscPoint::ORIGIN), x1, x2)
    }
}

/// A point `(z, w) = p(lambda)` of the parabola.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParabolaPoint {
    pub m: u32,
    pub n: u32,
    pub lambda: DiscPoint,
    pub z: Complex64,
    pub w: Complex64,
}

impl ParabolaPoint {
    pub fn is_origin(&self) -> bool {
        self.lambda.is_origin()
    }
}

/// A tangent vector `(x1, x2)` at a point of the parabola.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tangent {
    pub x1: Complex64,
    pub x2: Complex64,
    pub base: ParabolaPoint,
}

impl Tangent {
    /// Validates that `(x1, x2)` lies in the tangent space at `base`.
    pub fn new(base: ParabolaPoint, x1: Complex64, x2: Complex64) -> Result<Self> {
        let t = Tangent { x1, x2, base };
        if base.is_origin() && base.m >= 2 {
            return Ok(t);
        }
        let (d1, d2) = t.direction();
        let cross = (x1 * d2 - x2 * d1).norm();
        let size = (x1.norm_sqr() + x2.norm_sqr()).sqrt() * (d1.norm_sqr() + d2.norm_sqr()).sqrt();
        if cross > 1e-12 * size.max(f64::MIN_POSITIVE) {
            return Err(Error::NotTangent { x1, x2 });
        }
        Ok(t)
    }

    fn direction(&self) -> (Complex64, Complex64) {
        let l = self.base.lambda.value();
        let (m, n) = (self.base.m, self.base.n);
        (cpow(l, n - 1) * n as f64, cpow(l, m - 1) * m as f64)
    }

    /// The complex factor `s` with `X = s p'(lambda)`; `None` at the origin of
    /// a parabola with `m >= 2`, where the tangent space is all of `C^2`.
    pub fn scale(&self) -> Option<Complex64> {
        if self.base.is_origin() && self.base.m >= 2 {
            return None;
        }
        let (d1, d2) = self.direction();
        if d2.norm() >= d1.norm() {
            Some(self.x2 / d2)
        } else {
            Some(self.x1 / d1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x1.norm() == 0.0 && self.x2.norm() == 0.0
    }
}

fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn sieve_gaps(m: u32, n: u32, frobenius: u32) -> Vec<u32> {
    let limit = frobenius as usize;
    let mut representable = vec![false; limit + 1];
    representable[0] = true;
    for s in 1..=limit {
        let by_m = s >= m as usize && representable[s - m as usize];
        let by_n = s >= n as usize && representable[s - n as usize];
        representable[s] = by_m || by_n;
    }
    (1..=limit).filter(|&s| !representable[s]).map(|s| s as u32).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    // Brute force: s is a gap iff no a, b >= 0 with a m + b n = s.
    fn brute_gaps(m: u32, n: u32) -> Vec<u32> {
        let bound = m * n;
        (1..bound)
            .filter(|&s| !(0..=s / m).any(|a| (s - a * m).is_multiple_of(n)))
            .collect()
    }

    #[test]
    fn make_params_examples() {
        let p = ParabolaParams::new(2, 3).unwrap();
        assert_eq!(p.gap_set(), &[1]);
        assert_eq!(p.inverse_exponents(), (1, -1));
        assert_eq!(p.frobenius(), Some(1));

        let p = ParabolaParams::new(1, 5).unwrap();
        assert!(p.gap_set().is_empty());
        assert_eq!(p.frobenius(), None);

        let p = ParabolaParams::new(3, 4).unwrap();
        assert_eq!(p.gap_set(), &[1, 2, 5]);
        assert_eq!(p.frobenius(), Some(5));
    }

    #[test]
    fn make_params_errors() {
        assert_eq!(ParabolaParams::new(2, 4), Err(Error::NotCoprime { m: 2, n: 4 }));
        assert_eq!(ParabolaParams::new(5, 3), Err(Error::OrderViolation { m: 5, n: 3 }));
        assert_eq!(ParabolaParams::new(0, 3), Err(Error::OrderViolation { m: 0, n: 3 }));
        assert!(ParabolaParams::new(1, 1).is_ok());
        assert_eq!(ParabolaParams::new(2, 2), Err(Error::NotCoprime { m: 2, n: 2 }));
    }

    #[test]
    fn parametrize_examples() {
        let p = ParabolaParams::new(2, 3).unwrap();
        let pt = p.parametrize(DiscPoint::ORIGIN);
        assert_eq!((pt.z, pt.w), (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)));
        let pt = p.parametrize(DiscPoint::real(0.5).unwrap());
        assert_eq!(pt.z, Complex64::new(0.125, 0.0));
        assert_eq!(pt.w, Complex64::new(0.25, 0.0));
        let p = ParabolaParams::new(1, 1).unwrap();
        let l = DiscPoint::from_re_im(0.2, -0.7).unwrap();
        let pt = p.parametrize(l);
        assert_eq!((pt.z, pt.w), (l.value(), l.value()));
    }

    #[test]
    fn invert_examples() {
        let p = ParabolaParams::new(2, 3).unwrap();
        let l = p.invert(Complex64::new(0.125, 0.0), Complex64::new(0.25, 0.0)).unwrap();
        assert_abs_diff_eq!(l.value().re, 0.5, epsilon = 1e-15);
        assert_eq!(
            p.invert(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)).unwrap(),
            DiscPoint::ORIGIN
        );

        let p = ParabolaParams::new(2, 5).unwrap();
        assert_eq!(p.inverse_exponents(), (1, -2));
        let lam = DiscPoint::from_re_im(0.3, 0.6).unwrap();
        let pt = p.parametrize(lam);
        let back = p.invert(pt.z, pt.w).unwrap();
        assert!((back.value() - lam.value()).norm() < 1e-12);
    }

    #[test]
    fn invert_rejects_off_variety() {
        let p = ParabolaParams::new(2, 3).unwrap();
        let err = p.invert(Complex64::new(0.5, 0.0), Complex64::new(0.25, 0.0));
        assert!(matches!(err, Err(Error::OffVariety { .. })));
        assert!(matches!(
            p.invert(Complex64::new(1.5, 0.0), Complex64::new(0.25, 0.0)),
            Err(Error::OutsideDisc(_))
        ));
    }

    #[test]
    fn coefficient_mask_examples() {
        let p = ParabolaParams::new(2, 3).unwrap();
        assert_eq!(p.coefficient_mask(4, false), vec![false, true, false, false, false]);
        assert_eq!(p.coefficient_mask(2, true), vec![false, false, false]);
        let p = ParabolaParams::new(3, 4).unwrap();
        let mask = p.coefficient_mask(5, false);
        let forced: Vec<usize> = (0..=5).filter(|&j| mask[j]).collect();
        assert_eq!(forced, vec![1, 2, 5]);
        // shifted by 3: j + 3 in {1, 2, 5} only for j = 2
        let mask = p.coefficient_mask(6, true);
        let forced: Vec<usize> = (0..=6).filter(|&j| mask[j]).collect();
        assert_eq!(forced, vec![2]);
        let mask = p.coefficient_mask(20, false);
        assert!(mask[6..].iter().all(|&b| !b));
    }

    #[test]
    fn tangent_examples() {
        let p = ParabolaParams::new(2, 3).unwrap();
        let t = p.tangent_at(DiscPoint::real(0.5).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!((t.x1, t.x2), (Complex64::new(0.75, 0.0), Complex64::new(1.0, 0.0)));
        let t = p.tangent_at(DiscPoint::real(0.5).unwrap(), Complex64::new(0.0, 0.0));
        assert!(t.is_zero());
        let p = ParabolaParams::new(1, 2).unwrap();
        let s = Complex64::new(0.0, 2.0);
        let t = p.tangent_at(DiscPoint::ORIGIN, s);
        assert_eq!((t.x1, t.x2), (Complex64::new(0.0, 0.0), s));
        assert_eq!(t.scale(), Some(s));
    }

    #[test]
    fn tangent_validation() {
        let p = ParabolaParams::new(2, 3).unwrap();
        let base = p.parametrize(DiscPoint::real(0.5).unwrap());
        assert!(Tangent::new(base, Complex64::new(0.75, 0.0), Complex64::new(1.0, 0.0)).is_ok());
        assert!(Tangent::new(base, Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)).is_err());
        // origin with m >= 2 accepts anything
        assert!(p
            .tangent_at_origin(Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0))
            .is_ok());
        let p = ParabolaParams::new(1, 3).unwrap();
        assert!(p
            .tangent_at_origin(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
            .is_err());
        assert!(p
            .tangent_at_origin(Complex64::new(0.0, 0.0), Complex64::new(3.0, 0.0))
            .is_ok());
    }

    fn coprime_pair() -> impl Strategy<Value = (u32, u32)> {
        (1u32..8, 1u32..12).prop_filter("m <= n, coprime", |&(m, n)| m <= n && gcd(m, n) == 1)
    }

    proptest! {
        #[test]
        fn sieve_matches_brute_force((m, n) in coprime_pair()) {
            let p = ParabolaParams::new(m, n).unwrap();
            let brute = brute_gaps(m, n);
            prop_assert_eq!(p.gap_set(), brute.as_slice());
        }

        #[test]
        fn gap_count_and_symmetry((m, n) in coprime_pair()) {
            let p = ParabolaParams::new(m, n).unwrap();
            prop_assert_eq!(p.gap_set().len() as u32, (m - 1) * (n - 1) / 2);
            if let Some(f) = p.frobenius() {
                prop_assert_eq!(p.gap_set().iter().max().copied(), Some(f));
                for s in 0..=f {
                    prop_assert!(p.is_gap(s) != p.is_gap(f - s));
                }
            }
        }

        #[test]
        fn bezout_normalization((m, n) in coprime_pair()) {
            let p = ParabolaParams::new(m, n).unwrap();
            let (k, l) = p.inverse_exponents();
            prop_assert_eq!(k * n as i64 + l * m as i64, 1);
            if m >= 2 {
                prop_assert!(0 <= k && k < m as i64);
            }
        }

        #[test]
        fn invert_parametrize_round_trip(
            (m, n) in coprime_pair(),
            r in 1e-3f64..0.95,
            t in -3.1f64..3.1,
        ) {
            let p = ParabolaParams::new(m, n).unwrap();
            let lam = DiscPoint::from_polar(r, t).unwrap();
            let pt = p.parametrize(lam);
            let zm = cpow(pt.z, m);
            let wn = cpow(pt.w, n);
            prop_assert!((zm - wn).norm() <= 1e-14 * zm.norm().max(1e-300));
            // reciprocal powers of tiny w are skipped by design
            prop_assume!(pt.z.norm() > 1e-100 && pt.w.norm() > 1e-100);
            let back = p.invert(pt.z, pt.w).unwrap();
            prop_assert!((back.value() - lam.value()).norm() < 1e-12);
        }
    }
}
