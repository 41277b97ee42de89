//! Verification suites comparing closed forms with the numerical oracles.
//!
//! Each suite returns a [`SuiteReport`] made of named checks with pinned
//! tolerances. Reports contain no timings, so equal seeds give equal reports.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{
    c_equals_ci, gamma34_origin, inner_distance, knese_distance_23, knese_metric_23, kobayashi_distance,
    kobayashi_metric, opposite_points_2odd, reiffen_metric, rho_m_special, sector_condition, Branch,
};
use crate::cross::{cross_caratheodory, cross_gamma, cross_kappa, cross_kobayashi, cross_lempert, CrossPoint};
use crate::disc::{phi, poincare_distance, power_monotonicity_slack, rho, DiscPoint};
use crate::parabola::ParabolaParams;
use crate::schur::{
    caratheodory_lower, find_strict_points, inner_length_oracle, interpolate_opposite, knese_family_check,
    opposite_bound_slack, opposite_family_max, origin_gamma_lower, origin_ratio, region_c_membership, reiffen_lower,
    reiffen_value, rho_m, schur_feasible, sup_norm_estimate, two_coeff_sufficient, OracleConfig, SchurPrefix,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Knese,
    Reiffen,
    Inner,
    Cci,
    Schur,
    Opposite,
    Kobayashi,
    Origin,
    Ineq,
    Monotone,
    Cross,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Knese,
        Suite::Reiffen,
        Suite::Inner,
        Suite::Cci,
        Suite::Schur,
        Suite::Opposite,
        Suite::Kobayashi,
        Suite::Origin,
        Suite::Ineq,
        Suite::Monotone,
        Suite::Cross,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Knese => "knese",
            Suite::Reiffen => "reiffen",
            Suite::Inner => "inner",
            Suite::Cci => "cci",
            Suite::Schur => "schur",
            Suite::Opposite => "opposite",
            Suite::Kobayashi => "kobayashi",
            Suite::Origin => "origin",
            Suite::Ineq => "ineq",
            Suite::Monotone => "monotone",
            Suite::Cross => "cross",
        }
    }

    /// Acceptance criterion number covered by the suite.
    pub fn criterion(self) -> u32 {
        Suite::ALL.iter().position(|&s| s == self).unwrap() as u32 + 1
    }

    fn stream(self) -> u64 {
        self.criterion() as u64
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

/// One named comparison inside a suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    /// Largest observed deviation in the units of `tolerance`.
    pub worst: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub criterion: u32,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

/// Runs the given suites in order.
pub fn run_suites(suites: &[Suite], seed: u64) -> VerifyReport {
    let reports: Vec<SuiteReport> = suites.iter().map(|&s| run_suite(s, seed)).collect();
    VerifyReport {
        seed,
        passed: reports.iter().all(|r| r.passed),
        suites: reports,
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(suite.stream());
    let checks = match suite {
        Suite::Knese => knese_suite(seed),
        Suite::Reiffen => reiffen_suite(seed),
        Suite::Inner => inner_suite(&mut rng),
        Suite::Cci => cci_suite(&mut rng),
        Suite::Schur => schur_suite(seed),
        Suite::Opposite => opposite_suite(&mut rng),
        Suite::Kobayashi => kobayashi_suite(&mut rng),
        Suite::Origin => origin_suite(&mut rng, seed),
        Suite::Ineq => ineq_suite(seed),
        Suite::Monotone => monotone_suite(&mut rng),
        Suite::Cross => cross_suite(&mut rng),
    };
    SuiteReport {
        suite,
        criterion: suite.criterion(),
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

/// Accumulates pass/fail outcomes for one check.
struct Tally {
    name: &'static str,
    tolerance: f64,
    cases: usize,
    failures: usize,
    worst: f64,
}

impl Tally {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Tally {
            name,
            tolerance,
            cases: 0,
            failures: 0,
            worst: 0.0,
        }
    }

    /// Records a deviation that must not exceed the tolerance.
    fn deviation(&mut self, d: f64) {
        self.outcome(d, d <= self.tolerance);
    }

    fn outcome(&mut self, d: f64, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
        if d.is_finite() {
            self.worst = self.worst.max(d);
        } else if !ok {
            self.worst = f64::MAX;
        }
    }

    fn flag(&mut self, ok: bool) {
        self.outcome(if ok { 0.0 } else { 1.0 }, ok);
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name.to_string(),
            passed: self.cases > 0 && self.failures == 0,
            cases: self.cases,
            failures: self.failures,
            worst: self.worst,
            tolerance: self.tolerance,
        }
    }
}

fn random_disc(rng: &mut ChaCha8Rng, radius: f64) -> DiscPoint {
    let r = radius * rng.gen::<f64>().sqrt();
    DiscPoint::from_polar(r, rng.gen_range(-PI..PI)).expect("radius below 1")
}

fn dp(z: Complex64) -> DiscPoint {
    DiscPoint::new(z).expect("point inside the disc")
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn neil() -> ParabolaParams {
    ParabolaParams::new(2, 3).expect("(2,3) is admissible")
}

fn knese_suite(seed: u64) -> Vec<CheckReport> {
    let mut family = Tally::new("family maximum equals closed form", 1e-6);
    let mut reach = Tally::new("caratheodory_lower within 5e-3 below closed form", 5e-3);
    let mut above = Tally::new("caratheodory_lower never exceeds closed form", 1e-9);
    let config = OracleConfig {
        degree: Some(12),
        starts: 64,
        seed,
        ..OracleConfig::default()
    };
    let p = neil();
    for i in 0..10 {
        let lambda = dp(c(0.08 * (i + 1) as f64, 0.0));
        for j in 0..10 {
            let mu = DiscPoint::from_polar(0.8 - 0.07 * j as f64, PI * j as f64 / 9.0).expect("inside");
            let closed = knese_distance_23(lambda, mu).value;
            family.deviation((knese_family_check(lambda, mu).value - closed).abs());
            let lower = caratheodory_lower(&p, lambda, mu, &config).value;
            reach.deviation(closed - lower);
            above.deviation(lower - closed);
        }
    }
    vec![family.finish(), reach.finish(), above.finish()]
}

fn reiffen_suite(seed: u64) -> Vec<CheckReport> {
    let mut bound = Tally::new("reiffen_lower <= closed form", 1e-9);
    let mut mono = Tally::new("monomial start attains closed form", 1e-12);
    let config = OracleConfig {
        starts: 4,
        refine: 2,
        seed,
        ..OracleConfig::default()
    };
    let mut lambdas = Vec::new();
    for &r in &[0.0, 0.3, 0.6, 0.85] {
        for &t in &[0.0, 1.3, 2.6, -2.0, -0.7] {
            lambdas.push(DiscPoint::from_polar(r, t).expect("inside"));
        }
    }
    for m in 1..=3u32 {
        for n in m..=7u32 {
            let Ok(p) = ParabolaParams::new(m, n) else { continue };
            let degree = config.degree_for(&p);
            let mut monomial = vec![0.0; 2 * (degree + 1)];
            monomial[2 * m as usize] = 1.0;
            for &l in &lambdas {
                let closed = reiffen_metric(&p, l);
                let r = reiffen_lower(&p, l, &config);
                bound.deviation(r.value - closed);
                let m_val = reiffen_value(&monomial, l);
                mono.deviation((m_val - closed).abs().max(closed - r.value));
            }
        }
    }
    vec![bound.finish(), mono.finish()]
}

fn inner_suite(rng: &mut ChaCha8Rng) -> Vec<CheckReport> {
    let mut agree = Tally::new("inner_length_oracle matches inner_distance", 1e-4);
    let mut tags = Tally::new("branch tag matches sector predicate", 0.0);
    let mut both = Tally::new("both branches exercised", 0.0);
    let (mut sector, mut through) = (0, 0);
    for i in 0..100 {
        let m = 2 + (i % 3) as u32;
        let p = ParabolaParams::new(m, m + 1).expect("consecutive integers are coprime");
        let lambda = random_disc(rng, 0.9);
        let r = 0.9 * rng.gen::<f64>().sqrt();
        let half = PI / m as f64;
        // alternate between angles inside and outside the sector
        let offset = if i % 2 == 0 {
            rng.gen_range(-half..half)
        } else {
            rng.gen_range(half..PI) * if rng.gen::<bool>() { 1.0 } else { -1.0 }
        };
        let mu = DiscPoint::from_polar(r, lambda.value().arg() + offset).expect("inside");
        let closed = inner_distance(&p, lambda, mu);
        let oracle = inner_length_oracle(&p, lambda, mu)
            .map(|o| o.value)
            .unwrap_or(f64::INFINITY);
        agree.deviation((oracle - closed.value).abs());
        let in_sector = sector_condition(m, lambda, mu);
        tags.flag((closed.branch == Branch::Sector) == in_sector);
        if in_sector {
            sector += 1;
        } else {
            through += 1;
        }
    }
    both.flag(sector > 0 && through > 0);
    vec![agree.finish(), tags.finish(), both.finish()]
}

fn cci_suite(rng: &mut ChaCha8Rng) -> Vec<CheckReport> {
    let mut equiv = Tally::new("equality with inner distance iff c_equals_ci", 0.0);
    let mut witness = Tally::new("strict witness c < c^i", 0.0);
    let p = neil();
    for _ in 0..1000 {
        let (l, u) = (random_disc(rng, 0.95), random_disc(rng, 0.95));
        let equal = (knese_distance_23(l, u).value - inner_distance(&p, l, u).value).abs() < 1e-10;
        equiv.flag(equal == c_equals_ci(&p, l, u));
    }
    let (l, u) = (dp(c(0.5, 0.0)), dp(c(-0.5, 0.0)));
    witness.flag(knese_distance_23(l, u).value < inner_distance(&p, l, u).value - 1e-6 && !c_equals_ci(&p, l, u));
    vec![equiv.finish(), witness.finish()]
}

fn gamma34_grid(a: f64, b: f64) -> f64 {
    let n = 200_000;
    (0..=n)
        .map(|i| {
            let t = i as f64 / n as f64;
            a * (1.0 - t) * (1.0 + t).sqrt() + b * t
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

fn schur_suite(seed: u64) -> Vec<CheckReport> {
    let mut region = Tally::new("region C agrees with 3x3 semidefiniteness", 0.0);
    for i in 0..200 {
        for j in 0..200 {
            let (sa, sb) = (i as f64 / 199.0, j as f64 / 199.0);
            let prefix = SchurPrefix::unmasked(vec![c(sa, 0.0), c(sb, 0.0), c(0.0, 0.0)]).expect("valid");
            let margin = schur_feasible(&prefix).margin;
            let inside = region_c_membership(sa * sa, sb * sb);
            let disagree = (inside && margin < -1e-9) || (!inside && margin > 1e-9);
            region.flag(!disagree);
        }
    }

    let mut sufficient = Tally::new("two-coefficient condition implies feasibility", 0.0);
    for n in 2..=8u32 {
        for i in 0..=40 {
            for j in 0..=40 {
                let (a, b) = (i as f64 / 40.0, j as f64 / 40.0);
                if two_coeff_sufficient(a, b, n) {
                    let mut prefix = vec![c(0.0, 0.0); n as usize];
                    prefix[0] = c(a, 0.0);
                    prefix[1] = c(b, 0.0);
                    let f = schur_feasible(&SchurPrefix::unmasked(prefix).expect("valid"));
                    sufficient.flag(f.feasible);
                }
            }
        }
    }

    let mut closed = Tally::new("gamma34_origin equals 1-D grid maximum", 1e-6);
    for i in 0..50 {
        let cc = 1.0 + (2.0 * 2f64.sqrt() - 1.0) * (i as f64 + 0.5) / 50.0;
        let (x1, x2) = (1.0, cc / 2.0);
        let v = gamma34_origin(c(x1, 0.0), c(x2, 0.0)).expect("nonzero").value;
        closed.deviation((v - gamma34_grid(x1, x2)).abs());
    }

    let mut oracle = Tally::new("origin_gamma_lower(3,4) agrees with gamma34_origin", 1e-5);
    let mut above = Tally::new("origin_gamma_lower(3,4) never exceeds gamma34_origin", 1e-9);
    let p34 = ParabolaParams::new(3, 4).expect("admissible");
    let config = OracleConfig {
        seed,
        ..OracleConfig::default()
    };
    let vectors = [
        (c(1.0, 0.0), c(1.0, 0.0)),
        (c(1.0, 0.0), c(0.0, 0.0)),
        (c(0.0, 0.0), c(1.0, 0.0)),
        (c(0.3, 0.4), c(-0.2, 0.5)),
        (c(1.0, 0.0), c(0.0, 0.6)),
        (c(-0.5, 0.2), c(0.45, 0.0)),
        (c(2.0, 0.0), c(1.1, 1.1)),
    ];
    for (x1, x2) in vectors {
        let closed_v = gamma34_origin(x1, x2).expect("nonzero").value;
        let v = origin_gamma_lower(&p34, x1, x2, &config).expect("nonzero").value;
        oracle.deviation((v - closed_v).abs());
        above.deviation(v - closed_v);
    }

    let mut normalize = Tally::new("normalized polynomials stay in the Schur class", 1e-12);
    let mut nrng = ChaCha8Rng::seed_from_u64(seed);
    nrng.set_stream(Suite::Schur.stream());
    for _ in 0..20 {
        let coeffs: Vec<Complex64> = (0..13)
            .map(|_| c(nrng.gen_range(-1.0..1.0), nrng.gen_range(-1.0..1.0)))
            .collect();
        let h = crate::schur::normalize_to_schur(&coeffs).expect("nonzero");
        normalize.deviation(sup_norm_estimate(h.coeffs(), 1 << 16) - 1.0);
    }

    vec![
        region.finish(),
        sufficient.finish(),
        closed.finish(),
        oracle.finish(),
        above.finish(),
        normalize.finish(),
    ]
}

fn opposite_suite(rng: &mut ChaCha8Rng) -> Vec<CheckReport> {
    let mut family = Tally::new("Phi_alpha family maximum equals closed form", 1e-6);
    for k in 1..=3u32 {
        for &r in &[0.1, 0.3, 0.5, 0.7, 0.9] {
            for &t in &[0.0, 0.9, 2.2, -1.6] {
                let l = DiscPoint::from_polar(r, t).expect("inside");
                let v = opposite_family_max(k, l).expect("k >= 1").value;
                family.deviation((v - opposite_points_2odd(k, l).expect("k >= 1")).abs());
            }
        }
    }

    let mut bound = Tally::new("opposite-point bound holds for random alpha", 1e-12);
    for i in 0..10_000 {
        let m = 1 + (i % 3) as u32;
        let (alpha, l) = (random_disc(rng, 0.999), random_disc(rng, 0.99));
        bound.deviation(-opposite_bound_slack(m, alpha, l).expect("m >= 1"));
    }

    let mut interp = Tally::new("interpolant hits targets inside O_{2,2k+1}", 1e-6);
    for i in 0..200 {
        let k = 1 + (i % 3) as u32;
        let l = random_disc(rng, 0.95);
        let limit = opposite_points_2odd(k, l).expect("k >= 1");
        let eta = random_disc(rng, 0.9);
        let d = limit * rng.gen::<f64>();
        let zeta = dp(phi(eta.value(), Complex64::from_polar(d, rng.gen_range(-PI..PI))));
        let Ok(h) = interpolate_opposite(k, l, eta, zeta) else {
            interp.flag(false);
            continue;
        };
        let residual = (h.eval(l.value()) - eta.value())
            .norm()
            .max((h.eval(-l.value()) - zeta.value()).norm());
        let taylor = h.taylor(2 * k as usize + 1, 0.5);
        let gap = (0..2 * k as usize)
            .filter(|j| j % 2 == 1)
            .map(|j| taylor[j].norm())
            .fold(0.0, f64::max);
        let sup = (0..4096)
            .map(|j| h.eval(Complex64::from_polar(1.0, TAU * j as f64 / 4096.0)).norm())
            .fold(0.0, f64::max);
        interp.outcome(residual.max(gap), residual <= 1e-6 && gap <= 1e-8 && sup <= 1.0 + 1e-12);
    }

    let mut special = Tally::new("rho_m oracle equals rho_m_special", 1e-6);
    for &m_even in &[2u32, 4] {
        for &(r, t) in &[(0.5, 0.0), (0.3, 1.0), (0.7, -2.0), (0.85, 2.5)] {
            let l = DiscPoint::from_polar(r, t).expect("inside");
            let closed = rho_m_special(m_even, l).expect("even");
            special.deviation((rho_m(m_even, l, -l).value - closed).abs());
        }
    }
    vec![family.finish(), bound.finish(), interp.finish(), special.finish()]
}

fn kobayashi_suite(rng: &mut ChaCha8Rng) -> Vec<CheckReport> {
    let mut exact = Tally::new("kobayashi_distance equals rho exactly", 0.0);
    let mut order = Tally::new("c <= c^i <= k", 1e-10);
    let mut metric = Tally::new("Kobayashi-Royden dominates Caratheodory-Reiffen", 1e-12);
    let p = neil();
    for _ in 0..1000 {
        let (l, u) = (random_disc(rng, 0.95), random_disc(rng, 0.95));
        let k = kobayashi_distance(&p, l, u);
        exact.flag(k == poincare_distance(l, u));
        let cv = knese_distance_23(l, u).value;
        let ci = inner_distance(&p, l, u).value;
        order.deviation((cv - ci).max(ci - k));
        let t = p.tangent_at(l, c(1.0, 0.0));
        let kappa = kobayashi_metric(&p, &t).expect("tangent");
        metric.deviation(reiffen_metric(&p, l) - kappa);
    }
    let origin = p.tangent_at_origin(c(1.0, 0.0), c(1.0, 0.0)).expect("origin");
    metric.flag(kobayashi_metric(&p, &origin).expect("tangent") == f64::INFINITY);
    vec![exact.finish(), order.finish(), metric.finish()]
}

fn origin_suite(rng: &mut ChaCha8Rng, seed: u64) -> Vec<CheckReport> {
    let config = OracleConfig {
        starts: 16,
        seed,
        ..OracleConfig::default()
    };
    let mut coarse = Tally::new("origin ratio within 0.1 of 1 at scale 1e-2", 0.1);
    let mut fine = Tally::new("origin ratio within 0.05 of 1 at scale 1e-3", 0.05);
    for &(m, n) in &[(2u32, 3u32), (3, 4)] {
        let p = ParabolaParams::new(m, n).expect("admissible");
        for _ in 0..20 {
            let (a, b) = (rng.gen_range(-PI..PI), rng.gen_range(-PI..PI));
            for (scale, tally) in [(1e-2, &mut coarse), (1e-3, &mut fine)] {
                let l = DiscPoint::from_polar(scale, a).expect("inside");
                let u = DiscPoint::from_polar(scale, b).expect("inside");
                let ratio = origin_ratio(&p, l, u, &config).unwrap_or(f64::INFINITY);
                tally.deviation((ratio - 1.0).abs());
            }
        }
    }
    vec![coarse.finish(), fine.finish()]
}

fn ineq_suite(seed: u64) -> Vec<CheckReport> {
    let config = OracleConfig {
        seed,
        ..OracleConfig::default()
    };
    let mut strict = Tally::new("strict points found", 0.0);
    for &(m, n) in &[(2u32, 3u32), (3, 4)] {
        let p = ParabolaParams::new(m, n).expect("admissible");
        strict.flag(
            find_strict_points(&p, &config)
                .map(|s| s.c_value > s.rhs_value + 1e-6)
                .unwrap_or(false),
        );
    }
    let mut origin = Tally::new("gamma(0;(1,1)) on (2,3) equals 1.25", 1e-6);
    let p = neil();
    let g = origin_gamma_lower(&p, c(1.0, 0.0), c(1.0, 0.0), &config)
        .expect("nonzero")
        .value;
    origin.deviation((g - 1.25).abs());
    let mut flagged = Tally::new("oracle exceeds transcribed value with discrepancy flag", 0.0);
    let t = p.tangent_at_origin(c(1.0, 0.0), c(1.0, 0.0)).expect("origin");
    let k = knese_metric_23(&t).expect("(2,3)");
    flagged.flag(k.discrepancy && k.value == 1.0 && g > k.value + 1e-6);
    vec![strict.finish(), origin.finish(), flagged.finish()]
}

fn monotone_suite(rng: &mut ChaCha8Rng) -> Vec<CheckReport> {
    let mut mono = Tally::new("rho(a, b e^{it}) <= rho(a^s, b^s e^{ist})", 1e-12);
    for _ in 0..10_000 {
        let (a, b) = (rng.gen::<f64>(), rng.gen::<f64>());
        let s = 1.0 - rng.gen::<f64>();
        let t = rng.gen_range(-PI..=PI);
        mono.deviation(-power_monotonicity_slack(a, b, s, t));
    }
    let mut chain = Tally::new("c^i >= rho^(2) >= c >= rho(lambda^2, mu^2) on (2,3)", 1e-6);
    let p = neil();
    for _ in 0..20 {
        let (l, u) = (random_disc(rng, 0.9), random_disc(rng, 0.9));
        let r2 = rho_m(2, l, u).value;
        let cv = knese_distance_23(l, u).value;
        let ci = inner_distance(&p, l, u).value;
        let base = rho(l.value() * l.value(), u.value() * u.value());
        chain.deviation((r2 - ci).max(cv - r2).max(base - cv));
        // rho^(2) and c agree on the Neil parabola
        chain.deviation((r2 - cv).abs());
    }
    vec![mono.finish(), chain.finish()]
}

fn cross_suite(rng: &mut ChaCha8Rng) -> Vec<CheckReport> {
    let mut equal = Tally::new("c_V equals k_V exactly", 0.0);
    let mut lempert = Tally::new("c_V <= Lempert, infinite across axes", 0.0);
    let random_point = |rng: &mut ChaCha8Rng| {
        let d = random_disc(rng, 0.95);
        match rng.gen_range(0..5) {
            0 => CrossPoint::Origin,
            1 | 2 => CrossPoint::z_axis(d),
            _ => CrossPoint::w_axis(d),
        }
    };
    for _ in 0..1000 {
        let (p, q) = (random_point(rng), random_point(rng));
        equal.flag(cross_caratheodory(p, q) == cross_kobayashi(p, q));
        let across = matches!(
            (p, q),
            (CrossPoint::ZAxis(_), CrossPoint::WAxis(_)) | (CrossPoint::WAxis(_), CrossPoint::ZAxis(_))
        );
        let kl = cross_lempert(p, q);
        lempert.flag(cross_caratheodory(p, q) <= kl && (kl == f64::INFINITY) == across);
    }
    let mut origin = Tally::new("gamma_V(0;(1,1)) = 2 and kappa_V(0;(1,1)) = inf", 0.0);
    let o = CrossPoint::Origin;
    origin.flag(cross_gamma(o, c(1.0, 0.0), c(1.0, 0.0)) == Ok(2.0));
    origin.flag(cross_kappa(o, c(1.0, 0.0), c(1.0, 0.0)) == Ok(f64::INFINITY));
    vec![equal.finish(), lempert.finish(), origin.finish()]
}
