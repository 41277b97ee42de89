//! Derivative-free minimization: adaptive Nelder-Mead and a seeded multi-start driver.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMeadOptions {
    pub max_evals: usize,
    /// Relative spread of function values across the simplex.
    pub ftol: f64,
    /// Simplex diameter.
    pub xtol: f64,
    pub initial_step: f64,
    /// Fresh simplices built around the best point after convergence.
    pub restarts: usize,
}

impl Default for NelderMeadOptions {
    fn default() -> Self {
        NelderMeadOptions {
            max_evals: 4000,
            ftol: 1e-12,
            xtol: 1e-10,
            initial_step: 0.1,
            restarts: 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub f: f64,
    pub evals: usize,
    pub converged: bool,
}

fn sanitize(v: f64) -> f64 {
    if v.is_nan() {
        f64::INFINITY
    } else {
        v
    }
}

/// Nelder-Mead with dimension-adaptive coefficients. NaN values are treated as `+inf`.
pub fn nelder_mead<F: FnMut(&[f64]) -> f64>(mut f: F, x0: &[f64], opts: NelderMeadOptions) -> Minimum {
    let mut evals = 0usize;
    let mut eval = |x: &[f64], evals: &mut usize| {
        *evals += 1;
        sanitize(f(x))
    };
    let n = x0.len();
    if n == 0 {
        let v = eval(x0, &mut evals);
        return Minimum {
            x: vec![],
            f: v,
            evals,
            converged: true,
        };
    }
    let nf = n as f64;
    let (alpha, beta, gamma, delta) = (1.0, 1.0 + 2.0 / nf, 0.75 - 1.0 / (2.0 * nf), 1.0 - 1.0 / nf);

    let mut best_x = x0.to_vec();
    let mut best_f = eval(x0, &mut evals);
    let mut step = opts.initial_step;
    let mut converged = false;

    for _round in 0..=opts.restarts {
        let mut simplex: Vec<Vec<f64>> = vec![best_x.clone()];
        let mut values = vec![best_f];
        for i in 0..n {
            if evals >= opts.max_evals {
                break;
            }
            let mut v = best_x.clone();
            let h = if v[i] != 0.0 { step * v[i].abs().max(1.0) } else { step };
            v[i] += h;
            values.push(eval(&v, &mut evals));
            simplex.push(v);
        }
        if simplex.len() < n + 1 {
            break;
        }
        let round_start = best_f;
        converged = false;
        let mut order: Vec<usize> = (0..=n).collect();
        loop {
            order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
            let (lo, hi, second) = (order[0], order[n], order[n - 1]);
            let spread = (values[hi] - values[lo]).abs();
            let scale = values[lo].abs() + 1e-300;
            let diameter = simplex
                .iter()
                .map(|v| {
                    v.iter()
                        .zip(&simplex[lo])
                        .map(|(a, b)| (a - b).abs())
                        .fold(0.0, f64::max)
                })
                .fold(0.0, f64::max);
            if (values[lo].is_finite() && spread <= opts.ftol * scale) || diameter <= opts.xtol {
                converged = true;
                break;
            }
            if evals >= opts.max_evals {
                break;
            }
            let mut centroid = vec![0.0; n];
            for &i in &order[..n] {
                for (c, x) in centroid.iter_mut().zip(&simplex[i]) {
                    *c += x / nf;
                }
            }
            let along = |t: f64| -> Vec<f64> {
                centroid
                    .iter()
                    .zip(&simplex[hi])
                    .map(|(c, x)| c + t * (c - x))
                    .collect()
            };
            let xr = along(alpha);
            let fr = eval(&xr, &mut evals);
            if fr < values[lo] {
                let xe = along(alpha * beta);
                let fe = eval(&xe, &mut evals);
                if fe < fr {
                    simplex[hi] = xe;
                    values[hi] = fe;
                } else {
                    simplex[hi] = xr;
                    values[hi] = fr;
                }
            } else if fr < values[second] {
                simplex[hi] = xr;
                values[hi] = fr;
            } else {
                let (xc, fc) = if fr < values[hi] {
                    let xc = along(alpha * gamma);
                    let fc = eval(&xc, &mut evals);
                    (xc, fc)
                } else {
                    let xc = along(-gamma);
                    let fc = eval(&xc, &mut evals);
                    (xc, fc)
                };
                if fc < values[hi].min(fr) {
                    simplex[hi] = xc;
                    values[hi] = fc;
                } else {
                    for &i in &order[1..] {
                        let shrunk: Vec<f64> = simplex[lo]
                            .iter()
                            .zip(&simplex[i])
                            .map(|(b, x)| b + delta * (x - b))
                            .collect();
                        values[i] = eval(&shrunk, &mut evals);
                        simplex[i] = shrunk;
                    }
                }
            }
        }
        let lo = (0..=n)
            .min_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)))
            .unwrap_or(0);
        if values[lo] < best_f {
            best_f = values[lo];
            best_x = simplex[lo].clone();
        }
        if !converged || evals >= opts.max_evals {
            break;
        }
        // Stop restarting once a round no longer improves.
        if (round_start - best_f).abs() <= opts.ftol * (best_f.abs() + 1e-300) {
            break;
        }
        step = (step * 0.1).max(opts.xtol * 10.0);
    }
    Minimum {
        x: best_x,
        f: best_f,
        evals,
        converged,
    }
}

/// Settings for [`multistart`]. Every start gets a short screening run; the
/// best `refine` of them are then continued with the full budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiStartOptions {
    pub starts: usize,
    pub seed: u64,
    pub screen_evals: usize,
    pub refine: usize,
    pub local: NelderMeadOptions,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MultiStartResult {
    pub best: Minimum,
    pub total_evals: u64,
}

/// The random stream for start `index` under `seed`.
pub fn start_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Minimizes `f` from `opts.starts` starting points produced by
/// `start(index, rng)`. The outcome depends only on `(seed, starts)`.
pub fn multistart<F, S>(f: F, start: S, opts: MultiStartOptions) -> MultiStartResult
where
    F: Fn(&[f64]) -> f64,
    S: Fn(usize, &mut ChaCha8Rng) -> Vec<f64>,
{
    let mut total = 0u64;
    let screen = NelderMeadOptions {
        max_evals: opts.screen_evals,
        restarts: 0,
        ..opts.local
    };
    let mut screened: Vec<(usize, Minimum)> = (0..opts.starts.max(1))
        .map(|i| {
            let mut rng = start_rng(opts.seed, i);
            let x0 = start(i, &mut rng);
            let m = nelder_mead(&f, &x0, screen);
            total += m.evals as u64;
            (i, m)
        })
        .collect();
    screened.sort_by(|a, b| a.1.f.total_cmp(&b.1.f).then(a.0.cmp(&b.0)));

    let mut best: Option<Minimum> = None;
    for (_, m) in screened.iter().take(opts.refine.max(1)) {
        let local = NelderMeadOptions {
            initial_step: opts.local.initial_step * 0.5,
            ..opts.local
        };
        let mut r = nelder_mead(&f, &m.x, local);
        total += r.evals as u64;
        if m.f < r.f {
            r.f = m.f;
            r.x = m.x.clone();
        }
        if best.as_ref().is_none_or(|b| r.f < b.f) {
            best = Some(r);
        }
    }
    MultiStartResult {
        best: best.expect("at least one start"),
        total_evals: total,
    }
}

/// Maps `R^2` onto the open unit disc, `u -> tanh(|u|) u/|u|`.
pub fn disc_from_plane(u0: f64, u1: f64) -> num_complex::Complex64 {
    let r = u0.hypot(u1);
    if r == 0.0 {
        return num_complex::Complex64::new(0.0, 0.0);
    }
    num_complex::Complex64::new(u0, u1) * (r.tanh() / r)
}

/// Inverse of [`disc_from_plane`] for points strictly inside the disc.
pub fn plane_from_disc(z: num_complex::Complex64) -> [f64; 2] {
    let r = z.norm();
    if r == 0.0 {
        return [0.0, 0.0];
    }
    let s = r.min(1.0 - 1e-12).atanh() / r;
    [z.re * s, z.im * s]
}
