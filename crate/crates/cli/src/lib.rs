//! Argument parsing and dispatch for the `neil` command-line tool.

mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use neil_core::closed_forms::{
    gamma34_origin, inner_distance, knese_distance_23, knese_metric_23, kobayashi_distance, kobayashi_metric,
    opposite_points_2odd, reiffen_metric,
};
use neil_core::cross::{cross_caratheodory, cross_gamma, cross_kappa, cross_kobayashi, cross_lempert, CrossPoint};
use neil_core::disc::poincare_distance;
use neil_core::schur::{caratheodory_lower, inner_length_oracle, origin_gamma_lower, reiffen_lower, OracleConfig};
use neil_core::verify::{run_suites, Suite};
use neil_core::{Branch, DiscPoint, Error, ParabolaParams, Tangent};

pub use output::Format;
use output::{Evaluation, OracleInfo, Row};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableQuantity {
    Dist,
    Inner,
    Kobayashi,
    Metric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CrossQuantity {
    Caratheodory,
    Lempert,
    Kobayashi,
    Gamma,
    Kappa,
}

/// Validated request for one subcommand.
#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Dist {
        params: ParabolaParams,
        lambda: DiscPoint,
        mu: DiscPoint,
    },
    Inner {
        params: ParabolaParams,
        lambda: DiscPoint,
        mu: DiscPoint,
    },
    Metric {
        params: ParabolaParams,
        lambda: DiscPoint,
        scale: Complex64,
    },
    Gamma0 {
        params: ParabolaParams,
        x1: Complex64,
        x2: Complex64,
    },
    KobayashiDistance {
        params: ParabolaParams,
        lambda: DiscPoint,
        mu: DiscPoint,
    },
    KobayashiMetric {
        params: ParabolaParams,
        tangent: Tangent,
    },
    Gapset {
        params: ParabolaParams,
    },
    Cross {
        quantity: CrossQuantity,
        p: CrossPoint,
        q: CrossPoint,
        x1: Complex64,
        x2: Complex64,
    },
    Table {
        params: ParabolaParams,
        quantity: TableQuantity,
        mu: DiscPoint,
        grid: usize,
    },
    Verify {
        suites: Vec<Suite>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub command: Command,
    pub method: Method,
    pub format: Format,
    pub oracle: OracleConfig,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Parser, Debug)]
#[command(
    name = "neil",
    version,
    about = "Invariant distances and metrics on the parabolas z^m = w^n"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Caratheodory distance between p(lambda) and p(mu)
    Dist(PairArgs),
    /// Inner Caratheodory distance with its branch
    Inner(PairArgs),
    /// Caratheodory-Reiffen metric at p(lambda) along scale * p'(lambda)
    Metric(MetricArgs),
    /// Caratheodory-Reiffen metric at the origin
    Gamma0(Gamma0Args),
    /// Kobayashi distance (with --mu) or Kobayashi-Royden metric (with --x1/--x2)
    Kobayashi(KobayashiArgs),
    /// Gap set and Frobenius number of the semigroup generated by m and n
    Gapset(GapsetArgs),
    /// Distances and metrics on the coordinate cross zw = 0
    Cross(CrossArgs),
    /// Grid of values over lambda with mu fixed
    Table(TableArgs),
    /// Run verification suites
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct ParamArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, value_enum, default_value = "closed")]
    method: Method,
    /// Truncation degree of the polynomial search
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, default_value_t = 64)]
    starts: usize,
    /// Random seed; NEIL_SEED overrides it
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct FormatArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[command(flatten)]
    oracle: OracleArgs,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args, Debug)]
struct MetricArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true, default_value = "1,0")]
    scale: String,
    #[command(flatten)]
    oracle: OracleArgs,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args, Debug)]
struct Gamma0Args {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, allow_hyphen_values = true)]
    x1: String,
    #[arg(long, allow_hyphen_values = true)]
    x2: String,
    #[command(flatten)]
    oracle: OracleArgs,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args, Debug)]
struct KobayashiArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, allow_hyphen_values = true, default_value = "0,0")]
    lambda: String,
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["x1", "x2"])]
    mu: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "x2")]
    x1: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "x1")]
    x2: Option<String>,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args, Debug)]
struct GapsetArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args, Debug)]
struct CrossArgs {
    #[arg(long, value_enum, default_value = "caratheodory")]
    quantity: CrossQuantity,
    /// "z:RE,IM", "w:RE,IM" or "origin"
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value = "0,0")]
    x1: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0,0")]
    x2: String,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_enum, default_value = "dist")]
    quantity: TableQuantity,
    #[arg(long, allow_hyphen_values = true, default_value = "0,0")]
    mu: String,
    #[arg(long, default_value_t = 21)]
    grid: usize,
    #[command(flatten)]
    oracle: OracleArgs,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name or "all"
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// Parses `"re,im"` or a bare real number.
pub fn parse_complex(s: &str) -> Result<Complex64, UsageError> {
    let bad = || usage(format!("invalid complex number '{s}', expected RE,IM"));
    let mut parts = s.split(',');
    let re = parts.next().ok_or_else(bad)?.trim().parse::<f64>().map_err(|_| bad())?;
    let im = match parts.next() {
        Some(p) => p.trim().parse::<f64>().map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() || !re.is_finite() || !im.is_finite() {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

fn parse_disc(flag: &str, s: &str) -> Result<DiscPoint, UsageError> {
    let z = parse_complex(s)?;
    DiscPoint::new(z).map_err(|e| usage(format!("--{flag}: {e}")))
}

fn parse_params(p: &ParamArgs) -> Result<ParabolaParams, UsageError> {
    ParabolaParams::new(p.m, p.n).map_err(|e| usage(e.to_string()))
}

/// Parses `"z:RE,IM"`, `"w:RE,IM"` or `"origin"`.
pub fn parse_cross_point(s: &str) -> Result<CrossPoint, UsageError> {
    if s == "origin" {
        return Ok(CrossPoint::Origin);
    }
    let (axis, rest) = s.split_once(':').ok_or_else(|| {
        usage(format!(
            "invalid cross point '{s}', expected z:RE,IM, w:RE,IM or origin"
        ))
    })?;
    let d = parse_disc("p", rest)?;
    match axis {
        "z" => Ok(CrossPoint::z_axis(d)),
        "w" => Ok(CrossPoint::w_axis(d)),
        _ => Err(usage(format!("unknown axis '{axis}'"))),
    }
}

fn oracle_config(o: &OracleArgs, env_seed: Option<u64>) -> Result<OracleConfig, UsageError> {
    if o.starts == 0 {
        return Err(usage("--starts must be positive"));
    }
    if o.degree == Some(0) {
        return Err(usage("--degree must be positive"));
    }
    Ok(OracleConfig {
        degree: o.degree,
        starts: o.starts,
        seed: env_seed.unwrap_or(o.seed),
        ..OracleConfig::default()
    })
}

fn env_seed() -> Result<Option<u64>, UsageError> {
    match std::env::var("NEIL_SEED") {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| usage(format!("NEIL_SEED='{v}' is not an unsigned 64-bit integer"))),
        Err(_) => Ok(None),
    }
}

/// Parses `argv` (without the program name) into a validated configuration.
pub fn parse_args<I, T>(argv: I) -> Result<CliConfig, UsageError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = env_seed()?;
    let args = std::iter::once(OsString::from("neil")).chain(argv.into_iter().map(Into::into));
    let cli = Cli::try_parse_from(args).map_err(|e| usage(e.render().to_string()))?;
    let default_oracle = OracleConfig {
        seed: env.unwrap_or(0),
        ..OracleConfig::default()
    };
    let json = |f: &FormatArgs| f.format.unwrap_or(Format::Json);
    let config = match cli.command {
        Sub::Dist(a) => CliConfig {
            command: Command::Dist {
                params: parse_params(&a.params)?,
                lambda: parse_disc("lambda", &a.lambda)?,
                mu: parse_disc("mu", &a.mu)?,
            },
            method: a.oracle.method,
            format: json(&a.format),
            oracle: oracle_config(&a.oracle, env)?,
        },
        Sub::Inner(a) => CliConfig {
            command: Command::Inner {
                params: parse_params(&a.params)?,
                lambda: parse_disc("lambda", &a.lambda)?,
                mu: parse_disc("mu", &a.mu)?,
            },
            method: a.oracle.method,
            format: json(&a.format),
            oracle: oracle_config(&a.oracle, env)?,
        },
        Sub::Metric(a) => CliConfig {
            command: Command::Metric {
                params: parse_params(&a.params)?,
                lambda: parse_disc("lambda", &a.lambda)?,
                scale: parse_complex(&a.scale)?,
            },
            method: a.oracle.method,
            format: json(&a.format),
            oracle: oracle_config(&a.oracle, env)?,
        },
        Sub::Gamma0(a) => {
            let params = parse_params(&a.params)?;
            let (x1, x2) = (parse_complex(&a.x1)?, parse_complex(&a.x2)?);
            params.tangent_at_origin(x1, x2).map_err(|e| usage(e.to_string()))?;
            if x1.norm() == 0.0 && x2.norm() == 0.0 {
                return Err(usage("tangent vector must be nonzero"));
            }
            CliConfig {
                command: Command::Gamma0 { params, x1, x2 },
                method: a.oracle.method,
                format: json(&a.format),
                oracle: oracle_config(&a.oracle, env)?,
            }
        }
        Sub::Kobayashi(a) => {
            let params = parse_params(&a.params)?;
            let lambda = parse_disc("lambda", &a.lambda)?;
            let command = match (&a.mu, &a.x1, &a.x2) {
                (Some(mu), _, _) => Command::KobayashiDistance {
                    params,
                    lambda,
                    mu: parse_disc("mu", mu)?,
                },
                (None, Some(x1), Some(x2)) => {
                    let tangent = Tangent::new(params.parametrize(lambda), parse_complex(x1)?, parse_complex(x2)?)
                        .map_err(|e| usage(e.to_string()))?;
                    Command::KobayashiMetric { params, tangent }
                }
                _ => return Err(usage("kobayashi needs --mu or both --x1 and --x2")),
            };
            CliConfig {
                command,
                method: Method::Closed,
                format: json(&a.format),
                oracle: default_oracle,
            }
        }
        Sub::Gapset(a) => CliConfig {
            command: Command::Gapset {
                params: parse_params(&a.params)?,
            },
            method: Method::Closed,
            format: a.format.format.unwrap_or(Format::Text),
            oracle: default_oracle,
        },
        Sub::Cross(a) => {
            let p = parse_cross_point(&a.p)?;
            let (x1, x2) = (parse_complex(&a.x1)?, parse_complex(&a.x2)?);
            let needs_q = matches!(
                a.quantity,
                CrossQuantity::Caratheodory | CrossQuantity::Lempert | CrossQuantity::Kobayashi
            );
            let q = match (&a.q, needs_q) {
                (Some(q), true) => parse_cross_point(q)?,
                (None, true) => return Err(usage("--q is required for cross distances")),
                (_, false) => CrossPoint::Origin,
            };
            CliConfig {
                command: Command::Cross {
                    quantity: a.quantity,
                    p,
                    q,
                    x1,
                    x2,
                },
                method: Method::Closed,
                format: json(&a.format),
                oracle: default_oracle,
            }
        }
        Sub::Table(a) => {
            if a.grid < 2 || a.grid > 2001 {
                return Err(usage("--grid must lie in 2..=2001"));
            }
            CliConfig {
                command: Command::Table {
                    params: parse_params(&a.params)?,
                    quantity: a.quantity,
                    mu: parse_disc("mu", &a.mu)?,
                    grid: a.grid,
                },
                method: a.oracle.method,
                format: a.format.format.unwrap_or(Format::Csv),
                oracle: oracle_config(&a.oracle, env)?,
            }
        }
        Sub::Verify(a) => {
            let suites = if a.suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![a.suite.parse::<Suite>().map_err(usage)?]
            };
            CliConfig {
                command: Command::Verify { suites },
                method: Method::Closed,
                format: Format::Json,
                oracle: OracleConfig {
                    seed: env.unwrap_or(a.seed),
                    ..OracleConfig::default()
                },
            }
        }
    };
    Ok(config)
}

/// Caratheodory distance from a closed form, when one is known.
fn closed_dist(params: &ParabolaParams, lambda: DiscPoint, mu: DiscPoint) -> Option<(f64, Option<Branch>)> {
    let (m, n) = (params.m(), params.n());
    if m == 1 {
        return Some((poincare_distance(lambda, mu), None));
    }
    if (m, n) == (2, 3) {
        let v = knese_distance_23(lambda, mu);
        return Some((v.value, Some(v.branch)));
    }
    if m == 2 && mu.value() == -lambda.value() {
        let d = opposite_points_2odd((n - 1) / 2, lambda).ok()?;
        return Some((d.atanh(), None));
    }
    None
}

fn oracle_info(config: &OracleConfig, evaluations: u64, converged: bool) -> OracleInfo {
    OracleInfo {
        evaluations,
        converged,
        seed: Some(config.seed),
    }
}

type Computed = Result<Evaluation, Error>;

fn evaluate_dist(
    params: &ParabolaParams,
    lambda: DiscPoint,
    mu: DiscPoint,
    method: Method,
    config: &OracleConfig,
) -> Computed {
    let closed = closed_dist(params, lambda, mu);
    let oracle = || caratheodory_lower(params, lambda, mu, config);
    Ok(match (method, closed) {
        (Method::Closed, Some((v, b))) => Evaluation::closed(v, b),
        (Method::Closed | Method::Oracle, None) | (Method::Oracle, Some(_)) => {
            let r = oracle();
            Evaluation::oracle(r.value, None, oracle_info(config, r.evaluations, r.converged))
        }
        (Method::Both, c) => {
            let r = oracle();
            Evaluation::both(c, r.value, None, oracle_info(config, r.evaluations, r.converged))
        }
    })
}

fn evaluate_inner(params: &ParabolaParams, lambda: DiscPoint, mu: DiscPoint, method: Method) -> Computed {
    let closed = inner_distance(params, lambda, mu);
    let info = |r: &neil_core::schur::OracleResult| OracleInfo {
        evaluations: r.evaluations,
        converged: r.converged,
        seed: None,
    };
    Ok(match method {
        Method::Closed => Evaluation::closed(closed.value, Some(closed.branch)),
        Method::Oracle => {
            let r = inner_length_oracle(params, lambda, mu)?;
            Evaluation::oracle(r.value, Some(closed.branch), info(&r)).upper_bound()
        }
        Method::Both => {
            let r = inner_length_oracle(params, lambda, mu)?;
            Evaluation::both(
                Some((closed.value, Some(closed.branch))),
                r.value,
                Some(closed.branch),
                info(&r),
            )
            .upper_bound()
        }
    })
}

fn evaluate_metric(
    params: &ParabolaParams,
    lambda: DiscPoint,
    scale: Complex64,
    method: Method,
    config: &OracleConfig,
) -> Computed {
    let closed = scale.norm() * reiffen_metric(params, lambda);
    let oracle = || {
        let r = reiffen_lower(params, lambda, config);
        (scale.norm() * r.value, oracle_info(config, r.evaluations, r.converged))
    };
    Ok(match method {
        Method::Closed => Evaluation::closed(closed, None),
        Method::Oracle => {
            let (v, info) = oracle();
            Evaluation::oracle(v, None, info)
        }
        Method::Both => {
            let (v, info) = oracle();
            Evaluation::both(Some((closed, None)), v, None, info)
        }
    })
}

fn evaluate_gamma0(
    params: &ParabolaParams,
    x1: Complex64,
    x2: Complex64,
    method: Method,
    config: &OracleConfig,
) -> Computed {
    let closed = match (params.m(), params.n()) {
        (2, 3) => {
            let t = params.tangent_at_origin(x1, x2)?;
            Some(knese_metric_23(&t)?)
        }
        (3, 4) => Some(gamma34_origin(x1, x2)?),
        _ => None,
    };
    let oracle = || -> Result<(f64, OracleInfo), Error> {
        let r = origin_gamma_lower(params, x1, x2, config)?;
        Ok((r.value, oracle_info(config, r.evaluations, r.converged)))
    };
    Ok(match (method, closed) {
        (Method::Closed, Some(b)) => Evaluation::closed(b.value, Some(b.branch)).with_discrepancy(b.discrepancy),
        (Method::Closed | Method::Oracle, None) | (Method::Oracle, Some(_)) => {
            let (v, info) = oracle()?;
            Evaluation::oracle(v, None, info)
        }
        (Method::Both, c) => {
            let (v, info) = oracle()?;
            let discrepancy = c.map(|b| b.discrepancy).unwrap_or(false);
            Evaluation::both(c.map(|b| (b.value, Some(b.branch))), v, None, info).with_discrepancy(discrepancy)
        }
    })
}

fn table_value(
    params: &ParabolaParams,
    quantity: TableQuantity,
    lambda: DiscPoint,
    mu: DiscPoint,
    method: Method,
    config: &OracleConfig,
) -> Computed {
    match quantity {
        TableQuantity::Dist => evaluate_dist(params, lambda, mu, method, config),
        TableQuantity::Inner => evaluate_inner(params, lambda, mu, method),
        TableQuantity::Kobayashi => Ok(Evaluation::closed(kobayashi_distance(params, lambda, mu), None)),
        TableQuantity::Metric => evaluate_metric(params, lambda, Complex64::new(1.0, 0.0), method, config),
    }
}

/// Radius of the disc covered by `table`.
pub const TABLE_RADIUS: f64 = 0.95;

fn table_rows(
    params: &ParabolaParams,
    quantity: TableQuantity,
    mu: DiscPoint,
    grid: usize,
    method: Method,
    config: &OracleConfig,
) -> Result<Vec<Row>, Error> {
    let mut rows = Vec::with_capacity(grid * grid);
    let step = 2.0 * TABLE_RADIUS / (grid - 1) as f64;
    for i in 0..grid {
        let im = -TABLE_RADIUS + step * i as f64;
        for j in 0..grid {
            let re = -TABLE_RADIUS + step * j as f64;
            if re.hypot(im) > TABLE_RADIUS * (1.0 + 1e-12) {
                continue;
            }
            let lambda = DiscPoint::from_re_im(re, im)?;
            let e = table_value(params, quantity, lambda, mu, method, config)?;
            rows.push(Row {
                lambda: lambda.value(),
                value: e.value,
                branch: e.branch,
            });
        }
    }
    Ok(rows)
}

fn compute(config: &CliConfig, out: &mut dyn Write) -> Result<i32, Box<dyn std::error::Error>> {
    let (method, oc, format) = (config.method, &config.oracle, config.format);
    let emit = |e: Evaluation, out: &mut dyn Write| output::write_evaluation(out, &e, format);
    match &config.command {
        Command::Dist { params, lambda, mu } => emit(evaluate_dist(params, *lambda, *mu, method, oc)?, out)?,
        Command::Inner { params, lambda, mu } => emit(evaluate_inner(params, *lambda, *mu, method)?, out)?,
        Command::Metric { params, lambda, scale } => emit(evaluate_metric(params, *lambda, *scale, method, oc)?, out)?,
        Command::Gamma0 { params, x1, x2 } => emit(evaluate_gamma0(params, *x1, *x2, method, oc)?, out)?,
        Command::KobayashiDistance { params, lambda, mu } => {
            emit(Evaluation::closed(kobayashi_distance(params, *lambda, *mu), None), out)?
        }
        Command::KobayashiMetric { params, tangent } => {
            emit(Evaluation::closed(kobayashi_metric(params, tangent)?, None), out)?
        }
        Command::Gapset { params } => output::write_gapset(out, params, format)?,
        Command::Cross { quantity, p, q, x1, x2 } => {
            let v = match quantity {
                CrossQuantity::Caratheodory => cross_caratheodory(*p, *q),
                CrossQuantity::Lempert => cross_lempert(*p, *q),
                CrossQuantity::Kobayashi => cross_kobayashi(*p, *q),
                CrossQuantity::Gamma => cross_gamma(*p, *x1, *x2)?,
                CrossQuantity::Kappa => cross_kappa(*p, *x1, *x2)?,
            };
            emit(Evaluation::closed(v, None), out)?
        }
        Command::Table {
            params,
            quantity,
            mu,
            grid,
        } => {
            let rows = table_rows(params, *quantity, *mu, *grid, method, oc)?;
            output::write_table(out, &rows, format)?
        }
        Command::Verify { suites } => {
            let report = run_suites(suites, oc.seed);
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            return Ok(if report.passed { EXIT_OK } else { EXIT_VERIFY });
        }
    }
    Ok(EXIT_OK)
}

/// Executes a parsed configuration, writing results to `out` and diagnostics
/// to stderr. Returns the process exit code.
pub fn run(config: &CliConfig, out: &mut dyn Write) -> i32 {
    match compute(config, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("neil: {e}");
            EXIT_COMPUTE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_dist() {
        let c = parse_args(["dist", "--m", "2", "--n", "3", "--lambda", "0.5,0", "--mu", "-0.5,0"]).unwrap();
        assert_eq!(c.method, Method::Closed);
        assert_eq!(c.format, Format::Json);
        match c.command {
            Command::Dist { params, lambda, mu } => {
                assert_eq!((params.m(), params.n()), (2, 3));
                assert_eq!(lambda.value(), Complex64::new(0.5, 0.0));
                assert_eq!(mu.value(), Complex64::new(-0.5, 0.0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parses_gapset() {
        let c = parse_args(["gapset", "--m", "3", "--n", "4"]).unwrap();
        assert!(matches!(c.command, Command::Gapset { .. }));
        assert_eq!(c.format, Format::Text);
    }

    #[test]
    fn rejects_non_coprime_and_bad_values() {
        let e = parse_args(["dist", "--m", "2", "--n", "4", "--lambda", "0", "--mu", "0"]).unwrap_err();
        assert!(e.0.contains("not relatively prime"));
        assert!(parse_args(["table", "--m", "2", "--n", "3", "--grid", "1"]).is_err());
        assert!(parse_args(["dist", "--m", "2", "--n", "3", "--lambda", "0", "--mu", "0", "--starts", "0"]).is_err());
        assert!(parse_args(["gamma0", "--m", "2", "--n", "3", "--x1", "0", "--x2", "0"]).is_err());
    }

    #[test]
    fn complex_syntax() {
        assert_eq!(parse_complex("0.5,-0.25").unwrap(), Complex64::new(0.5, -0.25));
        assert_eq!(parse_complex("-1").unwrap(), Complex64::new(-1.0, 0.0));
        assert!(parse_complex("1,2,3").is_err());
        assert!(parse_complex("inf").is_err());
        assert_eq!(
            parse_cross_point("w:0,0.5").unwrap(),
            CrossPoint::w_axis(DiscPoint::from_re_im(0.0, 0.5).unwrap())
        );
        assert!(parse_cross_point("x:0.1").is_err());
    }
}
