//! Rendering of results as JSON, CSV or plain text.

use std::io::{self, Write};

use clap::ValueEnum;
use num_complex::Complex64;
use serde_json::{Map, Value};

use neil_core::{Branch, ParabolaParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    /// Plain listing; only `gapset` defaults to it.
    #[value(skip)]
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleInfo {
    pub evaluations: u64,
    pub converged: bool,
    /// `None` for deterministic oracles that take no seed.
    pub seed: Option<u64>,
}

/// One computed value with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub branch: Option<Branch>,
    pub method: &'static str,
    /// `"lower"` or `"upper"` when the value is a one-sided oracle bound.
    pub bound: Option<&'static str>,
    pub closed: Option<f64>,
    pub oracle: Option<f64>,
    pub info: Option<OracleInfo>,
    pub discrepancy: bool,
}

impl Evaluation {
    pub fn closed(value: f64, branch: Option<Branch>) -> Self {
        Evaluation {
            value,
            branch,
            method: "closed",
            bound: None,
            closed: Some(value),
            oracle: None,
            info: None,
            discrepancy: false,
        }
    }

    pub fn oracle(value: f64, branch: Option<Branch>, info: OracleInfo) -> Self {
        Evaluation {
            value,
            branch,
            method: "oracle",
            bound: Some("lower"),
            closed: None,
            oracle: Some(value),
            info: Some(info),
            discrepancy: false,
        }
    }

    /// Closed value (when known) next to the oracle value.
    pub fn both(closed: Option<(f64, Option<Branch>)>, oracle: f64, branch: Option<Branch>, info: OracleInfo) -> Self {
        let (value, branch, bound) = match closed {
            Some((v, b)) => (v, b.or(branch), None),
            None => (oracle, branch, Some("lower")),
        };
        Evaluation {
            value,
            branch,
            method: "both",
            bound,
            closed: closed.map(|c| c.0),
            oracle: Some(oracle),
            info: Some(info),
            discrepancy: false,
        }
    }

    /// Marks the oracle part as an upper bound (curve-length oracles).
    pub fn upper_bound(mut self) -> Self {
        if self.bound.is_some() || self.method == "oracle" {
            self.bound = Some("upper");
        }
        self
    }

    pub fn with_discrepancy(mut self, flag: bool) -> Self {
        self.discrepancy = flag;
        self
    }

    pub fn difference(&self) -> Option<f64> {
        Some(self.closed? - self.oracle?)
    }
}

/// Finite numbers as JSON numbers, the rest as `"inf"`, `"-inf"` or `"nan"`.
pub fn json_number(x: f64) -> Value {
    if x.is_finite() {
        Value::from(x)
    } else {
        Value::String(text_number(x))
    }
}

fn text_number(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

/// Plain decimal with nine significant digits; non-finite values as in JSON.
pub fn sig9(x: f64) -> String {
    if !x.is_finite() {
        return text_number(x);
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.8e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let sign = if x < 0.0 { "-" } else { "" };
    let body = if exp >= 8 {
        format!("{digits}{}", "0".repeat((exp - 8) as usize))
    } else if exp >= 0 {
        let (int, frac) = digits.split_at(exp as usize + 1);
        format!("{int}.{frac}")
    } else {
        format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
    };
    format!("{sign}{body}")
}

fn branch_name(b: Option<Branch>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn evaluation_json(e: &Evaluation) -> Value {
    let mut map = Map::new();
    map.insert("value".into(), json_number(e.value));
    map.insert(
        "branch".into(),
        e.branch.map(|b| Value::String(b.to_string())).unwrap_or(Value::Null),
    );
    map.insert("method".into(), Value::String(e.method.into()));
    if let Some(b) = e.bound {
        map.insert("bound".into(), Value::String(b.into()));
    }
    if e.method == "both" {
        map.insert("closed".into(), e.closed.map(json_number).unwrap_or(Value::Null));
        map.insert("oracle".into(), e.oracle.map(json_number).unwrap_or(Value::Null));
        map.insert(
            "difference".into(),
            e.difference().map(json_number).unwrap_or(Value::Null),
        );
    }
    if let Some(info) = e.info {
        map.insert("evaluations".into(), Value::from(info.evaluations));
        map.insert("converged".into(), Value::Bool(info.converged));
        map.insert("seed".into(), info.seed.map(Value::from).unwrap_or(Value::Null));
    }
    if e.discrepancy {
        map.insert("discrepancy".into(), Value::Bool(true));
    }
    Value::Object(map)
}

pub fn write_evaluation(out: &mut dyn Write, e: &Evaluation, format: Format) -> io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", evaluation_json(e)),
        Format::Text => writeln!(out, "{} {}", sig9(e.value), branch_name(e.branch)),
        Format::Csv => {
            let opt = |x: Option<f64>| x.map(sig9).unwrap_or_default();
            let info = e.info;
            let mut w = csv_writer(out);
            w.write_record([
                "value",
                "branch",
                "method",
                "bound",
                "closed",
                "oracle",
                "difference",
                "evaluations",
                "converged",
                "seed",
                "discrepancy",
            ])?;
            w.write_record([
                sig9(e.value),
                branch_name(e.branch),
                e.method.to_string(),
                e.bound.unwrap_or_default().to_string(),
                if e.method == "both" {
                    opt(e.closed)
                } else {
                    String::new()
                },
                if e.method == "both" {
                    opt(e.oracle)
                } else {
                    String::new()
                },
                opt(e.difference()),
                info.map(|i| i.evaluations.to_string()).unwrap_or_default(),
                info.map(|i| i.converged.to_string()).unwrap_or_default(),
                info.and_then(|i| i.seed).map(|s| s.to_string()).unwrap_or_default(),
                e.discrepancy.to_string(),
            ])?;
            w.flush()
        }
    }
}

/// One point of a `table` grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub lambda: Complex64,
    pub value: f64,
    pub branch: Option<Branch>,
}

pub fn write_table(out: &mut dyn Write, rows: &[Row], format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            let arr: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut map = Map::new();
                    map.insert("lambda_re".into(), json_number(r.lambda.re));
                    map.insert("lambda_im".into(), json_number(r.lambda.im));
                    map.insert("value".into(), json_number(r.value));
                    map.insert(
                        "branch".into(),
                        r.branch.map(|b| Value::String(b.to_string())).unwrap_or(Value::Null),
                    );
                    Value::Object(map)
                })
                .collect();
            writeln!(out, "{}", Value::Array(arr))
        }
        Format::Csv | Format::Text => {
            let mut w = csv_writer(out);
            w.write_record(["lambda_re", "lambda_im", "value", "branch"])?;
            for r in rows {
                w.write_record([
                    sig9(r.lambda.re),
                    sig9(r.lambda.im),
                    sig9(r.value),
                    branch_name(r.branch),
                ])?;
            }
            w.flush()
        }
    }
}

pub fn write_gapset(out: &mut dyn Write, params: &ParabolaParams, format: Format) -> io::Result<()> {
    let gaps = params.gap_set();
    match format {
        Format::Text => {
            let frob = params
                .frobenius()
                .map(|f| f.to_string())
                .unwrap_or_else(|| "none".into());
            let list: Vec<String> = gaps.iter().map(|g| g.to_string()).collect();
            if list.is_empty() {
                writeln!(out, "(frobenius {frob})")
            } else {
                writeln!(out, "{} (frobenius {frob})", list.join(" "))
            }
        }
        Format::Json => {
            let mut map = Map::new();
            map.insert("m".into(), Value::from(params.m()));
            map.insert("n".into(), Value::from(params.n()));
            map.insert("gaps".into(), Value::from(gaps.to_vec()));
            map.insert(
                "frobenius".into(),
                params.frobenius().map(Value::from).unwrap_or(Value::Null),
            );
            writeln!(out, "{}", Value::Object(map))
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["gap"])?;
            for g in gaps {
                w.write_record([g.to_string()])?;
            }
            w.flush()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(sig9(0.25131442828), "0.251314428");
        assert_eq!(sig9(-1.5), "-1.50000000");
        assert_eq!(sig9(123456789.4), "123456789");
        assert_eq!(sig9(1.0e10), "10000000000");
        assert_eq!(sig9(0.000123), "0.000123000000");
        assert_eq!(sig9(0.0), "0");
        assert_eq!(sig9(f64::INFINITY), "inf");
        assert_eq!(sig9(9.9999999999), "10.0000000");
    }

    #[test]
    fn non_finite_json() {
        assert_eq!(json_number(f64::INFINITY), Value::String("inf".into()));
        assert_eq!(json_number(2.0), Value::from(2.0));
    }

    #[test]
    fn both_reports_difference() {
        let info = OracleInfo {
            evaluations: 10,
            converged: true,
            seed: Some(7),
        };
        let e = Evaluation::both(Some((1.0, None)), 0.75, None, info);
        assert_eq!(e.difference(), Some(0.25));
        let v = evaluation_json(&e);
        assert_eq!(v["difference"], Value::from(0.25));
        assert_eq!(v["seed"], Value::from(7u64));
    }
}
