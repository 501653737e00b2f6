use std::str::FromStr;
use std::time::Instant;

use bstir::bell::{bell_partial, for_each_partition, BellFamily};
use bstir::bernoulli::{
    bernoulli2nd, bernoulli_baseline, eta_neg, generalized_bernoulli, zeta_neg, BernoulliRoute, SecondKindRoute,
};
use bstir::exact::{factorial, from_int, parse_rational, rat, Rational};
use bstir::expansions::{coeff, oracle_series, ExpansionId, FormulaVariant};
use bstir::fps::series_expm1_over_x;
use bstir::hessenberg::{det_elimination, det_recursive_with_stats, HessenbergMatrix};
use bstir::stirling::{stirling1_row, stirling2_row};
use bstir::verify::{verify as run_verify, Fault};
use bstir::Error;

use crate::record::{Field, Kind, Record};
use crate::{Kernel, Sequence};

pub const HESSENBERG_CAP: usize = 200;
pub const FPS_CAP: usize = 512;
pub const BELL_CAP: usize = 40;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub struct Outcome {
    pub records: Vec<Record>,
    pub ok: bool,
    pub summary: String,
}

impl Outcome {
    fn ok(records: Vec<Record>) -> Self {
        Outcome { records, ok: true, summary: String::new() }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses `a..b`, `a..=b` (both inclusive), `n=4` or `4`.
pub fn parse_range(text: Option<&str>, first: usize, max_n: usize) -> Result<(usize, usize), CliError> {
    let Some(text) = text else {
        return Ok((first, max_n.max(first)));
    };
    let bad = || usage(format!("invalid range {text:?}; expected a..b or n=N"));
    let body = match text.split_once('=') {
        Some((name, rest)) if !name.is_empty() && name.chars().all(|c| c.is_ascii_alphabetic()) => rest,
        _ => text,
    };
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match body.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(body)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(usage(format!("empty range {text:?}")));
    }
    if lo < first {
        return Err(usage(format!("range starts below the first index {first}")));
    }
    Ok((lo, hi))
}

fn parse_r(text: Option<&str>) -> Result<Option<Rational>, CliError> {
    text.map(|t| parse_rational(t).map_err(|e| usage(format!("invalid --r: {e}")))).transpose()
}

pub fn tab(
    sequence: Sequence,
    range: Option<&str>,
    max_n: usize,
    route: Option<&str>,
    r: Option<&str>,
) -> Result<Outcome, CliError> {
    let r = parse_r(r)?;
    if r.is_some() && sequence != Sequence::GenBernoulli {
        return Err(usage("--r applies only to gen_bernoulli"));
    }
    if route.is_some() && !matches!(sequence, Sequence::Bernoulli | Sequence::Bernoulli2nd) {
        return Err(usage("--route applies only to bernoulli and bernoulli2nd"));
    }
    let first = if matches!(sequence, Sequence::ZetaNeg | Sequence::EtaNeg) { 1 } else { 0 };
    let (lo, hi) = parse_range(range, first, max_n)?;
    let mut records = Vec::new();
    match sequence {
        Sequence::Bernoulli => {
            let route = route.map(BernoulliRoute::from_str).transpose()?.unwrap_or(BernoulliRoute::Baseline);
            let indices: Vec<usize> = if route == BernoulliRoute::Baseline {
                (lo..=hi).collect()
            } else {
                (lo.max(2)..=hi).filter(|n| n % 2 == 0).collect()
            };
            if indices.is_empty() {
                return Err(usage(format!("route {route} gives B_n only for even n >= 2")));
            }
            for n in indices {
                let value =
                    if route == BernoulliRoute::Baseline { bernoulli_baseline(n) } else { route.even_value(n / 2)? };
                records.push(
                    Record::new(Kind::Sequence, route.provenance())
                        .input("sequence", "bernoulli")
                        .input("route", route.name())
                        .input("n", n)
                        .value("value", value),
                );
            }
        }
        Sequence::Bernoulli2nd => {
            let route = route.map(SecondKindRoute::from_str).transpose()?.unwrap_or(SecondKindRoute::FpsBaseline);
            for n in lo..=hi {
                records.push(
                    Record::new(Kind::Sequence, route.provenance())
                        .input("sequence", "bernoulli2nd")
                        .input("route", route.name())
                        .input("n", n)
                        .value("value", bernoulli2nd(n, route)),
                );
            }
        }
        Sequence::GenBernoulli => {
            let r = r.ok_or_else(|| usage("gen_bernoulli requires --r"))?;
            for n in lo..=hi {
                records.push(
                    Record::new(Kind::Sequence, "bernoulli:generalized-stirling2-kernel")
                        .input("sequence", "gen_bernoulli")
                        .input("r", r.clone())
                        .input("n", n)
                        .value("value", generalized_bernoulli(n, &r)),
                );
            }
        }
        Sequence::Stirling1 | Sequence::Stirling2 => {
            let (name, prov) = if sequence == Sequence::Stirling1 {
                ("stirling1", "stirling:first-kind-recurrence")
            } else {
                ("stirling2", "stirling:second-kind-recurrence")
            };
            for n in lo..=hi {
                let row = if sequence == Sequence::Stirling1 { stirling1_row(n) } else { stirling2_row(n) };
                let row = row.into_iter().map(|v| Field::Rat(from_int(v))).collect();
                records.push(Record::new(Kind::Sequence, prov).input("sequence", name).input("n", n).value("row", Field::List(row)));
            }
        }
        Sequence::ZetaNeg | Sequence::EtaNeg => {
            let (name, prov) = if sequence == Sequence::ZetaNeg {
                ("zeta_neg", "zeta:negative-odd-from-bernoulli")
            } else {
                ("eta_neg", "eta:negative-odd-from-zeta")
            };
            for k in lo..=hi {
                let value = if sequence == Sequence::ZetaNeg { zeta_neg(k)? } else { eta_neg(k)? };
                records.push(Record::new(Kind::Sequence, prov).input("sequence", name).input("k", k).value("value", value));
            }
        }
    }
    Ok(Outcome::ok(records))
}

pub fn expand(
    id: &str,
    range: Option<&str>,
    max_n: usize,
    variant: Option<&str>,
    r: Option<&str>,
) -> Result<Outcome, CliError> {
    let id = ExpansionId::from_str(id)?;
    let variant = variant.map(FormulaVariant::from_str).transpose()?.unwrap_or_else(|| id.default_variant());
    let r = parse_r(r)?;
    let provenance = id.provenance(variant)?;
    let (lo, hi) = parse_range(range, 0, max_n)?;
    // validates the (variant, r) combination before building the oracle
    coeff(id, variant, lo, r.as_ref())?;
    let oracle = oracle_series(id, r.as_ref(), hi)?;
    let mut records = Vec::new();
    let mut mismatches = 0;
    for n in lo..=hi {
        let c = coeff(id, variant, n, r.as_ref())?;
        let o = oracle.coeff(n);
        let pass = c == o;
        if !pass {
            mismatches += 1;
        }
        let mut rec = Record::new(Kind::Coefficient, provenance)
            .input("id", id.name())
            .input("variant", variant.name());
        if let Some(r) = &r {
            rec = rec.input("r", r.clone());
        }
        records.push(
            rec.input("n", n)
                .value("coeff", c.clone())
                .value("egf", c * from_int(factorial(n)))
                .value("oracle", o)
                .value("pass", pass),
        );
    }
    Ok(Outcome {
        records,
        ok: mismatches == 0,
        summary: format!("{mismatches} coefficient(s) disagree with the series oracle"),
    })
}

fn parse_fault(name: &str) -> Result<Fault, CliError> {
    if let Ok(route) = BernoulliRoute::from_str(name) {
        return Ok(Fault::Route(route));
    }
    SecondKindRoute::from_str(name).map(Fault::SecondKind).map_err(|_| usage(format!("unknown route {name:?}")))
}

pub fn verify(max_n: usize, r: &[String], fault: Option<&str>) -> Result<Outcome, CliError> {
    if max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    let r_set = r
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_rational(s.trim()).map_err(|e| usage(format!("invalid --r: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let fault = fault.map(parse_fault).transpose()?;
    let report = run_verify(max_n, &r_set, fault)?;
    let mut records = Vec::new();
    for e in &report.identities.entries {
        let mut rec = Record::new(Kind::Identity, e.id.provenance()).input("check", "identity").input("identity", e.id.name());
        for (k, v) in e.params.iter() {
            rec = rec.input(k, v.clone());
        }
        records.push(rec.value("lhs", e.lhs.clone()).value("rhs", e.rhs.clone()).value("pass", e.pass));
    }
    for c in &report.routes {
        records.push(
            Record::new(Kind::Identity, c.provenance.clone())
                .input("check", "route_agreement")
                .input("sequence", c.sequence)
                .input("route", c.route.clone())
                .input("n", c.index)
                .value("value", c.value.clone())
                .value("expected", c.expected.clone())
                .value("pass", c.pass),
        );
    }
    for t in &report.typos {
        records.push(
            Record::new(Kind::Identity, t.provenance)
                .input("check", "misprint")
                .input("formula", t.name)
                .input("n", t.index)
                .value("expected", t.expected.clone())
                .value("printed", t.printed.clone())
                .value("corrected", t.corrected.clone())
                .value("printed_pass", t.printed_pass())
                .value("corrected_pass", t.corrected_pass())
                .value("correction", t.correction),
        );
    }
    let failed_routes: Vec<&str> = report.failed_routes().map(|c| c.route.as_str()).collect();
    let summary = format!(
        "{} identity failure(s); {} route check failure(s){}",
        report.identities.summary.failed,
        failed_routes.len(),
        failed_routes.first().map(|r| format!(", first in {r}")).unwrap_or_default()
    );
    Ok(Outcome { records, ok: report.all_pass(), summary })
}

fn check_cap(kernel: &str, size: usize, cap: usize) -> Result<(), CliError> {
    if size == 0 || size > cap {
        return Err(usage(format!("{kernel} size must be in 1..={cap}, got {size}")));
    }
    Ok(())
}

pub fn bench(kernel: Kernel, size: usize) -> Result<Outcome, CliError> {
    let record = match kernel {
        Kernel::Hessenberg => {
            check_cap("hessenberg", size, HESSENBERG_CAP)?;
            let m = HessenbergMatrix::from_fn(size, |i, j| match () {
                _ if j == i + 1 => rat(1),
                _ if j > i + 1 => rat(0),
                _ => rat(((i * 7 + j * 3) % 5) as i64 - 2),
            });
            let start = Instant::now();
            let (det, mults) = det_recursive_with_stats(&m);
            let recursive_ns = start.elapsed().as_nanos();
            let start = Instant::now();
            let elim = det_elimination(&m);
            let elimination_ns = start.elapsed().as_nanos();
            Record::new(Kind::Benchmark, "hessenberg:recursive-determinant")
                .input("kernel", "hessenberg")
                .input("size", size)
                .value("wall_time_ns", recursive_ns)
                .value("multiplications", mults)
                .value("elimination_wall_time_ns", elimination_ns)
                .value("agree", det == elim)
        }
        Kernel::Fps => {
            check_cap("fps", size, FPS_CAP)?;
            let f = series_expm1_over_x(size);
            let start = Instant::now();
            let log = f.log()?;
            let back = log.exp()?;
            let root = f.pow(&Rational::new(1.into(), 2.into()))?;
            let elapsed = start.elapsed().as_nanos();
            // log, exp and pow (log + exp) each cost one triangular convolution
            let tri = ((size + 1) * (size + 2) / 2) as u128;
            Record::new(Kind::Benchmark, "fps:series-log-exp-pow")
                .input("kernel", "fps")
                .input("size", size)
                .value("wall_time_ns", elapsed)
                .value("coefficient_products", 4 * tri)
                .value("round_trip", back == f && root.order() == size)
        }
        Kernel::Bell => {
            check_cap("bell", size, BELL_CAP)?;
            let args = BellFamily::Factorials.args(size);
            let start = Instant::now();
            let mut partitions = 0usize;
            for k in 1..=size {
                bell_partial(size, k, &args)?;
                partitions += for_each_partition(size, k, |_| {});
            }
            let elapsed = start.elapsed().as_nanos();
            Record::new(Kind::Benchmark, "bell:partition-enumeration")
                .input("kernel", "bell")
                .input("size", size)
                .value("wall_time_ns", elapsed)
                .value("partitions", partitions)
        }
    };
    Ok(Outcome::ok(vec![record]))
}
