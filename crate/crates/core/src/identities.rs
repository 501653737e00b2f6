//! Registry of standalone combinatorial identities and a batch runner.
//!
//! Each [`IdentityInstance`] evaluates both sides exactly; an entry passes
//! only on exact equality.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::bell::{bell_partial, bell_special, BellArgs, BellFamily};
use crate::error::{Error, Result};
use crate::exact::{
    binomial, binomial_q, double_factorial, factorial, falling_factorial, format_rational, from_int, neg_one_pow,
    pow2, rat, ratio, rising_factorial, Rational,
};
use crate::expansions::{first_kind_power_sum, second_kind_power_sum};
use crate::stirling::{
    diagonal_stirling1, diagonal_stirling2, first_kind_kernel, second_kind_kernel, stirling1, stirling2,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    HelmsOddZero,
    BellZetaOddZero,
    S2SumOddZero,
    DiagS1,
    DiagS2,
    ConnHalf,
    ConnGeneral,
    ConnLog,
    HockeyStick,
    BellScaling,
    BellOnes,
    BellFactorials,
    BellHalves,
    BellRatio,
    FallingRising,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::HelmsOddZero,
        IdentityId::BellZetaOddZero,
        IdentityId::S2SumOddZero,
        IdentityId::DiagS1,
        IdentityId::DiagS2,
        IdentityId::ConnHalf,
        IdentityId::ConnGeneral,
        IdentityId::ConnLog,
        IdentityId::HockeyStick,
        IdentityId::BellScaling,
        IdentityId::BellOnes,
        IdentityId::BellFactorials,
        IdentityId::BellHalves,
        IdentityId::BellRatio,
        IdentityId::FallingRising,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::HelmsOddZero => "helms_odd_zero",
            IdentityId::BellZetaOddZero => "bell_zeta_odd_zero",
            IdentityId::S2SumOddZero => "s2_sum_odd_zero",
            IdentityId::DiagS1 => "diag_s1",
            IdentityId::DiagS2 => "diag_s2",
            IdentityId::ConnHalf => "conn_half",
            IdentityId::ConnGeneral => "conn_general",
            IdentityId::ConnLog => "conn_log",
            IdentityId::HockeyStick => "hockey_stick",
            IdentityId::BellScaling => "bell_scaling",
            IdentityId::BellOnes => "bell_ones",
            IdentityId::BellFactorials => "bell_factorials",
            IdentityId::BellHalves => "bell_halves",
            IdentityId::BellRatio => "bell_ratio",
            IdentityId::FallingRising => "falling_rising",
        }
    }

    /// Formula label carried into reports.
    pub fn provenance(self) -> &'static str {
        match self {
            IdentityId::HelmsOddZero => "identity:odd-eta-weighted-stirling2-sum-vanishes",
            IdentityId::BellZetaOddZero => "identity:odd-bell-weighted-stirling2-sum-vanishes",
            IdentityId::S2SumOddZero => "identity:odd-genbern-stirling2-double-sum-vanishes",
            IdentityId::DiagS1 => "identity:stirling1-diagonal",
            IdentityId::DiagS2 => "identity:stirling2-diagonal",
            IdentityId::ConnHalf => "identity:sqrt-connection-stirling1-stirling2",
            IdentityId::ConnGeneral => "identity:power-connection-exp-side",
            IdentityId::ConnLog => "identity:power-connection-log-side",
            IdentityId::HockeyStick => "identity:hockey-stick",
            IdentityId::BellScaling => "identity:bell-scaling",
            IdentityId::BellOnes => "identity:bell-at-ones",
            IdentityId::BellFactorials => "identity:bell-at-factorials",
            IdentityId::BellHalves => "identity:bell-at-reciprocals",
            IdentityId::BellRatio => "identity:bell-at-factorial-over-next",
            IdentityId::FallingRising => "identity:falling-rising-reflection",
        }
    }

    pub fn uses_r(self) -> bool {
        matches!(self, IdentityId::ConnGeneral | IdentityId::ConnLog)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "identity", name: s.to_string() })
    }
}

/// Named parameters of one identity instance, in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params(Vec<(&'static str, Rational)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn with(mut self, name: &'static str, value: Rational) -> Self {
        self.0.push((name, value));
        self
    }

    pub fn int(self, name: &'static str, value: usize) -> Self {
        self.with(name, rat(value as i64))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Rational)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn get(&self, name: &str) -> Result<&Rational> {
        self.0
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| v)
            .ok_or_else(|| Error::Parameter(format!("missing parameter {name}")))
    }

    /// Parameter as a non-negative integer.
    pub fn index(&self, name: &str) -> Result<usize> {
        let v = self.get(name)?;
        if !v.is_integer() || v < &Rational::zero() {
            return Err(Error::Domain(format!("{name} must be a non-negative integer, got {}", format_rational(v))));
        }
        v.to_integer().try_into().map_err(|_| Error::Domain(format!("{name} is too large")))
    }
}

impl Default for Params {
    fn default() -> Self {
        Self::new()
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}={}", format_rational(v))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityInstance {
    pub id: IdentityId,
    pub params: Params,
}

impl IdentityInstance {
    pub fn new(id: IdentityId, params: Params) -> Self {
        IdentityInstance { id, params }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityEntry {
    pub id: IdentityId,
    pub params: Params,
    pub lhs: Rational,
    pub rhs: Rational,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub entries: Vec<IdentityEntry>,
    pub summary: Summary,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    fn push(&mut self, entry: IdentityEntry) {
        self.summary.total += 1;
        if entry.pass {
            self.summary.passed += 1;
        } else {
            self.summary.failed += 1;
        }
        self.entries.push(entry);
    }
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg.to_string()))
    }
}

/// Signed `(2l-3)!!/(2l)!!` sum that appears on the first-kind side of the
/// square-root connection: equals `-(-1/2)_l / l!` summed against the kernel.
fn half_weighted_first_kind(k: usize) -> Rational {
    let mut inner = Rational::zero();
    for l in 0..=k {
        let w = Rational::new(
            double_factorial(2 * l as i64 - 3).expect("in range"),
            double_factorial(2 * l as i64).expect("in range"),
        );
        inner += w * first_kind_kernel(k, l);
    }
    inner
}

/// Left side of the square-root connection identity.
pub fn conn_half_lhs(n: usize) -> Rational {
    let mut sum = Rational::zero();
    for k in 0..=n {
        sum += binomial_q(2 * k, k as i64) / from_int(pow2(2 * k)) / binomial_q(n + k, k as i64)
            * from_int(second_kind_kernel(n, k));
    }
    sum
}

/// Right side of the square-root connection identity as usually printed
/// (without the leading minus).
pub fn conn_half_rhs_printed(n: usize) -> Rational {
    let mut sum = Rational::zero();
    for k in 0..=n {
        let s = stirling2(n, k as i64);
        if !s.is_zero() {
            sum += from_int(s) * half_weighted_first_kind(k);
        }
    }
    sum
}

/// Fixed argument sequence for the scaling check: `x_i = (-1)^i (i+1)/(2i+1)`.
fn scaling_args(len: usize) -> BellArgs {
    BellArgs::new((1..=len).map(|i| ratio(neg_one_pow(i) * (i as i64 + 1), 2 * i as i64 + 1)).collect())
}

/// `(a, b)` pairs for the scaling check.
pub fn scaling_pairs() -> Vec<(Rational, Rational)> {
    vec![(rat(2), ratio(-1, 3)), (ratio(-3, 2), ratio(5, 7)), (ratio(1, 2), rat(2))]
}

/// Evaluates both sides of one instance.
pub fn check(instance: &IdentityInstance) -> Result<IdentityEntry> {
    let p = &instance.params;
    let (lhs, rhs) = match instance.id {
        IdentityId::HelmsOddZero => {
            let k = p.index("k")?;
            need(k >= 1, "k >= 1")?;
            let n = 2 * k + 1;
            let mut sum = Rational::zero();
            for j in 1..=n {
                sum += from_int(factorial(j - 1) * stirling2(n, j as i64)) / from_int(pow2(j)) * rat(neg_one_pow(j));
            }
            (sum, Rational::zero())
        }
        IdentityId::BellZetaOddZero => {
            let k = p.index("k")?;
            need(k >= 1, "k >= 1")?;
            let mut sum = Rational::zero();
            for l in 1..=2 * k + 1 {
                sum += from_int(binomial(4 * k + 2, (2 * k + l + 1) as i64) * stirling2(2 * k + l + 1, l as i64))
                    / rat(l as i64)
                    * rat(neg_one_pow(l));
            }
            (sum, Rational::zero())
        }
        IdentityId::S2SumOddZero => {
            let n = p.index("n")?;
            need(n >= 1, "n >= 1")?;
            let m = 2 * n + 1;
            let mut sum = Rational::zero();
            for k in 0..=m {
                sum += from_int(factorial(k) * second_kind_kernel(m, k)) / from_int(factorial(m + k));
            }
            (sum, Rational::zero())
        }
        IdentityId::DiagS1 => {
            let (n, r) = (p.index("n")?, p.index("r")?);
            (from_int(stirling1(n + r, r as i64)), diagonal_stirling1(n, r))
        }
        IdentityId::DiagS2 => {
            let (n, r) = (p.index("n")?, p.index("r")?);
            (from_int(stirling2(n + r, r as i64)), diagonal_stirling2(n, r))
        }
        IdentityId::ConnHalf => {
            let n = p.index("n")?;
            (conn_half_lhs(n), -conn_half_rhs_printed(n))
        }
        IdentityId::ConnGeneral => {
            let n = p.index("n")?;
            let r = p.get("r")?;
            let lhs = second_kind_power_sum(n, r);
            let mut rhs = Rational::zero();
            for l in 0..=n {
                let s = stirling2(n, l as i64);
                if !s.is_zero() {
                    rhs += from_int(s) * first_kind_power_sum(l, &-r.clone());
                }
            }
            (lhs, rhs / from_int(factorial(n)))
        }
        IdentityId::ConnLog => {
            let n = p.index("n")?;
            let r = p.get("r")?;
            let lhs = first_kind_power_sum(n, r);
            let mut rhs = Rational::zero();
            for k in 0..=n {
                let s = stirling1(n, k as i64);
                if !s.is_zero() {
                    rhs += from_int(factorial(k) * s) * second_kind_power_sum(k, &-r.clone());
                }
            }
            (lhs, rhs)
        }
        IdentityId::HockeyStick => {
            let (n, m) = (p.index("n")?, p.index("m")?);
            let lhs: Rational = (m..=n).map(|k| binomial_q(k, m as i64)).sum();
            (lhs, binomial_q(n + 1, m as i64 + 1))
        }
        IdentityId::BellScaling => {
            let (n, k) = (p.index("n")?, p.index("k")?);
            need(k <= n, "k <= n")?;
            let (a, b) = (p.get("a")?, p.get("b")?);
            let len = n - k + 1;
            let xs = scaling_args(len);
            let mut b_pow = Rational::one();
            let scaled: Vec<Rational> = (1..=len)
                .map(|i| {
                    b_pow *= b;
                    a * &b_pow * xs.get(i)
                })
                .collect();
            let lhs = bell_partial(n, k, &BellArgs::new(scaled))?;
            let mut factor = Rational::one();
            for _ in 0..k {
                factor *= a;
            }
            for _ in 0..n {
                factor *= b;
            }
            (lhs, factor * bell_partial(n, k, &xs)?)
        }
        IdentityId::BellOnes | IdentityId::BellFactorials | IdentityId::BellHalves | IdentityId::BellRatio => {
            let (n, k) = (p.index("n")?, p.index("k")?);
            need(k <= n, "k <= n")?;
            let family = match instance.id {
                IdentityId::BellOnes => BellFamily::Ones,
                IdentityId::BellFactorials => BellFamily::Factorials,
                IdentityId::BellHalves => BellFamily::Halves,
                _ => BellFamily::FactorialOverNext,
            };
            (bell_partial(n, k, &family.args(n - k + 1))?, bell_special(n, k, family)?)
        }
        IdentityId::FallingRising => {
            let n = p.index("n")?;
            let x = p.get("x")?;
            (rising_factorial(&-x.clone(), n), falling_factorial(x, n) * rat(neg_one_pow(n)))
        }
    };
    let pass = lhs == rhs;
    Ok(IdentityEntry { id: instance.id, params: instance.params.clone(), lhs, rhs, pass })
}

/// Every instance of `id` on the grid bounded by `max_n`, sorted by parameters.
pub fn grid(id: IdentityId, max_n: usize, r_set: &[Rational]) -> Vec<IdentityInstance> {
    let mut params: Vec<Params> = Vec::new();
    match id {
        IdentityId::HelmsOddZero | IdentityId::BellZetaOddZero => {
            params.extend((1..=max_n).map(|k| Params::new().int("k", k)));
        }
        IdentityId::S2SumOddZero => params.extend((1..=max_n).map(|n| Params::new().int("n", n))),
        IdentityId::DiagS1 | IdentityId::DiagS2 => {
            for n in 0..=max_n {
                for r in 0..=max_n {
                    params.push(Params::new().int("n", n).int("r", r));
                }
            }
        }
        IdentityId::ConnHalf => params.extend((0..=max_n).map(|n| Params::new().int("n", n))),
        IdentityId::ConnGeneral | IdentityId::ConnLog => {
            for n in 0..=max_n {
                for r in r_set {
                    params.push(Params::new().int("n", n).with("r", r.clone()));
                }
            }
        }
        IdentityId::HockeyStick => {
            for n in 0..=max_n {
                for m in 0..=max_n {
                    params.push(Params::new().int("n", n).int("m", m));
                }
            }
        }
        IdentityId::BellScaling => {
            for n in 0..=max_n {
                for k in 0..=n {
                    for (a, b) in scaling_pairs() {
                        params.push(Params::new().int("n", n).int("k", k).with("a", a).with("b", b));
                    }
                }
            }
        }
        IdentityId::BellOnes | IdentityId::BellFactorials | IdentityId::BellHalves | IdentityId::BellRatio => {
            for n in 0..=max_n {
                for k in 0..=n {
                    params.push(Params::new().int("n", n).int("k", k));
                }
            }
        }
        IdentityId::FallingRising => {
            let mut xs: Vec<Rational> = vec![rat(-2), ratio(1, 3), rat(3)];
            xs.extend(r_set.iter().cloned());
            xs.sort();
            xs.dedup();
            for n in 0..=max_n {
                for x in &xs {
                    params.push(Params::new().int("n", n).with("x", x.clone()));
                }
            }
        }
    }
    params.sort();
    params.dedup();
    params.into_iter().map(|p| IdentityInstance::new(id, p)).collect()
}

/// Runs every identity over its grid.
pub fn audit(max_n: usize, r_set: &[Rational]) -> IdentityReport {
    let mut report = IdentityReport::default();
    for id in IdentityId::ALL {
        for instance in grid(id, max_n, r_set) {
            let entry = check(&instance).expect("grid instances are in domain");
            report.push(entry);
        }
    }
    report
}
