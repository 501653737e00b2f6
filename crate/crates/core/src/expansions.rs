//! Maclaurin coefficients of logarithms and real powers of the Bernoulli and
//! Stirling generating functions.
//!
//! Every [`coeff`] returns the ordinary coefficient `c_n` of `x^n`; formulas
//! stated for `x^n/n!` are divided by `n!` here. [`oracle_coeff`] builds the
//! same function from [`PowerSeries`] primitives alone.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::bernoulli::{bernoulli_baseline, eta_neg, zeta_neg};
use crate::error::{Error, Result};
use crate::exact::{binomial_q, double_factorial, factorial, from_int, neg_one_pow, pow2, rat, ratio, rising_factorial, Rational};
use crate::fps::PowerSeries;
use crate::stirling::{first_kind_kernel, second_kind_kernel, stirling1, stirling2};

/// The expanded functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExpansionId {
    /// `log((e^x + 1)/2)`
    LogExpPlus1Half,
    /// `log((e^x - 1)/x)`
    LogExpm1OverX,
    /// `log cosh x`
    LogCosh,
    /// `log(sinh x / x)`
    LogSinhOverX,
    /// `log cos x`
    LogCos,
    /// `sqrt(log(1 + x)/x)`
    SqrtLog1pOverX,
    /// `(log(1 + x)/x)^r`
    Log1pOverXPowR,
    /// `sqrt(x/(e^x - 1))`
    SqrtXOverExpm1,
    /// `((e^x - 1)/x)^r`
    Expm1OverXPowR,
}

/// Which closed form of an expansion to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaVariant {
    Eta,
    Zeta,
    Bernoulli,
    Stirling1,
    Stirling2,
    /// Nested sums over both Stirling kinds.
    Mixed,
}

impl ExpansionId {
    pub const ALL: [ExpansionId; 9] = [
        ExpansionId::LogExpPlus1Half,
        ExpansionId::LogExpm1OverX,
        ExpansionId::LogCosh,
        ExpansionId::LogSinhOverX,
        ExpansionId::LogCos,
        ExpansionId::SqrtLog1pOverX,
        ExpansionId::Log1pOverXPowR,
        ExpansionId::SqrtXOverExpm1,
        ExpansionId::Expm1OverXPowR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExpansionId::LogExpPlus1Half => "log_exp_plus1_half",
            ExpansionId::LogExpm1OverX => "log_expm1_over_x",
            ExpansionId::LogCosh => "log_cosh",
            ExpansionId::LogSinhOverX => "log_sinh_over_x",
            ExpansionId::LogCos => "log_cos",
            ExpansionId::SqrtLog1pOverX => "sqrt_log1p_over_x",
            ExpansionId::Log1pOverXPowR => "log1p_over_x_pow_r",
            ExpansionId::SqrtXOverExpm1 => "sqrt_x_over_expm1",
            ExpansionId::Expm1OverXPowR => "expm1_over_x_pow_r",
        }
    }

    pub fn takes_r(self) -> bool {
        matches!(self, ExpansionId::Log1pOverXPowR | ExpansionId::Expm1OverXPowR)
    }

    /// Closed forms available for this function; the first is the default.
    pub fn variants(self) -> &'static [FormulaVariant] {
        use FormulaVariant::*;
        match self {
            ExpansionId::LogExpPlus1Half => &[Eta, Bernoulli, Stirling2],
            ExpansionId::LogExpm1OverX => &[Zeta, Bernoulli, Stirling2],
            ExpansionId::LogCosh | ExpansionId::LogSinhOverX | ExpansionId::LogCos => &[Bernoulli],
            ExpansionId::SqrtLog1pOverX => &[Stirling1],
            ExpansionId::Log1pOverXPowR => &[Stirling1, Mixed],
            ExpansionId::SqrtXOverExpm1 | ExpansionId::Expm1OverXPowR => &[Stirling2, Mixed],
        }
    }

    pub fn default_variant(self) -> FormulaVariant {
        self.variants()[0]
    }

    /// Formula label attached to emitted coefficients.
    pub fn provenance(self, variant: FormulaVariant) -> Result<&'static str> {
        use ExpansionId::*;
        use FormulaVariant::*;
        Ok(match (self, variant) {
            (LogExpPlus1Half, Eta) => "expansion:log-exp-plus1-half/eta",
            (LogExpPlus1Half, Bernoulli) => "expansion:log-exp-plus1-half/bernoulli",
            (LogExpPlus1Half, Stirling2) => "expansion:log-exp-plus1-half/stirling2",
            (LogExpm1OverX, Zeta) => "expansion:log-expm1-over-x/zeta",
            (LogExpm1OverX, Bernoulli) => "expansion:log-expm1-over-x/bernoulli",
            (LogExpm1OverX, Stirling2) => "expansion:log-expm1-over-x/bell-stirling2",
            (LogCosh, Bernoulli) => "expansion:log-cosh/bernoulli",
            (LogSinhOverX, Bernoulli) => "expansion:log-sinh-over-x/bernoulli",
            (LogCos, Bernoulli) => "expansion:log-cos/bernoulli",
            (SqrtLog1pOverX, Stirling1) => "expansion:sqrt-log1p-over-x/stirling1",
            (Log1pOverXPowR, Stirling1) => "expansion:log1p-over-x-pow-r/stirling1",
            (Log1pOverXPowR, Mixed) => "expansion:log1p-over-x-pow-r/mixed",
            (SqrtXOverExpm1, Stirling2) => "expansion:sqrt-x-over-expm1/stirling2",
            (SqrtXOverExpm1, Mixed) => "expansion:sqrt-x-over-expm1/mixed",
            (Expm1OverXPowR, Stirling2) => "expansion:expm1-over-x-pow-r/stirling2",
            (Expm1OverXPowR, Mixed) => "expansion:expm1-over-x-pow-r/mixed",
            _ => return Err(self.unknown_variant(variant)),
        })
    }

    fn unknown_variant(self, variant: FormulaVariant) -> Error {
        Error::Unknown { kind: "variant for this expansion", name: format!("{}/{}", self.name(), variant.name()) }
    }
}

impl FormulaVariant {
    pub fn name(self) -> &'static str {
        match self {
            FormulaVariant::Eta => "eta",
            FormulaVariant::Zeta => "zeta",
            FormulaVariant::Bernoulli => "bernoulli",
            FormulaVariant::Stirling1 => "stirling1",
            FormulaVariant::Stirling2 => "stirling2",
            FormulaVariant::Mixed => "mixed",
        }
    }
}

impl fmt::Display for ExpansionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for FormulaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExpansionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExpansionId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "expansion", name: s.to_string() })
    }
}

impl FromStr for FormulaVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use FormulaVariant::*;
        [Eta, Zeta, Bernoulli, Stirling1, Stirling2, Mixed]
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "formula variant", name: s.to_string() })
    }
}

fn check_r(id: ExpansionId, r: Option<&Rational>) -> Result<Option<&Rational>> {
    match (id.takes_r(), r) {
        (true, None) => Err(Error::Parameter(format!("{id} requires a value for r"))),
        (false, Some(_)) => Err(Error::Parameter(format!("{id} does not take r"))),
        (_, r) => Ok(r),
    }
}

fn inv_factorial(n: usize) -> Rational {
    Rational::one() / from_int(factorial(n))
}

/// `(2k-3)!! / (2k)!!`, which equals `-(-1/2)_k / k!`.
fn half_power_weight(k: usize) -> Rational {
    let num = double_factorial(2 * k as i64 - 3).expect("2k - 3 >= -3");
    let den = double_factorial(2 * k as i64).expect("2k >= 0");
    Rational::new(num, den)
}

/// `c_n` for functions whose only even coefficients are
/// `weight(k) B_{2k} / (2k) / (2k)!` and whose `x^1` coefficient is `linear`.
fn even_bernoulli_coeff(n: usize, linear: Rational, weight: impl Fn(usize) -> Rational) -> Rational {
    match n {
        0 => Rational::zero(),
        1 => linear,
        n if n % 2 == 1 => Rational::zero(),
        n => {
            let k = n / 2;
            weight(k) * bernoulli_baseline(n) / rat(n as i64) * inv_factorial(n)
        }
    }
}

/// Inner sum of the first-kind power expansion:
/// `sum_{k=0}^{n} (w)_k / k! * first_kind_kernel(n, k)`.
pub fn first_kind_power_sum(n: usize, w: &Rational) -> Rational {
    let mut sum = Rational::zero();
    let mut weight = Rational::one();
    for k in 0..=n {
        if k > 0 {
            weight = weight * (w + rat(k as i64 - 1)) / rat(k as i64);
        }
        if !weight.is_zero() {
            sum += &weight * first_kind_kernel(n, k);
        }
    }
    sum
}

/// Inner sum of the second-kind power expansion:
/// `sum_{k=0}^{n} (w)_k / (n+k)! * second_kind_kernel(n, k)`.
pub fn second_kind_power_sum(n: usize, w: &Rational) -> Rational {
    let mut sum = Rational::zero();
    for k in 0..=n {
        let rise = rising_factorial(w, k);
        if !rise.is_zero() {
            sum += rise * from_int(second_kind_kernel(n, k)) / from_int(factorial(n + k));
        }
    }
    sum
}

/// `c_n` of the requested closed form.
pub fn coeff(id: ExpansionId, variant: FormulaVariant, n: usize, r: Option<&Rational>) -> Result<Rational> {
    use ExpansionId::*;
    use FormulaVariant::*;
    let r = check_r(id, r)?;
    id.provenance(variant)?;
    let half = ratio(1, 2);
    Ok(match (id, variant) {
        (LogExpPlus1Half, Eta) => match n {
            0 => Rational::zero(),
            1 => half,
            n if n % 2 == 1 => Rational::zero(),
            n => eta_neg(n / 2)? * inv_factorial(n),
        },
        (LogExpPlus1Half, Bernoulli) => {
            even_bernoulli_coeff(n, half, |k| from_int(pow2(2 * k)) - Rational::one())
        }
        (LogExpPlus1Half, Stirling2) => {
            let mut sum = Rational::zero();
            for j in 1..=n {
                sum += from_int(factorial(j - 1) * stirling2(n, j as i64)) / from_int(pow2(j))
                    * rat(neg_one_pow(j - 1));
            }
            sum * inv_factorial(n)
        }
        (LogExpm1OverX, Zeta) => match n {
            0 => Rational::zero(),
            1 => half,
            n if n % 2 == 1 => Rational::zero(),
            n => -zeta_neg(n / 2)? * inv_factorial(n),
        },
        (LogExpm1OverX, Bernoulli) => even_bernoulli_coeff(n, half, |_| Rational::one()),
        (LogExpm1OverX, Stirling2) => {
            if n == 0 {
                Rational::zero()
            } else {
                let mut sum = Rational::zero();
                for l in 1..=n {
                    sum += binomial_q(2 * n, (n + l) as i64) * from_int(stirling2(n + l, l as i64))
                        / rat(l as i64)
                        * rat(neg_one_pow(l));
                }
                -sum / binomial_q(2 * n, n as i64) * inv_factorial(n)
            }
        }
        (LogCosh, Bernoulli) => even_bernoulli_coeff(n, Rational::zero(), |k| {
            (from_int(pow2(2 * k)) - Rational::one()) * from_int(pow2(2 * k))
        }),
        (LogSinhOverX, Bernoulli) => even_bernoulli_coeff(n, Rational::zero(), |k| from_int(pow2(2 * k))),
        (LogCos, Bernoulli) => {
            // -2^{2k}(2^{2k}-1)|B_{2k}| with |B_{2k}| = (-1)^{k+1} B_{2k}
            even_bernoulli_coeff(n, Rational::zero(), |k| {
                let w = from_int(pow2(2 * k)) * (from_int(pow2(2 * k)) - Rational::one());
                w * rat(neg_one_pow(k))
            })
        }
        (SqrtLog1pOverX, Stirling1) => {
            let mut sum = Rational::zero();
            for k in 0..=n {
                sum += half_power_weight(k) * first_kind_kernel(n, k);
            }
            -sum * inv_factorial(n)
        }
        (Log1pOverXPowR, Stirling1) => {
            let r = r.expect("checked");
            first_kind_power_sum(n, &-r.clone()) * inv_factorial(n)
        }
        (Log1pOverXPowR, Mixed) => {
            let r = r.expect("checked");
            let mut sum = Rational::zero();
            for k in 0..=n {
                let s = stirling1(n, k as i64);
                if s.is_zero() {
                    continue;
                }
                sum += from_int(factorial(k) * s) * second_kind_power_sum(k, r);
            }
            sum * inv_factorial(n)
        }
        (SqrtXOverExpm1, Stirling2) => {
            let mut sum = Rational::zero();
            for k in 0..=n {
                sum += binomial_q(2 * k, k as i64) / from_int(pow2(2 * k)) / binomial_q(n + k, k as i64)
                    * from_int(second_kind_kernel(n, k));
            }
            sum * inv_factorial(n)
        }
        (SqrtXOverExpm1, Mixed) => {
            let mut sum = Rational::zero();
            for k in 0..=n {
                let s = stirling2(n, k as i64);
                if s.is_zero() {
                    continue;
                }
                let mut inner = Rational::zero();
                for l in 0..=k {
                    inner += half_power_weight(l) * first_kind_kernel(k, l);
                }
                sum += from_int(s) * inner;
            }
            -sum * inv_factorial(n)
        }
        (Expm1OverXPowR, Stirling2) => {
            let r = r.expect("checked");
            second_kind_power_sum(n, &-r.clone())
        }
        (Expm1OverXPowR, Mixed) => {
            let r = r.expect("checked");
            let mut sum = Rational::zero();
            for l in 0..=n {
                let s = stirling2(n, l as i64);
                if s.is_zero() {
                    continue;
                }
                sum += from_int(s) * first_kind_power_sum(l, r);
            }
            sum * inv_factorial(n)
        }
        _ => return Err(id.unknown_variant(variant)),
    })
}

/// `c_0..=c_order` of the requested closed form.
pub fn coeffs(id: ExpansionId, variant: FormulaVariant, order: usize, r: Option<&Rational>) -> Result<Vec<Rational>> {
    (0..=order).map(|n| coeff(id, variant, n, r)).collect()
}

fn exp_x(order: usize) -> Result<PowerSeries> {
    PowerSeries::x(order).exp()
}

/// `(e^x - 1)/x` built as a shifted exponential.
fn oracle_expm1_over_x(order: usize) -> Result<PowerSeries> {
    let e = exp_x(order + 1)?;
    Ok(e.sub(&PowerSeries::one(order + 1))?.shift_down())
}

/// `log(1 + x)/x` built as a shifted logarithm.
fn oracle_log1p_over_x(order: usize) -> Result<PowerSeries> {
    Ok(PowerSeries::x(order + 1).log1p()?.shift_down())
}

fn minus_one(f: &PowerSeries) -> Result<PowerSeries> {
    f.sub(&PowerSeries::one(f.order()))
}

/// The expanded function as a truncated series, from series primitives only.
pub fn oracle_series(id: ExpansionId, r: Option<&Rational>, order: usize) -> Result<PowerSeries> {
    use ExpansionId::*;
    let r = check_r(id, r)?;
    match id {
        LogExpPlus1Half => minus_one(&exp_x(order)?)?.scale(&ratio(1, 2)).log1p(),
        LogExpm1OverX => minus_one(&oracle_expm1_over_x(order)?)?.log1p(),
        LogCosh => minus_one(&exp_x(order)?.even_part())?.log1p(),
        LogSinhOverX => minus_one(&exp_x(order + 1)?.odd_part().shift_down())?.log1p(),
        LogCos => {
            // cos x = cosh(ix): even part of e^x with alternating signs
            let cosh = exp_x(order)?.even_part();
            let cos = PowerSeries::from_fn(order, |n| cosh.coeff(n) * rat(neg_one_pow(n / 2)));
            minus_one(&cos)?.log1p()
        }
        SqrtLog1pOverX => oracle_log1p_over_x(order)?.pow(&ratio(1, 2)),
        Log1pOverXPowR => oracle_log1p_over_x(order)?.pow(r.expect("checked")),
        SqrtXOverExpm1 => oracle_expm1_over_x(order)?.pow(&ratio(-1, 2)),
        Expm1OverXPowR => oracle_expm1_over_x(order)?.pow(r.expect("checked")),
    }
}

/// `c_n` of the oracle series truncated at `order`.
pub fn oracle_coeff(id: ExpansionId, n: usize, r: Option<&Rational>, order: usize) -> Result<Rational> {
    if n > order {
        return Err(Error::Parameter(format!("coefficient {n} lies beyond order {order}")));
    }
    Ok(oracle_series(id, r, order)?.coeff(n))
}
