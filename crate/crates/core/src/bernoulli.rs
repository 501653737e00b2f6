//! Bernoulli numbers along independent routes.
//!
//! Besides the baseline recurrence there are four determinant routes (each a
//! `p/q` ratio whose odd derivatives at 0 carry `B_{2k}`), three recursions
//! and three closed forms in Stirling numbers of the second kind. None of the
//! routes shares intermediate values with another.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, binomial_q, factorial, from_int, neg_one_pow, pow2, rat, ratio, rising_factorial, Rational};
use crate::fps::{series_log1p_over_x, PowerSeries};
use crate::hessenberg::{det_recursive, ratio_derivative_matrix, DerivativePair, HessenbergMatrix};
use crate::stirling::{second_kind_kernel, stirling1, stirling2};

fn require_positive(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::Domain("index k must be >= 1".into()))
    } else {
        Ok(())
    }
}

/// `B_0..=B_n` from `sum_{j=0}^{n} C(n+1, j) B_j = [n = 0]`.
pub fn bernoulli_table(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc += bj * binomial_q(m + 1, j as i64);
            }
        }
        b.push(-acc / rat(m as i64 + 1));
    }
    b
}

/// `B_n`, with `B_1 = -1/2`.
pub fn bernoulli_baseline(n: usize) -> Rational {
    bernoulli_table(n).pop().unwrap()
}

/// `2^{2k} - 1`
fn mersenne_even(k: usize) -> Rational {
    from_int(pow2(2 * k) - BigInt::one())
}

/// The `p/q` ratios behind the determinant routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DetKind {
    /// `sinh / cosh`
    Tanh,
    /// `sin / cos`
    Tan,
    /// `e^x / (e^x + 1)`
    Logistic,
    /// `int_0^1 v e^{xv} dv / int_0^1 e^{xv} dv`
    Integral,
}

type DerivativeRule = fn(usize) -> Rational;

impl DetKind {
    pub const ALL: [DetKind; 4] = [DetKind::Tanh, DetKind::Tan, DetKind::Logistic, DetKind::Integral];

    /// Derivatives at 0 of numerator and denominator through order `order`.
    pub fn derivative_pair(self, order: usize) -> DerivativePair {
        let (p, q): (DerivativeRule, DerivativeRule) = match self {
            DetKind::Tanh => (|i| rat((i % 2) as i64), |i| rat(((i + 1) % 2) as i64)),
            DetKind::Tan => (
                |i| rat([0, 1, 0, -1][i % 4]),
                |i| rat([1, 0, -1, 0][i % 4]),
            ),
            DetKind::Logistic => (|_| rat(1), |i| rat(if i == 0 { 2 } else { 1 })),
            DetKind::Integral => (|i| ratio(1, i as i64 + 2), |i| ratio(1, i as i64 + 1)),
        };
        DerivativePair::from_fns(order, p, q).expect("q(0) is nonzero for every kind")
    }

    /// `B_{2k} = prefactor * det` for the `2k x 2k` matrix.
    fn prefactor(self, k: usize) -> Rational {
        let kk = rat(k as i64);
        let denom = mersenne_even(k) * from_int(pow2(2 * k - 1));
        match self {
            DetKind::Tanh | DetKind::Logistic => -kk / denom,
            DetKind::Tan => kk * rat(neg_one_pow(k)) / denom,
            DetKind::Integral => rat(-2 * k as i64),
        }
    }
}

/// The `2k x 2k` determinant matrix for `B_{2k}`.
pub fn bernoulli_det_matrix(k: usize, which: DetKind) -> Result<HessenbergMatrix> {
    require_positive(k)?;
    ratio_derivative_matrix(&which.derivative_pair(2 * k - 1), 2 * k - 1)
}

/// `B_{2k}` as a prefactor times a Hessenberg determinant.
pub fn bernoulli_det(k: usize, which: DetKind) -> Result<Rational> {
    let m = bernoulli_det_matrix(k, which)?;
    Ok(which.prefactor(k) * det_recursive(&m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RecKind {
    Tanh,
    Logistic,
    Integral,
}

impl RecKind {
    pub const ALL: [RecKind; 3] = [RecKind::Tanh, RecKind::Logistic, RecKind::Integral];
}

/// `[B_0, B_2, ..., B_{2k}]` by one of the even-index recursions.
pub fn bernoulli_rec_table(k: usize, which: RecKind) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=k {
        let mm = rat(m as i64);
        let value = match which {
            RecKind::Tanh => {
                let mut sum = Rational::zero();
                for l in 1..m {
                    sum += binomial_q(2 * m - 1, 2 * l as i64 - 1) * mersenne_even(l) * from_int(pow2(2 * l))
                        * &b[l]
                        / rat(2 * l as i64);
                }
                mm / (mersenne_even(m) * from_int(pow2(2 * m - 1))) * (Rational::one() - sum)
            }
            RecKind::Logistic => {
                let mut sum = Rational::zero();
                for j in 1..m {
                    sum += binomial_q(2 * m - 1, 2 * j as i64 - 1) * mersenne_even(j) / rat(j as i64) * &b[j];
                }
                mm / (rat(2) * mersenne_even(m)) * (Rational::one() - sum)
            }
            RecKind::Integral => {
                let mut sum = Rational::zero();
                for l in 1..m {
                    sum += binomial_q(2 * m - 1, 2 * l as i64 - 1) * &b[l]
                        / (rat(2 * (m - l) as i64 + 1) * rat(2 * l as i64));
                }
                let lead = ratio(2 * m as i64 - 1, 4 * m as i64 * (2 * m as i64 + 1));
                rat(2 * m as i64) * (lead - sum)
            }
        };
        b.push(value);
    }
    b
}

/// `B_{2k}` by recursion over lower even indices.
pub fn bernoulli_rec(k: usize, which: RecKind) -> Result<Rational> {
    require_positive(k)?;
    Ok(bernoulli_rec_table(k, which).pop().unwrap())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosedKind {
    /// Alternating `(j-1)!/2^j` weights on `S(2k, j)`.
    Eta,
    /// Binomially weighted `S(2k+l, l)/l`.
    ZetaBell,
    /// Double sum over the second-kind kernel.
    S2,
}

impl ClosedKind {
    pub const ALL: [ClosedKind; 3] = [ClosedKind::Eta, ClosedKind::ZetaBell, ClosedKind::S2];
}

/// `B_{2k}` from a closed form in Stirling numbers of the second kind.
pub fn bernoulli_closed(k: usize, which: ClosedKind) -> Result<Rational> {
    require_positive(k)?;
    let n = 2 * k;
    Ok(match which {
        ClosedKind::Eta => {
            let mut sum = Rational::zero();
            for j in 1..=n {
                sum += from_int(factorial(j - 1) * stirling2(n, j as i64)) / from_int(pow2(j)) * rat(neg_one_pow(j - 1));
            }
            rat(n as i64) / mersenne_even(k) * sum
        }
        ClosedKind::ZetaBell => -zeta_bell_sum(k),
        ClosedKind::S2 => from_int(factorial(n)) * s2_double_sum(n),
    })
}

/// `(2k / C(4k, 2k)) sum_{l=1}^{2k} (-1)^l / l C(4k, 2k+l) S(2k+l, l)`
fn zeta_bell_sum(k: usize) -> Rational {
    let n = 2 * k;
    let mut sum = Rational::zero();
    for l in 1..=n {
        sum += from_int(binomial(2 * n, (n + l) as i64) * stirling2(n + l, l as i64)) / rat(l as i64)
            * rat(neg_one_pow(l));
    }
    rat(n as i64) / binomial_q(2 * n, n as i64) * sum
}

/// `sum_{j=0}^{n} j!/(n+j)! sum_{l=0}^{j} (-1)^l C(n+j, j-l) S(n+l, l)`
fn s2_double_sum(n: usize) -> Rational {
    let mut sum = Rational::zero();
    for j in 0..=n {
        sum += from_int(factorial(j) * second_kind_kernel(n, j)) / from_int(factorial(n + j));
    }
    sum
}

/// The two closed forms exactly as they are usually printed, without the
/// leading minus (`ZetaBell`) and without the `(2k)!` factor (`S2`).
///
/// Kept so reports can show that the printed forms disagree with `B_{2k}`.
pub fn bernoulli_closed_printed(k: usize, which: ClosedKind) -> Result<Rational> {
    require_positive(k)?;
    match which {
        ClosedKind::ZetaBell => Ok(zeta_bell_sum(k)),
        ClosedKind::S2 => Ok(s2_double_sum(2 * k)),
        ClosedKind::Eta => bernoulli_closed(k, ClosedKind::Eta),
    }
}

/// Identifies one of the eleven `B_{2k}` routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BernoulliRoute {
    Baseline,
    Det(DetKind),
    Rec(RecKind),
    Closed(ClosedKind),
}

impl BernoulliRoute {
    pub const ALL: [BernoulliRoute; 11] = [
        BernoulliRoute::Baseline,
        BernoulliRoute::Det(DetKind::Tanh),
        BernoulliRoute::Det(DetKind::Tan),
        BernoulliRoute::Det(DetKind::Logistic),
        BernoulliRoute::Det(DetKind::Integral),
        BernoulliRoute::Rec(RecKind::Tanh),
        BernoulliRoute::Rec(RecKind::Logistic),
        BernoulliRoute::Rec(RecKind::Integral),
        BernoulliRoute::Closed(ClosedKind::Eta),
        BernoulliRoute::Closed(ClosedKind::ZetaBell),
        BernoulliRoute::Closed(ClosedKind::S2),
    ];

    pub fn name(self) -> &'static str {
        match self {
            BernoulliRoute::Baseline => "baseline",
            BernoulliRoute::Det(DetKind::Tanh) => "det_tanh",
            BernoulliRoute::Det(DetKind::Tan) => "det_tan",
            BernoulliRoute::Det(DetKind::Logistic) => "det_logistic",
            BernoulliRoute::Det(DetKind::Integral) => "det_integral",
            BernoulliRoute::Rec(RecKind::Tanh) => "rec_tanh",
            BernoulliRoute::Rec(RecKind::Logistic) => "rec_logistic",
            BernoulliRoute::Rec(RecKind::Integral) => "rec_integral",
            BernoulliRoute::Closed(ClosedKind::Eta) => "closed_eta",
            BernoulliRoute::Closed(ClosedKind::ZetaBell) => "closed_zeta_bell",
            BernoulliRoute::Closed(ClosedKind::S2) => "closed_s2",
        }
    }

    /// Formula label carried into reports.
    pub fn provenance(self) -> &'static str {
        match self {
            BernoulliRoute::Baseline => "bernoulli:egf-recurrence",
            BernoulliRoute::Det(DetKind::Tanh) => "bernoulli:det-tanh",
            BernoulliRoute::Det(DetKind::Tan) => "bernoulli:det-tan",
            BernoulliRoute::Det(DetKind::Logistic) => "bernoulli:det-logistic",
            BernoulliRoute::Det(DetKind::Integral) => "bernoulli:det-integral",
            BernoulliRoute::Rec(RecKind::Tanh) => "bernoulli:rec-tanh",
            BernoulliRoute::Rec(RecKind::Logistic) => "bernoulli:rec-logistic",
            BernoulliRoute::Rec(RecKind::Integral) => "bernoulli:rec-integral",
            BernoulliRoute::Closed(ClosedKind::Eta) => "bernoulli:closed-eta-s2",
            BernoulliRoute::Closed(ClosedKind::ZetaBell) => "bernoulli:closed-bell-s2",
            BernoulliRoute::Closed(ClosedKind::S2) => "bernoulli:closed-genbern-s2",
        }
    }

    /// `B_{2k}` along this route.
    pub fn even_value(self, k: usize) -> Result<Rational> {
        match self {
            BernoulliRoute::Baseline => {
                require_positive(k)?;
                Ok(bernoulli_baseline(2 * k))
            }
            BernoulliRoute::Det(d) => bernoulli_det(k, d),
            BernoulliRoute::Rec(r) => bernoulli_rec(k, r),
            BernoulliRoute::Closed(c) => bernoulli_closed(k, c),
        }
    }
}

impl fmt::Display for BernoulliRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BernoulliRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BernoulliRoute::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "bernoulli route", name: s.to_string() })
    }
}

/// `B_n^{(r)}`, the exponential coefficients of `(x/(e^x - 1))^r`.
pub fn generalized_bernoulli(n: usize, r: &Rational) -> Rational {
    let mut sum = Rational::zero();
    for k in 0..=n {
        sum += rising_factorial(r, k) * from_int(second_kind_kernel(n, k)) / from_int(factorial(n + k));
    }
    from_int(factorial(n)) * sum
}

/// Routes to the Bernoulli numbers of the second kind `b_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SecondKindRoute {
    /// Coefficients of `x / log(1 + x)` by series division.
    FpsBaseline,
    /// `(1/n!) sum_l s(n, l)/(l + 1)`
    StirlingSum,
    /// `(1/n!) sum_m (-1)^m C(n+1, m+1) s(n+m, m)/C(n+m, m)`
    AltSum,
    /// `(1/n!) int_0^1 <v>_n dv` with the falling factorial expanded directly.
    Integral,
}

impl SecondKindRoute {
    pub const ALL: [SecondKindRoute; 4] = [
        SecondKindRoute::FpsBaseline,
        SecondKindRoute::StirlingSum,
        SecondKindRoute::AltSum,
        SecondKindRoute::Integral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SecondKindRoute::FpsBaseline => "fps_baseline",
            SecondKindRoute::StirlingSum => "stirling_sum",
            SecondKindRoute::AltSum => "alt_sum",
            SecondKindRoute::Integral => "integral",
        }
    }

    pub fn provenance(self) -> &'static str {
        match self {
            SecondKindRoute::FpsBaseline => "bernoulli2:gf-x-over-log1p",
            SecondKindRoute::StirlingSum => "bernoulli2:stirling1-sum",
            SecondKindRoute::AltSum => "bernoulli2:alternating-stirling1-sum",
            SecondKindRoute::Integral => "bernoulli2:falling-factorial-integral",
        }
    }
}

impl FromStr for SecondKindRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SecondKindRoute::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "bernoulli2nd route", name: s.to_string() })
    }
}

/// Coefficients of `v (v-1) ... (v-n+1)`, lowest degree first.
fn falling_polynomial(n: usize) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for j in 0..n {
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * BigInt::from(j);
        }
        poly = next;
    }
    poly
}

/// `b_n`, the ordinary coefficients of `x / log(1 + x)`.
pub fn bernoulli2nd(n: usize, which: SecondKindRoute) -> Rational {
    let inv_fact = Rational::one() / from_int(factorial(n));
    match which {
        SecondKindRoute::FpsBaseline => PowerSeries::one(n)
            .div(&series_log1p_over_x(n))
            .expect("log(1+x)/x has constant term 1")
            .coeff(n),
        SecondKindRoute::StirlingSum => {
            let mut sum = Rational::zero();
            for l in 0..=n {
                sum += from_int(stirling1(n, l as i64)) / rat(l as i64 + 1);
            }
            inv_fact * sum
        }
        SecondKindRoute::AltSum => {
            let mut sum = Rational::zero();
            for m in 0..=n {
                sum += from_int(binomial(n + 1, m as i64 + 1) * stirling1(n + m, m as i64))
                    / binomial_q(n + m, m as i64)
                    * rat(neg_one_pow(m));
            }
            inv_fact * sum
        }
        SecondKindRoute::Integral => {
            let integral: Rational = falling_polynomial(n)
                .into_iter()
                .enumerate()
                .map(|(l, c)| from_int(c) / rat(l as i64 + 1))
                .sum();
            inv_fact * integral
        }
    }
}

/// `zeta(1 - 2k) = -B_{2k} / (2k)`
pub fn zeta_neg(k: usize) -> Result<Rational> {
    require_positive(k)?;
    Ok(-bernoulli_baseline(2 * k) / rat(2 * k as i64))
}

/// `eta(1 - 2k) = (1 - 2^{2k}) zeta(1 - 2k)`
pub fn eta_neg(k: usize) -> Result<Rational> {
    Ok(-mersenne_even(k) * zeta_neg(k)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn baseline_values() {
        assert_eq!(bernoulli_baseline(0), rat(1));
        assert_eq!(bernoulli_baseline(1), ratio(-1, 2));
        assert_eq!(bernoulli_baseline(2), ratio(1, 6));
        assert_eq!(bernoulli_baseline(4), ratio(-1, 30));
        assert_eq!(bernoulli_baseline(12), ratio(-691, 2730));
        for k in 1..=15 {
            assert!(bernoulli_baseline(2 * k + 1).is_zero());
        }
    }

    #[test]
    fn baseline_matches_series_division() {
        let series = PowerSeries::one(20).div(&crate::fps::series_expm1_over_x(20)).unwrap();
        let table = bernoulli_table(20);
        for n in 0..=20 {
            assert_eq!(series.egf_coeff(n), table[n]);
        }
    }

    #[test]
    fn det_examples() {
        assert_eq!(bernoulli_det(1, DetKind::Tanh).unwrap(), ratio(1, 6));
        assert_eq!(bernoulli_det(1, DetKind::Integral).unwrap(), ratio(1, 6));
        assert_eq!(bernoulli_det(3, DetKind::Tan).unwrap(), ratio(1, 42));
        assert!(bernoulli_det(0, DetKind::Logistic).is_err());
    }

    #[test]
    fn rec_examples() {
        assert_eq!(bernoulli_rec(1, RecKind::Tanh).unwrap(), ratio(1, 6));
        assert_eq!(bernoulli_rec(1, RecKind::Logistic).unwrap(), ratio(1, 6));
        assert_eq!(bernoulli_rec(2, RecKind::Integral).unwrap(), ratio(-1, 30));
        assert!(bernoulli_rec(0, RecKind::Tanh).is_err());
    }

    #[test]
    fn closed_examples() {
        for c in ClosedKind::ALL {
            assert_eq!(bernoulli_closed(1, c).unwrap(), ratio(1, 6), "{c:?}");
        }
        assert!(bernoulli_closed(0, ClosedKind::Eta).is_err());
    }

    #[test]
    fn printed_forms_disagree_at_first_index() {
        assert_eq!(bernoulli_closed_printed(1, ClosedKind::ZetaBell).unwrap(), ratio(-1, 6));
        assert_eq!(bernoulli_closed_printed(1, ClosedKind::S2).unwrap(), ratio(1, 12));
    }

    #[test]
    fn every_route_agrees() {
        for k in 1..=8 {
            let expected = bernoulli_baseline(2 * k);
            for route in BernoulliRoute::ALL {
                assert_eq!(route.even_value(k).unwrap(), expected, "{route} k={k}");
            }
        }
    }

    #[test]
    fn route_names_round_trip() {
        for route in BernoulliRoute::ALL {
            assert_eq!(route.name().parse::<BernoulliRoute>().unwrap(), route);
        }
        assert!("det_cot".parse::<BernoulliRoute>().is_err());
    }

    #[test]
    fn generalized_examples() {
        for n in 0..6 {
            let expected = if n == 0 { rat(1) } else { rat(0) };
            assert_eq!(generalized_bernoulli(n, &rat(0)), expected);
            assert_eq!(generalized_bernoulli(n, &rat(1)), bernoulli_baseline(n));
        }
    }

    #[test]
    fn second_kind_examples() {
        for route in SecondKindRoute::ALL {
            assert_eq!(bernoulli2nd(0, route), rat(1));
            assert_eq!(bernoulli2nd(1, route), ratio(1, 2));
            assert_eq!(bernoulli2nd(2, route), ratio(-1, 12));
            assert_eq!(bernoulli2nd(3, route), ratio(1, 24));
            assert_eq!(bernoulli2nd(4, route), ratio(-19, 720));
        }
    }

    #[test]
    fn zeta_eta_values() {
        assert_eq!(zeta_neg(1).unwrap(), ratio(-1, 12));
        assert_eq!(eta_neg(1).unwrap(), ratio(1, 4));
        assert_eq!(zeta_neg(2).unwrap(), ratio(1, 120));
        assert!(zeta_neg(0).is_err());
        assert!(eta_neg(0).is_err());
    }

    #[test]
    fn printed_matrices_are_reproduced() {
        // tanh matrix rows 0..=4 for k = 3 (6x6), see the displayed pattern
        let m = bernoulli_det_matrix(3, DetKind::Tanh).unwrap().to_dense();
        let row = |r: &[i64]| r.iter().map(|&v| rat(v)).collect::<Vec<_>>();
        assert_eq!(m[0], row(&[0, 1, 0, 0, 0, 0]));
        assert_eq!(m[1], row(&[1, 0, 1, 0, 0, 0]));
        assert_eq!(m[2], row(&[0, 1, 0, 1, 0, 0]));
        assert_eq!(m[3], row(&[1, 0, 3, 0, 1, 0]));
        assert_eq!(m[4], row(&[0, 1, 0, 6, 0, 1]));
        assert_eq!(m[5], row(&[1, 0, 5, 0, 10, 0]));

        // tan: sign flips on the sin/cos derivative columns
        let m = bernoulli_det_matrix(2, DetKind::Tan).unwrap().to_dense();
        assert_eq!(m[0], row(&[0, 1, 0, 0]));
        assert_eq!(m[1], row(&[1, 0, 1, 0]));
        assert_eq!(m[2], row(&[0, -1, 0, 1]));
        assert_eq!(m[3], row(&[-1, 0, -3, 0]));

        // logistic: first two columns all ones below the 2 in q(0)
        let m = bernoulli_det_matrix(2, DetKind::Logistic).unwrap().to_dense();
        assert_eq!(m[0], row(&[1, 2, 0, 0]));
        assert_eq!(m[1], row(&[1, 1, 2, 0]));
        assert_eq!(m[2], row(&[1, 1, 2, 2]));
        assert_eq!(m[3], row(&[1, 1, 3, 3]));

        // integral: 1/(i+2) column, then binomially weighted 1/(i+1)
        let m = bernoulli_det_matrix(2, DetKind::Integral).unwrap().to_dense();
        assert_eq!(m[0], vec![ratio(1, 2), rat(1), rat(0), rat(0)]);
        assert_eq!(m[1], vec![ratio(1, 3), ratio(1, 2), rat(1), rat(0)]);
        assert_eq!(m[2], vec![ratio(1, 4), ratio(1, 3), ratio(1, 2) * rat(2), rat(1)]);
        assert_eq!(m[3], vec![ratio(1, 5), ratio(1, 4), ratio(1, 3) * rat(3), ratio(1, 2) * rat(3)]);
    }
}
