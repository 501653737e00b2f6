//! Truncated formal power series over exact rationals.
//!
//! A [`PowerSeries`] of order `N` stores the ordinary coefficients
//! `c_0..=c_N`. Transcendental operations are computed from the linear
//! differential equations they satisfy, so everything stays rational.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, format_rational, DotSum, from_int, neg_one_pow, rat, ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Series from explicit coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x` (just `0` at order 0).
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Series from a coefficient rule `n -> c_n`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        PowerSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// `c_n`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<Rational> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, Rational::zero());
        PowerSeries { coeffs }
    }

    /// `(f(x) - f(0)) / x`, one order lower.
    pub fn shift_down(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        PowerSeries { coeffs: self.coeffs[1..].to_vec() }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order(), |n| &self.coeffs[n] + &other.coeffs[n]))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order(), |n| &self.coeffs[n] - &other.coeffs[n]))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.order(), |n| &self.coeffs[n] * c)
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order(), |n| -&self.coeffs[n])
    }

    /// `f(c x)`
    pub fn rescale(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= c;
        }
        PowerSeries { coeffs: out }
    }

    /// Keeps the even-index coefficients.
    pub fn even_part(&self) -> Self {
        Self::from_fn(self.order(), |n| if n % 2 == 0 { self.coeffs[n].clone() } else { Rational::zero() })
    }

    /// Keeps the odd-index coefficients.
    pub fn odd_part(&self) -> Self {
        Self::from_fn(self.order(), |n| if n % 2 == 1 { self.coeffs[n].clone() } else { Rational::zero() })
    }

    /// Formal derivative, one order lower.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::from_fn(self.order() - 1, |n| &self.coeffs[n + 1] * rat(n as i64 + 1))
    }

    /// Antiderivative with zero constant term, one order higher.
    pub fn integral(&self) -> Self {
        Self::from_fn(self.order() + 1, |n| {
            if n == 0 {
                Rational::zero()
            } else {
                &self.coeffs[n - 1] / rat(n as i64)
            }
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let out = (0..=n)
            .map(|m| {
                let mut acc = DotSum::new(&Rational::zero());
                for i in 0..=m {
                    acc.add_product(&self.coeffs[i], &other.coeffs[m - i], 1);
                }
                acc.finish()
            })
            .collect();
        Ok(PowerSeries { coeffs: out })
    }

    /// `q` with `q * other == self` through the common order.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let b0 = &other.coeffs[0];
        if b0.is_zero() {
            return Err(Error::Series("divisor has zero constant term".into()));
        }
        let n = self.order();
        let mut q: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = DotSum::new(&self.coeffs[k]);
            for j in 1..=k {
                acc.add_product(&other.coeffs[j], &q[k - j], -1);
            }
            q.push(acc.finish() / b0);
        }
        Ok(PowerSeries { coeffs: q })
    }

    /// `1 / self`
    pub fn recip(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// `log(1 + f)` for `f(0) = 0`, from `g' = f' / (1 + f)`.
    pub fn log1p(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("log1p needs a zero constant term".into()));
        }
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let one_plus = {
            let mut c = self.clone();
            c.coeffs[0] = Rational::one();
            c
        };
        let deriv = self.derivative();
        let quotient = deriv.div(&one_plus.truncate(n - 1))?;
        Ok(quotient.integral())
    }

    /// `log f` for `f(0) = 1`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Series("log needs constant term 1".into()));
        }
        let mut f = self.clone();
        f.coeffs[0] = Rational::zero();
        f.log1p()
    }

    /// `exp f` for `f(0) = 0`, from `g' = f' g`, `g(0) = 1`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("exp needs a zero constant term".into()));
        }
        let n = self.order();
        let mut g: Vec<Rational> = Vec::with_capacity(n + 1);
        g.push(Rational::one());
        for m in 1..=n {
            // m g_m = sum_{k=1}^{m} k f_k g_{m-k}
            let mut acc = DotSum::new(&Rational::zero());
            for k in 1..=m {
                acc.add_product(&self.coeffs[k], &g[m - k], k as i64);
            }
            g.push(acc.finish() / rat(m as i64));
        }
        Ok(PowerSeries { coeffs: g })
    }

    /// `f^r = exp(r log f)` for `f(0) = 1`.
    pub fn pow(&self, r: &Rational) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Series("pow needs constant term 1".into()));
        }
        self.log()?.scale(r).exp()
    }

    /// `n! c_n`
    pub fn egf_coeff(&self, n: usize) -> Rational {
        self.coeff(n) * from_int(factorial(n))
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "({})x", format_rational(c))?,
                _ => write!(f, "({})x^{n}", format_rational(c))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

/// `(e^x - 1)/x`, coefficients `1/(n+1)!`.
pub fn series_expm1_over_x(order: usize) -> PowerSeries {
    PowerSeries::from_fn(order, |n| Rational::one() / from_int(factorial(n + 1)))
}

/// `log(1 + x)/x`, coefficients `(-1)^n/(n+1)`.
pub fn series_log1p_over_x(order: usize) -> PowerSeries {
    PowerSeries::from_fn(order, |n| ratio(neg_one_pow(n), n as i64 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> PowerSeries {
        PowerSeries::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn mul_examples() {
        let one = PowerSeries::one(4);
        assert_eq!(one.mul(&one).unwrap(), one);
        let x = PowerSeries::x(4);
        assert_eq!(x.mul(&x).unwrap(), poly(&[0, 0, 1, 0, 0]));
        assert_eq!(poly(&[1, 1, 0]).mul(&poly(&[1, -1, 0])).unwrap(), poly(&[1, 0, -1]));
    }

    #[test]
    fn mismatched_orders_rejected() {
        let err = PowerSeries::one(3).mul(&PowerSeries::one(4)).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 3, right: 4 });
    }

    #[test]
    fn div_examples() {
        let a = poly(&[3, -1, 4, 1]);
        assert_eq!(a.div(&PowerSeries::one(3)).unwrap(), a);
        let geo = PowerSeries::one(6).div(&poly(&[1, -1, 0, 0, 0, 0, 0])).unwrap();
        assert_eq!(geo, poly(&[1; 7]));
        assert!(a.div(&PowerSeries::x(3)).is_err());
    }

    #[test]
    fn bernoulli_generating_function_by_division() {
        // x/(e^x - 1) = 1 / ((e^x - 1)/x)
        let b = series_expm1_over_x(8).recip().unwrap();
        let expected = [rat(1), ratio(-1, 2), ratio(1, 6), rat(0), ratio(-1, 30), rat(0), ratio(1, 42), rat(0), ratio(-1, 30)];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(&b.egf_coeff(n), e, "B_{n}");
        }
    }

    #[test]
    fn log1p_examples() {
        assert_eq!(PowerSeries::zero(5).log1p().unwrap(), PowerSeries::zero(5));
        let mercator = PowerSeries::x(6).log1p().unwrap();
        for n in 1..=6 {
            assert_eq!(mercator.coeff(n), ratio(-neg_one_pow(n), n as i64));
        }
        let expm1 = PowerSeries::x(7).exp().unwrap().sub(&PowerSeries::one(7)).unwrap();
        assert_eq!(expm1.log1p().unwrap(), PowerSeries::x(7));
        assert!(PowerSeries::one(3).log1p().is_err());
    }

    #[test]
    fn exp_examples() {
        assert_eq!(PowerSeries::zero(4).exp().unwrap(), PowerSeries::one(4));
        let e = PowerSeries::x(10).exp().unwrap();
        for n in 0..=10 {
            assert_eq!(e.coeff(n), Rational::one() / from_int(factorial(n)));
        }
        assert!(PowerSeries::one(3).exp().is_err());
    }

    #[test]
    fn pow_examples() {
        let f = series_expm1_over_x(10);
        assert_eq!(f.pow(&rat(0)).unwrap(), PowerSeries::one(10));
        assert_eq!(f.pow(&rat(1)).unwrap(), f);
        let half = f.pow(&ratio(1, 2)).unwrap();
        assert_eq!(half.mul(&half).unwrap(), f);
        assert_eq!(f.pow(&rat(3)).unwrap(), f.mul(&f).unwrap().mul(&f).unwrap());
        assert!(PowerSeries::x(3).pow(&rat(2)).is_err());
    }

    #[test]
    fn base_series() {
        let e = series_expm1_over_x(5);
        assert_eq!(e.coeff(0), rat(1));
        assert_eq!(e.coeff(1), ratio(1, 2));
        assert_eq!(e.coeff(3), ratio(1, 24));
        let l = series_log1p_over_x(5);
        assert_eq!(l.coeff(0), rat(1));
        assert_eq!(l.coeff(1), ratio(-1, 2));
        assert_eq!(l.coeff(4), ratio(1, 5));
        // both agree with the differential-equation constructions
        let via_exp = PowerSeries::x(6).exp().unwrap().shift_down();
        assert_eq!(via_exp, e);
        let via_log = PowerSeries::x(6).log1p().unwrap().shift_down();
        assert_eq!(via_log, l);
    }

    #[test]
    fn helpers() {
        let f = poly(&[1, 2, 3, 4]);
        assert_eq!(f.even_part(), poly(&[1, 0, 3, 0]));
        assert_eq!(f.odd_part(), poly(&[0, 2, 0, 4]));
        assert_eq!(f.derivative(), poly(&[2, 6, 12]));
        assert_eq!(f.derivative().integral(), poly(&[0, 2, 3, 4]));
        assert_eq!(f.rescale(&rat(-1)), poly(&[1, -2, 3, -4]));
        assert_eq!(f.truncate(1), poly(&[1, 2]));
        assert_eq!(f.truncate(5), poly(&[1, 2, 3, 4, 0, 0]));
        assert_eq!(f.to_string(), "1 + (2)x + (3)x^2 + (4)x^3 + O(x^4)");
    }
}
