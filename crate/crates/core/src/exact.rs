//! Exact scalars and the factorial family.
//!
//! [`Rational`] is a big rational kept in lowest terms with a positive
//! denominator after every operation. Factorials and double factorials are
//! served from a process-wide cache that grows on demand.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Integer literal as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a normalized rational. Panics when `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `(-1)^n` as a sign multiplier.
pub fn neg_one_pow(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn pow2(n: usize) -> BigInt {
    BigInt::one() << n
}

/// Parses `p`, `-p`, `p/q` (optionally signed on either part).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(s.to_string());
    let t = s.trim().replace('\u{2212}', "-");
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t.as_str(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Renders `p/q` in lowest terms, dropping `/1`.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Growable tables of `n!` and `n!!`.
#[derive(Debug, Clone)]
pub struct FactorialCache {
    factorials: Vec<BigInt>,
    double_factorials: Vec<BigInt>,
}

impl Default for FactorialCache {
    fn default() -> Self {
        Self::new()
    }
}

impl FactorialCache {
    pub fn new() -> Self {
        FactorialCache {
            factorials: vec![BigInt::one()],
            double_factorials: vec![BigInt::one(), BigInt::one()],
        }
    }

    pub fn len(&self) -> usize {
        self.factorials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factorials.is_empty()
    }

    pub fn reserve_to(&mut self, n: usize) {
        while self.factorials.len() <= n {
            let m = self.factorials.len();
            let next = &self.factorials[m - 1] * BigInt::from(m);
            self.factorials.push(next);
        }
        while self.double_factorials.len() <= n {
            let m = self.double_factorials.len();
            let next = &self.double_factorials[m - 2] * BigInt::from(m);
            self.double_factorials.push(next);
        }
    }

    pub fn factorial(&mut self, n: usize) -> &BigInt {
        self.reserve_to(n);
        &self.factorials[n]
    }

    pub fn double_factorial(&mut self, n: usize) -> &BigInt {
        self.reserve_to(n);
        &self.double_factorials[n]
    }

    fn get_factorial(&self, n: usize) -> Option<&BigInt> {
        self.factorials.get(n)
    }

    fn get_double_factorial(&self, n: usize) -> Option<&BigInt> {
        self.double_factorials.get(n)
    }
}

static CACHE: RwLock<Option<FactorialCache>> = RwLock::new(None);

fn cached<F>(n: usize, get: F) -> BigInt
where
    F: Fn(&FactorialCache, usize) -> Option<&BigInt>,
{
    if let Some(cache) = CACHE.read().unwrap().as_ref() {
        if let Some(v) = get(cache, n) {
            return v.clone();
        }
    }
    let mut guard = CACHE.write().unwrap();
    let cache = guard.get_or_insert_with(FactorialCache::new);
    cache.reserve_to(n);
    get(cache, n).cloned().expect("cache grown past n")
}

/// `n!`
pub fn factorial(n: usize) -> BigInt {
    cached(n, FactorialCache::get_factorial)
}

/// `n!!` for `n >= -3`, with `(-1)!! = 1` and `(-3)!! = -1`.
///
/// Negative even arguments and anything below `-3` are rejected.
pub fn double_factorial(n: i64) -> Result<BigInt> {
    match n {
        -1 => Ok(BigInt::one()),
        -3 => Ok(-BigInt::one()),
        n if n >= 0 => Ok(cached(n as usize, FactorialCache::get_double_factorial)),
        n => Err(domain(format!(
            "double factorial defined for n >= -3 with n odd when negative, got {n}"
        ))),
    }
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = k as usize;
    let k = k.min(n - k);
    // multiplicative form keeps intermediates small
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc = acc.div_floor(&BigInt::from(i + 1));
    }
    acc
}

/// `C(n, k)` as a rational.
pub fn binomial_q(n: usize, k: i64) -> Rational {
    from_int(binomial(n, k))
}

/// `x (x-1) ... (x-n+1)`
pub fn falling_factorial(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term -= Rational::one();
    }
    acc
}

/// `x (x+1) ... (x+n-1)`
pub fn rising_factorial(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// Sum of products over a running common denominator, reduced once at the end.
pub(crate) struct DotSum {
    num: BigInt,
    den: BigInt,
}

impl DotSum {
    pub(crate) fn new(start: &Rational) -> Self {
        DotSum { num: start.numer().clone(), den: start.denom().clone() }
    }

    pub(crate) fn add_product(&mut self, a: &Rational, b: &Rational, scale: i64) {
        self.add_fraction(a.numer() * b.numer() * scale, a.denom() * b.denom());
    }

    /// Adds `tn / td` for `td > 0`, not necessarily reduced.
    pub(crate) fn add_fraction(&mut self, tn: BigInt, td: BigInt) {
        if tn.is_zero() {
            return;
        }
        let g = self.den.gcd(&td);
        if g.is_one() {
            self.num = &self.num * &td + tn * &self.den;
            self.den *= td;
        } else {
            let td_g = &td / &g;
            self.num = &self.num * &td_g + tn * (&self.den / &g);
            self.den *= td_g;
        }
    }

    pub(crate) fn finish(self) -> Rational {
        Rational::new(self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(1), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(factorial(20), int(2_432_902_008_176_640_000));
    }

    #[test]
    fn factorial_matches_repeated_multiplication() {
        let mut acc = int(1);
        for n in 1..40usize {
            acc *= int(n as i64);
            assert_eq!(factorial(n), acc);
        }
    }

    #[test]
    fn double_factorial_extension() {
        assert_eq!(double_factorial(-3).unwrap(), int(-1));
        assert_eq!(double_factorial(-1).unwrap(), int(1));
        assert_eq!(double_factorial(0).unwrap(), int(1));
        assert_eq!(double_factorial(6).unwrap(), int(48));
        assert_eq!(double_factorial(7).unwrap(), int(105));
    }

    #[test]
    fn double_factorial_rejects_bad_arguments() {
        assert!(double_factorial(-2).is_err());
        assert!(double_factorial(-4).is_err());
        assert!(double_factorial(-5).is_err());
    }

    #[test]
    fn double_factorials_multiply_to_factorial() {
        for k in 1..=12i64 {
            let lhs = double_factorial(2 * k).unwrap() * double_factorial(2 * k - 1).unwrap();
            assert_eq!(lhs, factorial(2 * k as usize));
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(9, 0), int(1));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(3, -1), int(0));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![int(1)];
        for n in 1..=30usize {
            let mut next = vec![int(1); n + 1];
            for k in 1..n {
                next[k] = &row[k - 1] + &row[k];
            }
            for (k, v) in next.iter().enumerate() {
                assert_eq!(&binomial(n, k as i64), v);
            }
            row = next;
        }
    }

    #[test]
    fn hockey_stick() {
        for n in 0..=25usize {
            for m in 0..=n {
                let lhs: BigInt = (m..=n).map(|k| binomial(k, m as i64)).sum();
                assert_eq!(lhs, binomial(n + 1, m as i64 + 1));
            }
        }
    }

    #[test]
    fn falling_and_rising() {
        let x = rat(7);
        assert_eq!(falling_factorial(&x, 0), rat(1));
        assert_eq!(falling_factorial(&ratio(1, 2), 2), ratio(-1, 4));
        assert_eq!(falling_factorial(&rat(3), 3), rat(6));
        assert_eq!(rising_factorial(&x, 0), rat(1));
        assert_eq!(rising_factorial(&rat(1), 6), rat(720));
        assert_eq!(rising_factorial(&ratio(-1, 2), 2), ratio(-1, 4));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-1/2").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("4/-8").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("\u{2212}3").unwrap(), rat(-3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&ratio(6, -4)), "-3/2");
        assert_eq!(format_rational(&rat(0)), "0");
        assert_eq!(format_rational(&ratio(10, 5)), "2");
    }

    #[test]
    fn cache_grows() {
        let mut c = FactorialCache::new();
        assert_eq!(c.factorial(10), &int(3_628_800));
        assert_eq!(c.double_factorial(9), &int(945));
        assert!(c.len() > 10);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn rising_of_negation_is_signed_falling(p in -50i64..50, q in 1i64..20, n in 0usize..=12) {
                let x = ratio(p, q);
                let lhs = rising_factorial(&-x.clone(), n);
                let rhs = falling_factorial(&x, n) * rat(neg_one_pow(n));
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn format_parse_round_trip(p in any::<i64>(), q in 1i64..i64::MAX) {
                let x = ratio(p, q);
                prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
            }
        }
    }
}
