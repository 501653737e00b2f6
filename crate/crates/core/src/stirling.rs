//! Signed Stirling numbers of the first kind `s(n, k)` and Stirling numbers
//! of the second kind `S(n, k)`.
//!
//! Triangles are filled by the usual recurrences
//! `s(n+1, k) = s(n, k-1) - n s(n, k)` and `S(n+1, k) = S(n, k-1) + k S(n, k)`.
//! The free functions read from a shared table that only ever grows.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{binomial, binomial_q, factorial, from_int, neg_one_pow, rat, rising_factorial, Rational};

static ZERO: BigInt = BigInt::ZERO;

/// Both Stirling triangles up to some row.
#[derive(Debug, Clone)]
pub struct StirlingTables {
    s1: Vec<Vec<BigInt>>,
    s2: Vec<Vec<BigInt>>,
}

impl Default for StirlingTables {
    fn default() -> Self {
        Self::new(0)
    }
}

impl StirlingTables {
    /// Tables holding rows `0..=max_n`.
    pub fn new(max_n: usize) -> Self {
        let mut t = StirlingTables {
            s1: vec![vec![BigInt::one()]],
            s2: vec![vec![BigInt::one()]],
        };
        t.extend_to(max_n);
        t
    }

    /// Highest row currently stored.
    pub fn max_n(&self) -> usize {
        self.s1.len() - 1
    }

    pub fn extend_to(&mut self, max_n: usize) {
        while self.s1.len() <= max_n {
            let n = self.s1.len() - 1;
            let prev1 = &self.s1[n];
            let prev2 = &self.s2[n];
            let mut row1 = vec![BigInt::zero(); n + 2];
            let mut row2 = vec![BigInt::zero(); n + 2];
            for k in 1..=n + 1 {
                let up1 = if k <= n { &prev1[k] * BigInt::from(n) } else { BigInt::zero() };
                row1[k] = &prev1[k - 1] - up1;
                let up2 = if k <= n { &prev2[k] * BigInt::from(k) } else { BigInt::zero() };
                row2[k] = &prev2[k - 1] + up2;
            }
            self.s1.push(row1);
            self.s2.push(row2);
        }
    }

    /// `s(n, k)`; zero when `k` is out of range. Panics if row `n` is not stored.
    pub fn s1(&self, n: usize, k: i64) -> &BigInt {
        lookup(&self.s1, n, k)
    }

    /// `S(n, k)`; zero when `k` is out of range. Panics if row `n` is not stored.
    pub fn s2(&self, n: usize, k: i64) -> &BigInt {
        lookup(&self.s2, n, k)
    }

    pub fn row1(&self, n: usize) -> &[BigInt] {
        &self.s1[n]
    }

    pub fn row2(&self, n: usize) -> &[BigInt] {
        &self.s2[n]
    }
}

fn lookup(table: &[Vec<BigInt>], n: usize, k: i64) -> &BigInt {
    assert!(n < table.len(), "stirling row {n} not built");
    if k < 0 || k as usize > n {
        &ZERO
    } else {
        &table[n][k as usize]
    }
}

static SHARED: RwLock<Option<StirlingTables>> = RwLock::new(None);

fn with_tables<T>(n: usize, f: impl Fn(&StirlingTables) -> T) -> T {
    if let Some(t) = SHARED.read().unwrap().as_ref() {
        if t.max_n() >= n {
            return f(t);
        }
    }
    let mut guard = SHARED.write().unwrap();
    let t = guard.get_or_insert_with(StirlingTables::default);
    // grow in chunks so a sweep over n does not relock every row
    t.extend_to(n.max(t.max_n() + 16));
    f(t)
}

/// Signed Stirling number of the first kind `s(n, k)`.
pub fn stirling1(n: usize, k: i64) -> BigInt {
    with_tables(n, |t| t.s1(n, k).clone())
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: usize, k: i64) -> BigInt {
    with_tables(n, |t| t.s2(n, k).clone())
}

/// Row `s(n, 0..=n)`.
pub fn stirling1_row(n: usize) -> Vec<BigInt> {
    with_tables(n, |t| t.row1(n).to_vec())
}

/// Row `S(n, 0..=n)`.
pub fn stirling2_row(n: usize) -> Vec<BigInt> {
    with_tables(n, |t| t.row2(n).to_vec())
}

/// `sum_{m=0}^{k} (-1)^m C(k, m) s(n+m, m) / C(n+m, m)`.
///
/// Equals `k! (-1)^(n-k) B_{n,k}(1!/2, 2!/3, ...)`; it appears in every
/// first-kind closed form.
pub fn first_kind_kernel(n: usize, k: usize) -> Rational {
    let mut acc = Rational::zero();
    for m in 0..=k {
        let term = from_int(binomial(k, m as i64) * stirling1(n + m, m as i64))
            / binomial_q(n + m, m as i64);
        acc += term * rat(neg_one_pow(m));
    }
    acc
}

/// `sum_{l=0}^{k} (-1)^l C(n+k, k-l) S(n+l, l)`.
///
/// Equals `(-1)^k (n+k)!/n! B_{n,k}(1/2, 1/3, ...)`; it appears in every
/// second-kind closed form.
pub fn second_kind_kernel(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for l in 0..=k {
        let term = binomial(n + k, (k - l) as i64) * stirling2(n + l, l as i64);
        if l % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Right-hand side of the first-kind diagonal identity; equals `s(n+r, r)`.
pub fn diagonal_stirling1(n: usize, r: usize) -> Rational {
    let minus_r = -rat(r as i64);
    let mut acc = Rational::zero();
    for k in 0..=n {
        let weight = rising_factorial(&minus_r, k) / from_int(factorial(k));
        acc += weight * first_kind_kernel(n, k);
    }
    acc * binomial_q(n + r, r as i64)
}

/// Right-hand side of the second-kind diagonal identity; equals `S(n+r, r)`.
pub fn diagonal_stirling2(n: usize, r: usize) -> Rational {
    let minus_r = -rat(r as i64);
    let mut acc = Rational::zero();
    for k in 0..=n {
        let weight = rising_factorial(&minus_r, k) / from_int(factorial(n + k));
        acc += weight * from_int(second_kind_kernel(n, k));
    }
    acc * from_int(factorial(n + r)) / from_int(factorial(r))
}
