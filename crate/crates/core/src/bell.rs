//! Partial Bell polynomials `B_{n,k}(x_1, ..., x_{n-k+1})` evaluated at
//! explicit rational arguments, and the closed forms for four special
//! argument families.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial, from_int, DotSum, neg_one_pow, rat, ratio, Rational};
use crate::stirling::{first_kind_kernel, second_kind_kernel, stirling1, stirling2};

/// Argument list `x_1, x_2, ...` of a partial Bell polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellArgs(pub Vec<Rational>);

impl BellArgs {
    pub fn new(values: Vec<Rational>) -> Self {
        BellArgs(values)
    }

    /// `x_i` (1-based).
    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<Rational>> for BellArgs {
    fn from(v: Vec<Rational>) -> Self {
        BellArgs(v)
    }
}

/// Calls `visit` with the multiplicity vector `l` (`l[i-1]` = copies of part
/// `i`) of every partition of `n` into exactly `k` parts, each part at most
/// `n - k + 1`. Returns the number of partitions visited.
pub fn for_each_partition(n: usize, k: usize, mut visit: impl FnMut(&[usize])) -> usize {
    if k > n {
        return 0;
    }
    if k == 0 {
        if n == 0 {
            visit(&[]);
            return 1;
        }
        return 0;
    }
    let width = n - k + 1;
    let mut mult = vec![0usize; width];
    let mut count = 0;
    // parts chosen in non-increasing order
    fn go(
        remaining: usize,
        parts_left: usize,
        max_part: usize,
        mult: &mut [usize],
        count: &mut usize,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if parts_left == 0 {
            if remaining == 0 {
                *count += 1;
                visit(mult);
            }
            return;
        }
        // every remaining part is >= 1 and <= max_part
        if remaining < parts_left || remaining > parts_left * max_part {
            return;
        }
        let hi = max_part.min(remaining - (parts_left - 1));
        for p in (1..=hi).rev() {
            mult[p - 1] += 1;
            go(remaining - p, parts_left - 1, p, mult, count, visit);
            mult[p - 1] -= 1;
        }
    }
    go(n, k, width, &mut mult, &mut count, &mut visit);
    count
}

/// `B_{n,k}(x_1, ..., x_{n-k+1})` by direct summation over partitions.
///
/// `B_{0,0} = 1` and `B_{n,0} = 0` for `n >= 1`.
pub fn bell_partial(n: usize, k: usize, xs: &BellArgs) -> Result<Rational> {
    if k > n {
        return Err(Error::Domain(format!("partial Bell polynomial needs k <= n, got n={n}, k={k}")));
    }
    if k == 0 {
        return Ok(if n == 0 { Rational::one() } else { Rational::zero() });
    }
    let width = n - k + 1;
    if xs.len() < width {
        return Err(Error::InsufficientArgs { needed: width, got: xs.len() });
    }
    let fact: Vec<BigInt> = (0..=n).map(factorial).collect();
    // x_i / i!, kept unreduced as numerator and denominator
    let (nums, dens): (Vec<BigInt>, Vec<BigInt>) =
        (1..=width).map(|i| (xs.get(i).numer().clone(), xs.get(i).denom() * &fact[i])).unzip();
    let mut total = DotSum::new(&Rational::zero());
    for_each_partition(n, k, |mult| {
        let mut num = fact[n].clone();
        let mut den = BigInt::one();
        for (i, &l) in mult.iter().enumerate() {
            if l == 0 {
                continue;
            }
            den *= &fact[l];
            num *= Pow::pow(&nums[i], l);
            den *= Pow::pow(&dens[i], l);
        }
        total.add_fraction(num, den);
    });
    Ok(total.finish())
}

/// Argument families with known closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BellFamily {
    /// `1/2, 1/3, 1/4, ...`
    Halves,
    /// `1!/2, 2!/3, 3!/4, ...`
    FactorialOverNext,
    /// `1, 1, 1, ...`
    Ones,
    /// `0!, 1!, 2!, ...`
    Factorials,
}

impl BellFamily {
    pub const ALL: [BellFamily; 4] =
        [BellFamily::Halves, BellFamily::FactorialOverNext, BellFamily::Ones, BellFamily::Factorials];

    pub fn name(self) -> &'static str {
        match self {
            BellFamily::Halves => "halves",
            BellFamily::FactorialOverNext => "factorial_over_next",
            BellFamily::Ones => "ones",
            BellFamily::Factorials => "factorials",
        }
    }

    /// `x_i` of the family.
    pub fn arg(self, i: usize) -> Rational {
        match self {
            BellFamily::Halves => ratio(1, i as i64 + 1),
            BellFamily::FactorialOverNext => from_int(factorial(i)) / rat(i as i64 + 1),
            BellFamily::Ones => Rational::one(),
            BellFamily::Factorials => from_int(factorial(i - 1)),
        }
    }

    /// Explicit arguments `x_1..=x_len`.
    pub fn args(self, len: usize) -> BellArgs {
        BellArgs((1..=len).map(|i| self.arg(i)).collect())
    }
}

/// Closed-form value of `B_{n,k}` at the family's arguments.
pub fn bell_special(n: usize, k: usize, family: BellFamily) -> Result<Rational> {
    if k > n {
        return Err(Error::Domain(format!("partial Bell polynomial needs k <= n, got n={n}, k={k}")));
    }
    let sign = rat(neg_one_pow(n - k));
    Ok(match family {
        BellFamily::Halves => {
            // (-1)^{k-l} = (-1)^k (-1)^l
            from_int(factorial(n)) / from_int(factorial(n + k))
                * rat(neg_one_pow(k))
                * from_int(second_kind_kernel(n, k))
        }
        BellFamily::FactorialOverNext => sign / from_int(factorial(k)) * first_kind_kernel(n, k),
        BellFamily::Ones => from_int(stirling2(n, k as i64)),
        BellFamily::Factorials => sign * from_int(stirling1(n, k as i64)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xs(vals: &[i64]) -> BellArgs {
        BellArgs(vals.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn single_part_is_last_argument() {
        let args = xs(&[2, 3, 5, 7, 11, 13]);
        for n in 1..=6 {
            assert_eq!(&bell_partial(n, 1, &args).unwrap(), args.get(n));
        }
    }

    #[test]
    fn small_polynomials() {
        // B_{3,2}(x1, x2) = 3 x1 x2
        let (x1, x2, x3) = (5i64, 7i64, 11i64);
        assert_eq!(bell_partial(3, 2, &xs(&[x1, x2])).unwrap(), rat(3 * x1 * x2));
        // B_{4,2}(x1, x2, x3) = 4 x1 x3 + 3 x2^2
        assert_eq!(bell_partial(4, 2, &xs(&[x1, x2, x3])).unwrap(), rat(4 * x1 * x3 + 3 * x2 * x2));
        assert_eq!(bell_partial(0, 0, &xs(&[])).unwrap(), rat(1));
        assert_eq!(bell_partial(3, 0, &xs(&[1, 1, 1, 1])).unwrap(), rat(0));
    }

    #[test]
    fn errors() {
        assert!(matches!(bell_partial(2, 3, &xs(&[1, 1])), Err(Error::Domain(_))));
        assert_eq!(
            bell_partial(5, 2, &xs(&[1, 1])),
            Err(Error::InsufficientArgs { needed: 4, got: 2 })
        );
        assert!(bell_special(1, 2, BellFamily::Ones).is_err());
    }

    #[test]
    fn partition_counts() {
        // p(n, k) for n = 10: 1, 5, 8, 9, 7, 5, 3, 2, 1, 1
        let counts: Vec<usize> = (1..=10).map(|k| for_each_partition(10, k, |_| {})).collect();
        assert_eq!(counts, vec![1, 5, 8, 9, 7, 5, 3, 2, 1, 1]);
        assert_eq!(for_each_partition(0, 0, |_| {}), 1);
        assert_eq!(for_each_partition(3, 0, |_| {}), 0);
    }

    #[test]
    fn special_examples() {
        for n in 0..6 {
            assert_eq!(bell_special(n, n, BellFamily::Ones).unwrap(), rat(1));
        }
        assert_eq!(bell_special(1, 1, BellFamily::Halves).unwrap(), ratio(1, 2));
        assert_eq!(bell_special(3, 2, BellFamily::Factorials).unwrap(), rat(3));
    }

    #[test]
    fn closed_forms_match_definition() {
        for family in BellFamily::ALL {
            for n in 0..=10 {
                for k in 0..=n {
                    let direct = bell_partial(n, k, &family.args(n - k + 1)).unwrap();
                    let closed = bell_special(n, k, family).unwrap();
                    assert_eq!(direct, closed, "{} n={n} k={k}", family.name());
                }
            }
        }
    }
}
