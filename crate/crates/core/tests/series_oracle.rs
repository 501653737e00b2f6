use bstir::bernoulli::{bernoulli_baseline, generalized_bernoulli};
use bstir::exact::{factorial, from_int, rat, ratio, Rational};
use bstir::fps::{series_expm1_over_x, PowerSeries};
use bstir::hessenberg::{det_elimination, det_recursive_with_stats, HessenbergMatrix};
use num_traits::{One, Zero};
use proptest::prelude::*;

const ORDER: usize = 8;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| ratio(p, q))
}

fn series() -> impl Strategy<Value = PowerSeries> {
    proptest::collection::vec(small_rational(), ORDER + 1).prop_map(PowerSeries::new)
}

fn unit_series() -> impl Strategy<Value = PowerSeries> {
    proptest::collection::vec(small_rational(), ORDER).prop_map(|tail| {
        let mut c = vec![Rational::one()];
        c.extend(tail);
        PowerSeries::new(c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mul_commutes(a in series(), b in series()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn mul_associates(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn div_undoes_mul(a in series(), u in unit_series()) {
        prop_assert_eq!(a.mul(&u).unwrap().div(&u).unwrap(), a);
    }

    #[test]
    fn pow_adds_exponents(u in unit_series(), r in small_rational(), s in small_rational()) {
        let lhs = u.pow(&(&r + &s)).unwrap();
        let rhs = u.pow(&r).unwrap().mul(&u.pow(&s).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_inverts_log(u in unit_series()) {
        prop_assert_eq!(u.log().unwrap().exp().unwrap(), u);
    }

    #[test]
    fn elimination_matches_recursion(size in 1usize..=9, seed in proptest::collection::vec(small_rational(), 81)) {
        let m = HessenbergMatrix::from_fn(size, |i, j| {
            if j <= i + 1 { seed[(i - 1) * 9 + (j - 1)].clone() } else { Rational::zero() }
        });
        let (det, _) = det_recursive_with_stats(&m);
        prop_assert_eq!(det, det_elimination(&m));
    }
}

#[test]
fn generalized_bernoulli_matches_power() {
    const N: usize = 14;
    let base = series_expm1_over_x(N);
    for r in [rat(-2), rat(-1), ratio(-1, 2), ratio(1, 2), rat(1), ratio(3, 2), rat(2)] {
        // (x/(e^x - 1))^r = ((e^x - 1)/x)^(-r)
        let s = base.pow(&-r.clone()).unwrap();
        for n in 0..=N {
            assert_eq!(generalized_bernoulli(n, &r), s.coeff(n) * from_int(factorial(n)), "r={r} n={n}");
        }
    }
}

#[test]
fn generalized_bernoulli_order_one_is_bernoulli() {
    for n in 0..=20 {
        assert_eq!(generalized_bernoulli(n, &rat(1)), bernoulli_baseline(n));
    }
}

#[test]
fn odd_bernoulli_vanish() {
    for k in 1..=20 {
        assert!(bernoulli_baseline(2 * k + 1).is_zero());
    }
}

#[test]
fn connection_identities_hold_for_wider_r_set() {
    let r_set = [rat(-2), rat(-1), ratio(-1, 2), ratio(1, 2), rat(1), ratio(3, 2), rat(2)];
    let report = bstir::identities::audit(12, &r_set);
    assert!(report.all_pass(), "{:?}", report.failures().next());
}
