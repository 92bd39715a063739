mod common;

use common::{gauss, q_of, rpow};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qzeta_core::cyclotomic::{cyclotomic_poly, d_eval};
use qzeta_core::exact::qcalc::{
    expand_pochhammer_basis, gauss_binomial, pochhammer_poly, q_derivative, q_newton_dual, q_newton_expand,
    to_pochhammer_basis,
};
use qzeta_core::RatPoly;

fn base() -> impl Strategy<Value = u64> {
    prop::sample::select(common::PRIMES.to_vec())
}

fn rat_poly(max_deg: usize) -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(-20i64..=20, 1..=max_deg + 1).prop_map(|c| {
        RatPoly::from_coeffs(c.into_iter().map(|v| BigRational::from_integer(v.into())).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gaussian_binomial_matches_product_formula(n in 0u32..14, k in 0u32..14, p in base()) {
        let q = q_of(p);
        prop_assert_eq!(gauss_binomial(n as usize, i64::from(k), &q), gauss(n, k, &q));
    }

    #[test]
    fn pascal_both_forms(n in 1usize..14, k in 0i64..14, p in base()) {
        let q = q_of(p);
        let g = |n: usize, k: i64| gauss_binomial(n, k, &q);
        let qk = rpow(&q, k as u32);
        let qnk = if k as usize <= n { rpow(&q, (n as i64 - k) as u32) } else { BigRational::zero() };
        prop_assert_eq!(g(n, k), g(n - 1, k - 1) + &qk * g(n - 1, k));
        if k as usize <= n {
            prop_assert_eq!(g(n, k), &qnk * g(n - 1, k - 1) + g(n - 1, k));
        }
    }

    #[test]
    fn q_newton_round_trip(f in rat_poly(9), p in base()) {
        let q = q_of(p);
        let coeffs = to_pochhammer_basis(&f, &q);
        prop_assert_eq!(expand_pochhammer_basis(&coeffs, &BigRational::one(), &q), f);
    }

    #[test]
    fn q_newton_pair_inverts(n in 0usize..10, p in base()) {
        let q = q_of(p);
        let dual = q_newton_dual(n, &q);
        let back = expand_pochhammer_basis(&dual, &BigRational::one(), &q);
        prop_assert_eq!(back, RatPoly::monomial(BigRational::one(), n));
        prop_assert_eq!(q_newton_expand(n, &q), pochhammer_poly(&BigRational::one(), &q, n));
    }

    #[test]
    fn q_derivative_is_linear_and_lowers_degree(f in rat_poly(8), g in rat_poly(8), p in base()) {
        let r = BigRational::from_integer(BigInt::from(p));
        let sum = q_derivative(&(&f + &g), &r);
        prop_assert_eq!(sum, &q_derivative(&f, &r) + &q_derivative(&g, &r));
        if let Some(d) = f.degree().filter(|&d| d > 0) {
            prop_assert_eq!(q_derivative(&f, &r).degree(), Some(d - 1));
        }
    }

    #[test]
    fn cyclotomic_values_match_mobius(n in 1u64..40, p in base()) {
        let phi = cyclotomic_poly(n as usize).unwrap();
        prop_assert_eq!(phi.eval(&BigInt::from(p)), common::phi_value(n, p));
    }

    #[test]
    fn d_matches_oracle(n in 1u64..30, p in base()) {
        prop_assert_eq!(d_eval(n as usize, p).unwrap(), common::d_value(n, p));
    }
}

#[test]
fn q_derivative_of_monomial() {
    // D_p x^s = [s]_p x^(s-1)
    let r = BigRational::from_integer(3.into());
    for s in 1..8 {
        let f = RatPoly::monomial(BigRational::one(), s);
        let bracket: BigRational = (0..s).map(|i| rpow(&r, i as u32)).sum();
        assert_eq!(q_derivative(&f, &r), RatPoly::monomial(bracket, s - 1));
    }
}
