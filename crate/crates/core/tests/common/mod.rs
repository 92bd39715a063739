//! Independent oracles. Nothing here calls the crate's q-calculus,
//! moments or closed forms; only plain rational arithmetic.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use qzeta_core::QContext;

pub const PRIMES: [u64; 3] = [2, 3, 5];

pub fn ctx(p: u64) -> QContext {
    QContext::new(p).unwrap()
}

pub fn q_of(p: u64) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(p))
}

pub fn rpow(x: &BigRational, e: u32) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

/// `sum_k q^k (q^k)^s`, summed in closed form as a geometric series.
pub fn moment(q: &BigRational, s: u32) -> BigRational {
    (BigRational::one() - rpow(q, s + 1)).recip()
}

/// `sum_k k q^k (q^k)^s`, the derivative of the geometric series.
pub fn log_moment(q: &BigRational, s: u32) -> BigRational {
    let t = rpow(q, s + 1);
    let d = BigRational::one() - &t;
    t / (&d * &d)
}

/// `int_0^1 (P(z) - P(x))/(z - x) w(x) d_qx` with the divided difference
/// `(z^i - x^i)/(z - x) = sum_{j<i} z^j x^(i-1-j)` paired against the
/// moments of `w`.
fn divided_difference(
    coeffs: &[BigRational],
    z: &BigRational,
    mom: impl Fn(u32) -> BigRational,
) -> BigRational {
    let mut total = BigRational::zero();
    for (i, c) in coeffs.iter().enumerate().skip(1) {
        let mut zj = BigRational::one();
        for j in 0..i {
            total += c * &zj * mom((i - 1 - j) as u32);
            zj *= z;
        }
    }
    total
}

/// `(q_{n,m}(z), r_{n,m}(z))` from monomial coefficients of `p_{n,m}`.
pub fn numerators(coeffs: &[BigRational], p: u64, z: &BigRational) -> (BigRational, BigRational) {
    let q = q_of(p);
    (
        divided_difference(coeffs, z, |s| moment(&q, s)),
        divided_difference(coeffs, z, |s| log_moment(&q, s)),
    )
}

/// Gaussian binomial by the product formula.
pub fn gauss(n: u32, k: u32, base: &BigRational) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    let one = BigRational::one();
    (0..k).fold(one.clone(), |acc, i| {
        acc * (&one - rpow(base, n - i)) / (&one - rpow(base, i + 1))
    })
}

fn mobius(mut n: u64) -> i32 {
    let mut sign = 1;
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            n /= f;
            if n.is_multiple_of(f) {
                return 0;
            }
            sign = -sign;
        }
        f += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `Phi_n(p) = prod_{e | n} (p^e - 1)^mu(n/e)`
pub fn phi_value(n: u64, p: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for e in (1..=n).filter(|e| n.is_multiple_of(*e)) {
        let v = num_traits::pow(BigInt::from(p), e as usize) - 1u32;
        match mobius(n / e) {
            1 => num *= v,
            -1 => den *= v,
            _ => {}
        }
    }
    assert!((&num % &den).is_zero());
    num / den
}

pub fn d_value(n: u64, p: u64) -> BigInt {
    (1..=n).map(|k| phi_value(k, p)).product()
}

/// `sum_{k=1}^{upto} k^e / (p^k - 1)`
pub fn zeta_partial(p: u64, upto: u32, e: u32) -> BigRational {
    (1..=upto)
        .map(|k| {
            BigRational::new(
                num_traits::pow(BigInt::from(k), e as usize),
                num_traits::pow(BigInt::from(p), k as usize) - 1u32,
            )
        })
        .sum()
}
