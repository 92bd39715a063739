//! Enclosures of `zeta_q(1)`, `zeta_q(2)` and the Markov functions
//!
//! ```text
//! f1(z) = sum_{k>=0} q^k / (z - q^k),    f2(z) = sum_{k>=0} k q^k / (z - q^k)
//! ```
//!
//! at `z = p^M`, plus log-decay diagnostics and the measure constants.
//!
//! Tails use `1/(p^j - 1) <= p^(1-j)/(p-1)` for `j >= 1`.

pub mod constants;
pub mod decimal;
pub mod interval;
pub mod log;

pub use constants::{constants, irrationality_measure_constants, Constants};
pub use interval::RationalInterval;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::QContext;
use crate::{Error, Result};

/// The nominal truncation depth for row `n`.
///
/// Too shallow for the residuals of large rows; the residual routines pick
/// their own depth from the sizes involved.
pub fn default_depth(n: u32) -> u32 {
    16 * n
}

fn check_depth(depth: u32) -> Result<()> {
    if depth == 0 {
        return Err(Error::InvalidParameter("truncation depth must be >= 1".into()));
    }
    Ok(())
}

fn p_minus_one(ctx: &QContext) -> BigRational {
    ctx.p_rat() - BigRational::one()
}

/// `sum_{k=1}^{upto} 1/(p^k - 1)`
pub fn partial_sum_q1(ctx: &QContext, upto: u32) -> BigRational {
    (1..=upto)
        .map(|k| BigRational::new(BigInt::one(), ctx.p_pow(u64::from(k)) - 1u32))
        .sum()
}

/// `sum_{k=1}^{upto} k/(p^k - 1)`
pub fn partial_sum_q2(ctx: &QContext, upto: u32) -> BigRational {
    (1..=upto)
        .map(|k| BigRational::new(BigInt::from(k), ctx.p_pow(u64::from(k)) - 1u32))
        .sum()
}

/// `sum_{k>N} 1/(p^k - 1) <= p^(1-N)/(p-1)^2`
pub fn tail_q1(ctx: &QContext, depth: u32) -> BigRational {
    let pm1 = p_minus_one(ctx);
    ctx.q_pow(i64::from(depth) - 1) / (&pm1 * &pm1)
}

/// `sum_{k>N} k/(p^k - 1) <= p^(1-N)((N+1)p - N)/(p-1)^3`
pub fn tail_q2(ctx: &QContext, depth: u32) -> BigRational {
    let pm1 = p_minus_one(ctx);
    let n = BigRational::from_integer(depth.into());
    let lead = (&n + BigRational::one()) * ctx.p_rat() - &n;
    ctx.q_pow(i64::from(depth) - 1) * lead / (&pm1 * &pm1 * &pm1)
}

/// `[S_N, S_N + T_N]` with the exact partial sum of `zeta_q(1)`.
pub fn zeta_q1(ctx: &QContext, depth: u32) -> Result<RationalInterval> {
    check_depth(depth)?;
    let s = partial_sum_q1(ctx, depth);
    let t = tail_q1(ctx, depth);
    Ok(RationalInterval::new(s.clone(), s + t))
}

/// `[S_N, S_N + T_N]` with the exact partial sum of `zeta_q(2)`.
pub fn zeta_q2(ctx: &QContext, depth: u32) -> Result<RationalInterval> {
    check_depth(depth)?;
    let s = partial_sum_q2(ctx, depth);
    let t = tail_q2(ctx, depth);
    Ok(RationalInterval::new(s.clone(), s + t))
}

/// `sum_{k in range} w(k)/(p^k - 1)` with every term rounded outward to
/// `bits` binary places.
fn dyadic_sum(
    ctx: &QContext,
    range: impl Iterator<Item = u64>,
    weight: impl Fn(u64) -> BigInt,
    bits: u64,
) -> RationalInterval {
    let scale = BigInt::one() << bits;
    let (mut lo, mut hi) = (BigInt::zero(), BigInt::zero());
    for k in range {
        let (quot, rem) = (weight(k) * &scale).div_rem(&(ctx.p_pow(k) - 1u32));
        if !rem.is_zero() {
            hi += 1u32;
        }
        lo += &quot;
        hi += quot;
    }
    RationalInterval::new(
        BigRational::new(lo, scale.clone()),
        BigRational::new(hi, scale),
    )
}

/// [`zeta_q1`] with partial-sum terms rounded outward to `bits` binary places,
/// for depths where the exact partial sum is too large to handle.
pub fn zeta_q1_dyadic(ctx: &QContext, depth: u32, bits: u64) -> Result<RationalInterval> {
    check_depth(depth)?;
    let s = dyadic_sum(ctx, 1..=u64::from(depth), |_| BigInt::one(), bits);
    Ok(RationalInterval::new(s.lo().clone(), s.hi() + tail_q1(ctx, depth)))
}

/// [`zeta_q2`] with partial-sum terms rounded outward to `bits` binary places.
pub fn zeta_q2_dyadic(ctx: &QContext, depth: u32, bits: u64) -> Result<RationalInterval> {
    check_depth(depth)?;
    let s = dyadic_sum(ctx, 1..=u64::from(depth), BigInt::from, bits);
    Ok(RationalInterval::new(s.lo().clone(), s.hi() + tail_q2(ctx, depth)))
}

/// A depth at which both tail bounds are below `2^-bits`.
pub fn depth_for_bits(ctx: &QContext, bits: u64) -> u32 {
    let target = BigRational::new(BigInt::one(), BigInt::one() << bits);
    // starting guess only; the loop below decides
    let guess = bits as f64 / (ctx.p() as f64).log2();
    let mut depth = (guess as u32).max(1);
    while tail_q2(ctx, depth) >= target || tail_q1(ctx, depth) >= target {
        depth += 1;
    }
    depth
}

/// `f1(p^M) = sum_{j>=M} 1/(p^j - 1)`, from `terms` terms and the tail bound
/// `p^(2-M-K)/(p-1)^2`.
pub fn f1_at_power(ctx: &QContext, m: u32, terms: u32) -> Result<RationalInterval> {
    if m == 0 {
        return Err(Error::InvalidParameter("f1(p^M) needs M >= 1".into()));
    }
    let s: BigRational = (0..terms)
        .map(|k| BigRational::new(BigInt::one(), ctx.p_pow(u64::from(m + k)) - 1u32))
        .sum();
    let pm1 = p_minus_one(ctx);
    let tail = ctx.q_pow(i64::from(m) + i64::from(terms) - 2) / (&pm1 * &pm1);
    Ok(RationalInterval::new(s.clone(), s + tail))
}

/// `f2(p^M) = sum_{k>=0} k/(p^(M+k) - 1)`, from `terms` terms and the tail
/// bound `p^(2-M-K)(K(p-1) + 1)/(p-1)^3`.
pub fn f2_at_power(ctx: &QContext, m: u32, terms: u32) -> Result<RationalInterval> {
    if m == 0 {
        return Err(Error::InvalidParameter("f2(p^M) needs M >= 1".into()));
    }
    let s: BigRational = (0..terms)
        .map(|k| BigRational::new(BigInt::from(k), ctx.p_pow(u64::from(m + k)) - 1u32))
        .sum();
    let pm1 = p_minus_one(ctx);
    let k = BigRational::from_integer(terms.into());
    let tail = ctx.q_pow(i64::from(m) + i64::from(terms) - 2) * (k * &pm1 + BigRational::one())
        / (&pm1 * &pm1 * &pm1);
    Ok(RationalInterval::new(s.clone(), s + tail))
}

/// `zeta_q(1) - sum_{k<M} 1/(p^k - 1)`: the shifted form of `f1(p^M)`.
pub fn f1_from_zeta(ctx: &QContext, zeta1: &RationalInterval, m: u32) -> RationalInterval {
    zeta1.add_scalar(&-partial_sum_q1(ctx, m.saturating_sub(1)))
}

/// `zeta_q(2) - sum_{k<M} k/(p^k - 1) - M f1(p^M)`: the shifted form of `f2(p^M)`.
pub fn f2_from_zeta(
    ctx: &QContext,
    zeta2: &RationalInterval,
    f1: &RationalInterval,
    m: u32,
) -> RationalInterval {
    let shifted = zeta2.add_scalar(&-partial_sum_q2(ctx, m.saturating_sub(1)));
    &shifted - &f1.scale(&BigRational::from_integer(m.into()))
}

/// Enclosures of `log_p |r_n| / n^2`, one per `(n, r_n)`.
pub fn decay_exponent(
    p: u64,
    values: &[(u32, RationalInterval)],
    bits: u32,
) -> Result<Vec<RationalInterval>> {
    values
        .iter()
        .map(|(n, r)| {
            if r.contains_zero() {
                return Err(Error::EnclosureContainsZero(format!(
                    "residual for n = {n} is not bounded away from zero"
                )));
            }
            if *n == 0 {
                return Err(Error::InvalidParameter("decay exponent needs n >= 1".into()));
            }
            let l = log::log_p_interval(&r.abs(), p, bits)?;
            let n2 = BigRational::from_integer(BigInt::from(*n) * BigInt::from(*n));
            Ok(l.scale(&n2.recip()))
        })
        .collect()
}

/// `true` if the enclosure fits in `[-bound, bound]`.
pub fn within_bound(x: &RationalInterval, bound: &BigRational) -> bool {
    let b = bound.abs();
    x.lo() >= &-&b && x.hi() <= &b
}
