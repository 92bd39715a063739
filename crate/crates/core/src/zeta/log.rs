//! Base-`p` logarithms of exact rationals, as rational enclosures.
//!
//! The integer part comes from exact comparisons with powers of `p`; the
//! fraction is produced bit by bit by repeated squaring of dyadic lower and
//! upper bounds on `x / p^e`. The loop stops early, with a wider result,
//! as soon as the two bounds disagree on a bit.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::interval::round_dyadic;
use super::RationalInterval;
use crate::exact::pow_rat;
use crate::{Error, Result};

/// `e` with `p^e <= x < p^(e+1)`, for `x > 0`.
pub fn floor_log(x: &BigRational, p: u64) -> i64 {
    debug_assert!(x.is_positive() && p >= 2);
    let base = BigRational::from_integer(BigInt::from(p));
    let bits = x.numer().bits() as f64 - x.denom().bits() as f64;
    let mut e = (bits / (p as f64).log2()).floor() as i64;
    while pow_rat(&base, e) > *x {
        e -= 1;
    }
    while pow_rat(&base, e + 1) <= *x {
        e += 1;
    }
    e
}

/// Enclosure of `log_p x` of width at most `2^-bits`, for `x > 0`.
pub fn log_p(x: &BigRational, p: u64, bits: u32) -> Result<RationalInterval> {
    if !x.is_positive() {
        return Err(Error::InvalidParameter(format!("log of non-positive value {x}")));
    }
    if p < 2 {
        return Err(Error::InvalidParameter(format!("log base must be >= 2, got {p}")));
    }
    let base = BigRational::from_integer(BigInt::from(p));
    let e = floor_log(x, p);
    let y = x / pow_rat(&base, e);
    let w = u64::from(bits) * 2 + 64;
    let mut lo = round_dyadic(&y, w, false);
    let mut hi = round_dyadic(&y, w, true);
    let mut acc = BigRational::zero();
    let mut step = BigRational::one();
    for _ in 0..bits {
        step /= BigRational::from_integer(2.into());
        lo = round_dyadic(&(&lo * &lo), w, false);
        hi = round_dyadic(&(&hi * &hi), w, true);
        if lo >= base {
            acc += &step;
            lo = round_dyadic(&(&lo / &base), w, false);
            hi = round_dyadic(&(&hi / &base), w, true);
        } else if hi >= base {
            let start = BigRational::from_integer(e.into()) + acc;
            let width = &step * BigRational::from_integer(2.into());
            return Ok(RationalInterval::new(start.clone(), start + width));
        }
    }
    let start = BigRational::from_integer(e.into()) + acc;
    Ok(RationalInterval::new(start.clone(), start + step))
}

/// Enclosure of `log_p` over a positive interval.
pub fn log_p_interval(x: &RationalInterval, p: u64, bits: u32) -> Result<RationalInterval> {
    if !x.lo().is_positive() {
        return Err(Error::EnclosureContainsZero(format!(
            "log of an enclosure that is not strictly positive: {x:?}"
        )));
    }
    let lo = log_p(x.lo(), p, bits)?;
    let hi = log_p(x.hi(), p, bits)?;
    Ok(RationalInterval::new(lo.lo().clone(), hi.hi().clone()))
}
