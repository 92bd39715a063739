//! Decimal rendering of exact rationals and enclosures.
//!
//! Rendering never narrows an enclosure: endpoints are rounded outward and
//! midpoint renderings carry a `±` radius that absorbs the display rounding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};

use super::RationalInterval;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
    Nearest,
}

fn ten_pow(e: i64) -> BigRational {
    let t = BigRational::from_integer(BigInt::from(10));
    let mag: BigRational = Pow::pow(&t, e.unsigned_abs());
    if e < 0 {
        mag.recip()
    } else {
        mag
    }
}

/// `e` with `10^e <= a < 10^(e+1)`, for `a > 0`.
pub fn decimal_exponent(a: &BigRational) -> i64 {
    debug_assert!(a.is_positive());
    let bits = a.numer().bits() as i64 - a.denom().bits() as i64;
    let mut e = (bits as f64 * std::f64::consts::LOG10_2).floor() as i64;
    while &ten_pow(e) > a {
        e -= 1;
    }
    while &ten_pow(e + 1) <= a {
        e += 1;
    }
    e
}

fn round_integer(x: &BigRational, mode: Rounding) -> BigInt {
    match mode {
        Rounding::Down => x.floor().to_integer(),
        Rounding::Up => x.ceil().to_integer(),
        Rounding::Nearest => x.round().to_integer(),
    }
}

/// `x` rounded to `digits` significant digits, as `(mantissa, exponent)` with
/// value `mantissa * 10^(exponent - digits + 1)` and `|mantissa| < 10^digits`.
pub fn round_significant(x: &BigRational, digits: usize, mode: Rounding) -> (BigInt, i64) {
    assert!(digits >= 1, "round_significant: need at least one digit");
    if x.is_zero() {
        return (BigInt::zero(), 0);
    }
    let mut e = decimal_exponent(&x.abs());
    loop {
        let scaled = x * ten_pow(digits as i64 - 1 - e);
        let mant = round_integer(&scaled, mode);
        let limit: BigInt = Pow::pow(BigInt::from(10), digits);
        if mant.abs() >= limit {
            e += 1;
            continue;
        }
        return (mant, e);
    }
}

/// The rational value of a [`round_significant`] result.
pub fn significant_value(mant: &BigInt, e: i64, digits: usize) -> BigRational {
    BigRational::from_integer(mant.clone()) * ten_pow(e - digits as i64 + 1)
}

/// Scientific notation with `digits` significant digits, e.g. `-2.1342e-1`.
pub fn format_sci(x: &BigRational, digits: usize, mode: Rounding) -> String {
    let (mant, e) = round_significant(x, digits, mode);
    if mant.is_zero() {
        return "0".to_string();
    }
    let sign = if mant.is_negative() { "-" } else { "" };
    let body = mant.abs().to_string();
    // a carry can shorten the exponent bookkeeping but never the mantissa
    let (head, tail) = body.split_at(1);
    if tail.is_empty() {
        format!("{sign}{head}e{e}")
    } else {
        format!("{sign}{head}.{tail}e{e}")
    }
}

/// Midpoint with as many digits as the radius supports (at most `max_digits`),
/// followed by `±` and a one-digit upper bound on the total error.
pub fn format_enclosure(iv: &RationalInterval, max_digits: usize) -> String {
    let mid = iv.midpoint();
    let rad = iv.width() / BigRational::from_integer(2.into());
    if rad.is_zero() && mid.is_zero() {
        return "0".to_string();
    }
    let digits = if mid.is_zero() {
        1
    } else if rad.is_zero() {
        (1..max_digits)
            .find(|&d| {
                let (mant, e) = round_significant(&mid, d, Rounding::Nearest);
                significant_value(&mant, e, d) == mid
            })
            .unwrap_or(max_digits)
    } else {
        let span = decimal_exponent(&mid.abs()) - decimal_exponent(&rad) + 1;
        span.clamp(1, max_digits as i64) as usize
    };
    let (mant, e) = round_significant(&mid, digits, Rounding::Nearest);
    let shown = significant_value(&mant, e, digits);
    let err = rad + (&mid - &shown).abs();
    let head = format_sci(&shown, digits, Rounding::Nearest);
    if err.is_zero() {
        head
    } else {
        format!("{head}±{}", format_sci(&err, 1, Rounding::Up))
    }
}

/// Parse a plain decimal literal such as `-12.0345` or `5e-3` exactly.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("{int_part}{frac_part}0").parse::<BigInt>().ok()? / 10;
    let value = BigRational::from_integer(all) * ten_pow(exp - frac_part.len() as i64);
    Some(if neg { -value } else { value })
}

/// Fixed-point rendering with `frac` fractional digits.
pub fn format_fixed(x: &BigRational, frac: usize, mode: Rounding) -> String {
    let scaled = round_integer(&(x * ten_pow(frac as i64)), mode);
    let sign = if scaled.is_negative() { "-" } else { "" };
    let (int, rem) = scaled.abs().div_rem(&Pow::pow(BigInt::from(10), frac));
    if frac == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>width$}", rem.to_string(), width = frac)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn exponents() {
        assert_eq!(decimal_exponent(&int(1)), 0);
        assert_eq!(decimal_exponent(&ratio(999, 1000)), -1);
        assert_eq!(decimal_exponent(&int(1000)), 3);
        assert_eq!(decimal_exponent(&ratio(1, 1000)), -3);
    }

    #[test]
    fn directed_rounding() {
        let x = ratio(2, 3);
        assert_eq!(format_sci(&x, 3, Rounding::Down), "6.66e-1");
        assert_eq!(format_sci(&x, 3, Rounding::Up), "6.67e-1");
        assert_eq!(format_sci(&-x.clone(), 3, Rounding::Down), "-6.67e-1");
        assert_eq!(format_sci(&ratio(9999, 1000), 2, Rounding::Up), "1.0e1");
        assert_eq!(format_sci(&int(0), 4, Rounding::Nearest), "0");
    }

    #[test]
    fn enclosure_rendering_covers_interval() {
        let iv = RationalInterval::new(ratio(-21341, 100000), ratio(-21339, 100000));
        assert_eq!(format_enclosure(&iv, 12), "-2.1340e-1±1e-5");
        assert_eq!(format_enclosure(&RationalInterval::point(ratio(1, 4)), 12), "2.5e-1");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_decimal("5.04443"), Some(ratio(504443, 100000)));
        assert_eq!(parse_decimal("-0.5"), Some(ratio(-1, 2)));
        assert_eq!(parse_decimal("3e2"), Some(int(300)));
        assert_eq!(parse_decimal("1.5e-1"), Some(ratio(3, 20)));
        assert_eq!(parse_decimal("abc"), None);
        assert_eq!(parse_decimal("."), None);
    }

    #[test]
    fn fixed() {
        assert_eq!(format_fixed(&ratio(-7, 4), 1, Rounding::Down), "-1.8");
        assert_eq!(format_fixed(&ratio(1, 3), 4, Rounding::Up), "0.3334");
    }
}
