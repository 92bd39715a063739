//! An enclosure of `pi^2` and the constants derived from it.

use num_rational::BigRational;

use super::decimal::parse_decimal;
use super::RationalInterval;
use crate::exact::int;

/// `pi^2` truncated after 60 decimals.
const PI_SQUARED_DIGITS: &str =
    "9.869604401089358618834490999876151135313699407240790626413349";

/// `[d, d + 10^-60]` where `d` is [`PI_SQUARED_DIGITS`].
pub fn pi_squared() -> RationalInterval {
    let lo = parse_decimal(PI_SQUARED_DIGITS).expect("valid literal");
    let ulp = parse_decimal("1e-60").expect("valid literal");
    RationalInterval::new(lo.clone(), lo + ulp)
}

/// The limits and measure bounds, all functions of `pi^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constants {
    /// `3 / pi^2`
    pub three_over_pi2: RationalInterval,
    /// `3 (pi^2 - 4) / pi^2`
    pub decay1: RationalInterval,
    /// `3 (pi^2 - 8) / pi^2`
    pub decay2: RationalInterval,
    /// `3 pi^2 / (pi^2 - 4)`
    pub measure1: RationalInterval,
    /// `3 pi^2 / (pi^2 - 8)`
    pub measure2: RationalInterval,
}

impl Constants {
    pub fn entries(&self) -> [(&'static str, &RationalInterval); 5] {
        [
            ("3/pi^2", &self.three_over_pi2),
            ("3(pi^2-4)/pi^2", &self.decay1),
            ("3(pi^2-8)/pi^2", &self.decay2),
            ("3pi^2/(pi^2-4)", &self.measure1),
            ("3pi^2/(pi^2-8)", &self.measure2),
        ]
    }
}

/// `3 - 3c/x`, increasing in `x > 0`.
fn three_minus(c: i64, x: &RationalInterval) -> RationalInterval {
    let f = |v: &BigRational| int(3) - int(3 * c) / v;
    RationalInterval::new(f(x.lo()), f(x.hi()))
}

/// `3x/(x - c)`, decreasing in `x > c`.
fn measure(c: i64, x: &RationalInterval) -> RationalInterval {
    assert!(x.lo() > &int(c), "measure constant needs pi^2 > {c}");
    let f = |v: &BigRational| int(3) * v / (v - int(c));
    RationalInterval::new(f(x.hi()), f(x.lo()))
}

/// All five constants for a given enclosure of `pi^2`.
///
/// # Panics
///
/// Panics unless the enclosure lies strictly above 8.
pub fn constants_from(pi2: &RationalInterval) -> Constants {
    Constants {
        three_over_pi2: RationalInterval::new(int(3) / pi2.hi(), int(3) / pi2.lo()),
        decay1: three_minus(4, pi2),
        decay2: three_minus(8, pi2),
        measure1: measure(4, pi2),
        measure2: measure(8, pi2),
    }
}

pub fn constants() -> Constants {
    constants_from(&pi_squared())
}

/// Enclosures of `3 pi^2/(pi^2 - 4)` and `3 pi^2/(pi^2 - 8)`.
pub fn irrationality_measure_constants() -> (RationalInterval, RationalInterval) {
    let c = constants();
    (c.measure1, c.measure2)
}
