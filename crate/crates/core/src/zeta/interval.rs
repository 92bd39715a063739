//! Closed intervals with exact rational endpoints.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `[lo, hi]` with `lo <= hi`, enclosing some real number.
///
/// Arithmetic is exact on the endpoints, so every operation is trivially
/// outward-correct; [`RationalInterval::round_outward`] trades exactness for
/// size when denominators get too large.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    /// # Panics
    ///
    /// Panics if `lo > hi`.
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "RationalInterval::new: lo > hi ({lo} > {hi})");
        RationalInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    /// `[center - radius, center + radius]`
    pub fn ball(center: &BigRational, radius: &BigRational) -> Self {
        let r = radius.abs();
        Self::new(center - &r, center + &r)
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    /// `Some(Greater)` if strictly positive, `Some(Less)` if strictly negative.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        (lo <= hi).then_some(RationalInterval { lo, hi })
    }

    pub fn hull(&self, other: &Self) -> Self {
        RationalInterval {
            lo: (&self.lo).min(&other.lo).clone(),
            hi: (&self.hi).max(&other.hi).clone(),
        }
    }

    /// Enclosure of `|x|`.
    pub fn abs(&self) -> Self {
        match self.sign() {
            Some(Ordering::Greater) => self.clone(),
            Some(_) => -self,
            None => RationalInterval {
                lo: BigRational::zero(),
                hi: (&self.hi).max(&-&self.lo).clone(),
            },
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let (a, b) = (&self.lo * c, &self.hi * c);
        if c.is_negative() {
            RationalInterval { lo: b, hi: a }
        } else {
            RationalInterval { lo: a, hi: b }
        }
    }

    pub fn add_scalar(&self, c: &BigRational) -> Self {
        RationalInterval {
            lo: &self.lo + c,
            hi: &self.hi + c,
        }
    }

    pub fn recip(&self) -> Option<Self> {
        self.sign()?;
        Some(RationalInterval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    /// `None` when the divisor contains zero.
    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self * &other.recip()?)
    }

    /// Widen to endpoints with denominator `2^bits`: `lo` rounded down, `hi` up.
    pub fn round_outward(&self, bits: u64) -> Self {
        RationalInterval {
            lo: round_dyadic(&self.lo, bits, false),
            hi: round_dyadic(&self.hi, bits, true),
        }
    }
}

/// `floor(x 2^bits) / 2^bits`, or the ceiling when `up`.
pub fn round_dyadic(x: &BigRational, bits: u64, up: bool) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = x.numer() * &scale;
    let (q, r) = scaled.div_mod_floor(x.denom());
    let q = if up && !r.is_zero() { q + 1 } else { q };
    BigRational::new(q, scale)
}

impl Add for &RationalInterval {
    type Output = RationalInterval;
    fn add(self, rhs: &RationalInterval) -> RationalInterval {
        RationalInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &RationalInterval {
    type Output = RationalInterval;
    fn sub(self, rhs: &RationalInterval) -> RationalInterval {
        RationalInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &RationalInterval {
    type Output = RationalInterval;
    fn mul(self, rhs: &RationalInterval) -> RationalInterval {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().cloned().unwrap_or_default();
        let hi = products.iter().max().cloned().unwrap_or_default();
        RationalInterval { lo, hi }
    }
}

impl Neg for &RationalInterval {
    type Output = RationalInterval;
    fn neg(self) -> RationalInterval {
        RationalInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

impl Add for RationalInterval {
    type Output = RationalInterval;
    fn add(self, rhs: RationalInterval) -> RationalInterval {
        &self + &rhs
    }
}

impl Sub for RationalInterval {
    type Output = RationalInterval;
    fn sub(self, rhs: RationalInterval) -> RationalInterval {
        &self - &rhs
    }
}

impl Mul for RationalInterval {
    type Output = RationalInterval;
    fn mul(self, rhs: RationalInterval) -> RationalInterval {
        &self * &rhs
    }
}

impl Neg for RationalInterval {
    type Output = RationalInterval;
    fn neg(self) -> RationalInterval {
        -&self
    }
}

impl fmt::Debug for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Display for RationalInterval {
    /// Midpoint and radius in decimal, e.g. `-1.86327469±3e-12`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::decimal::format_enclosure(self, 12))
    }
}
