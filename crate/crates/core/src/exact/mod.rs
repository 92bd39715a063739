//! Exact scalars, polynomials, q-calculus primitives and q-lattice moments.

pub mod moments;
pub mod poly;
pub mod qcalc;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{Coeff, IntPoly, Poly, RatPoly};

use num_traits::{One, Pow};

use crate::{Error, Result};

/// The base `q = 1/p` for an integer `p >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QContext {
    p: u64,
    p_big: BigInt,
    q: BigRational,
}

impl QContext {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidParameter(format!("p must be >= 2, got {p}")));
        }
        let p_big = BigInt::from(p);
        let q = BigRational::new(BigInt::one(), p_big.clone());
        Ok(QContext { p, p_big, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn p_big(&self) -> &BigInt {
        &self.p_big
    }

    pub fn p_rat(&self) -> BigRational {
        BigRational::from_integer(self.p_big.clone())
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    /// `p^e`
    pub fn p_pow(&self, e: u64) -> BigInt {
        Pow::pow(&self.p_big, e)
    }

    /// `q^e` for any integer exponent.
    pub fn q_pow(&self, e: i64) -> BigRational {
        pow_rat(&self.q, e)
    }
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `base^e` with negative exponents allowed.
pub fn pow_rat(base: &BigRational, e: i64) -> BigRational {
    let mag = Pow::pow(base, e.unsigned_abs());
    if e < 0 {
        mag.recip()
    } else {
        mag
    }
}

/// `(-1)^e`
pub fn sign_pow(e: u64) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn is_integer(x: &BigRational) -> bool {
    x.denom().is_one()
}
