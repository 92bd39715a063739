//! Cyclotomic polynomials and the normalizer `d_n(x) = Phi_1(x) ... Phi_n(x)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::exact::IntPoly;
use crate::zeta::{log, RationalInterval};
use crate::{Error, Result};

pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `Phi_1 .. Phi_n`, each obtained by exact division of `x^n - 1` by the
/// cyclotomic factors of its proper divisors.
///
/// Build once with [`CycloTable::up_to`], then share read-only.
#[derive(Clone, Debug, Default)]
pub struct CycloTable {
    phi: Vec<IntPoly>,
    d_cache: HashMap<u64, Vec<BigInt>>,
}

impl CycloTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn up_to(n: usize) -> Result<Self> {
        let mut t = Self::new();
        t.extend_to(n)?;
        Ok(t)
    }

    /// Largest index with a stored polynomial.
    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi.is_empty()
    }

    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        while self.phi.len() < n {
            let k = self.phi.len() + 1;
            let mut denom = IntPoly::one();
            for d in divisors(k).into_iter().filter(|&d| d < k) {
                denom = &denom * &self.phi[d - 1];
            }
            let (quot, rem) = IntPoly::x_pow_minus_one(k).div_rem_monic(&denom);
            if !rem.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "x^{k} - 1 by the product of Phi_d for proper divisors d leaves {rem}"
                )));
            }
            self.phi.push(quot);
        }
        Ok(())
    }

    /// `Phi_n`, if stored.
    pub fn phi(&self, n: usize) -> Option<&IntPoly> {
        n.checked_sub(1).and_then(|i| self.phi.get(i))
    }

    fn stored(&self, n: usize) -> Result<&IntPoly> {
        self.phi(n).ok_or_else(|| {
            Error::InvalidParameter(format!("Phi_{n} not in a table of size {}", self.len()))
        })
    }

    pub fn phi_eval(&self, n: usize, p: u64) -> Result<BigInt> {
        Ok(self.stored(n)?.eval(&BigInt::from(p)))
    }

    /// `d_n(p)`, without touching the cache.
    pub fn d_eval(&self, n: usize, p: u64) -> Result<BigInt> {
        if let Some(v) = self.d_cache.get(&p).and_then(|v| v.get(n)) {
            return Ok(v.clone());
        }
        (1..=n).try_fold(BigInt::one(), |acc, k| Ok(acc * self.phi_eval(k, p)?))
    }

    /// Fill the cache with `d_0(p) .. d_n(p)` using `d_k = Phi_k(p) d_(k-1)`.
    pub fn cache_d(&mut self, n: usize, p: u64) -> Result<()> {
        self.extend_to(n)?;
        let mut values = self.d_cache.remove(&p).unwrap_or_else(|| vec![BigInt::one()]);
        while values.len() <= n {
            let k = values.len();
            let next = &values[k - 1] * self.phi_eval(k, p)?;
            values.push(next);
        }
        self.d_cache.insert(p, values);
        Ok(())
    }
}

fn check_n_p(n: usize, p: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    if p < 2 {
        return Err(Error::InvalidParameter(format!("p must be >= 2, got {p}")));
    }
    Ok(())
}

pub fn cyclotomic_poly(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidParameter("Phi_0 is undefined".into()));
    }
    let t = CycloTable::up_to(n)?;
    Ok(t.phi[n - 1].clone())
}

/// `d_n(p) = prod_{k<=n} Phi_k(p)`
pub fn d_eval(n: usize, p: u64) -> Result<BigInt> {
    check_n_p(n, p)?;
    CycloTable::up_to(n)?.d_eval(n, p)
}

/// Whether `p^l - 1` divides `d_n(p)` for every `1 <= l <= n`.
pub fn d_is_common_multiple(n: usize, p: u64) -> Result<bool> {
    let d = d_eval(n, p)?;
    let base = BigInt::from(p);
    let mut pow = BigInt::one();
    for _ in 1..=n {
        pow *= &base;
        if !d.is_multiple_of(&(&pow - 1u32)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Enclosure of `log_p d_n(p) / n^2`.
pub fn d_growth_exponent(n: usize, p: u64, bits: u32) -> Result<RationalInterval> {
    let d = d_eval(n, p)?;
    let l = log::log_p(&BigRational::from_integer(d), p, bits)?;
    let n2 = BigRational::from_integer(BigInt::from(n) * BigInt::from(n));
    Ok(l.scale(&n2.recip()))
}
