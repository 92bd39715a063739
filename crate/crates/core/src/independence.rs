//! Congruences behind the linear independence of `1, zeta_q(1), zeta_q(2)`.
//!
//! For `M = 2n - 1` prime, `Phi_M(p)` divides `p*` and `q*`, and
//!
//! ```text
//! a p* + b q* + c r* = -c d_M(p)^2 / (p^M - 1)^2   (mod Phi_M(p))
//! ```
//!
//! while `Phi_M(p)` does not divide `d_M(p)^2 / (p^M - 1)^2`. So for `0 < |c| < M`
//! no combination vanishes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::approximants::ApproximantRow;
use crate::cyclotomic::{cyclotomic_poly, d_eval};
use crate::exact::qcalc::gauss_binomial_poly;
use crate::exact::IntPoly;
use crate::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Whether `[n+2m m]_x = 1 (mod Phi_(n+m)(x))` as integer polynomials.
pub fn jonathan_congruence(n: u32, m: u32) -> Result<bool> {
    if n + m == 0 {
        return Err(Error::InvalidParameter("need n + m >= 1".into()));
    }
    let phi = cyclotomic_poly((n + m) as usize)?;
    let (_, rem) = gauss_binomial_poly((n + 2 * m) as usize, i64::from(m)).div_rem_monic(&phi);
    Ok(rem == IntPoly::one())
}

/// `num / den`, which must be exact.
pub fn exact_quotient(num: &BigInt, den: &BigInt, what: &str) -> Result<BigInt> {
    let (quot, rem) = num.div_rem(den);
    if !rem.is_zero() {
        return Err(Error::InexactDivision(format!("{what}: remainder {rem}")));
    }
    Ok(quot)
}

fn prime_index(n: u32) -> Result<u32> {
    let big_m = (2 * n).checked_sub(1).filter(|&v| is_prime(u64::from(v)));
    big_m.ok_or_else(|| Error::InvalidParameter(format!("2n - 1 must be prime, n = {n}")))
}

fn phi_value(big_m: u32, p: u64) -> Result<BigInt> {
    Ok(cyclotomic_poly(big_m as usize)?.eval(&BigInt::from(p)))
}

/// `d_M(p)^2 / (p^M - 1)^2` with `M = 2n - 1`, checked to be exact.
pub fn step_constant(n: u32, p: u64) -> Result<BigInt> {
    let big_m = prime_index(n)?;
    let d = d_eval(big_m as usize, p)?;
    let pm = num_traits::Pow::pow(BigInt::from(p), big_m) - 1u32;
    exact_quotient(&(&d * &d), &(&pm * &pm), "d_M(p)^2 / (p^M - 1)^2")
}

/// Integer coefficients `(a, b, c)` of a combination `a p* + b q* + c r*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Abc(pub i64, pub i64, pub i64);

impl Abc {
    pub fn is_zero(&self) -> bool {
        *self == Abc(0, 0, 0)
    }

    pub fn max_abs(&self) -> u64 {
        self.0.unsigned_abs().max(self.1.unsigned_abs()).max(self.2.unsigned_abs())
    }

    pub fn combine(&self, row: &ApproximantRow) -> BigInt {
        &row.p_star * self.0 + &row.q_star * self.1 + &row.r_star * self.2
    }

    /// Every nonzero triple with entries in `[-bound, bound]`, in lexicographic order.
    pub fn grid(bound: i64) -> impl Iterator<Item = Abc> {
        let r = -bound..=bound;
        r.clone()
            .flat_map(move |a| {
                let r = r.clone();
                r.clone().flat_map(move |b| r.clone().map(move |c| Abc(a, b, c)))
            })
            .filter(|t| !t.is_zero())
    }
}

/// Whether `a p* + b q* + c r* = -c d^2/(p^M - 1)^2 (mod Phi_M(p))`.
pub fn step1_congruence(row: &ApproximantRow, abc: Abc) -> Result<bool> {
    let big_m = prime_index(row.n)?;
    let phi = phi_value(big_m, row.p)?;
    let t = step_constant(row.n, row.p)?;
    let diff = abc.combine(row) + t * abc.2;
    Ok(diff.mod_floor(&phi).is_zero())
}

/// Whether `Phi_M(p)` fails to divide `d_M(p)^2 / (p^M - 1)^2`.
pub fn step3_nondivisibility(n: u32, p: u64) -> Result<bool> {
    let big_m = prime_index(n)?;
    let phi = phi_value(big_m, p)?;
    Ok(!step_constant(n, p)?.is_multiple_of(&phi))
}

/// One checked combination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceWitness {
    pub p: u64,
    pub n: u32,
    pub abc: Abc,
    pub combination: BigInt,
    /// `Phi_M(p)` when `c != 0`, `d_M(p) Phi_M(p)` when `c = 0, b != 0`,
    /// and `None` when only `a` is nonzero (the combination itself is tested).
    pub modulus: Option<BigInt>,
    pub residue: BigInt,
}

impl IndependenceWitness {
    pub fn is_valid(&self) -> bool {
        !self.residue.is_zero()
    }
}

/// Outcome of the grid check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Condition1Report {
    pub witnesses: Vec<IndependenceWitness>,
    /// Rows left out because `2n - 1` is not a prime above the bound.
    pub skipped: Vec<(u64, u32)>,
}

impl Condition1Report {
    pub fn failures(&self) -> impl Iterator<Item = &IndependenceWitness> {
        self.witnesses.iter().filter(|w| !w.is_valid())
    }
}

/// Every nonzero `(a, b, c)` with entries in `[-abc_bound, abc_bound]`
/// against every row with `2n - 1` prime and larger than the bound.
pub fn verify_condition1(rows: &[ApproximantRow], abc_bound: i64) -> Result<Condition1Report> {
    if abc_bound < 0 {
        return Err(Error::InvalidParameter("abc bound must be nonnegative".into()));
    }
    let mut report = Condition1Report::default();
    for row in rows {
        let big_m = row.big_m();
        if !is_prime(u64::from(big_m)) || i64::from(big_m) <= abc_bound {
            report.skipped.push((row.p, row.n));
            continue;
        }
        let phi = phi_value(big_m, row.p)?;
        let d_phi = &row.d * &phi;
        for abc in Abc::grid(abc_bound) {
            let combination = abc.combine(row);
            let modulus = if abc.2 != 0 {
                Some(phi.clone())
            } else if abc.1 != 0 {
                Some(d_phi.clone())
            } else {
                None
            };
            let residue = match &modulus {
                Some(md) => combination.mod_floor(md),
                None => combination.clone(),
            };
            report.witnesses.push(IndependenceWitness {
                p: row.p,
                n: row.n,
                abc,
                combination,
                modulus,
                residue,
            });
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LegendreStatus {
    Holds,
    /// A prime divisor `s` of `Phi_n(p)` with `s != 1 (mod n)` and `s` not dividing `n`.
    Violated(u64),
    /// `Phi_n(p)` exceeds the trial-division limit.
    NotAttempted,
}

/// Largest value factored by trial division.
pub const TRIAL_DIVISION_LIMIT: u64 = 1 << 40;

fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut s = 2;
    while s * s <= v {
        if v.is_multiple_of(s) {
            out.push(s);
            while v.is_multiple_of(s) {
                v /= s;
            }
        }
        s += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

/// Every prime divisor `s` of `Phi_n(p)` has `s = 1 (mod n)` or `s | n`.
pub fn legendre_divisor_check(n: u32, p: u64) -> Result<LegendreStatus> {
    if n == 0 || p < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 1 and p >= 2, got n = {n}, p = {p}")));
    }
    let value = cyclotomic_poly(n as usize)?.eval(&BigInt::from(p));
    let v = match u64::try_from(&value) {
        Ok(v) if v <= TRIAL_DIVISION_LIMIT => v,
        _ => return Ok(LegendreStatus::NotAttempted),
    };
    let n = u64::from(n);
    Ok(prime_factors(v)
        .into_iter()
        .find(|&s| s % n != 1 % n && n % s != 0)
        .map_or(LegendreStatus::Holds, LegendreStatus::Violated))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approximants::build_row;
    use crate::QContext;

    fn row(n: u32, p: u64) -> ApproximantRow {
        build_row(n, &QContext::new(p).unwrap()).unwrap()
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&k| is_prime(k)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn jonathan_examples() {
        assert!(jonathan_congruence(4, 0).unwrap());
        assert!(jonathan_congruence(1, 1).unwrap());
        assert!(jonathan_congruence(0, 0).is_err());
        // fails without the n >= 1 restriction: [2 1]_x = 1 + x = 2 mod x - 1
        assert!(!jonathan_congruence(0, 1).unwrap());
    }

    #[test]
    fn step_examples() {
        assert_eq!(step_constant(2, 2).unwrap(), BigInt::from(9));
        assert!(step3_nondivisibility(2, 2).unwrap());
        assert!(step3_nondivisibility(3, 2).unwrap());
        assert!(step3_nondivisibility(4, 3).unwrap());
        assert!(step1_congruence(&row(3, 2), Abc(0, 0, 1)).unwrap());
        assert!(step1_congruence(&row(4, 3), Abc(1, 1, 1)).unwrap());
        assert!(step3_nondivisibility(5, 2).is_err());
    }

    #[test]
    fn phi_divides_p_star_and_q_star() {
        let r = row(3, 2);
        let phi = phi_value(5, 2).unwrap();
        assert!(r.p_star.is_multiple_of(&phi));
        assert!(r.q_star.is_multiple_of(&phi));
    }

    #[test]
    fn grid_shape() {
        assert_eq!(Abc::grid(1).count(), 26);
        assert!(Abc::grid(3).all(|t| !t.is_zero() && t.max_abs() <= 3));
    }

    #[test]
    fn condition1_small_grid() {
        let rows: Vec<_> = (1..=4).map(|n| row(n, 2)).collect();
        let report = verify_condition1(&rows, 3).unwrap();
        assert_eq!(report.failures().count(), 0);
        // n = 3 (M = 5) and n = 4 (M = 7) qualify
        assert_eq!(report.witnesses.len(), 2 * 342);
        assert_eq!(report.skipped, [(2, 1), (2, 2)]);
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_divisor_check(3, 2).unwrap(), LegendreStatus::Holds);
        assert_eq!(legendre_divisor_check(4, 2).unwrap(), LegendreStatus::Holds);
        assert_eq!(legendre_divisor_check(6, 2).unwrap(), LegendreStatus::Holds);
        assert_eq!(legendre_divisor_check(60, 10).unwrap(), LegendreStatus::NotAttempted);
    }
}
