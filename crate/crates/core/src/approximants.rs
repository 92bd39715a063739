//! Hermite-Padé numerators at `z = p^(n+m)` and the integer approximant
//! sequences built from them.
//!
//! With `P = p_{n,m}`, the type II approximation problem for the Markov
//! functions `f1`, `f2` has numerators
//!
//! ```text
//! q_{n,m}(z) = int_0^1 (P(z) - P(x)) / (z - x) d_qx
//! r_{n,m}(z) = int_0^1 (P(z) - P(x)) / (z - x) log_q(x) d_qx
//! ```
//!
//! and for `m = n - 1`, `M = 2n - 1`, `d = d_M(p)`:
//!
//! ```text
//! beta  = d P(p^M)          alpha = d (q_{n,m}(p^M) + P(p^M) sum_{k<M} 1/(p^k - 1))
//! b     = d^2 P(p^M)        a     = d^2 (r_{n,m}(p^M) + P(p^M) sum_{k<M} k/(p^k - 1) + M q_{n,m}(p^M))
//! p* = b,  q* = d alpha,  r* = a
//! ```

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::CycloTable;
use crate::exact::moments::log_moment;
use crate::exact::qcalc::{qpochhammer, qpochhammer_int};
use crate::exact::{is_integer, QContext, RatPoly};
use crate::qjacobi::{build_pochhammer, pochhammer_terms, QJacobiPoly};
use crate::zeta::{self, RationalInterval};
use crate::{Error, Result};

fn check_nm(n: u32, m: u32) -> Result<()> {
    if m > n {
        return Err(Error::InvalidParameter(format!("need m <= n, got n = {n}, m = {m}")));
    }
    Ok(())
}

/// `(q_{n,m}(p^N), r_{n,m}(p^N))` with `N = n + m`, from the closed forms
///
/// ```text
/// q = -sum_{k,j} c_{k,j} sum_{r=1}^{k+j} (p^(N-k-j); p)_(k+j-r) / (p^r - 1)
/// r = -sum_{k,j} c_{k,j} sum_{r=1}^{k+j} (p^(N-k-j); p)_(k+j-r) / (p^r - 1) sum_{i<=r} 1/(p^i - 1)
/// ```
///
/// where `c_{k,j}` are the Pochhammer-basis coefficients of `p_{n,m}`.
pub fn numerators_at_power(n: u32, m: u32, ctx: &QContext) -> Result<(BigRational, BigRational)> {
    check_nm(n, m)?;
    let big_n = (n + m) as usize;
    let base = ctx.p_big();
    let inv: Vec<BigRational> = (0..=big_n)
        .map(|r| {
            if r == 0 {
                BigRational::zero()
            } else {
                BigRational::new(BigInt::one(), ctx.p_pow(r as u64) - 1u32)
            }
        })
        .collect();
    let mut harmonic = vec![BigRational::zero(); big_n + 1];
    for r in 1..=big_n {
        harmonic[r] = &harmonic[r - 1] + &inv[r];
    }
    // per t = k + j: the inner sums over r
    let mut inner_q = vec![BigRational::zero(); big_n + 1];
    let mut inner_r = vec![BigRational::zero(); big_n + 1];
    for t in 1..=big_n {
        let start = ctx.p_pow((big_n - t) as u64);
        for r in 1..=t {
            let g = BigRational::from_integer(qpochhammer_int(&start, base, t - r)) * &inv[r];
            inner_r[t] += &g * &harmonic[r];
            inner_q[t] += g;
        }
    }
    let (mut q, mut r) = (BigRational::zero(), BigRational::zero());
    for term in pochhammer_terms(n, m, ctx) {
        let t = (term.k + term.j) as usize;
        let c = BigRational::from_integer(term.coeff);
        q -= &c * &inner_q[t];
        r -= &c * &inner_r[t];
    }
    Ok((q, r))
}

pub fn q_numerator_at_power(n: u32, m: u32, ctx: &QContext) -> Result<BigRational> {
    Ok(numerators_at_power(n, m, ctx)?.0)
}

pub fn r_numerator_at_power(n: u32, m: u32, ctx: &QContext) -> Result<BigRational> {
    Ok(numerators_at_power(n, m, ctx)?.1)
}

/// `d_(n+m)(p) q_{n,m}(p^(n+m))` and `d_(n+m)(p)^2 r_{n,m}(p^(n+m))` as integers.
pub fn scaled_numerators(n: u32, m: u32, ctx: &QContext, table: &CycloTable) -> Result<(BigInt, BigInt)> {
    let (q, r) = numerators_at_power(n, m, ctx)?;
    let d = BigRational::from_integer(table.d_eval((n + m) as usize, ctx.p())?);
    let dq = &d * q;
    let ddr = &d * &d * r;
    if !is_integer(&dq) {
        return Err(Error::IntegralityViolation { what: "d q_{n,m}(p^(n+m))", n, p: ctx.p() });
    }
    if !is_integer(&ddr) {
        return Err(Error::IntegralityViolation { what: "d^2 r_{n,m}(p^(n+m))", n, p: ctx.p() });
    }
    Ok((dq.to_integer(), ddr.to_integer()))
}

/// The row of approximants for one `n` (with `m = n - 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximantRow {
    pub p: u64,
    pub n: u32,
    /// `d_(2n-1)(p)`
    pub d: BigInt,
    pub beta: BigInt,
    pub alpha: BigInt,
    pub b: BigInt,
    pub a: BigInt,
    pub p_star: BigInt,
    pub q_star: BigInt,
    pub r_star: BigInt,
    /// `p_{n,n-1}(p^(2n-1))`
    pub pnm_value: BigInt,
    pub qnm_value: BigRational,
    pub rnm_value: BigRational,
    /// Upper bound for `|beta zeta_q(1) - alpha|` (strict).
    pub residual_bound1: BigRational,
    /// Upper bound for `|b zeta_q(2) - a|`.
    pub residual_bound2: BigRational,
    /// `p_{n,n-1}` in the monomial basis.
    pub poly: RatPoly,
}

impl ApproximantRow {
    pub fn m(&self) -> u32 {
        self.n - 1
    }

    /// `2n - 1`
    pub fn big_m(&self) -> u32 {
        2 * self.n - 1
    }
}

/// `d q^(n(n-1)/2) q^((n-1)(n-2)/2) q^M / (p^(M(n+1)) (q;q)_(n-1) (q^M;q)_(2n+1)^2 (1 - q^(2n)))`
pub fn residual_bound1(n: u32, ctx: &QContext, d: &BigInt) -> BigRational {
    let q = ctx.q();
    let (ni, big_m) = (i64::from(n), 2 * i64::from(n) - 1);
    let e = ni * (ni - 1) / 2 + (ni - 1) * (ni - 2) / 2 + big_m + big_m * (ni + 1);
    let poch = qpochhammer(&ctx.q_pow(big_m), q, 2 * n as usize + 1);
    BigRational::from_integer(d.clone()) * ctx.q_pow(e)
        / (qpochhammer(q, q, n as usize - 1) * &poch * &poch * (BigRational::one() - ctx.q_pow(2 * ni)))
}

/// `d^2 q^(Mn) q^(n^2) (q;q)_(n-1)^2 / ((q^(2n);q)_n (q;q)_n)`
pub fn residual_bound2(n: u32, ctx: &QContext, d: &BigInt) -> BigRational {
    let q = ctx.q();
    let ni = i64::from(n);
    let dd = BigRational::from_integer(d * d);
    let f = qpochhammer(q, q, n as usize - 1);
    dd * ctx.q_pow((2 * ni - 1) * ni + ni * ni) * &f * &f
        / (qpochhammer(&ctx.q_pow(2 * ni), q, n as usize) * qpochhammer(q, q, n as usize))
}

fn to_integer(x: BigRational, what: &'static str, n: u32, p: u64) -> Result<BigInt> {
    if is_integer(&x) {
        Ok(x.to_integer())
    } else {
        Err(Error::IntegralityViolation { what, n, p })
    }
}

pub fn build_row(n: u32, ctx: &QContext) -> Result<ApproximantRow> {
    let table = CycloTable::up_to(2 * n.max(1) as usize)?;
    build_row_with(n, ctx, &table)
}

/// [`build_row`] reading `d_(2n-1)(p)` from a prepared table.
pub fn build_row_with(n: u32, ctx: &QContext, table: &CycloTable) -> Result<ApproximantRow> {
    if n == 0 {
        return Err(Error::InvalidParameter("rows start at n = 1".into()));
    }
    let (m, big_m) = (n - 1, 2 * n - 1);
    let p = ctx.p();
    let poly = build_pochhammer(n, m, ctx)?;
    let pnm = poly.eval_at_power(big_m)?;
    let (qv, rv) = numerators_at_power(n, m, ctx)?;
    let d = table.d_eval(big_m as usize, p)?;
    let s1 = zeta::partial_sum_q1(ctx, big_m - 1);
    let s2 = zeta::partial_sum_q2(ctx, big_m - 1);
    let dr = BigRational::from_integer(d.clone());
    let pr = BigRational::from_integer(pnm.clone());
    let mr = BigRational::from_integer(big_m.into());

    let beta = &d * &pnm;
    let alpha = to_integer(&dr * (&qv + &pr * &s1), "alpha", n, p)?;
    let b = &d * &beta;
    let a = to_integer(&dr * &dr * (&rv + &pr * &s2 + &mr * &qv), "a", n, p)?;
    let q_star = &d * &alpha;
    Ok(ApproximantRow {
        p,
        n,
        residual_bound1: residual_bound1(n, ctx, &d),
        residual_bound2: residual_bound2(n, ctx, &d),
        d,
        beta,
        alpha,
        p_star: b.clone(),
        b,
        r_star: a.clone(),
        a,
        q_star,
        pnm_value: pnm,
        qnm_value: qv,
        rnm_value: rv,
        poly: poly.monomial().clone(),
    })
}

/// `-log2` of a positive rational, rounded down; 0 for values >= 1/2.
fn neg_log2_floor(x: &BigRational) -> u64 {
    let gap = x.denom().bits() as i64 - x.numer().bits() as i64;
    gap.max(0) as u64
}

/// The remainders `sum_k w(k) P(q^k) / (p^(M+k) - 1)` at `z = p^M`, with
/// `w = 1` (first) and `w = k` (second), each term rounded outward to `bits`
/// binary places and the series cut where its tail drops below `2^-bits`.
fn remainders_dyadic(
    poly: &RatPoly,
    big_m: u32,
    ctx: &QContext,
    bits: u64,
) -> (RationalInterval, RationalInterval) {
    let (lcm, ipoly) = poly.clear_denominators();
    let deg = ipoly.degree().unwrap_or(0) as u64;
    let abs_sum = BigRational::new(ipoly.abs_coeff_sum(), lcm.clone());
    let one = BigRational::one();
    let q = ctx.q();
    let z_minus_1 = BigRational::from_integer(ctx.p_pow(u64::from(big_m)) - 1u32);
    let target = BigRational::new(BigInt::one(), BigInt::one() << bits);
    // tail of sum_{k>=K} k q^k |P(q^k)| / (z - q^k), which dominates the unweighted one
    let tail = |k: u64| {
        let kr = BigRational::from_integer(k.into());
        let one_minus_q = &one - q;
        &abs_sum / &z_minus_1 * ctx.q_pow(k as i64) * (&kr - (&kr - &one) * q) / (&one_minus_q * &one_minus_q)
    };
    let lg = u64::from(63 - ctx.p().leading_zeros());
    let mut terms = (bits + abs_sum.numer().bits()) / lg + 1;
    while tail(terms) >= target {
        terms += 8;
    }
    let scale = BigInt::one() << bits;
    let coeffs = ipoly.coeffs();
    let (mut lo1, mut hi1, mut lo2, mut hi2) = (BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero());
    for k in 0..terms {
        let x = ctx.p_pow(k);
        // sum_i c_i p^(k(deg - i)) by Horner over the reversed coefficients
        let h = coeffs.iter().fold(BigInt::zero(), |acc, c| acc * &x + c);
        let den = &lcm * ctx.p_pow(k * deg) * (ctx.p_pow(u64::from(big_m) + k) - 1u32);
        for (w, lo, hi) in [(BigInt::one(), &mut lo1, &mut hi1), (BigInt::from(k), &mut lo2, &mut hi2)] {
            let (quot, rem) = (&h * w * &scale).div_mod_floor(&den);
            if !rem.is_zero() {
                *hi += 1u32;
            }
            *lo += &quot;
            *hi += quot;
        }
    }
    let t = tail(terms);
    let enclose = |lo: BigInt, hi: BigInt| {
        RationalInterval::new(
            BigRational::new(lo, scale.clone()) - &t,
            BigRational::new(hi, scale.clone()) + &t,
        )
    };
    (enclose(lo1, hi1), enclose(lo2, hi2))
}

/// Binary places needed so that an enclosure scaled by `factor` has width
/// comparable to `width`.
fn matching_bits(width: &BigRational, factor: &BigInt) -> u64 {
    neg_log2_floor(width) + factor.bits() + 32
}

fn sign_checked(
    what: &str,
    n: u32,
    enclosure: RationalInterval,
    positive: bool,
    zero_threshold: &BigRational,
) -> Result<RationalInterval> {
    if enclosure.contains_zero() {
        if &enclosure.width() < zero_threshold {
            return Err(Error::EnclosureContainsZero(format!(
                "{what} for n = {n}: {enclosure:?} although its sign is known"
            )));
        }
        return Ok(enclosure);
    }
    if enclosure.lo().is_positive() != positive {
        return Err(Error::EvaluationMismatch(format!(
            "{what} for n = {n} has the wrong sign: {enclosure:?}"
        )));
    }
    Ok(enclosure)
}

/// Enclosure of `beta zeta_q(1) - alpha`.
///
/// Computed both from the given enclosure of `zeta_q(1)` and as
/// `d sum_k P(q^k)/(p^(M+k) - 1)`; the result is the intersection. The
/// residual is negative (all terms of the second form share the sign of
/// `(-1)^(n+m)`), so an enclosure that excludes zero on the wrong side is an
/// error, as is one that contains zero while narrower than `zero_threshold`.
pub fn residual_zeta1(
    row: &ApproximantRow,
    zeta1: &RationalInterval,
    zero_threshold: &BigRational,
) -> Result<RationalInterval> {
    let ctx = QContext::new(row.p)?;
    let beta = BigRational::from_integer(row.beta.clone());
    let series = zeta1.scale(&beta).add_scalar(&-BigRational::from_integer(row.alpha.clone()));
    let bits = matching_bits(&series.width(), &row.d);
    let (rem1, _) = remainders_dyadic(&row.poly, row.big_m(), &ctx, bits);
    let integral = rem1.scale(&BigRational::from_integer(row.d.clone()));
    let both = series.intersect(&integral).ok_or_else(|| {
        Error::DisjointEnclosures(format!("zeta_q(1) residual, n = {}: {series:?} vs {integral:?}", row.n))
    })?;
    sign_checked("zeta_q(1) residual", row.n, both, false, zero_threshold)
}

/// Enclosure of `b zeta_q(2) - a`, from the zeta enclosures and independently
/// as `d^2 (sum_k k P(q^k)/(p^(M+k) - 1) + M sum_k P(q^k)/(p^(M+k) - 1))`.
/// The residual is positive.
pub fn residual_zeta2(
    row: &ApproximantRow,
    zeta2: &RationalInterval,
    zero_threshold: &BigRational,
) -> Result<RationalInterval> {
    let ctx = QContext::new(row.p)?;
    let b = BigRational::from_integer(row.b.clone());
    let series = zeta2.scale(&b).add_scalar(&-BigRational::from_integer(row.a.clone()));
    let dd = &row.d * &row.d;
    let bits = matching_bits(&series.width(), &dd) + u64::from(row.big_m()).ilog2() as u64 + 1;
    let (rem1, rem2) = remainders_dyadic(&row.poly, row.big_m(), &ctx, bits);
    let mr = BigRational::from_integer(row.big_m().into());
    let integral = (&rem2 + &rem1.scale(&mr)).scale(&BigRational::from_integer(dd));
    let both = series.intersect(&integral).ok_or_else(|| {
        Error::DisjointEnclosures(format!("zeta_q(2) residual, n = {}: {series:?} vs {integral:?}", row.n))
    })?;
    sign_checked("zeta_q(2) residual", row.n, both, true, zero_threshold)
}

/// Both residual enclosures together with the precision that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residuals {
    pub res1: RationalInterval,
    pub res2: RationalInterval,
    /// Series depth used for the zeta enclosures.
    pub depth: u32,
    /// Binary places of the outward-rounded partial sums.
    pub bits: u64,
}

fn residuals_at(row: &ApproximantRow, ctx: &QContext, depth: u32, bits: u64) -> Result<Residuals> {
    let z1 = zeta::zeta_q1_dyadic(ctx, depth, bits)?;
    let z2 = zeta::zeta_q2_dyadic(ctx, depth, bits)?;
    let zero = BigRational::zero();
    Ok(Residuals {
        res1: residual_zeta1(row, &z1, &zero)?,
        res2: residual_zeta2(row, &z2, &zero)?,
        depth,
        bits,
    })
}

/// Residual enclosures at a fixed series depth; they may contain zero if the
/// depth is too small.
pub fn residuals_with_depth(row: &ApproximantRow, depth: u32) -> Result<Residuals> {
    let ctx = QContext::new(row.p)?;
    let lg = u64::from(63 - row.p.leading_zeros());
    residuals_at(row, &ctx, depth, u64::from(depth) * lg + 16)
}

/// Residual enclosures with depth and precision grown until both exclude zero.
pub fn residuals(row: &ApproximantRow) -> Result<Residuals> {
    let ctx = QContext::new(row.p)?;
    let need = |bound: &BigRational, scale: &BigInt| neg_log2_floor(bound) + scale.bits();
    let mut bits = need(&row.residual_bound1, &row.beta).max(need(&row.residual_bound2, &row.b)) + 64;
    for _ in 0..6 {
        let depth = zeta::depth_for_bits(&ctx, bits);
        let r = residuals_at(row, &ctx, depth, bits + 8)?;
        if !r.res1.contains_zero() && !r.res2.contains_zero() {
            return Ok(r);
        }
        bits *= 2;
    }
    Err(Error::EnclosureContainsZero(format!(
        "residuals for p = {}, n = {} still straddle zero at {bits} bits",
        row.p, row.n
    )))
}

/// `int_0^1 z^m p_{n,m}(z) log_q(z) d_qz` equals
/// `q^(n(m+1)) (q;q)_m^2 (q;q)_(n-m-1) / ((q^(n+m+1);q)_(m+1) (q;q)_n)` for `m <= n - 1`.
pub fn extralemma_identity(n: u32, m: u32, ctx: &QContext) -> Result<bool> {
    if m + 1 > n {
        return Err(Error::InvalidParameter(format!("need m <= n - 1, got n = {n}, m = {m}")));
    }
    let poly = build_pochhammer(n, m, ctx)?;
    Ok(extralemma_lhs(&poly) == extralemma_rhs(n, m, ctx))
}

pub fn extralemma_lhs(poly: &QJacobiPoly) -> BigRational {
    poly.monomial()
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c * log_moment(i as u32 + poly.m(), poly.ctx()))
        .sum()
}

pub fn extralemma_rhs(n: u32, m: u32, ctx: &QContext) -> BigRational {
    let q = ctx.q();
    let f = |k: u32| qpochhammer(q, q, k as usize);
    ctx.q_pow(i64::from(n) * i64::from(m + 1)) * f(m) * f(m) * f(n - m - 1)
        / (qpochhammer(&ctx.q_pow(i64::from(n + m) + 1), q, m as usize + 1) * f(n))
}

/// Checks `P(z) f1(z) - q_{n,m}(z)` at `z = p^(n+m)` against the first `terms`
/// terms of `sum_k q^k P(q^k) / (z - q^k)` plus the tail bound
/// `(sum_i |c_i|) q^K / ((z - 1)(1 - q))`. Returns whether the two
/// enclosures meet.
pub fn remainder_integral_check(n: u32, m: u32, ctx: &QContext, terms: u32) -> Result<bool> {
    check_nm(n, m)?;
    if n + m == 0 {
        return Err(Error::InvalidParameter("z = p^0 = 1 is a pole of f1".into()));
    }
    if terms == 0 {
        return Err(Error::InvalidParameter("need at least one term".into()));
    }
    let big_n = n + m;
    let poly = build_pochhammer(n, m, ctx)?;
    let p = poly.monomial();
    let z = BigRational::from_integer(ctx.p_pow(u64::from(big_n)));
    let one = BigRational::one();
    let q = ctx.q();

    let partial: BigRational = (0..terms)
        .map(|k| {
            let x = ctx.q_pow(i64::from(k));
            &x * p.eval(&x) / (&z - &x)
        })
        .sum();
    let abs_sum: BigRational = p.coeffs().iter().map(|c| c.abs()).sum();
    let tail = &abs_sum * ctx.q_pow(i64::from(terms)) / ((&z - &one) * (&one - q));
    let rhs = RationalInterval::ball(&partial, &tail);

    let pz = BigRational::from_integer(poly.eval_at_power(big_n)?);
    let qz = q_numerator_at_power(n, m, ctx)?;
    let mut f1_terms = terms;
    let lhs = loop {
        let f1 = zeta::f1_at_power(ctx, big_n, f1_terms)?;
        let lhs = f1.scale(&pz).add_scalar(&-&qz);
        if lhs.width() <= rhs.width() {
            break lhs;
        }
        f1_terms += 16;
    };
    Ok(lhs.intersect(&rhs).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::moments::power_moment;
    use crate::exact::{int, ratio};

    fn ctx(p: u64) -> QContext {
        QContext::new(p).unwrap()
    }

    /// `(P(z) - P(x))/(z - x)` paired with a moment sequence.
    fn divided_difference(p: &RatPoly, z: &BigRational, moment: impl Fn(u32) -> BigRational) -> BigRational {
        let c = p.coeffs();
        let mut total = BigRational::zero();
        for b in 0..c.len().saturating_sub(1) {
            let g: BigRational = (b + 1..c.len())
                .map(|i| &c[i] * crate::exact::pow_rat(z, (i - 1 - b) as i64))
                .sum();
            total += g * moment(b as u32);
        }
        total
    }

    #[test]
    fn numerators_degree_zero_and_one() {
        let c = ctx(2);
        assert_eq!(numerators_at_power(0, 0, &c).unwrap(), (int(0), int(0)));
        assert_eq!(numerators_at_power(1, 0, &c).unwrap(), (int(-3), int(-3)));
    }

    #[test]
    fn numerators_match_divided_differences() {
        for (n, m, p) in [(2u32, 1u32, 2u64), (2, 1, 3), (3, 3, 2)] {
            let c = ctx(p);
            let poly = build_pochhammer(n, m, &c).unwrap();
            let z = BigRational::from_integer(c.p_pow(u64::from(n + m)));
            let (q, r) = numerators_at_power(n, m, &c).unwrap();
            assert_eq!(q, divided_difference(poly.monomial(), &z, |s| power_moment(s, &c)));
            assert_eq!(r, divided_difference(poly.monomial(), &z, |s| log_moment(s, &c)));
        }
    }

    #[test]
    fn first_row() {
        let row = build_row(1, &ctx(2)).unwrap();
        assert_eq!(row.beta, BigInt::from(-2));
        assert_eq!(row.alpha, BigInt::from(-3));
        assert_eq!(row.b, BigInt::from(-2));
        assert_eq!(row.a, BigInt::from(-6));
        assert_eq!(row.p_star, row.b);
        assert_eq!(row.q_star, &row.d * &row.alpha);
        assert_eq!(row.r_star, row.a);
    }

    #[test]
    fn first_row_residuals() {
        let row = build_row(1, &ctx(2)).unwrap();
        let r = residuals(&row).unwrap();
        // -2 zeta + 3 with zeta = 1.6066951524...
        assert!(r.res1.hi() < &ratio(-21339, 100000) && r.res1.lo() > &ratio(-21340, 100000));
        assert!(zeta::within_bound(&r.res1, &row.residual_bound1));
        assert!(zeta::within_bound(&r.res2, &row.residual_bound2));
        assert!(r.res2.lo().is_positive());
    }

    #[test]
    fn residual_routes_agree_at_moderate_n() {
        for p in [2u64, 3] {
            let row = build_row(4, &ctx(p)).unwrap();
            let r = residuals(&row).unwrap();
            assert!(r.res1.hi().is_negative());
            assert!(r.res2.lo().is_positive());
        }
    }

    #[test]
    fn wrong_zeta_enclosure_is_detected() {
        let row = build_row(3, &ctx(2)).unwrap();
        let bogus = RationalInterval::new(int(2), int(2) + ratio(1, 1 << 30));
        let err = residual_zeta1(&row, &bogus, &BigRational::zero()).unwrap_err();
        assert!(matches!(err, Error::DisjointEnclosures(_)));
    }

    #[test]
    fn log_moment_identity_examples() {
        assert_eq!(extralemma_rhs(1, 0, &ctx(2)), ratio(4, 3));
        assert!(extralemma_identity(1, 0, &ctx(2)).unwrap());
        assert!(extralemma_identity(2, 1, &ctx(2)).unwrap());
        assert!(extralemma_identity(5, 3, &ctx(3)).unwrap());
        assert!(extralemma_identity(2, 2, &ctx(2)).is_err());
    }

    #[test]
    fn remainder_examples() {
        assert!(remainder_integral_check(1, 0, &ctx(2), 30).unwrap());
        assert!(remainder_integral_check(3, 2, &ctx(2), 60).unwrap());
        assert!(remainder_integral_check(0, 0, &ctx(2), 30).is_err());
    }

    #[test]
    fn bounds_are_positive() {
        let row = build_row(2, &ctx(3)).unwrap();
        assert!(row.residual_bound1.is_positive());
        assert!(row.residual_bound2.is_positive());
    }
}
