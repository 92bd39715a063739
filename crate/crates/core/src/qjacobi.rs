//! Multiple little q-Jacobi polynomials `p_{n,m}` with all parameters zero,
//! normalized by `p_{n,m}(0) = 1`.
//!
//! `p_{n,m}` has degree `n + m` and satisfies, for the Jackson integral on `[0,1]`,
//!
//! ```text
//! int_0^1 p_{n,m}(x) x^l d_qx = 0            (l < n)
//! int_0^1 p_{n,m}(x) x^l log_q(x) d_qx = 0   (l < m)
//! ```
//!
//! Three constructions are provided: the explicit double sum, the expansion
//! in the basis `(qx; q)_t`, and the Rodrigues operator chain.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::exact::moments::{log_moment, power_moment};
use crate::exact::qcalc::{gauss_binomial, pochhammer_poly, q_derivative_n, qpochhammer, GaussianTable};
use crate::exact::{int, sign_pow, QContext, RatPoly};
use crate::{Error, Result};

/// `coeff * (qx; q)_(k+j)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochhammerTerm {
    pub k: u32,
    pub j: u32,
    pub coeff: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QJacobiPoly {
    n: u32,
    m: u32,
    ctx: QContext,
    monomial: RatPoly,
    terms: Vec<PochhammerTerm>,
}

impl QJacobiPoly {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }

    /// Coefficients in the monomial basis.
    pub fn monomial(&self) -> &RatPoly {
        &self.monomial
    }

    pub fn terms(&self) -> &[PochhammerTerm] {
        &self.terms
    }

    pub fn degree(&self) -> usize {
        (self.n + self.m) as usize
    }

    /// The Pochhammer-basis terms multiplied out into monomials.
    pub fn expand_terms(&self) -> RatPoly {
        expand(&self.terms, &self.ctx)
    }

    /// `p_{n,m}(p^N)` as an integer, from the Pochhammer form with
    /// `(q p^N; q)_t = prod_{i<t} (1 - p^(N-1-i))`, checked against the
    /// monomial form.
    pub fn eval_at_power(&self, big_n: u32) -> Result<BigInt> {
        if (big_n as usize) < self.degree() {
            return Err(Error::InvalidParameter(format!(
                "evaluation point p^{big_n} below the degree {}",
                self.degree()
            )));
        }
        let mut factors = vec![BigInt::one()];
        for i in 0..self.degree() as u32 {
            let next = &factors[i as usize] * (BigInt::one() - self.ctx.p_pow(u64::from(big_n - 1 - i)));
            factors.push(next);
        }
        let value: BigInt = self
            .terms
            .iter()
            .map(|t| &t.coeff * &factors[(t.k + t.j) as usize])
            .sum();
        let z = BigRational::from_integer(self.ctx.p_pow(u64::from(big_n)));
        let direct = self.monomial.eval(&z);
        if direct != BigRational::from_integer(value.clone()) {
            return Err(Error::EvaluationMismatch(format!(
                "p_{{{},{}}}(p^{big_n}): Pochhammer form gives {value}, monomial form {direct}",
                self.n, self.m
            )));
        }
        Ok(value)
    }
}

fn check_nm(n: u32, m: u32) -> Result<()> {
    if m > n {
        return Err(Error::InvalidParameter(format!("need m <= n, got n = {n}, m = {m}")));
    }
    Ok(())
}

/// `(-1)^(n+m+k+j) [n+m+k m]_p [n+k+j n]_p [m k]_p [n j]_p p^((n-j)(n-j+1)/2) p^((m-k)(m-k+1)/2)`
pub fn pochhammer_terms(n: u32, m: u32, ctx: &QContext) -> Vec<PochhammerTerm> {
    let mut g = GaussianTable::new(ctx.p_big().clone());
    let tri = |a: u32| u64::from(a) * u64::from(a + 1) / 2;
    let mut out = Vec::with_capacity(((n + 1) * (m + 1)) as usize);
    for k in 0..=m {
        for j in 0..=n {
            let (nu, mu, ku, ju) = (n as usize, m as usize, k as usize, j as usize);
            let mut c = g.get(nu + mu + ku, i64::from(m))
                * g.get(nu + ku + ju, i64::from(n))
                * g.get(mu, i64::from(k))
                * g.get(nu, i64::from(j))
                * ctx.p_pow(tri(n - j) + tri(m - k));
            if sign_pow(u64::from(n + m + k + j)) < 0 {
                c = -c;
            }
            out.push(PochhammerTerm { k, j, coeff: c });
        }
    }
    out
}

fn expand(terms: &[PochhammerTerm], ctx: &QContext) -> RatPoly {
    let top = terms.iter().map(|t| (t.k + t.j) as usize).max().unwrap_or(0);
    let mut per_degree = vec![BigInt::zero(); top + 1];
    for t in terms {
        per_degree[(t.k + t.j) as usize] += &t.coeff;
    }
    let mut acc = RatPoly::zero();
    let mut basis = RatPoly::one();
    let mut qk = ctx.q().clone();
    for c in per_degree {
        acc = &acc + &basis.scale(&BigRational::from_integer(c));
        basis = &basis * &RatPoly::from_coeffs(vec![BigRational::one(), -qk.clone()]);
        qk *= ctx.q();
    }
    acc
}

/// The explicit double sum over `k <= m`, `j <= n`.
pub fn build_explicit(n: u32, m: u32, ctx: &QContext) -> Result<QJacobiPoly> {
    check_nm(n, m)?;
    let q = ctx.q();
    let (nu, mu) = (n as usize, m as usize);
    let fact: Vec<BigRational> = (0..=nu + mu).map(|i| qpochhammer(q, q, i)).collect();
    let shifted_n: Vec<BigRational> = (0..=nu + mu).map(|t| qpochhammer(&ctx.q_pow(i64::from(n) + 1), q, t)).collect();
    let shifted_nm: Vec<BigRational> = (0..=mu).map(|k| qpochhammer(&ctx.q_pow(i64::from(n + m) + 1), q, k)).collect();
    let neg_n: Vec<BigRational> = (0..=nu).map(|j| qpochhammer(&ctx.q_pow(-i64::from(n)), q, j)).collect();
    let neg_m: Vec<BigRational> = (0..=mu).map(|k| qpochhammer(&ctx.q_pow(-i64::from(m)), q, k)).collect();
    let mut coeffs = vec![BigRational::zero(); nu + mu + 1];
    for k in 0..=mu {
        for j in 0..=nu {
            let t = k + j;
            let term = ctx.q_pow(t as i64 - (k * nu) as i64) / (&fact[k] * &fact[j])
                * &shifted_n[t]
                / &fact[t]
                * &shifted_nm[k]
                / &fact[k]
                * &neg_n[j]
                * &neg_m[k];
            coeffs[t] += term;
        }
    }
    Ok(QJacobiPoly {
        n,
        m,
        ctx: ctx.clone(),
        monomial: RatPoly::from_coeffs(coeffs),
        terms: pochhammer_terms(n, m, ctx),
    })
}

/// Integer coefficients on the basis `(qx; q)_(k+j)`, multiplied out.
pub fn build_pochhammer(n: u32, m: u32, ctx: &QContext) -> Result<QJacobiPoly> {
    check_nm(n, m)?;
    let terms = pochhammer_terms(n, m, ctx);
    Ok(QJacobiPoly {
        n,
        m,
        ctx: ctx.clone(),
        monomial: expand(&terms, ctx),
        terms,
    })
}

/// `C D^n [x^n D^m ((qx; q)_(n+m) x^m)]` with `D = D_(1/q)` and
/// `C = (-1)^(n+m) q^(n(n-1)/2) q^(m(m-1)/2) (q-1)^(n+m) / ((q;q)_n (q;q)_m)`.
pub fn build_rodrigues(n: u32, m: u32, ctx: &QContext) -> Result<QJacobiPoly> {
    check_nm(n, m)?;
    let q = ctx.q();
    let (nu, mu) = (n as usize, m as usize);
    let p = ctx.p_rat();
    let inner = pochhammer_poly(q, q, nu + mu).shift(mu);
    let inner = q_derivative_n(&inner, &p, mu).shift(nu);
    let outer = q_derivative_n(&inner, &p, nu);
    let tri = |a: u32| i64::from(a) * (i64::from(a) - 1) / 2;
    let c = int(sign_pow(u64::from(n + m)))
        * ctx.q_pow(tri(n) + tri(m))
        * Pow::pow(&(q - BigRational::one()), n + m)
        / (qpochhammer(q, q, nu) * qpochhammer(q, q, mu));
    Ok(QJacobiPoly {
        n,
        m,
        ctx: ctx.clone(),
        monomial: outer.scale(&c),
        terms: pochhammer_terms(n, m, ctx),
    })
}

/// All three constructions; any disagreement, or a Pochhammer expansion that
/// does not reproduce the monomial form, is an error.
pub fn build_checked(n: u32, m: u32, ctx: &QContext) -> Result<QJacobiPoly> {
    let explicit = build_explicit(n, m, ctx)?;
    let poch = build_pochhammer(n, m, ctx)?;
    let rod = build_rodrigues(n, m, ctx)?;
    let mismatch = |detail: &str| Error::RepresentationMismatch { n, m, detail: detail.to_string() };
    if explicit.monomial != poch.monomial {
        return Err(mismatch("explicit sum vs Pochhammer basis"));
    }
    if explicit.monomial != rod.monomial {
        return Err(mismatch("explicit sum vs Rodrigues formula"));
    }
    if explicit.expand_terms() != explicit.monomial {
        return Err(mismatch("stored Pochhammer terms vs monomial form"));
    }
    Ok(explicit)
}

/// The `n + m` orthogonality conditions, each an exact rational zero.
pub fn verify_orthogonality(poly: &QJacobiPoly) -> bool {
    let ctx = poly.ctx();
    let c = poly.monomial().coeffs();
    let pairing = |l: u32, moment: &dyn Fn(u32, &QContext) -> BigRational| -> BigRational {
        c.iter()
            .enumerate()
            .map(|(i, ci)| ci * moment(i as u32 + l, ctx))
            .sum()
    };
    (0..poly.n()).all(|l| pairing(l, &power_moment).is_zero())
        && (0..poly.m()).all(|l| pairing(l, &log_moment).is_zero())
}

/// `(-1)^(n+m) [2n+m n]_q [n+2m m]_q p^(((n+m)^2 - (n+m))/2)`
pub fn leading_coefficient(n: u32, m: u32, ctx: &QContext) -> BigRational {
    let q = ctx.q();
    let s = u64::from(n + m);
    int(sign_pow(s))
        * gauss_binomial((2 * n + m) as usize, i64::from(n), q)
        * gauss_binomial((n + 2 * m) as usize, i64::from(m), q)
        * BigRational::from_integer(ctx.p_pow((s * s - s) / 2))
}

/// The product form
/// `(-1)^(n+m) (q^(n+m+1);q)_n (q^(n+m+1);q)_m / (q^(nm) (q;q)_n (q;q)_m q^(n(n-1)/2) q^(m(m-1)/2))`.
pub fn kappa_product(n: u32, m: u32, ctx: &QContext) -> BigRational {
    let q = ctx.q();
    let a = ctx.q_pow(i64::from(n + m) + 1);
    let tri = |x: u32| i64::from(x) * (i64::from(x) - 1) / 2;
    int(sign_pow(u64::from(n + m))) * qpochhammer(&a, q, n as usize) * qpochhammer(&a, q, m as usize)
        / (ctx.q_pow(i64::from(n) * i64::from(m) + tri(n) + tri(m))
            * qpochhammer(q, q, n as usize)
            * qpochhammer(q, q, m as usize))
}

/// Signed remainder sequence `f, f', -rem(..), ...` with every member
/// rescaled by a positive constant to coprime integer coefficients.
pub fn sturm_chain(f: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![f.primitive_part()];
    let d = f.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive_part());
    loop {
        let len = chain.len();
        let (_, r) = chain[len - 2].div_rem(&chain[len - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push((-&r).primitive_part());
    }
}

pub fn sign_variations(chain: &[RatPoly], x: &BigRational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|g| g.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of a polynomial in the open interval `(0, 1)`.
pub fn count_roots_open_unit(f: &RatPoly) -> Result<usize> {
    let g = f.gcd(&f.derivative());
    match g.degree() {
        Some(d) if d > 0 => return Err(Error::NotSquarefree(d)),
        _ => {}
    }
    let (zero, one) = (BigRational::zero(), BigRational::one());
    if f.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    if f.eval(&zero).is_zero() {
        return Err(Error::RootOnEndpoint("0".into()));
    }
    if f.eval(&one).is_zero() {
        return Err(Error::RootOnEndpoint("1".into()));
    }
    let chain = sturm_chain(f);
    Ok(sign_variations(&chain, &zero) - sign_variations(&chain, &one))
}

/// Roots of `p_{n,m}` in `(0, 1)`, with squarefreeness certified.
pub fn count_roots_in_unit_interval(poly: &QJacobiPoly) -> Result<usize> {
    count_roots_open_unit(poly.monomial())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;

    fn ctx(p: u64) -> QContext {
        QContext::new(p).unwrap()
    }

    fn linear() -> RatPoly {
        RatPoly::from_coeffs(vec![int(1), ratio(-3, 2)])
    }

    #[test]
    fn trivial_degree_zero() {
        let c = ctx(2);
        for b in [build_explicit, build_pochhammer, build_rodrigues] {
            assert_eq!(b(0, 0, &c).unwrap().monomial(), &RatPoly::one());
        }
        assert!(verify_orthogonality(&build_explicit(0, 0, &c).unwrap()));
        assert_eq!(leading_coefficient(0, 0, &c), int(1));
    }

    #[test]
    fn degree_one() {
        let c = ctx(2);
        for b in [build_explicit, build_pochhammer, build_rodrigues] {
            assert_eq!(b(1, 0, &c).unwrap().monomial(), &linear());
        }
        let p = build_explicit(1, 0, &c).unwrap();
        assert!(verify_orthogonality(&p));
        assert_eq!(leading_coefficient(1, 0, &c), ratio(-3, 2));
        assert_eq!(count_roots_in_unit_interval(&p).unwrap(), 1);
        assert_eq!(p.eval_at_power(1).unwrap(), BigInt::from(-2));
    }

    #[test]
    fn rejects_m_above_n() {
        let c = ctx(2);
        assert!(build_explicit(1, 2, &c).is_err());
        assert!(build_pochhammer(1, 2, &c).is_err());
        assert!(build_rodrigues(1, 2, &c).is_err());
    }

    #[test]
    fn representations_agree() {
        assert!(build_checked(2, 1, &ctx(2)).is_ok());
        assert!(build_checked(3, 2, &ctx(3)).is_ok());
        assert!(build_checked(2, 2, &ctx(2)).is_ok());
    }

    #[test]
    fn leading_coefficient_three_ways() {
        for (n, m, p) in [(2u32, 1u32, 2u64), (4, 2, 3), (3, 3, 2)] {
            let c = ctx(p);
            let poly = build_pochhammer(n, m, &c).unwrap();
            let top = poly.monomial().leading().unwrap().clone();
            assert_eq!(leading_coefficient(n, m, &c), top);
            assert_eq!(kappa_product(n, m, &c), top);
        }
    }

    #[test]
    fn root_counts() {
        assert_eq!(count_roots_in_unit_interval(&build_explicit(2, 1, &ctx(2)).unwrap()).unwrap(), 3);
        assert_eq!(count_roots_in_unit_interval(&build_pochhammer(4, 3, &ctx(3)).unwrap()).unwrap(), 7);
    }

    #[test]
    fn sturm_rejects_repeated_roots_and_endpoints() {
        let sq = RatPoly::from_coeffs(vec![ratio(1, 4), int(-1), int(1)]);
        assert_eq!(count_roots_open_unit(&sq), Err(Error::NotSquarefree(1)));
        let at_one = RatPoly::from_ints(&[-1, 1]);
        assert!(matches!(count_roots_open_unit(&at_one), Err(Error::RootOnEndpoint(_))));
    }

    #[test]
    fn orthogonality_four_three() {
        for p in [2u64, 3] {
            assert!(verify_orthogonality(&build_pochhammer(4, 3, &ctx(p)).unwrap()));
        }
    }

    #[test]
    fn perturbed_polynomial_fails_orthogonality() {
        let p = build_pochhammer(3, 2, &ctx(2)).unwrap();
        let bumped = QJacobiPoly {
            monomial: &p.monomial + &RatPoly::monomial(ratio(1, 1000), 2),
            ..p
        };
        assert!(!verify_orthogonality(&bumped));
    }

    #[test]
    fn integer_values_at_powers() {
        for p in [2u64, 3] {
            for n in 1..=12u32 {
                let poly = build_pochhammer(n, n - 1, &ctx(p)).unwrap();
                assert!(poly.eval_at_power(2 * n - 1).is_ok(), "n={n} p={p}");
            }
        }
    }

    proptest! {
        #[test]
        fn normalized_at_zero(n in 0u32..7, dm in 0u32..7, p in 2u64..6) {
            let m = dm.min(n);
            let poly = build_pochhammer(n, m, &ctx(p)).unwrap();
            prop_assert_eq!(poly.monomial().coeff(0), int(1));
            prop_assert_eq!(poly.monomial().degree(), Some((n + m) as usize));
        }
    }
}
