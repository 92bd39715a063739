//! q-Pochhammer symbols, Gaussian binomials and q-derivatives.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Coeff, IntPoly, RatPoly};
use super::{pow_rat, sign_pow};

/// `(a; q)_n = prod_{k<n} (1 - a q^k)`; the empty product is 1.
pub fn qpochhammer(a: &BigRational, q: &BigRational, n: usize) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= BigRational::one() - &term;
        term *= q;
    }
    acc
}

/// Integer version of [`qpochhammer`] for an integer base (`(a; p)_n`).
pub fn qpochhammer_int(a: &BigInt, base: &BigInt, n: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= BigInt::one() - &term;
        term *= base;
    }
    acc
}

/// Rows `0..=n` of the Gaussian triangle in `base`, by the Pascal recurrence
/// `[n k] = [n-1 k-1] + base^k [n-1 k]`.
fn pascal_rows<T: Coeff>(n: usize, base: &T) -> Vec<Vec<T>> {
    let mut powers = vec![T::one()];
    for k in 1..=n {
        powers.push(powers[k - 1].clone() * base.clone());
    }
    let mut rows: Vec<Vec<T>> = vec![vec![T::one()]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let mut row = Vec::with_capacity(m + 1);
        row.push(T::one());
        for k in 1..m {
            row.push(prev[k - 1].clone() + powers[k].clone() * prev[k].clone());
        }
        row.push(T::one());
        rows.push(row);
    }
    rows
}

/// Gaussian binomial `[n k]_base`; zero outside `0 <= k <= n`.
///
/// Computed by the Pascal recurrence only, so an integer base never goes
/// through a division.
pub fn gauss_binomial<T: Coeff>(n: usize, k: i64, base: &T) -> T {
    if k < 0 || k as usize > n {
        return T::zero();
    }
    let k = k as usize;
    pascal_rows(n, base)[n][k].clone()
}

/// Memoized Gaussian binomials `[n k]_p` for one integer base.
///
/// Not shared between threads: each worker owns its table.
#[derive(Clone, Debug)]
pub struct GaussianTable {
    base: BigInt,
    rows: Vec<Vec<BigInt>>,
}

impl GaussianTable {
    pub fn new(base: BigInt) -> Self {
        GaussianTable {
            base,
            rows: vec![vec![BigInt::one()]],
        }
    }

    pub fn base(&self) -> &BigInt {
        &self.base
    }

    fn extend_to(&mut self, n: usize) {
        while self.rows.len() <= n {
            let m = self.rows.len();
            let prev = &self.rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            row.push(BigInt::one());
            let mut power = self.base.clone();
            for k in 1..m {
                row.push(&prev[k - 1] + &power * &prev[k]);
                power *= &self.base;
            }
            row.push(BigInt::one());
            self.rows.push(row);
        }
    }

    pub fn get(&mut self, n: usize, k: i64) -> BigInt {
        if k < 0 || k as usize > n {
            return BigInt::zero();
        }
        self.extend_to(n);
        self.rows[n][k as usize].clone()
    }
}

/// `[n k]_x` as an integer polynomial in the indeterminate `x`.
pub fn gauss_binomial_poly(n: usize, k: i64) -> IntPoly {
    if k < 0 || k as usize > n {
        return IntPoly::zero();
    }
    let k = k as usize;
    let mut rows: Vec<Vec<IntPoly>> = vec![vec![IntPoly::one()]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let lo = k.saturating_sub(n - m);
        let hi = k.min(m);
        let mut row = vec![IntPoly::zero(); m + 1];
        for (j, slot) in row.iter_mut().enumerate().take(hi + 1).skip(lo) {
            *slot = if j == 0 || j == m {
                IntPoly::one()
            } else {
                &prev[j - 1] + &prev[j].shift(j)
            };
        }
        rows.push(row);
    }
    rows[n][k].clone()
}

/// The q-difference operator with ratio `r`:
/// `(D_r f)(x) = (f(x) - f(r x)) / ((1 - r) x)`.
///
/// On monomials `D_r x^s = (1 - r^s)/(1 - r) x^(s-1)`, so the result is again
/// a polynomial.
///
/// # Panics
///
/// Panics if `r` is 0 or 1.
pub fn q_derivative(f: &RatPoly, r: &BigRational) -> RatPoly {
    assert!(
        !r.is_zero() && !r.is_one(),
        "q_derivative: ratio must differ from 0 and 1"
    );
    let one_minus_r = BigRational::one() - r;
    let mut r_pow = r.clone();
    let mut out = Vec::with_capacity(f.coeffs().len().saturating_sub(1));
    for c in f.coeffs().iter().skip(1) {
        out.push(c * (BigRational::one() - &r_pow) / &one_minus_r);
        r_pow *= r;
    }
    RatPoly::from_coeffs(out)
}

pub fn q_derivative_n(f: &RatPoly, r: &BigRational, times: usize) -> RatPoly {
    (0..times).fold(f.clone(), |acc, _| q_derivative(&acc, r))
}

/// `(a x; q)_n` as a polynomial in `x`.
pub fn pochhammer_poly(a: &BigRational, q: &BigRational, n: usize) -> RatPoly {
    let mut acc = RatPoly::one();
    let mut aq = a.clone();
    for _ in 0..n {
        acc = &acc * &RatPoly::from_coeffs(vec![BigRational::one(), -aq.clone()]);
        aq *= q;
    }
    acc
}

/// Monomial coefficients of `(x; q)_n` from the q-Newton binomial formula:
/// `[n k]_q q^(k(k-1)/2) (-1)^k`.
pub fn q_newton_expand(n: usize, q: &BigRational) -> RatPoly {
    let row = &pascal_rows(n, q)[n];
    RatPoly::from_coeffs(
        (0..=n)
            .map(|k| {
                let e = (k * k.saturating_sub(1) / 2) as i64;
                &row[k] * pow_rat(q, e) * BigRational::from_integer(sign_pow(k as u64).into())
            })
            .collect(),
    )
}

/// Coefficients `c_k` with `x^n = sum_k c_k (x; q)_k`, from the dual
/// q-Newton formula `c_k = [n k]_q (-1)^k q^(-nk + k(k+1)/2)`.
pub fn q_newton_dual(n: usize, q: &BigRational) -> Vec<BigRational> {
    let row = &pascal_rows(n, q)[n];
    (0..=n)
        .map(|k| {
            let e = -((n * k) as i64) + (k * (k + 1) / 2) as i64;
            &row[k] * pow_rat(q, e) * BigRational::from_integer(sign_pow(k as u64).into())
        })
        .collect()
}

/// `sum_k coeffs[k] (a x; q)_k` as a polynomial in `x`.
pub fn expand_pochhammer_basis(coeffs: &[BigRational], a: &BigRational, q: &BigRational) -> RatPoly {
    let mut acc = RatPoly::zero();
    let mut basis = RatPoly::one();
    let mut aq = a.clone();
    for c in coeffs {
        acc = &acc + &basis.scale(c);
        basis = &basis * &RatPoly::from_coeffs(vec![BigRational::one(), -aq.clone()]);
        aq *= q;
    }
    acc
}

/// Coefficients of `f` in the basis `(x; q)_k`, using the dual q-Newton formula
/// for every monomial.
pub fn to_pochhammer_basis(f: &RatPoly, q: &BigRational) -> Vec<BigRational> {
    let len = f.coeffs().len();
    let mut out = vec![BigRational::zero(); len];
    for (s, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, d) in q_newton_dual(s, q).into_iter().enumerate() {
            out[k] += c * d;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn pochhammer_examples() {
        let a = ratio(1, 2);
        assert_eq!(qpochhammer(&a, &a, 0), int(1));
        assert_eq!(qpochhammer(&a, &a, 2), ratio(3, 8));
        // (1/2)(3/4)(7/8), multiplied out by hand
        let mut direct = int(1);
        for k in 1..=3 {
            direct *= int(1) - ratio(1, 1 << k);
        }
        assert_eq!(qpochhammer(&a, &a, 3), direct);
        assert_eq!(direct, ratio(21, 64));
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gauss_binomial(7, 0, &BigInt::from(5)), BigInt::one());
        // (2^4-1)(2^3-1)/((2^2-1)(2-1)) = 105/3
        assert_eq!(gauss_binomial(4, 2, &BigInt::from(2)), BigInt::from(35));
        assert_eq!(gauss_binomial(4, 5, &BigInt::from(2)), BigInt::zero());
        assert_eq!(gauss_binomial(4, -1, &BigInt::from(2)), BigInt::zero());
    }

    #[test]
    fn table_matches_free_function() {
        let mut t = GaussianTable::new(BigInt::from(3));
        for n in 0..9 {
            for k in 0..=n as i64 {
                assert_eq!(t.get(n, k), gauss_binomial(n, k, &BigInt::from(3)));
            }
        }
    }

    #[test]
    fn binomial_poly_evaluates_to_numeric_binomial() {
        for n in 0..8 {
            for k in 0..=n as i64 {
                let poly = gauss_binomial_poly(n, k);
                assert_eq!(poly.eval(&BigInt::from(2)), gauss_binomial(n, k, &BigInt::from(2)));
            }
        }
    }

    #[test]
    fn q_derivative_of_constant_vanishes() {
        assert!(q_derivative(&RatPoly::from_ints(&[7]), &ratio(1, 2)).is_zero());
    }

    #[test]
    fn q_derivative_power_rule() {
        // D_q^r x^s = (q;q)_s x^(s-r) / ((1-q)^r (q;q)_(s-r)) for s=4, r=2
        let q = ratio(1, 2);
        let lhs = q_derivative_n(&RatPoly::monomial(int(1), 4), &q, 2);
        let c = qpochhammer(&q, &q, 4)
            / (pow_rat(&(int(1) - &q), 2) * qpochhammer(&q, &q, 2));
        assert_eq!(lhs, RatPoly::monomial(c, 2));
    }

    #[test]
    fn q_derivative_of_pochhammer() {
        // D_p^k (qx;q)_n = (q;q)_n / ((q;q)_(n-k) (1-p)^k) (qx;q)_(n-k), n=3, k=1, p=2
        let q = ratio(1, 2);
        let p = int(2);
        let (n, k) = (3, 1);
        let lhs = q_derivative_n(&pochhammer_poly(&q, &q, n), &p, k);
        let c = qpochhammer(&q, &q, n)
            / (qpochhammer(&q, &q, n - k) * pow_rat(&(int(1) - &p), k as i64));
        assert_eq!(lhs, pochhammer_poly(&q, &q, n - k).scale(&c));
    }

    #[test]
    fn newton_expansion_matches_product() {
        let q = ratio(1, 3);
        for n in 0..8 {
            assert_eq!(q_newton_expand(n, &q), pochhammer_poly(&int(1), &q, n));
        }
    }
}
