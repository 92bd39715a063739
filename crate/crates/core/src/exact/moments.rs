//! Closed forms for moments of the Jackson q-integral on `[0, 1]`,
//! `int_0^1 f(x) d_qx = sum_{k>=0} q^k f(q^k)`.
//!
//! Every sum here is an infinite geometric-type series with a known closed
//! form, so nothing is ever truncated.

use num_rational::BigRational;
use num_traits::One;

use super::{qcalc, QContext};

/// `int_0^1 x^s d_qx = 1 / (1 - q^(s+1))`
pub fn power_moment(s: u32, ctx: &QContext) -> BigRational {
    (BigRational::one() - ctx.q_pow(i64::from(s) + 1)).recip()
}

/// `int_0^1 x^s log_q(x) d_qx = sum_k k q^(k(s+1)) = q^(s+1) / (1 - q^(s+1))^2`
pub fn log_moment(s: u32, ctx: &QContext) -> BigRational {
    let t = ctx.q_pow(i64::from(s) + 1);
    let d = BigRational::one() - &t;
    t / (&d * &d)
}

/// `sum_{l>=0} q^l (q^(l+1); q)_(r-1) = 1 / (1 - q^r)`, for `r >= 1`.
pub fn modified_moment(r: u32, ctx: &QContext) -> BigRational {
    assert!(r >= 1, "modified_moment: r must be positive");
    (BigRational::one() - ctx.q_pow(i64::from(r))).recip()
}

/// `sum_{l>=0} l q^l (q^(l+1); q)_(r-1) = 1/(1 - q^r) * sum_{i=1}^r 1/(p^i - 1)`.
pub fn log_modified_moment(r: u32, ctx: &QContext) -> BigRational {
    assert!(r >= 1, "log_modified_moment: r must be positive");
    let harmonic: BigRational = (1..=r)
        .map(|i| BigRational::from_integer(ctx.p_pow(u64::from(i)) - 1u32).recip())
        .sum();
    modified_moment(r, ctx) * harmonic
}

/// `(q; q)_n` for the context's `q`.
pub fn q_factorial(n: usize, ctx: &QContext) -> BigRational {
    qcalc::qpochhammer(ctx.q(), ctx.q(), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use num_traits::Zero;

    fn ctx(p: u64) -> QContext {
        QContext::new(p).unwrap()
    }

    /// Partial sum `sum_{k < terms} w(k) q^(k a)`.
    fn truncated(q: &BigRational, terms: usize, weight: impl Fn(usize) -> BigRational, a: u32) -> BigRational {
        let qa = crate::exact::pow_rat(q, i64::from(a));
        let mut sum = BigRational::zero();
        let mut pw = int(1);
        for k in 0..terms {
            sum += weight(k) * &pw;
            pw *= &qa;
        }
        sum
    }

    #[test]
    fn power_moment_examples() {
        assert_eq!(power_moment(0, &ctx(2)), int(2));
        assert_eq!(power_moment(1, &ctx(2)), ratio(4, 3));
        assert_eq!(power_moment(2, &ctx(3)), ratio(27, 26));
    }

    #[test]
    fn power_moment_against_partial_sums() {
        for (s, p) in [(1u32, 2u64), (2, 3)] {
            let c = ctx(p);
            let partial = truncated(c.q(), 60, |_| int(1), s + 1);
            let exact = power_moment(s, &c);
            let gap = &exact - &partial;
            assert!(gap > BigRational::zero());
            assert!(gap < ratio(1, 1 << 40));
        }
    }

    #[test]
    fn log_moment_examples() {
        assert_eq!(log_moment(0, &ctx(2)), int(2));
        assert_eq!(log_moment(1, &ctx(2)), ratio(4, 9));
        assert_eq!(log_moment(0, &ctx(3)), ratio(3, 4));
        let partial = truncated(ctx(2).q(), 80, |k| int(k as i64), 2);
        let gap = log_moment(1, &ctx(2)) - partial;
        assert!(gap > BigRational::zero() && gap < ratio(1, 1 << 40));
    }

    /// `sum_{l < L} w(l) q^l (q^(l+1); q)_(r-1)`; the tail after `L` terms is
    /// at most `sum_{l>=L} w(l) q^l`.
    fn modified_partial(r: u32, c: &QContext, terms: usize, weighted: bool) -> BigRational {
        let q = c.q();
        (0..terms)
            .map(|l| {
                let w = if weighted { int(l as i64) } else { int(1) };
                let ql = crate::exact::pow_rat(q, l as i64);
                w * &ql * qcalc::qpochhammer(&(&ql * q), q, (r - 1) as usize)
            })
            .sum()
    }

    #[test]
    fn modified_moment_examples() {
        assert_eq!(modified_moment(1, &ctx(2)), int(2));
        assert_eq!(modified_moment(2, &ctx(2)), ratio(4, 3));
        assert_eq!(modified_moment(3, &ctx(3)), ratio(27, 26));
        for (r, p) in [(2u32, 2u64), (3, 3)] {
            let c = ctx(p);
            let gap = modified_moment(r, &c) - modified_partial(r, &c, 70, false);
            // terms are positive and the tail is below sum_{l>=70} q^l
            assert!(gap >= BigRational::zero());
            assert!(gap < ratio(1, 1 << 60));
        }
    }

    #[test]
    fn log_modified_moment_examples() {
        assert_eq!(log_modified_moment(1, &ctx(2)), int(2));
        assert_eq!(log_modified_moment(1, &ctx(2)), log_moment(0, &ctx(2)));
        assert_eq!(log_modified_moment(2, &ctx(2)), ratio(16, 9));
        assert_eq!(log_modified_moment(2, &ctx(3)), ratio(45, 64));
        for (r, p) in [(2u32, 2u64), (2, 3), (4, 2)] {
            let c = ctx(p);
            let gap = log_modified_moment(r, &c) - modified_partial(r, &c, 90, true);
            assert!(gap >= BigRational::zero());
            assert!(gap < ratio(1, 1 << 50));
        }
    }
}
