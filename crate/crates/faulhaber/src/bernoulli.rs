//! Bernoulli numbers and Bernoulli polynomials, exactly.
//!
//! Numbers are generated by the recurrence `sum_{i=0}^{m} C(m+1, i) B_i = 0`
//! for `m >= 1` with `B_0 = 1`, which fixes the convention `B_1 = -1/2`
//! (the one under which `B_m(0) = B_m` and the power-sum relation
//! `S_m = (B_{m+1}(n+1) - B_{m+1})/(m+1)` hold as written).  The vanishing
//! of the odd numbers `B_3, B_5, ...` is an *output* of this generator, not
//! an assumption; the verification harness asserts it up to the configured
//! bound.
//!
//! The polynomial `B_m(x) = sum_j C(m, j) B_j x^(m-j)` and the two classical
//! identities used throughout the crate are exposed as checkable operations:
//!
//! - [`check_half_value`]: `B_m(1/2) = (2^(1-m) - 1) B_m`;
//! - [`check_derivative_property`]: `B_m^(k)(x) = k! C(m, k) B_{m-k}(x)`.

use crate::numerics::{binomial, factorial, frac, pow2, Rational};
use crate::poly::{Basis, Polynomial};
use num_traits::{One, Zero};
use std::sync::{Mutex, OnceLock};

/// Memoized sequence `B_0, B_1, B_2, ...`.
///
/// Growth is monotone: requesting `B_j` fills every index up to `j`.  The
/// interior mutex is the only mutable state in the crate; readers always see
/// fully-initialized entries.
#[derive(Debug)]
pub struct BernoulliCache {
    computed: Mutex<Vec<Rational>>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            computed: Mutex::new(vec![Rational::one()]),
        }
    }

    /// Exact `B_j`.
    pub fn number(&self, j: u32) -> Rational {
        let mut cache = self.computed.lock().expect("cache poisoned");
        while cache.len() <= j as usize {
            let m = cache.len() as i64; // about to compute B_m
            let mut acc = Rational::zero();
            for (i, b) in cache.iter().enumerate() {
                acc += Rational::from_integer(binomial(m + 1, i as i64).expect("m >= 0")) * b;
            }
            let next = -acc / frac(m + 1, 1);
            cache.push(next);
        }
        cache[j as usize].clone()
    }

    /// The degree-`m` Bernoulli polynomial in the power basis.
    pub fn polynomial(&self, m: u32) -> Polynomial {
        let m = m as i64;
        let mut coeffs = vec![Rational::zero(); m as usize + 1];
        for j in 0..=m {
            // coefficient of x^(m-j) is C(m, j) * B_j
            let c = Rational::from_integer(binomial(m, j).expect("m >= 0"))
                * self.number(j as u32);
            coeffs[(m - j) as usize] = c;
        }
        Polynomial::new(Basis::PowerX, coeffs)
    }
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

fn global_cache() -> &'static BernoulliCache {
    static CACHE: OnceLock<BernoulliCache> = OnceLock::new();
    CACHE.get_or_init(BernoulliCache::new)
}

/// Exact `B_j` from the shared process-wide cache.
///
/// ```
/// use faulhaber::{bernoulli_number, frac};
/// assert_eq!(bernoulli_number(0), frac(1, 1));
/// assert_eq!(bernoulli_number(1), frac(-1, 2));
/// assert_eq!(bernoulli_number(12), frac(-691, 2730));
/// ```
pub fn bernoulli_number(j: u32) -> Rational {
    global_cache().number(j)
}

/// The degree-`m` Bernoulli polynomial `B_m(x)` in the power basis.
pub fn bernoulli_polynomial(m: u32) -> Polynomial {
    global_cache().polynomial(m)
}

/// `B_m(1/2)` via the half-argument identity `(2^(1-m) - 1) B_m`.
///
/// O(1) given the cache.  [`check_half_value`] verifies the identity itself
/// against full polynomial evaluation.
pub fn bernoulli_half(m: u32) -> Rational {
    (pow2(1 - m as i64) - Rational::one()) * bernoulli_number(m)
}

/// True iff `B_m(1/2)` evaluated from the polynomial equals
/// `(2^(1-m) - 1) B_m` exactly.
pub fn check_half_value(m: u32) -> bool {
    bernoulli_polynomial(m).eval(&frac(1, 2)) == bernoulli_half(m)
}

/// True iff the `k`-th derivative of `B_m(x)` equals
/// `k! C(m, k) B_{m-k}(x)` as a structural polynomial equality.
/// For `k > m` both sides are the zero polynomial.
pub fn check_derivative_property(m: u32, k: u32) -> bool {
    let lhs = bernoulli_polynomial(m)
        .derivative(k)
        .expect("power basis");
    if k > m {
        return lhs.is_zero();
    }
    let scale = Rational::from_integer(factorial(k))
        * Rational::from_integer(binomial(m as i64, k as i64).expect("m >= 0"));
    let rhs = bernoulli_polynomial(m - k).scale(&scale);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, Integer};
    use crate::poly::Basis;
    use num_traits::Zero;

    #[test]
    fn first_bernoulli_numbers() {
        assert_eq!(bernoulli_number(0), frac(1, 1));
        assert_eq!(bernoulli_number(1), frac(-1, 2));
        assert_eq!(bernoulli_number(2), frac(1, 6));
        assert_eq!(bernoulli_number(3), frac(0, 1));
        assert_eq!(bernoulli_number(4), frac(-1, 30));
        assert_eq!(bernoulli_number(6), frac(1, 42));
        assert_eq!(bernoulli_number(8), frac(-1, 30));
        assert_eq!(bernoulli_number(10), frac(5, 66));
    }

    #[test]
    fn local_cache_matches_global_and_grows_monotonically() {
        let cache = BernoulliCache::new();
        // request out of order; the fill is monotone either way
        assert_eq!(cache.number(10), bernoulli_number(10));
        assert_eq!(cache.number(3), bernoulli_number(3));
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(
            bernoulli_polynomial(0),
            Polynomial::constant(Basis::PowerX, frac(1, 1))
        );
        assert_eq!(
            bernoulli_polynomial(2),
            Polynomial::new(Basis::PowerX, vec![frac(1, 6), frac(-1, 1), frac(1, 1)])
        );
        assert_eq!(
            bernoulli_polynomial(3),
            Polynomial::new(
                Basis::PowerX,
                vec![frac(0, 1), frac(1, 2), frac(-3, 2), frac(1, 1)]
            )
        );
    }

    #[test]
    fn value_at_zero_is_the_number() {
        for m in 0..=60 {
            assert_eq!(
                bernoulli_polynomial(m).eval(&frac(0, 1)),
                bernoulli_number(m),
                "B_{m}(0) != B_{m}"
            );
        }
    }

    #[test]
    fn odd_numbers_vanish() {
        for k in 1..=30 {
            assert_eq!(bernoulli_number(2 * k + 1), frac(0, 1), "B_{}", 2 * k + 1);
        }
    }

    #[test]
    fn half_value_examples() {
        assert!(check_half_value(1));
        assert_eq!(bernoulli_polynomial(1).eval(&frac(1, 2)), frac(0, 1));
        assert!(check_half_value(4));
        assert_eq!(bernoulli_half(4), frac(7, 240));
        assert!(check_half_value(3));
        assert_eq!(bernoulli_half(3), frac(0, 1));
        for m in 0..=40 {
            assert!(check_half_value(m), "half-value identity failed at m={m}");
        }
    }

    #[test]
    fn derivative_property_examples() {
        // B_4' = 4 B_3
        assert!(check_derivative_property(4, 1));
        assert_eq!(
            bernoulli_polynomial(4).derivative(1).unwrap(),
            bernoulli_polynomial(3).scale(&frac(4, 1))
        );
        // B_5^(5) = 120 B_0
        assert!(check_derivative_property(5, 5));
        // k = 0 is the identity
        assert!(check_derivative_property(3, 0));
        // k > m compares the zero polynomial
        assert!(check_derivative_property(3, 9));
        for m in 0..=15 {
            for k in 0..=m {
                assert!(check_derivative_property(m, k), "(p2) failed at m={m} k={k}");
            }
        }
    }

    // von Staudt-Clausen spot check: the denominator of B_{2m} is the
    // (squarefree) product of the primes p with (p-1) | 2m.
    #[test]
    fn even_denominators_are_squarefree() {
        for m in 1..=20u32 {
            let den = bernoulli_number(2 * m).denom().clone();
            assert!(is_squarefree(&den), "denominator of B_{} not squarefree", 2 * m);
        }
    }

    fn is_squarefree(n: &Integer) -> bool {
        let mut n = n.clone();
        let mut p = int(2);
        while &p * &p <= n {
            if (&n % &p).is_zero() {
                n /= &p;
                if (&n % &p).is_zero() {
                    return false;
                }
            }
            p += 1;
        }
        true
    }
}
