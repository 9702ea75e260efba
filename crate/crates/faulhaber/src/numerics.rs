//! Arbitrary-precision integers and canonical rationals.
//!
//! Every scalar in this crate is an [`Integer`] or a [`Rational`]; floating
//! point is banned throughout because every identity we verify is an exact
//! equality.  The types are re-exports of `num-bigint` / `num-rational`,
//! which maintain the canonical form we rely on: denominators are always
//! positive, fractions are fully reduced, and zero is `0/1`.  The helpers
//! here add the checked constructors and the combinatorial routines the rest
//! of the crate needs.
//!
//! Arithmetic uses the ordinary `+ - * /` operators; [`checked_div`] is the
//! fallible route for divisors that may be zero.

use crate::Error;
use num_traits::{One, Pow, Signed, Zero};

/// Signed arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Exact rational with `Integer` numerator and denominator, always reduced,
/// denominator always positive.
pub type Rational = num_rational::BigRational;

/// Shorthand for an [`Integer`] from a machine integer.
pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

/// Checked rational constructor: reduces, normalizes the sign, and rejects a
/// zero denominator.
///
/// ```
/// use faulhaber::{rat, int, frac};
/// assert_eq!(rat(int(3), int(-6)).unwrap(), frac(-1, 2));
/// assert!(rat(int(1), int(0)).is_err());
/// ```
pub fn rat(num: Integer, den: Integer) -> Result<Rational, Error> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let r = Rational::new(num, den);
    debug_assert!(is_canonical(&r));
    Ok(r)
}

/// Infallible convenience constructor from machine integers.
///
/// Panics on a zero denominator; use [`rat`] for untrusted input.
pub fn frac(num: i64, den: i64) -> Rational {
    rat(int(num), int(den)).expect("frac: zero denominator")
}

/// Division that reports a zero divisor instead of panicking.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational, Error> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Exact binomial coefficient `C(n, k)`.
///
/// Returns zero when `k < 0` or `k > n`, and an error for negative `n`.
/// Computed by the multiplicative formula: the running product is divided by
/// `i` at step `i`, and each such division is exact, so intermediates never
/// exceed `C(n, k) * n`.
pub fn binomial(n: i64, k: i64) -> Result<Integer, Error> {
    if n < 0 {
        return Err(Error::BinomialNegative(n));
    }
    if k < 0 || k > n {
        return Ok(Integer::zero());
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = Integer::one();
    for i in 1..=k {
        acc = acc * int((n - k + i) as i64) / int(i as i64);
    }
    Ok(acc)
}

/// Exact non-negative power of a rational; `pow(a, 0) = 1` for every `a`,
/// including zero.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let r = Pow::pow(base, exp as i32);
    debug_assert!(is_canonical(&r));
    r
}

/// Exact `2^exp` for any signed exponent.
pub fn pow2(exp: i64) -> Rational {
    if exp >= 0 {
        Rational::from_integer(Integer::one() << exp as usize)
    } else {
        Rational::new(Integer::one(), Integer::one() << (-exp) as usize)
    }
}

/// Exact factorial.
pub fn factorial(n: u32) -> Integer {
    (1..=n as i64).map(int).fold(Integer::one(), |acc, i| acc * i)
}

/// True iff the rational is in canonical form: positive denominator and
/// fully reduced.  `num-rational` maintains this by construction; the
/// property tests assert it after every operation.
pub fn is_canonical(r: &Rational) -> bool {
    use num_integer::Integer as _;
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}
