//! Faulhaber forms of power sums and their exact coefficients.
//!
//! Writing `S_m = 1^m + ... + n^m`, `S_1 = n(n+1)/2` and
//! `S_2 = n(n+1)(2n+1)/6`, every power sum with exponent at least two has a
//! *Faulhaber form*
//!
//! ```text
//! S_{2m}   = S_2   * (b_{m,0} + b_{m,1} S_1 + ... + b_{m,m-1} S_1^(m-1))
//! S_{2m+1} = S_1^2 * (c_{m,0} + c_{m,1} S_1 + ... + c_{m,m-1} S_1^(m-1))
//! ```
//!
//! with nonzero rational coefficients.  This module computes those
//! coefficients from closed-form sums over Bernoulli numbers, exposes the
//! U-basis coefficients `hat_b` of the Bernoulli polynomials they come from,
//! and provides three independent power-sum evaluation routes (brute force,
//! the Bernoulli formula `S_m = (B_{m+1}(n+1) - B_{m+1})/(m+1)`, and Horner
//! evaluation of the Faulhaber form) plus the full check that the form
//! equals the Bernoulli formula *as a polynomial identity in n*.
//!
//! `B_i(1/2)` inside the coefficient sums is taken from the half-argument
//! identity rather than polynomial evaluation; the identity itself is
//! verified independently, and the expansion-vs-closed-form tests use the
//! polynomial path, so the two routes stay independent.

use crate::bernoulli::{bernoulli_half, bernoulli_number, bernoulli_polynomial};
use crate::numerics::{binomial, frac, pow2, Integer, Rational};
use crate::poly::{Basis, Polynomial};
use crate::Error;
use num_traits::{One, Pow, Zero};

/// Which Faulhaber prefactor a form carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Even exponent `2m`: prefactor `S_2`.
    Even,
    /// Odd exponent `2m+1`: prefactor `S_1^2`.
    Odd,
}

/// The Faulhaber form of `S_exponent`: prefactor times a polynomial in
/// `S_1` with exact, nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaulhaberForm {
    exponent: u32,
    parity: Parity,
    coeffs: Vec<Rational>,
}

impl FaulhaberForm {
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Coefficients of the polynomial in `S_1`, constant term first:
    /// `b_{m,0..m-1}` for exponent `2m`, `c_{m,0..m-1}` for `2m+1`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }
}

impl std::fmt::Display for FaulhaberForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::render::faulhaber_plain(self))
    }
}

/// U-basis coefficients `hat_b_j` of a Bernoulli polynomial, `j = 0..=m`
/// where `m = source_degree / 2`.
///
/// For even source `2m`: `B_{2m}(x) = sum_j hat_coeffs[j] * U(x)^j`.
/// For odd source `2m+1`: `B_{2m+1}(x) = (x - 1/2) * sum_j hat_coeffs[j] * U(x)^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UDecomposition {
    pub source_degree: u32,
    pub hat_coeffs: Vec<Rational>,
}

impl UDecomposition {
    /// Coefficients from the closed-form sums ([`hat_b_even`] / [`hat_b_odd`]).
    pub fn from_closed_form(source_degree: u32) -> Self {
        let m = source_degree / 2;
        let hat = if source_degree.is_multiple_of(2) {
            (0..=m).map(|j| hat_b_even(m, j).expect("j <= m")).collect()
        } else {
            (0..=m).map(|j| hat_b_odd(m, j).expect("j <= m")).collect()
        };
        UDecomposition {
            source_degree,
            hat_coeffs: hat,
        }
    }

    /// Coefficients read off the actual U-basis expansion of
    /// `B_{source_degree}(x)` — the independent route the closed forms are
    /// checked against.
    pub fn from_expansion(source_degree: u32) -> Self {
        let m = source_degree / 2;
        let split = bernoulli_polynomial(source_degree).to_u_basis();
        let part = if source_degree.is_multiple_of(2) {
            split.even
        } else {
            split.odd
        };
        let mut hat: Vec<Rational> = part.coeffs().to_vec();
        hat.resize(m as usize + 1, Rational::zero());
        UDecomposition {
            source_degree,
            hat_coeffs: hat,
        }
    }
}

fn choose(n: u64, k: u64) -> Integer {
    binomial(n as i64, k as i64).expect("n >= 0")
}

/// Shared inner sum of the odd-flavored closed forms:
/// `sum_{k=lo}^{m} 4^(-k) C(2m+1, 2k+1) C(k, j) B_{2m-2k}(1/2)`.
fn odd_kernel(m: u32, j: u32, lo: u32) -> Rational {
    let mut acc = Rational::zero();
    for k in lo..=m {
        acc += pow2(-2 * k as i64)
            * Rational::from_integer(choose(2 * m as u64 + 1, 2 * k as u64 + 1))
            * Rational::from_integer(choose(k as u64, j as u64))
            * bernoulli_half(2 * (m - k));
    }
    acc
}

/// `hat_b_j` of `B_{2m}(x)`:
/// `8^j sum_{k=j}^{m} 4^(-k) C(2m, 2k) C(k, j) B_{2m-2k}(1/2)`.
pub fn hat_b_even(m: u32, j: u32) -> Result<Rational, Error> {
    if j > m {
        return Err(Error::IndexOutOfRange { m, index: j });
    }
    let mut acc = Rational::zero();
    for k in j..=m {
        acc += pow2(-2 * k as i64)
            * Rational::from_integer(choose(2 * m as u64, 2 * k as u64))
            * Rational::from_integer(choose(k as u64, j as u64))
            * bernoulli_half(2 * (m - k));
    }
    Ok(pow2(3 * j as i64) * acc)
}

/// `hat_b_j` of `B_{2m+1}(x)`:
/// `8^j sum_{k=j}^{m} 4^(-k) C(2m+1, 2k+1) C(k, j) B_{2m-2k}(1/2)`.
pub fn hat_b_odd(m: u32, j: u32) -> Result<Rational, Error> {
    if j > m {
        return Err(Error::IndexOutOfRange { m, index: j });
    }
    Ok(pow2(3 * j as i64) * odd_kernel(m, j, j))
}

/// Faulhaber coefficient `b_{m,j}` of `S_{2m} = S_2 * sum_j b_{m,j} S_1^j`,
/// equal to `3/(4m+2) * hat_b_{j+1}` of `B_{2m+1}`.
pub fn coeff_b(m: u32, j: u32) -> Result<Rational, Error> {
    if m < 1 || j > m - 1 {
        return Err(Error::IndexOutOfRange { m, index: j });
    }
    Ok(frac(3, 4 * m as i64 + 2) * pow2(3 * (j as i64 + 1)) * odd_kernel(m, j + 1, j + 1))
}

/// Faulhaber coefficient `c_{m,j}` of `S_{2m+1} = S_1^2 * sum_j c_{m,j} S_1^j`:
/// `8^(j+1)/(j+2) * sum_{k=j+1}^{m} 4^(-k) C(2m+1, 2k+1) C(k, j+1) B_{2m-2k}(1/2)`.
pub fn coeff_c(m: u32, j: u32) -> Result<Rational, Error> {
    if m < 1 || j > m - 1 {
        return Err(Error::IndexOutOfRange { m, index: j });
    }
    Ok(frac(1, j as i64 + 2) * pow2(3 * (j as i64 + 1)) * odd_kernel(m, j + 1, j + 1))
}

/// True iff `c_{m,j} = (4m+2)/(3j+6) * b_{m,j}` holds exactly at `(m, j)`.
pub fn bc_relation_check(m: u32, j: u32) -> Result<bool, Error> {
    let b = coeff_b(m, j)?;
    let c = coeff_c(m, j)?;
    Ok(c == frac(4 * m as i64 + 2, 3 * j as i64 + 6) * b)
}

/// The oracle: `S_m = sum_{i=1}^{n} i^m` by direct summation.
pub fn power_sum_bruteforce(m: u32, n: u64) -> Rational {
    let mut acc = Integer::zero();
    for i in 1..=n {
        acc += Pow::pow(&Integer::from(i), m);
    }
    Rational::from_integer(acc)
}

/// `S_m` via the Bernoulli formula `(B_{m+1}(n+1) - B_{m+1})/(m+1)`.
///
/// Requires `m >= 1` (the formula does not cover `S_0 = n`).
pub fn power_sum_bernoulli(m: u32, n: u64) -> Rational {
    assert!(m >= 1, "the Bernoulli power-sum formula requires m >= 1");
    assert!(n >= 1);
    let b = bernoulli_polynomial(m + 1);
    let at = Rational::from_integer(Integer::from(n) + Integer::one());
    (b.eval(&at) - bernoulli_number(m + 1)) / frac(m as i64 + 1, 1)
}

/// Builds the Faulhaber form of `S_exponent` for `exponent >= 2`.
///
/// Every stored coefficient is asserted nonzero, an instance check of the
/// classical claim that the form never degenerates.
pub fn faulhaber_form(exponent: u32) -> Result<FaulhaberForm, Error> {
    if exponent < 2 {
        return Err(Error::NoFaulhaberForm);
    }
    let m = exponent / 2;
    let parity = if exponent.is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    };
    let coeffs: Vec<Rational> = (0..m)
        .map(|j| match parity {
            Parity::Even => coeff_b(m, j).expect("j < m"),
            Parity::Odd => coeff_c(m, j).expect("j < m"),
        })
        .collect();
    for (j, c) in coeffs.iter().enumerate() {
        assert!(
            !c.is_zero(),
            "Faulhaber coefficient {j} of S_{exponent} is zero"
        );
    }
    Ok(FaulhaberForm {
        exponent,
        parity,
        coeffs,
    })
}

/// Evaluates a Faulhaber form at integer `n >= 1`: Horner in
/// `s1 = n(n+1)/2`, then the parity prefactor.  The `/2` and `/6` divisions
/// happen after the multiplications, where they are exact.
pub fn eval_faulhaber(form: &FaulhaberForm, n: u64) -> Rational {
    assert!(n >= 1);
    let n = Integer::from(n);
    let s1 = (&n * (&n + Integer::one())) / Integer::from(2);
    let s1 = Rational::from_integer(s1);
    let mut acc = Rational::zero();
    for c in form.coeffs.iter().rev() {
        acc = acc * &s1 + c;
    }
    let prefactor = match form.parity {
        Parity::Even => {
            let s2 = (&n * (&n + Integer::one()) * (Integer::from(2) * &n + Integer::one()))
                / Integer::from(6);
            Rational::from_integer(s2)
        }
        Parity::Odd => &s1 * &s1,
    };
    acc * prefactor
}

/// `S_1(n) = n(n+1)/2` as a polynomial in `n`.
pub(crate) fn s1_polynomial() -> Polynomial {
    Polynomial::new(Basis::PowerX, vec![frac(0, 1), frac(1, 2), frac(1, 2)])
}

/// `S_2(n) = n(n+1)(2n+1)/6` as a polynomial in `n`.
pub(crate) fn s2_polynomial() -> Polynomial {
    Polynomial::new(
        Basis::PowerX,
        vec![frac(0, 1), frac(1, 6), frac(1, 2), frac(1, 3)],
    )
}

/// `S_m(n) = (B_{m+1}(n+1) - B_{m+1})/(m+1)` as a polynomial in `n`.
pub fn power_sum_polynomial(m: u32) -> Polynomial {
    let b = bernoulli_polynomial(m + 1);
    let shifted = b
        .compose_linear(&frac(1, 1), &frac(1, 1))
        .expect("power basis");
    let constant = Polynomial::constant(Basis::PowerX, bernoulli_number(m + 1));
    shifted
        .sub(&constant)
        .expect("same basis")
        .scale(&frac(1, m as i64 + 1))
}

/// The strongest Faulhaber check: true iff prefactor(n) * F(S_1(n)) equals
/// the Bernoulli power-sum polynomial *structurally*, as polynomials in `n`,
/// not merely pointwise.
pub fn faulhaber_polynomial_identity(exponent: u32) -> Result<bool, Error> {
    let form = faulhaber_form(exponent)?;
    let f = Polynomial::new(Basis::PowerX, form.coeffs.clone());
    let s1 = s1_polynomial();
    let f_of_s1 = f.compose(&s1).expect("power basis");
    let prefactor = match form.parity {
        Parity::Even => s2_polynomial(),
        Parity::Odd => s1.mul(&s1).expect("same basis"),
    };
    let lhs = prefactor.mul(&f_of_s1).expect("same basis");
    Ok(lhs == power_sum_polynomial(exponent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::int;

    #[test]
    fn hat_b_even_examples() {
        assert_eq!(hat_b_even(2, 2).unwrap(), frac(4, 1));
        assert_eq!(hat_b_even(2, 1).unwrap(), frac(0, 1));
        assert_eq!(hat_b_even(2, 0).unwrap(), frac(-1, 30));
        assert_eq!(hat_b_even(2, 0).unwrap(), bernoulli_number(4));
        assert!(hat_b_even(2, 3).is_err());
    }

    #[test]
    fn hat_b_odd_examples() {
        assert_eq!(hat_b_odd(1, 1).unwrap(), frac(2, 1));
        assert_eq!(hat_b_odd(1, 0).unwrap(), frac(0, 1));
        assert_eq!(hat_b_odd(2, 1).unwrap(), frac(-2, 3));
        assert!(hat_b_odd(2, 3).is_err());
    }

    #[test]
    fn closed_form_matches_expansion() {
        for source in 2..=25u32 {
            assert_eq!(
                UDecomposition::from_closed_form(source),
                UDecomposition::from_expansion(source),
                "U-coefficients disagree for B_{source}"
            );
        }
    }

    #[test]
    fn coeff_b_examples() {
        assert_eq!(coeff_b(1, 0).unwrap(), frac(1, 1));
        assert_eq!(coeff_b(2, 0).unwrap(), frac(-1, 5));
        assert_eq!(coeff_b(2, 1).unwrap(), frac(6, 5));
        assert_eq!(coeff_b(2, 0).unwrap(), frac(6, 1) * bernoulli_number(4));
        assert!(coeff_b(2, 2).is_err());
        assert!(coeff_b(0, 0).is_err());
    }

    #[test]
    fn coeff_c_examples() {
        assert_eq!(coeff_c(1, 0).unwrap(), frac(1, 1));
        assert_eq!(coeff_c(2, 0).unwrap(), frac(-1, 3));
        assert_eq!(coeff_c(2, 1).unwrap(), frac(4, 3));
        assert_eq!(
            coeff_c(2, 0).unwrap(),
            frac(10, 1) * bernoulli_number(4)
        );
        assert!(coeff_c(3, 3).is_err());
    }

    // Fit S_4 = S_2 (b0 + b1 S_1) from brute-force sums at n = 1, 2: an
    // oracle for the closed forms that never touches them.
    #[test]
    fn coeff_b_matches_bruteforce_fit() {
        let (s1_1, s1_2) = (frac(1, 1), frac(3, 1));
        let s2_1 = power_sum_bruteforce(2, 1);
        let s2_2 = power_sum_bruteforce(2, 2);
        let rhs1 = power_sum_bruteforce(4, 1) / s2_1; // b0 + b1 * s1(1)
        let rhs2 = power_sum_bruteforce(4, 2) / s2_2; // b0 + b1 * s1(2)
        let b1 = (&rhs2 - &rhs1) / (&s1_2 - &s1_1);
        let b0 = rhs1 - &b1 * s1_1;
        assert_eq!(b0, coeff_b(2, 0).unwrap());
        assert_eq!(b1, coeff_b(2, 1).unwrap());
    }

    #[test]
    fn coeff_c_matches_bruteforce_fit() {
        let (s1_1, s1_2) = (frac(1, 1), frac(3, 1));
        let rhs1 = power_sum_bruteforce(5, 1) / (&s1_1 * &s1_1);
        let rhs2 = power_sum_bruteforce(5, 2) / (&s1_2 * &s1_2);
        let c1 = (&rhs2 - &rhs1) / (&s1_2 - &s1_1);
        let c0 = rhs1 - &c1 * s1_1;
        assert_eq!(c0, coeff_c(2, 0).unwrap());
        assert_eq!(c1, coeff_c(2, 1).unwrap());
    }

    // Second algebraic route: c_{m,j} = hat_b_{j+2} of B_{2m+2} over 2m+2.
    #[test]
    fn coeff_c_agrees_with_even_hat_route() {
        for m in 1..=12u32 {
            for j in 0..m {
                let via_even =
                    hat_b_even(m + 1, j + 2).unwrap() / frac(2 * m as i64 + 2, 1);
                assert_eq!(coeff_c(m, j).unwrap(), via_even, "m={m} j={j}");
            }
        }
    }

    #[test]
    fn bc_relation_examples() {
        assert!(bc_relation_check(2, 0).unwrap());
        assert!(bc_relation_check(2, 1).unwrap());
        assert!(bc_relation_check(1, 0).unwrap());
        for m in 1..=12u32 {
            for j in 0..m {
                assert!(bc_relation_check(m, j).unwrap(), "m={m} j={j}");
            }
        }
    }

    #[test]
    fn power_sum_bruteforce_examples() {
        assert_eq!(power_sum_bruteforce(1, 3), frac(6, 1));
        assert_eq!(power_sum_bruteforce(2, 2), frac(5, 1));
        assert_eq!(power_sum_bruteforce(0, 7), frac(7, 1));
    }

    #[test]
    fn power_sum_bernoulli_examples() {
        assert_eq!(power_sum_bernoulli(1, 1), frac(1, 1));
        assert_eq!(power_sum_bernoulli(3, 2), frac(9, 1));
        assert_eq!(power_sum_bernoulli(7, 10), power_sum_bruteforce(7, 10));
    }

    #[test]
    fn faulhaber_form_examples() {
        let s2 = faulhaber_form(2).unwrap();
        assert_eq!(s2.parity(), Parity::Even);
        assert_eq!(s2.coeffs(), &[frac(1, 1)]);

        let s3 = faulhaber_form(3).unwrap();
        assert_eq!(s3.parity(), Parity::Odd);
        assert_eq!(s3.coeffs(), &[frac(1, 1)]);

        let s4 = faulhaber_form(4).unwrap();
        assert_eq!(s4.coeffs(), &[frac(-1, 5), frac(6, 5)]);

        assert_eq!(faulhaber_form(1), Err(Error::NoFaulhaberForm));
        assert_eq!(faulhaber_form(0), Err(Error::NoFaulhaberForm));
    }

    #[test]
    fn eval_faulhaber_examples() {
        assert_eq!(
            eval_faulhaber(&faulhaber_form(4).unwrap(), 2),
            frac(17, 1)
        );
        assert_eq!(
            eval_faulhaber(&faulhaber_form(5).unwrap(), 2),
            frac(33, 1)
        );
    }

    #[test]
    fn evaluation_routes_agree_on_a_grid() {
        for exponent in 2..=12u32 {
            let form = faulhaber_form(exponent).unwrap();
            for n in 1..=20u64 {
                let brute = power_sum_bruteforce(exponent, n);
                assert_eq!(power_sum_bernoulli(exponent, n), brute);
                assert_eq!(eval_faulhaber(&form, n), brute);
            }
        }
    }

    #[test]
    fn faulhaber_results_are_integers() {
        for exponent in 2..=10u32 {
            let form = faulhaber_form(exponent).unwrap();
            for n in [1u64, 2, 7, 100] {
                let v = eval_faulhaber(&form, n);
                assert_eq!(v.denom(), &int(1), "S_{exponent}({n}) not an integer");
            }
        }
    }

    #[test]
    fn polynomial_identity_examples() {
        assert!(faulhaber_polynomial_identity(2).unwrap());
        assert!(faulhaber_polynomial_identity(3).unwrap());
        assert!(faulhaber_polynomial_identity(21).unwrap());
        assert_eq!(
            faulhaber_polynomial_identity(1),
            Err(Error::NoFaulhaberForm)
        );
    }

    #[test]
    fn power_sum_polynomial_matches_bruteforce() {
        for m in 1..=10u32 {
            let p = power_sum_polynomial(m);
            for n in 1..=12u64 {
                assert_eq!(
                    p.eval(&Rational::from_integer(int(n as i64))),
                    power_sum_bruteforce(m, n)
                );
            }
        }
    }
}
