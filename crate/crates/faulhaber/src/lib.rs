//! Exact Bernoulli numbers, Bernoulli polynomials, and Faulhaber forms of
//! power sums.
//!
//! For `n >= 1` the power sum `S_m = 1^m + 2^m + ... + n^m` is a polynomial
//! in `n`.  Less obviously, `S_4 = S_2 * (-1/5 + 6/5 * S_1)` and
//! `S_5 = S_1^2 * (-1/3 + 4/3 * S_1)`: every even power sum is `S_2` times a
//! polynomial in `S_1`, and every odd one is `S_1^2` times a polynomial in
//! `S_1`.  This crate computes those *Faulhaber forms* with exact rational
//! coefficients, decomposes Bernoulli polynomials over powers of the
//! quadratic `U(x) = x(x-1)/2`, and machine-verifies the identities tying
//! the two together — including the equivalence between the vanishing of the
//! odd Bernoulli numbers and the existence of the Faulhaber form — for every
//! index up to a configurable bound.
//!
//! Everything is computed over arbitrary-precision rationals.  There is no
//! floating point anywhere: every comparison in the verification harness is
//! an exact equality.
//!
//! # Quick start
//!
//! ```
//! use faulhaber::{bernoulli_number, bernoulli_polynomial, faulhaber_form, frac};
//!
//! // Bernoulli numbers are exact rationals; the odd ones vanish.
//! assert_eq!(bernoulli_number(4), frac(-1, 30));
//! assert_eq!(bernoulli_number(7), frac(0, 1));
//!
//! // B_2(x) = x^2 - x + 1/6
//! let b2 = bernoulli_polynomial(2);
//! assert_eq!(b2.eval(&frac(0, 1)), frac(1, 6));
//!
//! // S_4 = S_2 * (-1/5 + 6/5 * S_1)
//! let form = faulhaber_form(4).unwrap();
//! assert_eq!(form.coeffs(), &[frac(-1, 5), frac(6, 5)]);
//! ```
//!
//! # Modules
//!
//! - [`numerics`] — arbitrary-precision integers and canonical rationals,
//!   binomial coefficients, exact powers.
//! - [`poly`] — dense univariate polynomials over the rationals with three
//!   interchangeable bases: powers of `x`, powers of `x - 1/2`, and powers
//!   of `U(x)`.
//! - [`bernoulli`] — generation and caching of Bernoulli numbers and
//!   polynomials, plus the half-argument and derivative identities as
//!   checkable operations.
//! - [`forms`] — Faulhaber-form coefficients via closed-form sums, the three
//!   power-sum evaluation routes, and the full polynomial-identity check.
//! - [`verify`] — the theorem-level verification harness: symmetry criteria,
//!   U-basis decomposition structure, and both directions of the
//!   Faulhaber equivalence, swept over a range of indices.
//! - [`render`] — plain-text, JSON, and LaTeX renderings.
//! - [`cli`] — the `faulhaber` command-line tool built on all of the above.
//!
//! The `examples/` directory contains one runnable program per capability;
//! start with `cargo run --example power_sums`.

#![forbid(unsafe_code)]

pub mod bernoulli;
pub mod cli;
pub mod forms;
pub mod numerics;
pub mod poly;
pub mod render;
pub mod verify;

pub use bernoulli::{
    bernoulli_number, bernoulli_polynomial, check_derivative_property, check_half_value,
    BernoulliCache,
};
pub use forms::{
    bc_relation_check, coeff_b, coeff_c, eval_faulhaber, faulhaber_form,
    faulhaber_polynomial_identity, hat_b_even, hat_b_odd, power_sum_bernoulli,
    power_sum_bruteforce, FaulhaberForm, Parity, UDecomposition,
};
pub use numerics::{binomial, frac, int, pow, rat, Integer, Rational};
pub use poly::{Basis, Polynomial, USplit};
pub use render::OutputFormat;
pub use verify::{
    check_symmetry, sweep, verify_theorem2_even, verify_theorem2_odd, verify_theorem3_even,
    verify_theorem3_odd, SymmetryKind, SymmetryReport, TheoremId, TheoremReport,
};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("binomial requires n >= 0, got {0}")]
    BinomialNegative(i64),
    #[error("basis mismatch: {0:?} vs {1:?}; convert first")]
    BasisMismatch(Basis, Basis),
    #[error("operation requires the {expected} basis, got {found:?}")]
    WrongBasis {
        expected: &'static str,
        found: Basis,
    },
    #[error("coefficient index {index} out of range for m = {m}")]
    IndexOutOfRange { m: u32, index: u32 },
    #[error("S_0 and S_1 have no Faulhaber form; use the power-sum evaluators directly")]
    NoFaulhaberForm,
    #[error("symmetry check requires degree > 1, got degree {0}")]
    DegreeTooSmall(i64),
    #[error("{theorem} requires m >= {min}, got {m}")]
    TheoremIndexTooSmall {
        theorem: TheoremId,
        min: u32,
        m: u32,
    },
}
