//! Dense univariate polynomials over the rationals with three
//! interchangeable bases.
//!
//! A [`Polynomial`] stores coefficients from degree 0 upward, tagged with a
//! [`Basis`]:
//!
//! - `PowerX` — coefficients of `x^k`;
//! - `CenteredHalf` — coefficients of `(x - 1/2)^k`;
//! - `UBasis` — coefficients of `U(x)^k`, where `U(x) = x(x-1)/2`.
//!
//! Conversions between bases are exact coefficient arithmetic (binomial
//! shifts and linear substitutions), never evaluation or interpolation.  The
//! pivot identity is `(x - 1/2)^2 = (1 + 8 U(x)) / 4`: a polynomial that is
//! even about `x = 1/2` is a polynomial in `U(x)`, and [`Polynomial::to_u_basis`]
//! splits an arbitrary polynomial into its even and odd parts about `1/2`
//! expressed over `U`.
//!
//! The zero polynomial is canonically the empty coefficient list, and its
//! degree is the sentinel `-1`.  Trailing zero coefficients are stripped on
//! construction, so equality is structural.

use crate::numerics::{binomial, frac, Rational};
use crate::Error;
use num_traits::Zero;

/// The coefficient basis a [`Polynomial`] is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Coefficients of `x^k`.
    PowerX,
    /// Coefficients of `(x - 1/2)^k`.
    CenteredHalf,
    /// Coefficients of `U(x)^k` with `U(x) = x(x-1)/2`.
    UBasis,
}

/// Dense univariate polynomial over [`Rational`], tagged with its basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    basis: Basis,
    coeffs: Vec<Rational>,
}

/// Decomposition of a polynomial into parts even and odd about `x = 1/2`,
/// both expressed over powers of `U(x)`:
///
/// `p(x) = even(U(x)) + (x - 1/2) * odd(U(x))`
///
/// Every polynomial splits this way, so the decomposition is total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct USplit {
    /// Part even about `1/2`, as a polynomial in `U`.
    pub even: Polynomial,
    /// Part odd about `1/2` with the `(x - 1/2)` factor removed, as a
    /// polynomial in `U`.
    pub odd: Polynomial,
}

impl Polynomial {
    /// Builds a polynomial, stripping trailing zero coefficients.
    pub fn new(basis: Basis, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { basis, coeffs }
    }

    /// The zero polynomial in the given basis.
    pub fn zero(basis: Basis) -> Self {
        Polynomial {
            basis,
            coeffs: Vec::new(),
        }
    }

    /// A constant polynomial.
    pub fn constant(basis: Basis, c: Rational) -> Self {
        Polynomial::new(basis, vec![c])
    }

    /// The monomial `x` in the power basis.
    pub fn x() -> Self {
        Polynomial::new(Basis::PowerX, vec![frac(0, 1), frac(1, 1)])
    }

    /// `U(x) = x(x-1)/2 = (x^2 - x)/2` in the power basis.
    pub fn u_quadratic() -> Self {
        Polynomial::new(Basis::PowerX, vec![frac(0, 1), frac(-1, 2), frac(1, 2)])
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of index `k` in the native basis, zero beyond the end.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the polynomial's own basis; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Degree as a polynomial in `x`; in the U basis each index counts for
    /// two.  `-1` for the zero polynomial.
    pub fn degree_in_x(&self) -> i64 {
        match self.basis {
            Basis::UBasis => {
                if self.is_zero() {
                    -1
                } else {
                    2 * self.degree()
                }
            }
            _ => self.degree(),
        }
    }

    /// Exact evaluation by Horner's rule in the native basis.  For the U
    /// basis this is Horner in `u = U(x0)`.
    pub fn eval(&self, x0: &Rational) -> Rational {
        let at = match self.basis {
            Basis::PowerX => x0.clone(),
            Basis::CenteredHalf => x0 - frac(1, 2),
            Basis::UBasis => x0 * (x0 - frac(1, 1)) / frac(2, 1),
        };
        horner(&self.coeffs, &at)
    }

    /// Exact sum; both operands must share a basis.
    pub fn add(&self, rhs: &Polynomial) -> Result<Polynomial, Error> {
        if self.basis != rhs.basis {
            return Err(Error::BasisMismatch(self.basis, rhs.basis));
        }
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Ok(Polynomial::new(self.basis, coeffs))
    }

    /// Exact difference; both operands must share a basis.
    pub fn sub(&self, rhs: &Polynomial) -> Result<Polynomial, Error> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Exact product; both operands must share a basis.  All three bases are
    /// power bases in their own variable, so convolution is valid in each.
    pub fn mul(&self, rhs: &Polynomial) -> Result<Polynomial, Error> {
        if self.basis != rhs.basis {
            return Err(Error::BasisMismatch(self.basis, rhs.basis));
        }
        if self.is_zero() || rhs.is_zero() {
            return Ok(Polynomial::zero(self.basis));
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Polynomial::new(self.basis, coeffs))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.basis, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact `k`-th derivative.  Valid in the power and centered bases
    /// (where the chain rule contributes a factor of one); convert a U-basis
    /// polynomial first.
    pub fn derivative(&self, k: u32) -> Result<Polynomial, Error> {
        if self.basis == Basis::UBasis {
            return Err(Error::WrongBasis {
                expected: "PowerX or CenteredHalf",
                found: self.basis,
            });
        }
        let mut coeffs = self.coeffs.clone();
        for _ in 0..k {
            if coeffs.is_empty() {
                break;
            }
            coeffs = coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * frac(i as i64, 1))
                .collect();
        }
        Ok(Polynomial::new(self.basis, coeffs))
    }

    /// Rewrites a power-basis polynomial over powers of `(x - 1/2)` by an
    /// exact binomial shift.
    pub fn to_centered(&self) -> Result<Polynomial, Error> {
        if self.basis != Basis::PowerX {
            return Err(Error::WrongBasis {
                expected: "PowerX",
                found: self.basis,
            });
        }
        // p(x) = q(x - 1/2) where q(t) = p(t + 1/2).
        let coeffs = shift_coeffs(&self.coeffs, &frac(1, 2));
        Ok(Polynomial::new(Basis::CenteredHalf, coeffs))
    }

    /// Rewrites any polynomial over powers of `x`.  This inverts
    /// [`Polynomial::to_centered`] and expands U-basis polynomials through
    /// `U(x)`.
    pub fn to_power_basis(&self) -> Polynomial {
        match self.basis {
            Basis::PowerX => self.clone(),
            Basis::CenteredHalf => {
                let coeffs = shift_coeffs(&self.coeffs, &frac(-1, 2));
                Polynomial::new(Basis::PowerX, coeffs)
            }
            Basis::UBasis => compose_coeffs(&self.coeffs, &Polynomial::u_quadratic()),
        }
    }

    /// Splits the polynomial into parts even and odd about `x = 1/2`, each
    /// expressed over powers of `U(x)`.  Total: every polynomial decomposes
    /// as `even(U(x)) + (x - 1/2) * odd(U(x))`.
    pub fn to_u_basis(&self) -> USplit {
        let centered = match self.basis {
            Basis::PowerX => self.to_centered().expect("power basis"),
            Basis::CenteredHalf => self.clone(),
            Basis::UBasis => {
                return USplit {
                    even: self.clone(),
                    odd: Polynomial::zero(Basis::UBasis),
                }
            }
        };
        // Split q(t) = qe(t^2) + t * qo(t^2), then substitute
        // t^2 = (1 + 8u)/4, i.e. compose with 2u + 1/4.
        let mut even_sq = Vec::new();
        let mut odd_sq = Vec::new();
        for (i, c) in centered.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                even_sq.push(c.clone());
            } else {
                odd_sq.push(c.clone());
            }
        }
        let sub = |cs: Vec<Rational>| {
            Polynomial::new(
                Basis::UBasis,
                compose_linear_coeffs(&cs, &frac(2, 1), &frac(1, 4)),
            )
        };
        USplit {
            even: sub(even_sq),
            odd: sub(odd_sq),
        }
    }

    /// Recombines a U-basis even/odd pair into a power-basis polynomial:
    /// `even(U(x)) + (x - 1/2) * odd(U(x))`.  Exact inverse of
    /// [`Polynomial::to_u_basis`].
    pub fn from_u_parts(even: &Polynomial, odd: &Polynomial) -> Result<Polynomial, Error> {
        for p in [even, odd] {
            if p.basis != Basis::UBasis {
                return Err(Error::WrongBasis {
                    expected: "UBasis",
                    found: p.basis,
                });
            }
        }
        let u = Polynomial::u_quadratic();
        let even_x = compose_coeffs(&even.coeffs, &u);
        let odd_x = compose_coeffs(&odd.coeffs, &u);
        let x_minus_half =
            Polynomial::new(Basis::PowerX, vec![frac(-1, 2), frac(1, 1)]);
        even_x.add(&x_minus_half.mul(&odd_x)?)
    }

    /// Computes `p(a*x + b)` exactly; power basis only.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Result<Polynomial, Error> {
        if self.basis != Basis::PowerX {
            return Err(Error::WrongBasis {
                expected: "PowerX",
                found: self.basis,
            });
        }
        Ok(Polynomial::new(
            Basis::PowerX,
            compose_linear_coeffs(&self.coeffs, a, b),
        ))
    }

    /// Substitutes the power-basis polynomial `inner` for the variable of
    /// `self` (also power basis), by Horner's rule over polynomials.
    pub fn compose(&self, inner: &Polynomial) -> Result<Polynomial, Error> {
        for p in [self, inner] {
            if p.basis != Basis::PowerX {
                return Err(Error::WrongBasis {
                    expected: "PowerX",
                    found: p.basis,
                });
            }
        }
        Ok(compose_coeffs(&self.coeffs, inner))
    }
}

impl USplit {
    /// Reassembles `even(U(x)) + (x - 1/2) * odd(U(x))` in the power basis.
    pub fn recompose(&self) -> Polynomial {
        Polynomial::from_u_parts(&self.even, &self.odd).expect("parts are U-basis")
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::render::poly_plain(self))
    }
}

fn horner(coeffs: &[Rational], at: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * at + c;
    }
    acc
}

/// Coefficients of `q(t) = p(t + h)` via the binomial expansion
/// `res[i] = sum_k c_k C(k, i) h^(k-i)`.
fn shift_coeffs(coeffs: &[Rational], h: &Rational) -> Vec<Rational> {
    let n = coeffs.len();
    let mut res = vec![Rational::zero(); n];
    let mut h_pows = Vec::with_capacity(n);
    let mut p = Rational::from_integer(1.into());
    for _ in 0..n {
        h_pows.push(p.clone());
        p *= h;
    }
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for i in 0..=k {
            let b = binomial(k as i64, i as i64).expect("k >= 0");
            res[i] += c * Rational::from_integer(b) * &h_pows[k - i];
        }
    }
    res
}

/// Coefficients of `p(a*y + b)` by Horner: fold from the top coefficient,
/// multiplying by the linear `a*y + b` at each step.
fn compose_linear_coeffs(coeffs: &[Rational], a: &Rational, b: &Rational) -> Vec<Rational> {
    let mut res: Vec<Rational> = Vec::new();
    for c in coeffs.iter().rev() {
        let mut next = vec![Rational::zero(); res.len() + 1];
        for (i, r) in res.iter().enumerate() {
            next[i + 1] += r * a;
            next[i] += r * b;
        }
        if next.is_empty() {
            next.push(Rational::zero());
        }
        next[0] += c;
        res = next;
    }
    res
}

fn compose_coeffs(coeffs: &[Rational], inner: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero(Basis::PowerX);
    for c in coeffs.iter().rev() {
        acc = acc
            .mul(inner)
            .and_then(|p| p.add(&Polynomial::constant(Basis::PowerX, c.clone())))
            .expect("power basis throughout");
    }
    acc
}
