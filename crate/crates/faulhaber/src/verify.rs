//! Theorem-level verification harness.
//!
//! Four families of checks, each producing a structured [`TheoremReport`]:
//!
//! - `T2-even` — `B_{2m}(x)` is a pure polynomial in `U(x)` with the
//!   expected zero/nonzero coefficient pattern, the closed-form coefficients
//!   match the expansion, and the polynomial has a line of symmetry at `1/2`;
//! - `T2-odd` — `B_{2m+1}(x)` is `(x - 1/2)` times a polynomial in `U(x)`
//!   with the expected pattern, closed form matches, and the polynomial has
//!   a point of symmetry at `(1/2, 0)`;
//! - `T3-even` / `T3-odd` — the Faulhaber form of `S_{2m}` / `S_{2m+1}`
//!   equals the Bernoulli power-sum polynomial as a structural identity in
//!   `n`, and (even case) the converse witness pinning `B_{2m+1} = 0`.
//!
//! Symmetry is checked two ways — the derivative criterion (all odd, resp.
//! all even `>= 2`, derivatives vanish at the center) and the explicit
//! reflection identity — and the two methods must agree, so the symmetry
//! criterion itself is exercised rather than assumed.
//!
//! A computer can only check instances: [`sweep`] runs every valid index up
//! to a bound, and a passing sweep means "verified for all m up to the
//! bound", nothing stronger.

use crate::bernoulli::{bernoulli_number, bernoulli_polynomial};
use crate::forms::{faulhaber_polynomial_identity, UDecomposition};
use crate::numerics::{frac, pow2, Rational};
use crate::poly::{Basis, Polynomial};
use crate::render::rational_plain;
use crate::Error;
use num_traits::{One, Zero};

/// Which symmetry a polynomial is checked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryKind {
    /// Mirror symmetry about the vertical line `x = s`.
    Line,
    /// Point symmetry about `(s, f(s))`.
    Point,
}

/// Outcome of a symmetry check: which derivative orders were inspected and
/// which of them failed to vanish at the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub center: Rational,
    pub kind: SymmetryKind,
    pub orders_checked: Vec<u32>,
    pub failures: Vec<(u32, Rational)>,
    pub verdict: bool,
}

/// Identifier of a theorem family in reports and sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TheoremId {
    T2Even,
    T2Odd,
    T3Even,
    T3Odd,
}

impl TheoremId {
    pub const ALL: [TheoremId; 4] = [
        TheoremId::T2Even,
        TheoremId::T2Odd,
        TheoremId::T3Even,
        TheoremId::T3Odd,
    ];

    /// Smallest index the family is stated for.
    pub fn min_m(self) -> u32 {
        match self {
            TheoremId::T2Even => 2,
            _ => 1,
        }
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TheoremId::T2Even => "T2-even",
            TheoremId::T2Odd => "T2-odd",
            TheoremId::T3Even => "T3-even",
            TheoremId::T3Odd => "T3-odd",
        })
    }
}

/// One named sub-check with a witness value for the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub witness: String,
}

impl Check {
    fn new(name: &'static str, pass: bool, witness: impl Into<String>) -> Self {
        Check {
            name,
            pass,
            witness: witness.into(),
        }
    }
}

/// Structured verdict for one theorem family at one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub m: u32,
    pub checks: Vec<Check>,
    pub verdict: bool,
}

impl TheoremReport {
    fn new(theorem: TheoremId, m: u32, checks: Vec<Check>) -> Self {
        let verdict = checks.iter().all(|c| c.pass);
        TheoremReport {
            theorem,
            m,
            checks,
            verdict,
        }
    }
}

/// Checks a polynomial for line or point symmetry at `s` by the derivative
/// criterion, cross-validated against the explicit reflection identity.
///
/// Line symmetry at `s` holds iff every odd derivative vanishes at `s`;
/// point symmetry at `(s, f(s))` iff every even derivative of order `>= 2`
/// does.  The reflection route checks `p(s+x) = p(s-x)` (line) or
/// `p(s+x) + p(s-x) = 2 p(s)` (point) structurally.  The two methods must
/// agree; a mismatch would be a bug in this crate and panics.
///
/// Degree must exceed one — the criterion is not stated below that.
pub fn check_symmetry(
    p: &Polynomial,
    s: &Rational,
    kind: SymmetryKind,
) -> Result<SymmetryReport, Error> {
    let p = p.to_power_basis();
    let deg = p.degree_in_x();
    if deg <= 1 {
        return Err(Error::DegreeTooSmall(deg));
    }

    let mut orders_checked = Vec::new();
    let mut failures = Vec::new();
    let mut d = p.clone();
    for order in 1..=deg as u32 {
        d = d.derivative(1).expect("power basis");
        let relevant = match kind {
            SymmetryKind::Line => order % 2 == 1,
            SymmetryKind::Point => order % 2 == 0,
        };
        if !relevant {
            continue;
        }
        orders_checked.push(order);
        let value = d.eval(s);
        if !value.is_zero() {
            failures.push((order, value));
        }
    }
    let verdict = failures.is_empty();

    // Reflection route: compare p(s+x) against p(s-x) directly.
    let plus = p.compose_linear(&frac(1, 1), s).expect("power basis");
    let minus = p.compose_linear(&frac(-1, 1), s).expect("power basis");
    let reflection_verdict = match kind {
        SymmetryKind::Line => plus == minus,
        SymmetryKind::Point => {
            let sum = plus.add(&minus).expect("same basis");
            sum == Polynomial::constant(Basis::PowerX, frac(2, 1) * p.eval(s))
        }
    };
    assert_eq!(
        verdict, reflection_verdict,
        "derivative criterion and reflection identity disagree"
    );

    Ok(SymmetryReport {
        center: s.clone(),
        kind,
        orders_checked,
        failures,
        verdict,
    })
}

fn hat_witness(hat: &[Rational]) -> String {
    let inner: Vec<String> = hat.iter().map(rational_plain).collect();
    format!("hat = [{}]", inner.join(", "))
}

/// `B_{2m}(x) = B_{2m} + sum_{j=2}^{m} hat_b_j U(x)^j`, checked four ways
/// for one `m >= 2`.
pub fn verify_theorem2_even(m: u32) -> Result<TheoremReport, Error> {
    if m < 2 {
        return Err(Error::TheoremIndexTooSmall {
            theorem: TheoremId::T2Even,
            min: 2,
            m,
        });
    }
    let split = bernoulli_polynomial(2 * m).to_u_basis();
    let expansion = UDecomposition::from_expansion(2 * m);
    let hat = &expansion.hat_coeffs;

    let pure_even = Check::new(
        "odd-part-vanishes",
        split.odd.is_zero(),
        format!("odd part = {}", split.odd),
    );
    let structure = hat[0] == bernoulli_number(2 * m)
        && hat[1].is_zero()
        && hat[2..].iter().all(|c| !c.is_zero());
    let pattern = Check::new("coefficient-pattern", structure, hat_witness(hat));
    let closed = UDecomposition::from_closed_form(2 * m);
    let closed_matches = Check::new(
        "closed-form-matches-expansion",
        closed == expansion,
        hat_witness(&closed.hat_coeffs),
    );
    let sym = check_symmetry(
        &bernoulli_polynomial(2 * m),
        &frac(1, 2),
        SymmetryKind::Line,
    )?;
    let symmetry = Check::new(
        "line-symmetry-at-half",
        sym.verdict,
        format!("{} odd orders checked", sym.orders_checked.len()),
    );

    Ok(TheoremReport::new(
        TheoremId::T2Even,
        m,
        vec![pure_even, pattern, closed_matches, symmetry],
    ))
}

/// `B_{2m+1}(x) = (x - 1/2) sum_{j=1}^{m} hat_b_j U(x)^j`, checked four
/// ways for one `m >= 1`.
pub fn verify_theorem2_odd(m: u32) -> Result<TheoremReport, Error> {
    if m < 1 {
        return Err(Error::TheoremIndexTooSmall {
            theorem: TheoremId::T2Odd,
            min: 1,
            m,
        });
    }
    let split = bernoulli_polynomial(2 * m + 1).to_u_basis();
    let expansion = UDecomposition::from_expansion(2 * m + 1);
    let hat = &expansion.hat_coeffs;

    let pure_odd = Check::new(
        "even-part-vanishes",
        split.even.is_zero(),
        format!("even part = {}", split.even),
    );
    let structure = hat[0].is_zero() && hat[1..].iter().all(|c| !c.is_zero());
    let pattern = Check::new("coefficient-pattern", structure, hat_witness(hat));
    let closed = UDecomposition::from_closed_form(2 * m + 1);
    let closed_matches = Check::new(
        "closed-form-matches-expansion",
        closed == expansion,
        hat_witness(&closed.hat_coeffs),
    );
    let b_poly = bernoulli_polynomial(2 * m + 1);
    let sym = check_symmetry(&b_poly, &frac(1, 2), SymmetryKind::Point)?;
    let at_half = b_poly.eval(&frac(1, 2));
    let symmetry = Check::new(
        "point-symmetry-at-half-zero",
        sym.verdict && at_half.is_zero(),
        format!("B(1/2) = {}", rational_plain(&at_half)),
    );

    Ok(TheoremReport::new(
        TheoremId::T2Odd,
        m,
        vec![pure_odd, pattern, closed_matches, symmetry],
    ))
}

/// Forward direction for `S_{2m}` as a structural polynomial identity, plus
/// the converse witness: substituting the root of `S_2` into the identity
/// forces `B_{2m+1}(1/2) = B_{2m+1}`, which together with the half-argument
/// identity is consistent only with `B_{2m+1} = 0` — asserted exactly.
pub fn verify_theorem3_even(m: u32) -> Result<TheoremReport, Error> {
    if m < 1 {
        return Err(Error::TheoremIndexTooSmall {
            theorem: TheoremId::T3Even,
            min: 1,
            m,
        });
    }
    let identity = Check::new(
        "faulhaber-identity-s2m",
        faulhaber_polynomial_identity(2 * m)?,
        format!("S_{} structural identity", 2 * m),
    );

    let b_odd = bernoulli_number(2 * m + 1);
    let at_half = bernoulli_polynomial(2 * m + 1).eval(&frac(1, 2));
    let via_p1 = &at_half - (pow2(-2 * (m as i64)) - Rational::one()) * &b_odd;
    let via_th5 = &at_half - &b_odd;
    let consistency = Check::new(
        "half-value-routes-agree",
        via_p1.is_zero() && via_th5.is_zero(),
        format!(
            "B(1/2) - (2^(-2m)-1)B = {}, B(1/2) - B = {}",
            rational_plain(&via_p1),
            rational_plain(&via_th5)
        ),
    );
    let vanishes = Check::new(
        "odd-bernoulli-vanishes",
        b_odd.is_zero(),
        format!("B_{} = {}", 2 * m + 1, rational_plain(&b_odd)),
    );

    Ok(TheoremReport::new(
        TheoremId::T3Even,
        m,
        vec![identity, consistency, vanishes],
    ))
}

/// Forward direction for `S_{2m+1}` as a structural polynomial identity.
pub fn verify_theorem3_odd(m: u32) -> Result<TheoremReport, Error> {
    if m < 1 {
        return Err(Error::TheoremIndexTooSmall {
            theorem: TheoremId::T3Odd,
            min: 1,
            m,
        });
    }
    let identity = Check::new(
        "faulhaber-identity-s2m1",
        faulhaber_polynomial_identity(2 * m + 1)?,
        format!("S_{} structural identity", 2 * m + 1),
    );
    let vanishes = Check::new(
        "odd-bernoulli-vanishes",
        bernoulli_number(2 * m + 1).is_zero(),
        format!(
            "B_{} = {}",
            2 * m + 1,
            rational_plain(&bernoulli_number(2 * m + 1))
        ),
    );

    Ok(TheoremReport::new(
        TheoremId::T3Odd,
        m,
        vec![identity, vanishes],
    ))
}

/// Runs every requested theorem family for every valid `m <= max_m`.
/// Reports come back ordered by `(theorem, m)` regardless of execution
/// order, so output is deterministic.
pub fn sweep(max_m: u32, which: &[TheoremId]) -> Vec<TheoremReport> {
    let mut reports = Vec::new();
    for id in TheoremId::ALL {
        if !which.contains(&id) {
            continue;
        }
        for m in id.min_m()..=max_m {
            let report = match id {
                TheoremId::T2Even => verify_theorem2_even(m),
                TheoremId::T2Odd => verify_theorem2_odd(m),
                TheoremId::T3Even => verify_theorem3_even(m),
                TheoremId::T3Odd => verify_theorem3_odd(m),
            }
            .expect("m is within the family's contract");
            reports.push(report);
        }
    }
    reports
}
