//! Line and point symmetry of polynomials, decided by vanishing derivatives
//! at the center and cross-checked against the reflection identity.
//!
//! Run with: cargo run --example symmetry

use faulhaber::render::rational_plain;
use faulhaber::{
    bernoulli_polynomial, check_symmetry, frac, Basis, Polynomial, SymmetryKind,
};

fn main() {
    let half = frac(1, 2);

    let even = bernoulli_polynomial(10);
    let line = check_symmetry(&even, &half, SymmetryKind::Line).unwrap();
    println!(
        "B_10 has a line of symmetry at 1/2: {} ({} odd orders checked)",
        line.verdict,
        line.orders_checked.len()
    );

    let odd = bernoulli_polynomial(11);
    let point = check_symmetry(&odd, &half, SymmetryKind::Point).unwrap();
    println!(
        "B_11 has a point of symmetry at (1/2, 0): {} (B_11(1/2) = {})",
        point.verdict,
        rational_plain(&odd.eval(&half))
    );

    // x^3 + x is point-symmetric about the origin, not about x = 1/2.
    let skew = Polynomial::new(
        Basis::PowerX,
        vec![frac(0, 1), frac(1, 1), frac(0, 1), frac(1, 1)],
    );
    let rejected = check_symmetry(&skew, &half, SymmetryKind::Point).unwrap();
    println!("\nx^3 + x about (1/2, f(1/2)): {}", rejected.verdict);
    for (order, value) in &rejected.failures {
        println!(
            "  derivative of order {order} at 1/2 is {}, not 0",
            rational_plain(value)
        );
    }
}
