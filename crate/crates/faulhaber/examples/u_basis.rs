//! Decompose Bernoulli polynomials over powers of U(x) = x(x-1)/2.
//!
//! Even-index polynomials are pure polynomials in U; odd-index ones are
//! (x - 1/2) times a polynomial in U with zero constant term.  The same
//! coefficients also come out of closed-form sums over Bernoulli numbers,
//! and the two routes must agree.
//!
//! Run with: cargo run --example u_basis

use faulhaber::render::{rational_plain, usplit_plain};
use faulhaber::{bernoulli_polynomial, UDecomposition};

fn main() {
    for m in [2u32, 3, 8, 9] {
        let split = bernoulli_polynomial(m).to_u_basis();
        println!("B_{m}(x) = {}", usplit_plain(&split));
        // round trip back to the power basis
        assert_eq!(split.recompose(), bernoulli_polynomial(m));
    }

    println!();
    for source in [8u32, 9] {
        let closed = UDecomposition::from_closed_form(source);
        let expanded = UDecomposition::from_expansion(source);
        let hats: Vec<String> = closed.hat_coeffs.iter().map(rational_plain).collect();
        println!(
            "hat coefficients of B_{source}: [{}]  (closed form == expansion: {})",
            hats.join(", "),
            closed == expanded
        );
    }
}
