//! Bernoulli polynomials and their two classical identities, checked
//! exactly: the half-argument value B_m(1/2) = (2^(1-m) - 1) B_m and the
//! derivative rule B_m^(k) = k! C(m,k) B_{m-k}.
//!
//! Run with: cargo run --example bernoulli_polynomials

use faulhaber::{
    bernoulli_polynomial, check_derivative_property, check_half_value, frac,
};
use faulhaber::render::rational_plain;

fn main() {
    for m in 0..=6 {
        println!("B_{m}(x) = {}", bernoulli_polynomial(m));
    }

    println!();
    for m in [1, 4, 9] {
        let value = bernoulli_polynomial(m).eval(&frac(1, 2));
        println!(
            "B_{m}(1/2) = {:<8} half-value identity holds: {}",
            rational_plain(&value),
            check_half_value(m)
        );
    }

    println!();
    let all = (0..=25u32).all(|m| (0..=m).all(|k| check_derivative_property(m, k)));
    println!("derivative identity for every m <= 25 and every k: {all}");
}
